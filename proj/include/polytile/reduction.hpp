// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "polytile/blocks.hpp"
#include "polytile/diffsets.hpp"
#include "polytile/voxel.hpp"
#include "polytile/wang.hpp"

namespace polytile {

/// Vertical layout of encoder and linker: levels are 7-voxel-tall slabs,
/// numbered from 1. Odd levels are structural, even levels functional; the
/// functional levels 2^k (2 <= k <= 3n+1) encode tiles, three levels per tile.
struct LevelPlan {
    int n_tiles = 0;
    std::int64_t total_levels = 0;
    std::vector<std::int64_t> encoding_levels;

    bool isStructural(std::int64_t level) const { return level % 2 == 1; }
    bool isEncoding(std::int64_t level) const;
    /// 0-based owner tile of an encoding level; throws if not encoding.
    int ownerTile(std::int64_t level) const;
    /// Encoding exponent for tile (0-based) and slot 0..2: 3*(tile+1)-1+slot.
    int exponentFor(int tile, int slot) const;
};

LevelPlan makeLevelPlan(int n_tiles);

/// Big-endian binary of `color` over the alphabet {N, F} (0 -> N, 1 -> F),
/// t letters. Throws if color >= 2^t.
std::string encodeColor(int color, int t);
int decodeColorWord(const std::string& word);  // inverse

/// Flip one block N<->F at an encoding level (fault injection for tests).
struct EncoderFault {
    std::int64_t level = 0;
    int row = 0;  // 0 = south, 1 = north
    int col = 0;  // 0-based block column
};

/// Local frame of the encoder: functional rows occupy x in [0, 56t),
/// y in [0, 14); bumps extend to y in [-7, 0) and [14, 21); z in [0, 7*levels).
Polycube buildEncoder(const WangTileSet& s,
                      const std::optional<EncoderFault>& fault = std::nullopt);

/// Local frame of the linker: main rows occupy x in [0, 56t), y in [0, 14);
/// the structural extension reaches y in [14, 28); z as the encoder.
Polycube buildLinker(const WangTileSet& s);

Polycube buildFillerTile();  // the cross; independent of the tile set

struct ReducedTriple {
    Polycube filler, encoder, linker;
    LevelPlan plan;
    int bits;  // t
};

ReducedTriple reduce(const WangTileSet& s);

/// Read the tile encoded at a functional level of an encoder built with
/// bits-per-color t. Returns nullopt for an all-E (non-encoding) layer;
/// throws on malformed input or a structural level.
std::optional<WangTile> decodeEncodingLevel(const CellSet& encoder_cells, int t,
                                            std::int64_t level);

} // namespace polytile
