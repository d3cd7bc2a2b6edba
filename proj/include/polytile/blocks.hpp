// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "polytile/voxel.hpp"

namespace polytile {

/// The eleven basic building blocks plus the 9-cell cross filler.
/// N/F/E/M/MPlus are 28x7x7 slabs decorated on layer 4 only; X/Y/Z pairs are
/// decorated 7-cubes; Cross is the filler.
enum class BlockKind { Cross, N, F, E, M, MPlus, XPlus, XMinus, YPlus, YMinus, ZPlus, ZMinus };

enum class Facing { North, South };

bool isClass1(BlockKind k);  // N F E M MPlus

/// 9 unit cubes in one horizontal layer: a plus with arms of length 2.
Polycube buildCross();

/// Normalized block shape. Facing applies to class-1 kinds only; the south
/// variant is the 180-degree z-rotation of the north one. Throws
/// std::invalid_argument for invalid kind/facing combinations.
Polycube buildBlock(BlockKind kind, Facing facing = Facing::North);

/// Layer-4 decoration tables, block-local, north-facing (class-1) or the
/// canonical construct pose (axis kinds). Dents are cells removed from the
/// base slab/cube; bumps protrude past it.
std::vector<Cell> blockBumpCells(BlockKind kind);
std::vector<Cell> blockDentCells(BlockKind kind);

/// Text rendering of the full dent/bump table (golden-file tested).
std::string geometryTableText();

/// All offsets v inside `window` such that translate(b, v) does not overlap a
/// and covers every cell of `cavity` (flush fill).
std::vector<Cell> matingOffsets(const CellSet& a, std::span<const Cell> cavity, const CellSet& b,
                                const Box& window);

// Assembly-frame emitters used by the encoder/linker builders. Class-1 blocks
// keep their 28x7x7 body box anchored at `origin` for either facing, so south
// bumps land at negative y offsets. Axis constructs keep the 7-cube at origin.
void emitClass1Block(std::vector<Cell>& out, BlockKind kind, Facing facing, Cell origin);
void emitAxisConstruct(std::vector<Cell>& out, BlockKind kind, Cell origin);

/// Class-1 block dimensions (voxels).
inline constexpr int kBlockW = 28;  // east-west
inline constexpr int kBlockD = 7;   // north-south
inline constexpr int kBlockH = 7;   // one level
inline constexpr int kDecorZ = 3;   // decorated layer within a level

} // namespace polytile
