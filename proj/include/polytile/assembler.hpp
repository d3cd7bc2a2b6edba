// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytile/reduction.hpp"
#include "polytile/voxel.hpp"
#include "polytile/wang.hpp"

namespace polytile {

struct StageError : std::runtime_error {
    std::string stage;
    StageError(std::string stage_, const std::string& msg)
        : std::runtime_error("[" + stage_ + "] " + msg), stage(std::move(stage_)) {}
};

enum class TileKind { Filler, Encoder, Linker };

struct AssemblyPlacement {
    TileKind kind;
    Cell offset;
    bool faulted = false;  // encoder built with a flipped code bit (tests)
};

/// Chosen encoding exponent per torus cell: the level 2^e of the cell's tile
/// that sits on the matching layer.
struct OffsetAssignment {
    int width = 0, height = 0;
    std::vector<int> exponents;  // row-major like TorusTiling
    int at(int u, int v) const;
};

/// No two diagonal-adjacent encoder columns may fully align unless alignment
/// is harmless for the whole set (every tile east==west resp. north==south).
/// Deterministic: row 0 first, then outward, slots tried in ascending order,
/// with backtracking to close the torus cycles. Throws StageError("offsets")
/// when the cyclic constraints are unsatisfiable.
OffsetAssignment chooseOffsets(const TorusTiling& torus, const WangTileSet& s);

/// Linker lattice in voxels for a set with bits-per-color t: east-west step
/// (56t,0,0), sheared row step (28t,28,0), vertical period (0,0,7*levels).
struct LinkerLattice {
    Cell east, north, up;
};
LinkerLattice linkerLattice(int t, std::int64_t total_levels);

struct LinkerFrame {
    Polycube linker;
    LinkerLattice lattice;
    std::vector<Cell> offsets;  // placements covering repeats^3 lattice cells
};

/// Places linkers on their lattice and self-checks the X/Y/Z mating relations
/// via the mating oracle. Throws StageError("linker-frame") naming the
/// failing pair if the geometry table is inconsistent.
LinkerFrame linkerFrame(const WangTileSet& s, int repeats = 1);

struct AssembleOptions {
    bool enforce_valid_torus = true;
    bool run_decode_check = true;
    /// Optional single-bit code corruption applied to one encoder column
    /// (column k=0, b=0); the fault level should be that column's aligned
    /// encoding level for a matching-layer effect.
    std::optional<EncoderFault> fault;
};

struct Assembly {
    int bits = 1;
    LevelPlan plan;
    LatticeBasis domain;  // fundamental domain commensurate with lattice and torus
    Polycube filler, encoder, linker;
    std::optional<Polycube> faulted_encoder;
    std::vector<AssemblyPlacement> placements;
    OffsetAssignment offsets;
    TorusTiling torus;
    bool torus_valid = false;
    bool decode_ok = false;
    PartitionReport partition;
    bool verified = false;
    std::string failure_stage;  // empty when verified
};

/// Full pipeline: offsets, linker frame, encoder columns, cross-gap filling,
/// exact-partition verification, matching-layer decode round-trip.
/// With enforce_valid_torus, an invalid torus throws StageError("torus");
/// otherwise assembly proceeds and the defect surfaces geometrically.
Assembly assembleAndVerify(const WangTileSet& s, const TorusTiling& torus,
                           const AssembleOptions& opts = {});

/// Shape placements backing an assembly (resolves tile kinds to cell sets).
std::vector<PlacedShape> assemblyShapes(const Assembly& a);

} // namespace polytile
