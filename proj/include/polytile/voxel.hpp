// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polytile {

/// Unit voxel coordinate. x = east, y = north, z = up.
struct Cell {
    std::int32_t x = 0, y = 0, z = 0;
    auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

/// Inclusive axis-aligned box.
struct Box {
    Cell lo, hi;
    bool contains(Cell c) const {
        return lo.x <= c.x && c.x <= hi.x && lo.y <= c.y && c.y <= hi.y && lo.z <= c.z && c.z <= hi.z;
    }
};

/// Finite set of cells, stored sorted for reproducible iteration and hashing.
class CellSet {
public:
    CellSet() = default;

    /// Sorts the input; throws std::invalid_argument on duplicate cells.
    static CellSet fromCells(std::vector<Cell> cells);
    /// Sorts and silently drops duplicates.
    static CellSet fromCellsDedup(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Cell& c) const;

    CellSet translated(const Cell& v) const;
    bool intersects(const CellSet& other) const;
    CellSet intersection(const CellSet& other) const;
    CellSet unionWith(const CellSet& other) const;  // dedups

    /// nullopt when empty.
    std::optional<Box> boundingBox() const;

    bool operator==(const CellSet&) const = default;

private:
    std::vector<Cell> cells_;
};

std::int64_t volume(const CellSet& c);

/// True iff the 6-adjacency graph on the cells is connected (empty set: true).
bool isConnected(const CellSet& c);

/// Nonempty 6-connected cell set.
class Polycube {
public:
    explicit Polycube(CellSet cells);  // throws unless nonempty and connected
    const CellSet& cells() const { return cells_; }
private:
    CellSet cells_;
};

enum class Axis { X, Y, Z };

/// Rigid rotations used at build time only; results are renormalized so the
/// bounding-box corner sits at the origin.
CellSet rotatedZ180(const CellSet& c);
CellSet rotated90(const CellSet& c, Axis axis, int quarter_turns);

/// Translate so the bounding-box corner is at the origin; canonical form for
/// shape equality.
CellSet canonicalized(const CellSet& c);

struct PlacedShape {
    const CellSet* shape = nullptr;
    Cell offset;
};

struct PackingReport {
    CellSet overlap_cells;  // cells covered >= 2 times (within window, if given)
    bool multiplicity_ok = true;
};

/// Multiplicity check over explicit placements; `window` restricts the scan.
PackingReport verifyPacking(std::span<const PlacedShape> placements,
                            const std::optional<Box>& window = std::nullopt);

struct LatticeBasis {
    Cell b1, b2, b3;
};

/// O(1) map from Z^3 onto residue classes of Z^3 / (basis * Z^3).
class ResidueMap {
public:
    explicit ResidueMap(const LatticeBasis& basis);  // throws on degenerate basis
    std::int64_t det() const { return det_; }
    std::int64_t index(const Cell& c) const;
    Cell representative(std::int64_t index) const;

private:
    std::int64_t g1_ = 0, g2_ = 0, g3_ = 0;
    std::int64_t s21_ = 0, s31_ = 0, s32_ = 0;
    std::int64_t det_ = 0;
};

struct PartitionReport {
    bool exact = false;
    std::int64_t det = 0;            // cells per fundamental domain
    std::int64_t covered = 0;        // placement cells counted (with multiplicity)
    std::int64_t overlap_count = 0;  // residues covered >= 2 times
    std::int64_t hole_count = 0;     // residues never covered
    std::vector<Cell> overlap_samples;  // canonical representatives, capped
    std::vector<Cell> hole_samples;
};

/// True partition test: every residue class of Z^3/(basis) covered exactly once.
PartitionReport verifyPeriodicPartition(std::span<const PlacedShape> placements,
                                        const LatticeBasis& basis);

} // namespace polytile
