// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytile/voxel.hpp"

namespace polytile {

struct P2 {
    std::int32_t x = 0, y = 0;
    auto operator<=>(const P2&) const = default;
};

/// Finite 2D cell set, sorted.
struct Poly2 {
    std::vector<P2> cells;
    bool contains(const P2& c) const;
};

Poly2 poly2FromCells(std::vector<P2> cells);       // sorts, rejects duplicates
Poly2 parsePoly2(const std::string& text);         // "x y" per nonblank line
bool poly2Connected(const Poly2& p);               // 4-adjacency

/// Horizontal projection of a voxel set (drops z, dedups).
Poly2 projectZ(const CellSet& c);

struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Counterclockwise boundary trace over steps U D L R, starting from the
/// lexicographically least boundary vertex. Throws UnsupportedInput for
/// shapes with holes (and std::invalid_argument for disconnected input).
std::string boundaryWord(const Poly2& p);

/// w = A.B.C.rev-inv(A).rev-inv(B).rev-inv(C) up to cyclic rotation, with up
/// to one empty factor: present iff the polyomino tiles the plane by
/// translations (exact tile).
struct BnFactorization {
    int rotation = 0;                 // cyclic offset into the word
    std::array<int, 3> lengths{};     // |A| |B| |C|
};
std::optional<BnFactorization> bnExactFactorization(const std::string& word);

/// True iff `region` is exactly partitioned by translated copies of `tile`
/// lying entirely inside it (exact cover by backtracking).
bool bruteForceRegionTileable(const Poly2& tile, const Poly2& region);

/// True iff the w x h window can be covered exactly once per window cell by
/// non-overlapping translates that may extend past the window. A plane tiling
/// restricted to the window yields such a cover, so failure is a finite
/// witness that the tile cannot tile the plane.
bool coverWindowWithOverhang(const Poly2& tile, int w, int h,
                             std::int64_t node_budget = 20'000'000,
                             bool* budget_hit = nullptr);

/// Least k <= max_size such that the k x k window is not coverable.
std::optional<int> findUntileableWindow(const Poly2& tile, int max_size);

} // namespace polytile
