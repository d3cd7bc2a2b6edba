// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polytile {

/// Edge colors in N E S W order, interned to dense ids.
struct WangTile {
    int north = 0, east = 0, south = 0, west = 0;
    bool operator==(const WangTile&) const = default;
};

class WangTileSet {
public:
    explicit WangTileSet(std::vector<WangTile> tiles);  // throws on empty / bad ids

    const std::vector<WangTile>& tiles() const { return tiles_; }
    int tileCount() const { return static_cast<int>(tiles_.size()); }
    int colorCount() const { return color_count_; }
    /// Bits per edge code: max(1, ceil(log2(colorCount))).
    int bitsPerColor() const { return bits_; }

    bool allEastEqualsWest() const;    // every tile's east == west
    bool allNorthEqualsSouth() const;  // every tile's north == south

private:
    std::vector<WangTile> tiles_;
    int color_count_ = 0;
    int bits_ = 1;
};

/// One tile per nonblank line, four whitespace-separated color tokens in
/// N E S W order; tokens are interned to dense ids in order of first
/// appearance. Throws std::runtime_error with a line number on bad input.
WangTileSet parseWangSet(const std::string& text);

struct TorusTiling {
    int width = 0, height = 0;
    std::vector<int> grid;  // row-major, v = 0 first; tile indices

    int at(int u, int v) const;  // wrapping access
};

/// Every shared edge color matches, with wraparound.
bool validTorus(const WangTileSet& s, const TorusTiling& g);

enum class SolveOutcome { Found, NoTiling, BudgetExhausted };

struct SolveResult {
    SolveOutcome outcome;
    std::optional<TorusTiling> tiling;  // set iff outcome == Found
    std::int64_t nodes_expanded = 0;
};

/// Deterministic backtracking in row-major order, tiles tried in index order.
SolveResult solveTorus(const WangTileSet& s, int w, int h,
                       std::int64_t node_budget = 50'000'000);

std::string formatTorus(const TorusTiling& t);
TorusTiling parseTorus(const std::string& text);  // throws std::runtime_error

} // namespace polytile
