// SPDX-License-Identifier: Apache-2.0
#include "polytile/wang.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace polytile {

static int ceilLog2(int m) {
    int bits = 0;
    while ((1 << bits) < m) ++bits;
    return bits;
}

WangTileSet::WangTileSet(std::vector<WangTile> tiles) : tiles_(std::move(tiles)) {
    if (tiles_.empty()) throw std::invalid_argument("WangTileSet: no tiles");
    int max_color = -1;
    for (const auto& t : tiles_) {
        for (int c : {t.north, t.east, t.south, t.west}) {
            if (c < 0) throw std::invalid_argument("WangTileSet: negative color id");
            max_color = std::max(max_color, c);
        }
    }
    color_count_ = max_color + 1;
    bits_ = std::max(1, ceilLog2(color_count_));
}

bool WangTileSet::allEastEqualsWest() const {
    for (const auto& t : tiles_)
        if (t.east != t.west) return false;
    return true;
}

bool WangTileSet::allNorthEqualsSouth() const {
    for (const auto& t : tiles_)
        if (t.north != t.south) return false;
    return true;
}

WangTileSet parseWangSet(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::map<std::string, int> ids;
    std::vector<WangTile> tiles;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() != 4)
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected 4 color tokens, got " + std::to_string(tokens.size()));
        int c[4];
        for (int i = 0; i < 4; ++i) {
            auto [it, inserted] = ids.try_emplace(tokens[i], static_cast<int>(ids.size()));
            c[i] = it->second;
            (void)inserted;
        }
        tiles.push_back(WangTile{c[0], c[1], c[2], c[3]});
    }
    if (tiles.empty()) throw std::runtime_error("parse error: no tiles");
    return WangTileSet(std::move(tiles));
}

int TorusTiling::at(int u, int v) const {
    u %= width; if (u < 0) u += width;
    v %= height; if (v < 0) v += height;
    return grid[static_cast<std::size_t>(v) * width + u];
}

bool validTorus(const WangTileSet& s, const TorusTiling& g) {
    if (g.width < 1 || g.height < 1 ||
        g.grid.size() != static_cast<std::size_t>(g.width) * g.height)
        throw std::invalid_argument("validTorus: malformed grid");
    for (int idx : g.grid)
        if (idx < 0 || idx >= s.tileCount())
            throw std::invalid_argument("validTorus: tile index out of range");
    const auto& tiles = s.tiles();
    for (int v = 0; v < g.height; ++v) {
        for (int u = 0; u < g.width; ++u) {
            const WangTile& t = tiles[static_cast<std::size_t>(g.at(u, v))];
            if (t.east != tiles[static_cast<std::size_t>(g.at(u + 1, v))].west) return false;
            if (t.north != tiles[static_cast<std::size_t>(g.at(u, v + 1))].south) return false;
        }
    }
    return true;
}

namespace {

struct Solver {
    const WangTileSet& s;
    TorusTiling g;
    std::int64_t budget;
    std::int64_t nodes = 0;

    bool fits(int u, int v, int idx) const {
        const auto& tiles = s.tiles();
        const WangTile& t = tiles[static_cast<std::size_t>(idx)];
        if (u > 0 && tiles[static_cast<std::size_t>(g.at(u - 1, v))].east != t.west) return false;
        if (v > 0 && tiles[static_cast<std::size_t>(g.at(u, v - 1))].north != t.south) return false;
        // Wrap checks: (0, v) and (u, 0) are placed no later than this cell.
        if (u == g.width - 1 && t.east != tiles[static_cast<std::size_t>(g.at(0, v))].west)
            return false;
        if (v == g.height - 1 && t.north != tiles[static_cast<std::size_t>(g.at(u, 0))].south)
            return false;
        return true;
    }

    // Returns Found / NoTiling / BudgetExhausted for the subtree.
    SolveOutcome solve(int pos) {
        if (pos == g.width * g.height) return SolveOutcome::Found;
        const int u = pos % g.width, v = pos / g.width;
        for (int idx = 0; idx < s.tileCount(); ++idx) {
            if (++nodes > budget) return SolveOutcome::BudgetExhausted;
            g.grid[static_cast<std::size_t>(pos)] = idx;
            if (!fits(u, v, idx)) continue;
            SolveOutcome sub = solve(pos + 1);
            if (sub != SolveOutcome::NoTiling) return sub;
        }
        g.grid[static_cast<std::size_t>(pos)] = 0;
        return SolveOutcome::NoTiling;
    }
};

} // namespace

SolveResult solveTorus(const WangTileSet& s, int w, int h, std::int64_t node_budget) {
    if (w < 1 || h < 1) throw std::invalid_argument("solveTorus: w,h must be >= 1");
    Solver solver{s, TorusTiling{w, h, std::vector<int>(static_cast<std::size_t>(w) * h, 0)},
                  node_budget};
    SolveOutcome outcome = solver.solve(0);
    SolveResult res{outcome, std::nullopt, solver.nodes};
    if (outcome == SolveOutcome::Found) res.tiling = solver.g;
    return res;
}

std::string formatTorus(const TorusTiling& t) {
    std::ostringstream out;
    out << t.width << ' ' << t.height << '\n';
    for (int v = 0; v < t.height; ++v) {
        for (int u = 0; u < t.width; ++u) {
            if (u) out << ' ';
            out << t.grid[static_cast<std::size_t>(v) * t.width + u];
        }
        out << '\n';
    }
    return out.str();
}

TorusTiling parseTorus(const std::string& text) {
    std::istringstream in(text);
    TorusTiling t;
    if (!(in >> t.width >> t.height) || t.width < 1 || t.height < 1)
        throw std::runtime_error("torus parse error: bad dimensions");
    t.grid.resize(static_cast<std::size_t>(t.width) * t.height);
    for (auto& v : t.grid)
        if (!(in >> v)) throw std::runtime_error("torus parse error: missing indices");
    return t;
}

} // namespace polytile
