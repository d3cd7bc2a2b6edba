// SPDX-License-Identifier: Apache-2.0
#include "polytile/planecheck.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace polytile {

bool Poly2::contains(const P2& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

Poly2 poly2FromCells(std::vector<P2> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("Poly2: duplicate cell");
    return Poly2{std::move(cells)};
}

Poly2 parsePoly2(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<P2> cells;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        long long x, y;
        if (!(ls >> x)) continue;  // blank
        std::string extra;
        if (!(ls >> y) || (ls >> extra))
            throw std::runtime_error("polyomino parse error at line " + std::to_string(line_no));
        cells.push_back(P2{static_cast<std::int32_t>(x), static_cast<std::int32_t>(y)});
    }
    if (cells.empty()) throw std::runtime_error("polyomino parse error: no cells");
    return poly2FromCells(std::move(cells));
}

bool poly2Connected(const Poly2& p) {
    if (p.cells.empty()) return true;
    std::vector<P2> stack{p.cells.front()};
    std::unordered_set<std::int64_t> seen;
    auto key = [](const P2& c) {
        return (static_cast<std::int64_t>(c.x) << 32) ^ static_cast<std::uint32_t>(c.y);
    };
    seen.insert(key(p.cells.front()));
    while (!stack.empty()) {
        P2 c = stack.back();
        stack.pop_back();
        const P2 nbs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const auto& n : nbs)
            if (p.contains(n) && seen.insert(key(n)).second) stack.push_back(n);
    }
    return seen.size() == p.cells.size();
}

Poly2 projectZ(const CellSet& c) {
    std::vector<P2> cells;
    cells.reserve(c.size());
    for (const auto& cc : c.cells()) cells.push_back(P2{cc.x, cc.y});
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Poly2{std::move(cells)};
}

namespace {

struct VertexKey {
    std::int64_t operator()(const P2& v) const {
        return (static_cast<std::int64_t>(v.x) << 32) ^ static_cast<std::uint32_t>(v.y);
    }
};

} // namespace

std::string boundaryWord(const Poly2& p) {
    if (p.cells.empty()) throw std::invalid_argument("boundaryWord: empty polyomino");
    if (!poly2Connected(p)) throw std::invalid_argument("boundaryWord: disconnected polyomino");

    // Directed boundary edges keeping the interior on the left (counterclockwise).
    // Key: from-vertex; value: (to-vertex, letter).
    std::multimap<P2, std::pair<P2, char>> edges;
    std::size_t edge_count = 0;
    for (const auto& c : p.cells) {
        if (!p.contains({c.x, c.y - 1})) { edges.insert({{c.x, c.y}, {{c.x + 1, c.y}, 'R'}}); ++edge_count; }
        if (!p.contains({c.x + 1, c.y})) { edges.insert({{c.x + 1, c.y}, {{c.x + 1, c.y + 1}, 'U'}}); ++edge_count; }
        if (!p.contains({c.x, c.y + 1})) { edges.insert({{c.x + 1, c.y + 1}, {{c.x, c.y + 1}, 'L'}}); ++edge_count; }
        if (!p.contains({c.x - 1, c.y})) { edges.insert({{c.x, c.y + 1}, {{c.x, c.y}, 'D'}}); ++edge_count; }
    }

    const P2 start = edges.begin()->first;  // lexicographically least from-vertex
    auto dirOf = [](char ch) -> P2 {
        switch (ch) {
            case 'R': return {1, 0};
            case 'L': return {-1, 0};
            case 'U': return {0, 1};
            default: return {0, -1};
        }
    };
    // Turn preference relative to incoming direction: left turn first, then
    // straight, then right; this keeps the walk on the outer boundary at
    // pinch vertices.
    auto turnRank = [](P2 in, P2 out) {
        const int cross = in.x * out.y - in.y * out.x;
        const int dot = in.x * out.x + in.y * out.y;
        if (cross > 0) return 0;   // left
        if (dot > 0) return 1;     // straight
        if (cross < 0) return 2;   // right
        return 3;                  // reverse (never valid on a boundary)
    };

    std::string word;
    P2 cur = start;
    P2 in_dir{1, 0};  // the start vertex is a bottom-left corner; first step is R
    do {
        auto [lo, hi] = edges.equal_range(cur);
        if (lo == hi) throw UnsupportedInput("boundaryWord: open boundary");
        auto best = hi;
        int best_rank = 4;
        for (auto it = lo; it != hi; ++it) {
            const int rank = turnRank(in_dir, dirOf(it->second.second));
            if (rank < best_rank) { best_rank = rank; best = it; }
        }
        word.push_back(best->second.second);
        in_dir = dirOf(best->second.second);
        cur = best->second.first;
        edges.erase(best);
    } while (!(cur == start));

    if (word.size() != edge_count)
        throw UnsupportedInput("boundaryWord: polyomino has holes");
    return word;
}

namespace {

char invert(char c) {
    switch (c) {
        case 'U': return 'D';
        case 'D': return 'U';
        case 'L': return 'R';
        default: return 'L';
    }
}

// segment [i, i+len) of the cyclic word equals hat of segment [j, j+len)
bool isHatOf(const std::string& w, int i, int j, int len) {
    const int n = static_cast<int>(w.size());
    for (int k = 0; k < len; ++k) {
        const char a = w[static_cast<std::size_t>((i + k) % n)];
        const char b = w[static_cast<std::size_t>((j + len - 1 - k) % n)];
        if (a != invert(b)) return false;
    }
    return true;
}

} // namespace

std::optional<BnFactorization> bnExactFactorization(const std::string& word) {
    const int n = static_cast<int>(word.size());
    if (n == 0 || n % 2 != 0) return std::nullopt;
    const int h = n / 2;
    for (int rot = 0; rot < n; ++rot) {
        for (int a = 0; a <= h; ++a) {
            for (int b = 0; a + b <= h; ++b) {
                const int c = h - a - b;
                if (!isHatOf(word, rot, (rot + h) % n, a)) break;  // A vs A-hat fails for all b
                if (!isHatOf(word, (rot + a) % n, (rot + h + a) % n, b)) continue;
                if (!isHatOf(word, (rot + a + b) % n, (rot + h + a + b) % n, c)) continue;
                return BnFactorization{rot, {a, b, c}};
            }
        }
    }
    return std::nullopt;
}

namespace {

struct CoverState {
    // Offsets of the tile relative to its first (sorted-least) cell; any copy
    // covering cell q places its first cell at q only when q is the least
    // uncovered cell, so offsets are taken relative to each tile cell in turn.
    const Poly2& tile;
    std::unordered_set<std::int64_t> occupied;
    std::int64_t nodes = 0, budget = 0;
    bool budget_hit = false;

    static std::int64_t key(const P2& c) {
        return (static_cast<std::int64_t>(c.x) << 32) ^ static_cast<std::uint32_t>(c.y);
    }
};

} // namespace

bool bruteForceRegionTileable(const Poly2& tile, const Poly2& region) {
    if (tile.cells.empty()) throw std::invalid_argument("empty tile");
    if (region.cells.empty()) return true;
    if (region.cells.size() % tile.cells.size() != 0) return false;

    std::vector<bool> covered(region.cells.size(), false);

    // recursive lambda over the first uncovered region cell
    auto indexOf = [&](const P2& c) -> int {
        auto it = std::lower_bound(region.cells.begin(), region.cells.end(), c);
        if (it == region.cells.end() || !(*it == c)) return -1;
        return static_cast<int>(it - region.cells.begin());
    };

    std::vector<int> scratch;
    std::function<bool(int)> solve = [&](int from) -> bool {
        int first = -1;
        for (int i = from; i < static_cast<int>(covered.size()); ++i)
            if (!covered[static_cast<std::size_t>(i)]) { first = i; break; }
        if (first < 0) return true;
        const P2 target = region.cells[static_cast<std::size_t>(first)];
        // The copy must cover `target` with one of its cells.
        for (const auto& anchor : tile.cells) {
            const P2 off{target.x - anchor.x, target.y - anchor.y};
            scratch.clear();
            bool ok = true;
            for (const auto& tc : tile.cells) {
                const int idx = indexOf({tc.x + off.x, tc.y + off.y});
                if (idx < 0 || covered[static_cast<std::size_t>(idx)]) { ok = false; break; }
                scratch.push_back(idx);
            }
            if (!ok) continue;
            for (int idx : scratch) covered[static_cast<std::size_t>(idx)] = true;
            std::vector<int> placed = scratch;
            if (solve(first + 1)) return true;
            for (int idx : placed) covered[static_cast<std::size_t>(idx)] = false;
        }
        return false;
    };
    return solve(0);
}

namespace {

bool coverWindowRec(const Poly2& tile, int w, int h, CoverState& st, int from) {
    if (st.budget_hit) return false;
    // first uncovered window cell in row-major order
    int first = -1;
    for (int i = from; i < w * h; ++i) {
        const P2 c{i % w, i / w};
        if (!st.occupied.count(CoverState::key(c))) { first = i; break; }
    }
    if (first < 0) return true;
    const P2 target{first % w, first / w};
    for (const auto& anchor : tile.cells) {
        if (++st.nodes > st.budget) { st.budget_hit = true; return false; }
        const P2 off{target.x - anchor.x, target.y - anchor.y};
        bool ok = true;
        for (const auto& tc : tile.cells) {
            const P2 g{tc.x + off.x, tc.y + off.y};
            if (st.occupied.count(CoverState::key(g))) { ok = false; break; }
        }
        if (!ok) continue;
        for (const auto& tc : tile.cells)
            st.occupied.insert(CoverState::key({tc.x + off.x, tc.y + off.y}));
        if (coverWindowRec(tile, w, h, st, first + 1)) return true;
        for (const auto& tc : tile.cells)
            st.occupied.erase(CoverState::key({tc.x + off.x, tc.y + off.y}));
        if (st.budget_hit) return false;
    }
    return false;
}

} // namespace

bool coverWindowWithOverhang(const Poly2& tile, int w, int h, std::int64_t node_budget,
                             bool* budget_hit) {
    if (tile.cells.empty()) throw std::invalid_argument("empty tile");
    CoverState st{tile, {}, 0, node_budget, false};
    const bool ok = coverWindowRec(tile, w, h, st, 0);
    if (budget_hit) *budget_hit = st.budget_hit;
    return ok;
}

std::optional<int> findUntileableWindow(const Poly2& tile, int max_size) {
    for (int k = 1; k <= max_size; ++k) {
        bool hit = false;
        if (!coverWindowWithOverhang(tile, k, k, 20'000'000, &hit) && !hit) return k;
    }
    return std::nullopt;
}

} // namespace polytile
