// SPDX-License-Identifier: Apache-2.0
#include "polytile/diffsets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace polytile {

static void checkElements(const DifferenceSet& s) {
    for (std::size_t i = 1; i < s.elements.size(); ++i) {
        if (s.elements[i] <= s.elements[i - 1])
            throw std::invalid_argument("difference set must be strictly increasing");
    }
}

DifferenceSet powersRuler(int n) {
    if (n < 1) throw std::invalid_argument("powersRuler: n must be >= 1");
    DifferenceSet s;
    s.elements.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) s.elements.push_back(std::int64_t{1} << k);
    return s;
}

DifferenceSet modularPowersRuler(int n) {
    if (n < 2) throw std::invalid_argument("modularPowersRuler: n must be >= 2");
    DifferenceSet s;
    for (int k = 2; k <= n; ++k) s.elements.push_back(std::int64_t{1} << k);
    s.modulus = (std::int64_t{1} << n) + 2;
    return s;
}

bool isGolomb(const DifferenceSet& s) {
    checkElements(s);
    std::unordered_set<std::int64_t> seen;
    const auto& e = s.elements;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (!seen.insert(e[j] - e[i]).second) return false;
    return true;
}

bool isModularGolomb(const DifferenceSet& s) {
    checkElements(s);
    if (!s.modulus) throw std::invalid_argument("isModularGolomb: modulus missing");
    const std::int64_t m = *s.modulus;
    if (!s.elements.empty() && m <= s.elements.back())
        throw std::invalid_argument("isModularGolomb: modulus must exceed max element");
    std::unordered_set<std::int64_t> seen;
    const auto& e = s.elements;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            std::int64_t d = ((e[i] - e[j]) % m + m) % m;
            if (!seen.insert(d).second) return false;
        }
    return true;
}

LevelSchedule encoderLevels(int n_tiles) {
    if (n_tiles < 1) throw std::invalid_argument("encoderLevels: n_tiles must be >= 1");
    LevelSchedule out;
    for (int k = 2; k <= 3 * n_tiles + 1; ++k) out.levels.push_back(std::int64_t{1} << k);
    out.total_levels = (std::int64_t{1} << (3 * n_tiles + 1)) + 2;
    return out;
}

namespace {

// DFS over marks in ascending order; the first complete ruler found at a given
// length is the lexicographically least one.
bool extendRuler(std::vector<std::int64_t>& marks, std::vector<bool>& used, int order,
                 std::int64_t length) {
    if (static_cast<int>(marks.size()) == order) return marks.back() == length;
    // Last mark must still be reachable.
    for (std::int64_t next = marks.back() + 1; next <= length; ++next) {
        bool ok = true;
        for (auto m : marks) {
            if (used[static_cast<std::size_t>(next - m)]) { ok = false; break; }
        }
        if (!ok) continue;
        for (auto m : marks) used[static_cast<std::size_t>(next - m)] = true;
        marks.push_back(next);
        if (extendRuler(marks, used, order, length)) return true;
        marks.pop_back();
        for (auto m : marks) used[static_cast<std::size_t>(next - m)] = false;
    }
    return false;
}

} // namespace

std::optional<DifferenceSet> searchMinRuler(int order, std::int64_t length_budget) {
    if (order < 1) throw std::invalid_argument("searchMinRuler: order must be >= 1");
    if (length_budget < order - 1) throw std::invalid_argument("searchMinRuler: budget too small");
    if (order == 1) return DifferenceSet{{0}, std::nullopt};
    for (std::int64_t length = order - 1; length <= length_budget; ++length) {
        std::vector<std::int64_t> marks{0};
        std::vector<bool> used(static_cast<std::size_t>(length) + 1, false);
        if (extendRuler(marks, used, order, length))
            return DifferenceSet{marks, std::nullopt};
    }
    return std::nullopt;
}

DifferenceSet normalized(const DifferenceSet& s) {
    DifferenceSet out = s;
    if (out.elements.empty()) return out;
    const std::int64_t lo = out.elements.front();
    for (auto& e : out.elements) e -= lo;
    return out;
}

} // namespace polytile
