// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace polytile {

/// A finite set of positive integers with Golomb-ruler semantics
/// (all pairwise differences distinct), optionally taken modulo `modulus`.
struct DifferenceSet {
    std::vector<std::int64_t> elements;  // strictly increasing, all >= 1 (or >= 0 after normalize)
    std::optional<std::int64_t> modulus; // if present: modulus > max(elements)

    bool operator==(const DifferenceSet&) const = default;
};

/// {2^0, 2^1, ..., 2^(n-1)}. Throws std::invalid_argument for n < 1.
DifferenceSet powersRuler(int n);

/// ({2^2, ..., 2^n}, modulus 2^n + 2). Throws for n < 2.
DifferenceSet modularPowersRuler(int n);

/// True iff all unordered-pair absolute differences are pairwise distinct.
bool isGolomb(const DifferenceSet& s);

/// True iff all signed differences of distinct ordered pairs are distinct
/// modulo s.modulus. Throws std::invalid_argument if the modulus is missing
/// or not greater than max(elements).
bool isModularGolomb(const DifferenceSet& s);

/// Encoding-level schedule for a set of n_tiles Wang tiles: levels 2^k for
/// 2 <= k <= 3*n_tiles+1, with total level count 2^(3*n_tiles+1) + 2.
struct LevelSchedule {
    std::vector<std::int64_t> levels;
    std::int64_t total_levels;
};
LevelSchedule encoderLevels(int n_tiles);

/// Shortest Golomb ruler with `order` marks and length <= length_budget,
/// normalized to start at 0; lexicographically least among minimal-length.
/// Returns nullopt when no ruler fits the budget.
std::optional<DifferenceSet> searchMinRuler(int order, std::int64_t length_budget);

/// Translate so the least element becomes zero (search convention).
DifferenceSet normalized(const DifferenceSet& s);

} // namespace polytile
