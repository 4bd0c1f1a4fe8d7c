#pragma once

#include "lexleast/word.hpp"

#include <cstddef>
#include <vector>

namespace lexleast {

/// One square occurrence: w[start : start+2*period] = yy with |y| = period.
struct SquareOccurrence {
    std::size_t start = 0;
    std::size_t period = 0;
    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// Endpoint map of all squares in a word. endpoints holds, sorted and
/// deduplicated, every index e (inclusive last index) at which some square
/// ends; occurrences[k] is a minimal-period witness ending at endpoints[k].
struct SquareReport {
    std::vector<std::size_t> endpoints;
    std::vector<SquareOccurrence> occurrences;
    bool contains_square() const { return !endpoints.empty(); }
    friend bool operator==(const SquareReport&, const SquareReport&) = default;
};

/// True iff w contains a factor yy with y nonempty. Divide-and-conquer over
/// longest-extension (Z) arrays; O(|w| log |w|) letter comparisons, purely
/// comparison based so the alphabet may be unbounded.
bool has_square(const Word& w);

/// True iff some suffix of w is a square. Uses the Z-array of the reversed
/// word: a square suffix of half-length l exists iff Z(reverse(w))[l] >= l.
/// O(|w|) per call.
bool has_square_suffix(const Word& w);

/// Full endpoint map; agrees with naive_square_scan by construction (each
/// divide-and-conquer crossing family contributes a contiguous endpoint run).
SquareReport square_endpoints(const Word& w);

/// Exhaustive O(|w|^3) scan over every (start, period); ground truth for the
/// optimized detectors. Throws std::length_error above the cap.
SquareReport naive_square_scan(const Word& w, std::size_t cap = 4096);

/// z[i] = length of the longest common prefix of w and w[i:]; z[0] = |w|.
std::vector<std::uint32_t> z_array(std::span<const Letter> w);

}  // namespace lexleast
