#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pradius/errors.hpp"
#include "pradius/search_control.hpp"

namespace pradius {

// Multiset of positive integers to be split into two blocks.
using IntList = std::vector<long long>;

// Outcome of a two-way partition search. Blocks hold 0-based indices into the
// input list; every input index lands in exactly one block, and the reported
// discrepancy always equals |sum(block1) - sum(block2)|.
struct ClassicPartitionResult {
    std::vector<std::size_t> block1;
    std::vector<std::size_t> block2;
    long long discrepancy = 0;
    bool optimal = false;
    std::uint64_t nodes_expanded = 0;
    // Differencing trace: the successive value lists, starting with the input
    // sorted descending. Filled by kk_ldm only.
    std::vector<IntList> instances;
};

// |sum over block1 - sum over the rest|. IndexOutOfRange on a bad index.
long long discrepancy(const IntList& values, const std::vector<std::size_t>& block1);

// Largest-differencing-method heuristic: repeatedly replaces the two largest
// values by their difference, then unwinds the commitments into two blocks.
// Optimal (and flagged so) for lists of up to 4 values. EmptyList on empty
// input. Ties between equal values break toward the earliest-created item
// (original index order for input values).
ClassicPartitionResult kk_ldm(const IntList& values);

// Complete anytime differencing search: depth-first, difference branch first,
// so the first leaf reached is exactly the kk_ldm solution. Terminal rules:
//   - a value at least as large as the sum of the rest goes alone;
//   - 3 values: largest alone is optimal;
//   - 4 values: the differencing heuristic is optimal;
//   - 5 values: min(differencing, two largest together) is optimal.
// Stops early once the incumbent hits the parity floor (sum mod 2). Respects
// node/time budgets (optimal = false when one trips) and reports improving
// incumbents through control.on_improve.
ClassicPartitionResult ckk(const IntList& values, const SearchControl& control = {});

// Exhaustive 2^(n-1) scan, the reference oracle. TooLarge for more than 24
// values. Always optimal; among equal-discrepancy partitions keeps the first
// in mask enumeration order (block1 always contains index 0).
ClassicPartitionResult brute_partition(const IntList& values);

// Exact minimum discrepancy via a subset-sum reachability bitmask, usable
// whenever the value sum is small (the poset solvers' lists always are).
// Returns nullopt if the sum exceeds `max_sum_bits`.
std::optional<long long> min_discrepancy_exact(const IntList& values,
                                               std::size_t max_sum_bits = std::size_t{1} << 22);

}  // namespace pradius
