#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "pradius/entry.hpp"
#include "pradius/poset.hpp"
#include "pradius/search_control.hpp"

namespace pradius {

// A column matrix over the Entry algebra plus a counter of absorbed rows:
// whenever a row contains an Imag it contributes exactly 1 to every terminal
// value, so it can be deleted and counted into alpha without changing the
// optimum (see compact()).
struct NumberMatrix {
    std::uint64_t alpha = 0;
    std::size_t row_count = 0;
    std::vector<EVector> columns;

    // Convenience constructor from row-major entries; column j gets the
    // commitment label j+1 over a universe of #columns labels.
    static NumberMatrix from_rows(const std::vector<std::vector<Entry>>& rows);
};

// Final product of a partition search over a poset's maximal elements.
struct PartitionOutcome {
    ElementSet primary_set;
    ElementSet secondary_set;
    long long discordancy = 0;
    long long radius = 0;
    bool optimal = true;
    std::uint64_t nodes_expanded = 0;
};

// Λ* and the winning commitments, before any radius bookkeeping.
struct DiscordancyResult {
    long long lambda_star = 0;
    ElementSet primary_set;
    ElementSet secondary_set;
    bool optimal = true;
    std::uint64_t nodes_expanded = 0;
};

// One column per maximal element of P in ascending element order: the
// adjacency vector of that element (its principal ideal as a 0/1 column),
// committed pri = {element}, sec = {}. alpha = 0.
NumberMatrix radius_matrix(const Poset& p);

// Delete every row holding an Imag in any column and add the count to alpha.
// Preserves the optimum: Λ*(result) + 0 = Λ*(input) with the alpha shift.
NumberMatrix compact(const NumberMatrix& m);

// Branch column choice: j maximizes vector_discordancy; k != j minimizes
// vector_discordancy(vec_diff(col_j, col_k)). Ties break to the lowest column
// index. Returns 0-based indices. TooFewColumns unless >= 2 columns.
std::pair<std::size_t, std::size_t> pldm_select(const NumberMatrix& m);

// Toggles for the search's pruning devices (CLI --no-prune-<name>).
struct MatrixPruneOptions {
    // Discard a child when a lower bound on its terminal values cannot beat
    // the incumbent. The bound is the better of a dominant-column argument
    // (support + |entry sum| of one column minus the non-null row count) and
    // the best two-way split of the per-column discordancies corrected by
    // the row-overlap excess; see the search implementation for the model.
    bool discrepancy_bound = true;
    // Use the parity round-up in the bound above and stop outright once the
    // incumbent reaches the parity floor.
    bool parity = true;
};

struct MatrixSearchOptions {
    MatrixPruneOptions prune;
    // Test hook: override the branch column choice (must return two distinct
    // valid 0-based column indices). Null = pldm_select.
    std::function<std::pair<std::size_t, std::size_t>(const NumberMatrix&)> select_override;
    // When set, every visited node is dumped as an indented line
    // "alpha [ (entries) (entries) ... ] op=-|+" for debugging.
    std::ostream* trace = nullptr;
};

// Exact minimum discordancy over all two-way splits of the columns:
// depth-first, difference branch first, compaction after every combination,
// terminal value alpha + discordancy of the last column. EmptyMatrix if the
// matrix has no columns. Budget exhaustion returns best-so-far with
// optimal = false.
DiscordancyResult min_discordancy(const NumberMatrix& m, const SearchControl& control = {},
                                  const MatrixSearchOptions& options = {});

// min_discordancy plus the radius bookkeeping: with n = alpha + number of
// rows holding any nonzero entry, radius = (n + lambda*) / 2 - 1.
PartitionOutcome packing_radius_matrix(const NumberMatrix& m, const SearchControl& control = {},
                                       const MatrixSearchOptions& options = {});

// Oracle: enumerate all 2^(m-1) two-way splits of the maximal elements of P,
// computing the discordancy through ideals. TooManyMaximal beyond 24.
PartitionOutcome brute_min_discordancy(const Poset& p);

// Discordancy of one concrete split, via ideals: |w(A) - w(B)| + |<A> ∩ <B>|.
long long discordancy_of_partition(const Poset& p, const ElementSet& a, const ElementSet& b);

// Debug rendering of one matrix: "alpha [ (1,-1,0) (0,1,i) ]".
std::string format_matrix(const NumberMatrix& m);

}  // namespace pradius
