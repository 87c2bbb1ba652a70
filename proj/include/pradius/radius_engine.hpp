#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pradius/codes.hpp"
#include "pradius/poset.hpp"
#include "pradius/poset_partition.hpp"
#include "pradius/search_control.hpp"

namespace pradius {

enum class Strategy {
    Auto,          // closed forms / reductions where the structure allows
    Brute,         // exhaustive split enumeration
    Differencing,  // branch-and-bound on the radius matrix
};

struct PosetRadiusResult {
    PartitionOutcome outcome;
    std::string strategy_used;  // chain|antichain|hierarchical|disjoint-ideals|differencing|brute
    Classification classification;
};

// Exact packing radius of a poset with an optimum split of its maximal
// elements. Auto dispatch: chain and anti-chain closed forms, hierarchical
// closed form, disjoint maximal ideals via the classic partition solver,
// general case via the matrix search.
PosetRadiusResult radius_of_poset(const Poset& p, Strategy strategy = Strategy::Auto,
                                  const SearchControl& control = {},
                                  const MatrixSearchOptions& matrix_options = {});

// Packing radius of a nonzero vector: the radius of the subposet induced by
// the ideal of its support, with the partition mapped back to original
// element labels. ZeroVector on v = 0.
PosetRadiusResult radius_of_vector(const Poset& p, const FieldVector& v,
                                   Strategy strategy = Strategy::Auto,
                                   const SearchControl& control = {},
                                   const MatrixSearchOptions& matrix_options = {});

// How one deduplicated codeword class was handled.
enum class CodewordMethod {
    Evaluated,
    SkippedContainment,   // an earlier class has a contained ideal
    SkippedSizeBound,     // incumbent ideal small enough to dominate
    SkippedHierarchical,  // hierarchical closed form answered for the code
};

std::string codeword_method_name(CodewordMethod m);

struct CodewordClassStat {
    FieldVector representative;   // first codeword of the class in stream order
    ElementSet support;           // support of the representative
    ElementSet ideal;             // ideal of the support
    std::uint64_t codewords = 0;  // how many codewords collapsed here
    CodewordMethod method = CodewordMethod::Evaluated;
    long long radius = -1;        // filled when method == Evaluated
};

struct CodeRadiusOptions {
    bool support_dedup = true;
    bool ideal_dedup = true;
    bool containment = true;
    bool size_bound = true;
    bool hierarchical_shortcut = true;
    MatrixPruneOptions matrix_prune;
    std::uint64_t cap = kDefaultEnumerationCap;
    int threads = 1;
};

struct CodeRadiusResult {
    long long radius = 0;
    FieldVector packing_vector;
    long long minimum_distance = 0;
    std::vector<CodewordClassStat> stats;  // in evaluation order
    bool optimal = true;
    std::uint64_t nodes_expanded = 0;      // summed over evaluated classes
    std::uint64_t codewords_enumerated = 0;
    std::string strategy_used;             // per-codeword | hierarchical
};

// Minimum per-codeword packing radius over the nonzero codewords, with a
// witnessing packing vector. ZeroDimensionalCode for k = 0; CapExceeded when
// q^k > options.cap.
CodeRadiusResult radius_of_code(const Poset& p, const LinearCode& code,
                                const CodeRadiusOptions& options = {},
                                const SearchControl& control = {});

// ---- radius-preserving matrix edits ---------------------------------------
// Each returns the edited matrix; the packing radius is unchanged (verified
// in tests through packing_radius_matrix). Rows and columns are 1-based.

NumberMatrix er_swap_rows(const NumberMatrix& m, std::size_t r1, std::size_t r2);
NumberMatrix er_swap_cols(const NumberMatrix& m, std::size_t c1, std::size_t c2);
NumberMatrix er_add_null_row(const NumberMatrix& m, std::size_t at);
// The row must be all-Zero; NotNullRow otherwise.
NumberMatrix er_remove_null_row(const NumberMatrix& m, std::size_t at);
// The new column's support must sit inside some existing column's support;
// NotDominated otherwise.
NumberMatrix er_add_dominated_column(const NumberMatrix& m, const std::vector<Entry>& entries,
                                     std::size_t at);
// The removed column's support must sit inside another column's support.
NumberMatrix er_remove_dominated_column(const NumberMatrix& m, std::size_t at);

// ---- support-containment comparison ---------------------------------------

enum class SupportOrder { LE, GE, Unknown };

struct SupportComparison {
    SupportOrder order = SupportOrder::Unknown;
    bool equal = false;  // containment holds both ways (reported as LE)
};

// Compare two equally sized matrices by column-support containment: LE means
// every column of a embeds (greedy matching, largest support first) into a
// distinct dominating column of b, which bounds radius(a) <= radius(b).
// Never wrong, possibly Unknown. DimensionMismatch on unequal shapes.
SupportComparison compare_by_support(const NumberMatrix& a, const NumberMatrix& b);

}  // namespace pradius
