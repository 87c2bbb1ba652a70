#pragma once

#include <utility>
#include <vector>

#include "pradius/element_set.hpp"

namespace pradius {

// Structural flags used to pick closed forms / fast paths.
struct Classification {
    bool is_chain = false;
    bool is_antichain = false;
    bool is_hierarchical = false;            // comparability determined by level
    bool has_disjoint_maximal_ideals = false;  // ideals of maximal elements pairwise disjoint
};

struct InducedPoset;

// Finite poset on labels {1, ..., n}, stored as its reflexive-transitive
// order relation. below(j) is the principal ideal of j; above(i) its filter.
class Poset {
public:
    // Build from cover (or any generating) relations a <= b. The reflexive
    // transitive closure is taken; a closure violating antisymmetry raises
    // CycleError, labels outside 1..n raise RangeError.
    static Poset from_cover_relations(int n, const std::vector<std::pair<int, int>>& relations);

    // Build from a full 0/1 adjacency matrix, entry [i][j] = 1 iff i+1 <= j+1
    // (1-based elements, row-major). All three partial-order axioms are
    // verified; any failure raises NotAPartialOrder.
    static Poset from_adjacency_matrix(const std::vector<std::vector<int>>& a);

    int size() const { return n_; }

    // label_a <= label_b in the order.
    bool leq(int a, int b) const;

    // Principal ideal of one element (includes the element).
    const ElementSet& below(int label) const;
    const ElementSet& above(int label) const;

    // Smallest ideal containing x: union of principal ideals.
    ElementSet ideal(const ElementSet& x) const;

    // |ideal(x)|.
    int weight_of_set(const ElementSet& x) const;

    // Elements of x with no strictly larger element inside x.
    ElementSet maximal_elements(const ElementSet& x) const;
    // Maximal elements of the whole poset.
    ElementSet maximal_elements() const;

    Classification classify() const;

    // Longest-chain level of every element: level(x) = |longest chain in
    // below(x)|, minimal elements have level 1.
    std::vector<int> levels() const;

    // Same ground set, same maximal elements with their ideals, all other
    // columns reduced to the identity. Idempotent; preserves the packing
    // radius (every element keeps its role as "inside some maximal ideal").
    Poset standard_form() const;

    // Restriction to the ideal generated by x (x must be nonempty, else
    // EmptyIdeal). New labels 1..k follow ascending original labels.
    InducedPoset induced_ideal_subposet(const ElementSet& x) const;

    // Row-major reflexive-transitive 0/1 matrix.
    std::vector<std::vector<int>> adjacency_matrix() const;

    // All strict pairs a < b, sorted.
    std::vector<std::pair<int, int>> strict_pairs() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.below_ == b.below_;
    }
    friend bool operator!=(const Poset& a, const Poset& b) { return !(a == b); }

private:
    Poset(int n, std::vector<ElementSet> below, std::vector<ElementSet> above)
        : n_(n), below_(std::move(below)), above_(std::move(above)) {}

    static Poset finish(int n, std::vector<Bits> leq_rows);  // closure taken, axioms checked

    int n_ = 0;
    std::vector<ElementSet> below_;  // below_[j] = {i : i <= j+1}
    std::vector<ElementSet> above_;  // above_[i] = {j : i+1 <= j}
};

struct InducedPoset {
    Poset poset;
    std::vector<int> original_labels;  // original_labels[new_label - 1]
};

}  // namespace pradius
