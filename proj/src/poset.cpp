#include "pradius/poset.hpp"

#include <algorithm>
#include <string>

namespace pradius {

namespace {

// Reflexive-transitive closure of an arbitrary relation given as "above" rows:
// row[i] = set of j with i -> j. Warshall over bitset rows.
void close(std::vector<Bits>& row) {
    const std::size_t n = row.size();
    for (std::size_t i = 0; i < n; ++i) row[i].set(i);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (row[i].test(k)) row[i] |= row[k];
}

}  // namespace

Poset Poset::finish(int n, std::vector<Bits> above_rows) {
    // Antisymmetry: i <= k and k <= i for i != k means the generating
    // relation contained a cycle.
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (above_rows[i].test(static_cast<std::size_t>(k)) &&
                above_rows[k].test(static_cast<std::size_t>(i)))
                throw CycleError("relation closure makes " + std::to_string(i + 1) + " and " +
                                 std::to_string(k + 1) + " mutually comparable");

    std::vector<ElementSet> below(static_cast<std::size_t>(n), ElementSet(n));
    std::vector<ElementSet> above;
    above.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        above.emplace_back(above_rows[static_cast<std::size_t>(i)]);
        above_rows[static_cast<std::size_t>(i)].for_each_set([&](std::size_t j) {
            below[j].add(i + 1);
        });
    }
    return Poset(n, std::move(below), std::move(above));
}

Poset Poset::from_cover_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    if (n < 1) throw RangeError("poset needs at least one element");
    std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw RangeError("relation " + std::to_string(a) + " " + std::to_string(b) +
                             " outside 1.." + std::to_string(n));
        rows[static_cast<std::size_t>(a - 1)].set(static_cast<std::size_t>(b - 1));
    }
    close(rows);
    return finish(n, std::move(rows));
}

Poset Poset::from_adjacency_matrix(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw NotAPartialOrder("adjacency matrix is empty");
    std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n)
            throw NotAPartialOrder("adjacency matrix is not square");
        for (int j = 0; j < n; ++j) {
            int v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v != 0 && v != 1) throw NotAPartialOrder("adjacency entries must be 0 or 1");
            if (v) rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!rows[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(i)))
            throw NotAPartialOrder("relation is not reflexive at element " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j) {
            if (i != j && rows[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)) &&
                rows[static_cast<std::size_t>(j)].test(static_cast<std::size_t>(i)))
                throw NotAPartialOrder("relation is not antisymmetric on " + std::to_string(i + 1) +
                                       ", " + std::to_string(j + 1));
            if (rows[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)) &&
                !rows[static_cast<std::size_t>(j)].subset_of(rows[static_cast<std::size_t>(i)]))
                // i <= j requires everything above j to sit above i as well
                throw NotAPartialOrder("relation is not transitive through " +
                                       std::to_string(i + 1) + " <= " + std::to_string(j + 1));
        }
    }
    return finish(n, std::move(rows));
}

bool Poset::leq(int a, int b) const {
    return below(b).contains(a);
}

const ElementSet& Poset::below(int label) const {
    if (label < 1 || label > n_)
        throw RangeError("element label " + std::to_string(label) + " outside 1.." +
                         std::to_string(n_));
    return below_[static_cast<std::size_t>(label - 1)];
}

const ElementSet& Poset::above(int label) const {
    if (label < 1 || label > n_)
        throw RangeError("element label " + std::to_string(label) + " outside 1.." +
                         std::to_string(n_));
    return above_[static_cast<std::size_t>(label - 1)];
}

ElementSet Poset::ideal(const ElementSet& x) const {
    if (x.universe_size() != n_) throw RangeError("element set universe does not match poset size");
    ElementSet out(n_);
    x.bits().for_each_set([&](std::size_t i) { out |= below_[i]; });
    return out;
}

int Poset::weight_of_set(const ElementSet& x) const {
    return ideal(x).size();
}

ElementSet Poset::maximal_elements(const ElementSet& x) const {
    if (x.universe_size() != n_) throw RangeError("element set universe does not match poset size");
    ElementSet out(n_);
    x.bits().for_each_set([&](std::size_t i) {
        // i is maximal in x iff nothing else of x lies strictly above it
        Bits strictly_above = above_[i].bits();
        strictly_above.reset(i);
        if (!strictly_above.intersects(x.bits())) out.add(static_cast<int>(i) + 1);
    });
    return out;
}

ElementSet Poset::maximal_elements() const {
    return maximal_elements(ElementSet::full(n_));
}

std::vector<int> Poset::levels() const {
    // level(x) = 1 + max level of elements strictly below; ideals ordered by
    // size give a valid evaluation order.
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return below_[static_cast<std::size_t>(a)].size() < below_[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> level(static_cast<std::size_t>(n_), 1);
    for (int i : order) {
        int best = 0;
        below_[static_cast<std::size_t>(i)].bits().for_each_set([&](std::size_t j) {
            if (static_cast<int>(j) != i) best = std::max(best, level[j]);
        });
        level[static_cast<std::size_t>(i)] = best + 1;
    }
    return level;
}

Classification Poset::classify() const {
    Classification c;
    bool all_comparable = true;
    bool none_comparable = true;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) {
            bool cmp = leq(i, j) || leq(j, i);
            all_comparable = all_comparable && cmp;
            none_comparable = none_comparable && !cmp;
        }
    c.is_chain = all_comparable;
    c.is_antichain = none_comparable;

    std::vector<int> lv = levels();
    c.is_hierarchical = true;
    for (int i = 1; i <= n_ && c.is_hierarchical; ++i)
        for (int j = 1; j <= n_; ++j) {
            if (i == j) continue;
            bool strictly_less = leq(i, j);
            if (strictly_less != (lv[static_cast<std::size_t>(i - 1)] <
                                  lv[static_cast<std::size_t>(j - 1)])) {
                c.is_hierarchical = false;
                break;
            }
        }

    std::vector<int> maxelts = maximal_elements().labels();
    c.has_disjoint_maximal_ideals = true;
    for (std::size_t a = 0; a < maxelts.size() && c.has_disjoint_maximal_ideals; ++a)
        for (std::size_t b = a + 1; b < maxelts.size(); ++b)
            if (below(maxelts[a]).intersects(below(maxelts[b]))) {
                c.has_disjoint_maximal_ideals = false;
                break;
            }
    return c;
}

Poset Poset::standard_form() const {
    ElementSet maxelts = maximal_elements();
    std::vector<Bits> rows(static_cast<std::size_t>(n_), Bits(static_cast<std::size_t>(n_)));
    for (int j = 1; j <= n_; ++j) {
        if (maxelts.contains(j)) {
            below(j).bits().for_each_set([&](std::size_t i) {
                rows[i].set(static_cast<std::size_t>(j - 1));
            });
        } else {
            rows[static_cast<std::size_t>(j - 1)].set(static_cast<std::size_t>(j - 1));
        }
    }
    // Rows as built are the "above" relation restricted to maximal targets
    // plus the diagonal; this is transitively closed and acyclic already, but
    // go through finish() to keep every constructor validated.
    return finish(n_, std::move(rows));
}

InducedPoset Poset::induced_ideal_subposet(const ElementSet& x) const {
    if (x.universe_size() != n_) throw RangeError("element set universe does not match poset size");
    if (x.empty()) throw EmptyIdeal("induced subposet needs a nonempty generating set");
    ElementSet id = ideal(x);
    std::vector<int> original = id.labels();  // ascending
    const int k = static_cast<int>(original.size());
    std::vector<Bits> rows(static_cast<std::size_t>(k), Bits(static_cast<std::size_t>(k)));
    for (int bi = 0; bi < k; ++bi)
        for (int bj = 0; bj < k; ++bj)
            if (leq(original[static_cast<std::size_t>(bi)], original[static_cast<std::size_t>(bj)]))
                rows[static_cast<std::size_t>(bi)].set(static_cast<std::size_t>(bj));
    InducedPoset out{finish(k, std::move(rows)), std::move(original)};
    return out;
}

std::vector<std::vector<int>> Poset::adjacency_matrix() const {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (leq(i, j)) a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 1;
    return a;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (i != j && leq(i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace pradius
