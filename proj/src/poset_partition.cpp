#include "pradius/poset_partition.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <string>

#include "pradius/classic_partition.hpp"

namespace pradius {

NumberMatrix NumberMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
    NumberMatrix m;
    m.row_count = rows.size();
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw LengthMismatch("ragged entry matrix");
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Entry> column(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) column[i] = rows[i][j];
        m.columns.push_back(
            EVector::from_entries(column, static_cast<int>(cols), static_cast<int>(j) + 1));
    }
    return m;
}

NumberMatrix radius_matrix(const Poset& p) {
    NumberMatrix m;
    m.row_count = static_cast<std::size_t>(p.size());
    for (int x : p.maximal_elements().labels()) {
        ElementSet pri(p.size());
        pri.add(x);
        m.columns.emplace_back(p.below(x).bits(), Bits(m.row_count), std::move(pri),
                               ElementSet(p.size()));
    }
    return m;
}

NumberMatrix compact(const NumberMatrix& m) {
    Bits imag(m.row_count);
    for (const EVector& c : m.columns) imag |= c.imag_rows();
    if (imag.none()) return m;
    Bits keep(m.row_count);
    for (std::size_t i = 0; i < m.row_count; ++i)
        if (!imag.test(i)) keep.set(i);
    NumberMatrix out;
    out.alpha = m.alpha + imag.count();
    out.row_count = keep.count();
    out.columns.reserve(m.columns.size());
    for (const EVector& c : m.columns) out.columns.push_back(c.compressed(keep));
    return out;
}

std::pair<std::size_t, std::size_t> pldm_select(const NumberMatrix& m) {
    if (m.columns.size() < 2)
        throw TooFewColumns("branch selection needs at least two columns, have " +
                            std::to_string(m.columns.size()));
    std::size_t j = 0;
    long long best_lambda = LLONG_MIN;
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
        long long l = vector_discordancy(m.columns[c]);
        if (l > best_lambda) {
            best_lambda = l;
            j = c;
        }
    }
    std::size_t k = j;
    long long best_diff = LLONG_MAX;
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
        if (c == j) continue;
        long long l = vector_discordancy(vec_diff(m.columns[j], m.columns[c]));
        if (l < best_diff) {
            best_diff = l;
            k = c;
        }
    }
    return {j, k};
}

long long discordancy_of_partition(const Poset& p, const ElementSet& a, const ElementSet& b) {
    ElementSet ia = p.ideal(a);
    ElementSet ib = p.ideal(b);
    long long wa = ia.size();
    long long wb = ib.size();
    long long delta = wa > wb ? wa - wb : wb - wa;
    return delta + (ia & ib).size();
}

std::string format_matrix(const NumberMatrix& m) {
    std::ostringstream os;
    os << m.alpha << " [";
    for (const EVector& c : m.columns) {
        os << " (";
        for (std::size_t i = 0; i < c.rows(); ++i) {
            if (i) os << ",";
            os << entry_to_string(c.at(i));
        }
        os << ")";
    }
    os << " ]";
    return os.str();
}

namespace {

// All-primary fallback partition: fold every column together on one side.
// Used only when a budget expires before the first terminal is reached.
DiscordancyResult trivial_terminal(const NumberMatrix& m) {
    EVector acc = m.columns[0];
    for (std::size_t c = 1; c < m.columns.size(); ++c) acc = vec_assoc(acc, m.columns[c]);
    DiscordancyResult r;
    r.lambda_star = static_cast<long long>(m.alpha) + vector_discordancy(acc);
    r.primary_set = acc.pri();
    r.secondary_set = acc.sec();
    return r;
}

class MatrixSearch {
public:
    MatrixSearch(const NumberMatrix& root, const SearchControl& control,
                 const MatrixSearchOptions& options)
        : options_(options), clock_(control) {
        Bits nonnull(root.row_count);
        for (const EVector& c : root.columns) nonnull |= c.nonzero_rows();
        parity_ = static_cast<long long>((root.alpha + nonnull.count()) & 1);
    }

    DiscordancyResult run(const NumberMatrix& root) {
        visit(compact(root), 0, nullptr);
        DiscordancyResult r;
        if (best_ == LLONG_MAX) {
            r = trivial_terminal(root);
            r.optimal = false;
        } else {
            r.lambda_star = best_;
            r.primary_set = best_pri_;
            r.secondary_set = best_sec_;
            r.optimal = !exhausted_;
        }
        r.nodes_expanded = nodes_;
        return r;
    }

private:
    // Sound lower bound on every terminal value reachable from this node,
    // taken as the better of two relaxations:
    //  - dominant column: within the strongest column's support the fold
    //    keeps at least that column's |entry sum| (each shared row either
    //    merges, costs a deletion, or cancels one unit), and every row
    //    outside the support can cancel at most one more unit, so terminals
    //    are >= alpha + (support + |entry sum|) - (non-null rows).
    //  - split relaxation: with non-overlapping columns terminals would be
    //    >= alpha + the best two-way split of the per-column discordancies;
    //    each extra column covering an already covered row can absorb one
    //    unit, so the total overlap excess is subtracted.
    // Terminal values share the root's parity, so with parity pruning on the
    // bound is first rounded up to that parity.
    bool prunable(const NumberMatrix& nm) const {
        if (!options_.prune.discrepancy_bound || best_ == LLONG_MAX) return false;
        IntList lams;
        lams.reserve(nm.columns.size());
        long long lam_sum = 0;
        long long dominant = 0;
        long long mass = 0;  // nonzero entries summed over columns
        Bits covered(nm.row_count);
        for (const EVector& c : nm.columns) {
            const long long lam = vector_discordancy(c);
            const long long supp = static_cast<long long>(c.nonzero_rows().count());
            lams.push_back(lam);
            lam_sum += lam;
            dominant = std::max(dominant, lam + supp);
            mass += supp;
            covered |= c.nonzero_rows();
        }
        const long long nonnull = static_cast<long long>(covered.count());
        const long long excess = mass - nonnull;  // sum of (row multiplicity - 1)
        auto delta = min_discrepancy_exact(lams);
        const long long split = (delta ? *delta : (lam_sum & 1)) - excess;
        long long bound = static_cast<long long>(nm.alpha) +
                          std::max({dominant - nonnull, split, 0LL});
        if (!options_.prune.parity) return bound - 1 >= best_;
        if ((bound & 1) != parity_) bound += 1;
        return bound >= best_;
    }

    NumberMatrix combined(const NumberMatrix& nm, std::size_t j, std::size_t k, bool diff) const {
        NumberMatrix child;
        child.alpha = nm.alpha;
        child.row_count = nm.row_count;
        child.columns.reserve(nm.columns.size() - 1);
        const std::size_t lo = j < k ? j : k;
        const std::size_t hi = j < k ? k : j;
        for (std::size_t c = 0; c < nm.columns.size(); ++c) {
            if (c == hi) continue;
            if (c == lo)
                child.columns.push_back(diff ? vec_diff(nm.columns[j], nm.columns[k])
                                             : vec_assoc(nm.columns[j], nm.columns[k]));
            else
                child.columns.push_back(nm.columns[c]);
        }
        return compact(child);
    }

    void dump(const NumberMatrix& nm, int depth, const char* op) const {
        if (!options_.trace) return;
        for (int i = 0; i < depth; ++i) *options_.trace << "  ";
        *options_.trace << format_matrix(nm);
        if (op) *options_.trace << " op=" << op;
        *options_.trace << "\n";
    }

    void visit(const NumberMatrix& nm, int depth, const char* op) {
        ++nodes_;
        dump(nm, depth, op);
        if (!clock_.admit_node(nodes_)) {
            exhausted_ = true;
            return;
        }
        if (nm.columns.size() == 1) {
            long long value = static_cast<long long>(nm.alpha) + vector_discordancy(nm.columns[0]);
            if (value < best_) {
                best_ = value;
                best_pri_ = nm.columns[0].pri();
                best_sec_ = nm.columns[0].sec();
                clock_.report(best_, nodes_);
                if (options_.prune.parity && best_ == parity_) done_ = true;
            }
            return;
        }
        auto [j, k] = options_.select_override ? options_.select_override(nm) : pldm_select(nm);

        NumberMatrix left = combined(nm, j, k, /*diff=*/true);
        if (!prunable(left)) {
            visit(left, depth + 1, "⊖");
            if (done_ || exhausted_) return;
        }
        NumberMatrix right = combined(nm, j, k, /*diff=*/false);
        if (!prunable(right)) visit(right, depth + 1, "⊕");
    }

    const MatrixSearchOptions& options_;
    BudgetClock clock_;
    long long parity_ = 0;
    long long best_ = LLONG_MAX;
    ElementSet best_pri_;
    ElementSet best_sec_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    bool exhausted_ = false;
};

}  // namespace

DiscordancyResult min_discordancy(const NumberMatrix& m, const SearchControl& control,
                                  const MatrixSearchOptions& options) {
    if (m.columns.empty()) throw EmptyMatrix("discordancy search needs at least one column");
    return MatrixSearch(m, control, options).run(m);
}

PartitionOutcome packing_radius_matrix(const NumberMatrix& m, const SearchControl& control,
                                       const MatrixSearchOptions& options) {
    if (m.columns.empty()) throw EmptyMatrix("radius computation needs at least one column");
    Bits nonnull(m.row_count);
    for (const EVector& c : m.columns) nonnull |= c.nonzero_rows();
    const long long n = static_cast<long long>(m.alpha + nonnull.count());

    DiscordancyResult d = min_discordancy(m, control, options);
    PartitionOutcome out;
    out.primary_set = d.primary_set;
    out.secondary_set = d.secondary_set;
    out.discordancy = d.lambda_star;
    out.radius = (n + d.lambda_star) / 2 - 1;
    out.optimal = d.optimal;
    out.nodes_expanded = d.nodes_expanded;
    return out;
}

PartitionOutcome brute_min_discordancy(const Poset& p) {
    std::vector<int> maxelts = p.maximal_elements().labels();
    const std::size_t m = maxelts.size();
    if (m > 24)
        throw TooManyMaximal("exhaustive split enumeration refused beyond 24 maximal elements, "
                             "got " +
                             std::to_string(m));
    const std::uint64_t masks = std::uint64_t{1} << (m - 1);
    long long best = LLONG_MAX;
    ElementSet best_a(p.size());
    ElementSet best_b(p.size());
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        ElementSet a(p.size());
        ElementSet b(p.size());
        a.add(maxelts[0]);  // fix the first maximal element's side
        for (std::size_t i = 1; i < m; ++i)
            ((mask >> (i - 1)) & 1 ? a : b).add(maxelts[i]);
        long long lambda = discordancy_of_partition(p, a, b);
        if (lambda < best) {
            best = lambda;
            best_a = a;
            best_b = b;
        }
    }
    PartitionOutcome out;
    out.primary_set = best_a;
    out.secondary_set = best_b;
    out.discordancy = best;
    out.radius = (p.size() + best) / 2 - 1;
    out.optimal = true;
    out.nodes_expanded = masks;
    return out;
}

}  // namespace pradius
