#include "pradius/radius_engine.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "pradius/classic_partition.hpp"

namespace pradius {

namespace {

PosetRadiusResult chain_result(const Poset& p) {
    const int n = p.size();
    PartitionOutcome out;
    out.primary_set = p.maximal_elements();
    out.secondary_set = ElementSet(n);
    out.discordancy = n;
    out.radius = n - 1;
    return {out, "chain", p.classify()};
}

PosetRadiusResult antichain_result(const Poset& p) {
    const int n = p.size();
    PartitionOutcome out;
    out.primary_set = ElementSet(n);
    out.secondary_set = ElementSet(n);
    for (int x = 1; x <= n; ++x) (x <= (n + 1) / 2 ? out.primary_set : out.secondary_set).add(x);
    out.discordancy = n % 2;
    out.radius = (n + n % 2) / 2 - 1;
    return {out, "antichain", p.classify()};
}

PosetRadiusResult hierarchical_result(const Poset& p) {
    const int n = p.size();
    std::vector<int> maxelts = p.maximal_elements().labels();
    const int m = static_cast<int>(maxelts.size());
    PartitionOutcome out;
    out.primary_set = ElementSet(n);
    out.secondary_set = ElementSet(n);
    // Balancing the top level is optimal: all lower levels are shared.
    for (int i = 0; i < m; ++i)
        (i < (m + 1) / 2 ? out.primary_set : out.secondary_set).add(maxelts[static_cast<std::size_t>(i)]);
    out.discordancy = (m % 2) + (n - m);
    out.radius = (n + out.discordancy) / 2 - 1;
    return {out, "hierarchical", p.classify()};
}

PosetRadiusResult disjoint_ideals_result(const Poset& p, const SearchControl& control) {
    const int n = p.size();
    std::vector<int> maxelts = p.maximal_elements().labels();
    IntList sizes;
    sizes.reserve(maxelts.size());
    for (int x : maxelts) sizes.push_back(p.below(x).size());
    ClassicPartitionResult split = ckk(sizes, control);
    PartitionOutcome out;
    out.primary_set = ElementSet(n);
    out.secondary_set = ElementSet(n);
    for (std::size_t i : split.block1) out.primary_set.add(maxelts[i]);
    for (std::size_t i : split.block2) out.secondary_set.add(maxelts[i]);
    // Disjoint ideals: the shared term of the discordancy vanishes.
    out.discordancy = split.discrepancy;
    out.radius = (n + split.discrepancy) / 2 - 1;
    out.optimal = split.optimal;
    out.nodes_expanded = split.nodes_expanded;
    return {out, "disjoint-ideals", p.classify()};
}

PosetRadiusResult differencing_result(const Poset& p, const SearchControl& control,
                                      const MatrixSearchOptions& options) {
    PosetRadiusResult r{packing_radius_matrix(radius_matrix(p), control, options), "differencing",
                        p.classify()};
    return r;
}

}  // namespace

PosetRadiusResult radius_of_poset(const Poset& p, Strategy strategy, const SearchControl& control,
                                  const MatrixSearchOptions& matrix_options) {
    switch (strategy) {
        case Strategy::Brute: {
            return {brute_min_discordancy(p), "brute", p.classify()};
        }
        case Strategy::Differencing:
            return differencing_result(p, control, matrix_options);
        case Strategy::Auto:
            break;
    }
    Classification c = p.classify();
    if (c.is_chain) return chain_result(p);
    if (c.is_antichain) return antichain_result(p);
    if (c.is_hierarchical) return hierarchical_result(p);
    if (c.has_disjoint_maximal_ideals) return disjoint_ideals_result(p, control);
    return differencing_result(p, control, matrix_options);
}

PosetRadiusResult radius_of_vector(const Poset& p, const FieldVector& v, Strategy strategy,
                                   const SearchControl& control,
                                   const MatrixSearchOptions& matrix_options) {
    if (v.is_zero()) throw ZeroVector("packing radius undefined for 0");
    if (v.length() != p.size())
        throw LengthMismatch("vector length " + std::to_string(v.length()) +
                             " does not match poset size " + std::to_string(p.size()));
    InducedPoset sub = p.induced_ideal_subposet(v.support());
    PosetRadiusResult inner = radius_of_poset(sub.poset, strategy, control, matrix_options);
    // Lift the split back to original labels.
    ElementSet pri(p.size());
    ElementSet sec(p.size());
    for (int l : inner.outcome.primary_set.labels())
        pri.add(sub.original_labels[static_cast<std::size_t>(l - 1)]);
    for (int l : inner.outcome.secondary_set.labels())
        sec.add(sub.original_labels[static_cast<std::size_t>(l - 1)]);
    inner.outcome.primary_set = pri;
    inner.outcome.secondary_set = sec;
    return inner;
}

std::string codeword_method_name(CodewordMethod m) {
    switch (m) {
        case CodewordMethod::Evaluated: return "evaluated";
        case CodewordMethod::SkippedContainment: return "skipped-containment";
        case CodewordMethod::SkippedSizeBound: return "skipped-size-bound";
        case CodewordMethod::SkippedHierarchical: return "skipped-hierarchical";
    }
    return "?";
}

namespace {

struct CodewordClass {
    FieldVector representative;
    ElementSet support;
    ElementSet ideal;
    int weight = 0;
    std::uint64_t first_index = 0;  // stream position of the representative
    std::uint64_t codewords = 0;
};

}  // namespace

CodeRadiusResult radius_of_code(const Poset& p, const LinearCode& code,
                                const CodeRadiusOptions& options, const SearchControl& control) {
    if (code.dimension() == 0)
        throw ZeroDimensionalCode("packing radius needs at least one nonzero codeword");
    if (code.length() != p.size())
        throw LengthMismatch("code length " + std::to_string(code.length()) +
                             " does not match poset size " + std::to_string(p.size()));

    // Group codewords by support or ideal; without dedup every codeword is
    // its own class. Keys are bitsets, so grouping is exact.
    std::map<std::pair<Bits, std::uint64_t>, CodewordClass> groups;
    CodewordEnumerator stream(code, options.cap);
    std::uint64_t index = 0;
    std::uint64_t enumerated = 0;
    while (auto w = stream.next()) {
        ++enumerated;
        if (w->is_zero()) continue;
        ElementSet support = w->support();
        ElementSet ideal = p.ideal(support);
        std::pair<Bits, std::uint64_t> key{Bits(), 0};
        if (options.ideal_dedup)
            key.first = ideal.bits();
        else if (options.support_dedup)
            key.first = support.bits();
        else
            key = {support.bits(), index};
        auto [it, fresh] = groups.try_emplace(key);
        CodewordClass& cls = it->second;
        if (fresh) {
            cls.representative = *w;
            cls.support = support;
            cls.ideal = ideal;
            cls.weight = ideal.size();
            cls.first_index = index;
        }
        ++cls.codewords;
        ++index;
    }

    std::vector<CodewordClass> classes;
    classes.reserve(groups.size());
    for (auto& [key, cls] : groups) classes.push_back(std::move(cls));
    std::sort(classes.begin(), classes.end(), [](const CodewordClass& a, const CodewordClass& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.first_index < b.first_index;
    });

    CodeRadiusResult result;
    result.codewords_enumerated = enumerated;
    result.minimum_distance = classes.front().weight;

    if (options.hierarchical_shortcut && p.classify().is_hierarchical) {
        // Closed form from the minimum-weight codeword's ideal.
        const CodewordClass& c0 = classes.front();
        const int m = p.maximal_elements(c0.ideal).size();
        result.radius = (2LL * c0.weight - m + (m % 2)) / 2 - 1;
        result.packing_vector = c0.representative;
        result.strategy_used = "hierarchical";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            CodewordClassStat st;
            st.representative = classes[i].representative;
            st.support = classes[i].support;
            st.ideal = classes[i].ideal;
            st.codewords = classes[i].codewords;
            st.method = i == 0 ? CodewordMethod::Evaluated : CodewordMethod::SkippedHierarchical;
            if (i == 0) st.radius = result.radius;
            result.stats.push_back(std::move(st));
        }
        return result;
    }
    result.strategy_used = "per-codeword";

    // Decide skips. Containment is static; the size bound follows the
    // incumbent sequentially, or the first (smallest-ideal) class when
    // evaluating in parallel so that results stay thread-count independent.
    const std::size_t count = classes.size();
    std::vector<CodewordMethod> method(count, CodewordMethod::Evaluated);
    if (options.containment) {
        for (std::size_t w = 1; w < count; ++w)
            for (std::size_t u = 0; u < w; ++u)
                if (classes[u].ideal.subset_of(classes[w].ideal)) {
                    method[w] = CodewordMethod::SkippedContainment;
                    break;
                }
    }

    std::vector<long long> radius_of_class(count, -1);
    std::vector<char> class_optimal(count, 1);  // char: parallel writes per index
    std::vector<std::uint64_t> class_nodes(count, 0);

    auto evaluate = [&](std::size_t i) {
        PosetRadiusResult r = radius_of_vector(p, classes[i].representative, Strategy::Auto,
                                               control, {options.matrix_prune, nullptr, nullptr});
        radius_of_class[i] = r.outcome.radius;
        class_optimal[i] = r.outcome.optimal ? 1 : 0;
        class_nodes[i] = r.outcome.nodes_expanded;
    };

    auto size_bound_skips = [&](long long n0, std::size_t i) {
        // A poset of size n0 never has a larger radius than one of size m
        // when n0 <= ceil(m/2).
        const long long m = classes[i].weight;
        return n0 <= (m + 1) / 2;
    };

    if (options.threads > 1) {
        evaluate(0);
        const long long n0 = classes[0].weight;
        if (options.size_bound)
            for (std::size_t i = 1; i < count; ++i)
                if (method[i] == CodewordMethod::Evaluated && size_bound_skips(n0, i))
                    method[i] = CodewordMethod::SkippedSizeBound;
        std::atomic<std::size_t> cursor{1};
        auto worker = [&] {
            for (std::size_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1))
                if (method[i] == CodewordMethod::Evaluated) evaluate(i);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        long long incumbent_n0 = -1;
        long long incumbent_radius = -1;
        for (std::size_t i = 0; i < count; ++i) {
            if (method[i] != CodewordMethod::Evaluated) continue;
            if (options.size_bound && incumbent_n0 >= 0 && size_bound_skips(incumbent_n0, i)) {
                method[i] = CodewordMethod::SkippedSizeBound;
                continue;
            }
            evaluate(i);
            if (incumbent_radius < 0 || radius_of_class[i] < incumbent_radius) {
                incumbent_radius = radius_of_class[i];
                incumbent_n0 = classes[i].weight;
            }
        }
    }

    long long best = -1;
    std::size_t best_class = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (method[i] != CodewordMethod::Evaluated) continue;
        result.nodes_expanded += class_nodes[i];
        result.optimal = result.optimal && class_optimal[i];
        if (best < 0 || radius_of_class[i] < best) {
            best = radius_of_class[i];
            best_class = i;
        }
    }
    result.radius = best;
    result.packing_vector = classes[best_class].representative;
    for (std::size_t i = 0; i < count; ++i) {
        CodewordClassStat st;
        st.representative = classes[i].representative;
        st.support = classes[i].support;
        st.ideal = classes[i].ideal;
        st.codewords = classes[i].codewords;
        st.method = method[i];
        st.radius = radius_of_class[i];
        result.stats.push_back(std::move(st));
    }
    return result;
}

// ---- radius-preserving matrix edits ----------------------------------------

namespace {

void check_row(const NumberMatrix& m, std::size_t r) {
    if (r < 1 || r > m.row_count)
        throw IndexOutOfRange("row " + std::to_string(r) + " outside 1.." +
                              std::to_string(m.row_count));
}

void check_col(const NumberMatrix& m, std::size_t c) {
    if (c < 1 || c > m.columns.size())
        throw IndexOutOfRange("column " + std::to_string(c) + " outside 1.." +
                              std::to_string(m.columns.size()));
}

Bits column_support(const EVector& c) { return c.nonzero_rows(); }

}  // namespace

NumberMatrix er_swap_rows(const NumberMatrix& m, std::size_t r1, std::size_t r2) {
    check_row(m, r1);
    check_row(m, r2);
    NumberMatrix out = m;
    for (EVector& c : out.columns) {
        Entry a = c.at(r1 - 1);
        Entry b = c.at(r2 - 1);
        c.set_entry(r1 - 1, b);
        c.set_entry(r2 - 1, a);
    }
    return out;
}

NumberMatrix er_swap_cols(const NumberMatrix& m, std::size_t c1, std::size_t c2) {
    check_col(m, c1);
    check_col(m, c2);
    NumberMatrix out = m;
    std::swap(out.columns[c1 - 1], out.columns[c2 - 1]);
    return out;
}

NumberMatrix er_add_null_row(const NumberMatrix& m, std::size_t at) {
    if (at < 1 || at > m.row_count + 1)
        throw IndexOutOfRange("insert position " + std::to_string(at) + " outside 1.." +
                              std::to_string(m.row_count + 1));
    NumberMatrix out;
    out.alpha = m.alpha;
    out.row_count = m.row_count + 1;
    out.columns.reserve(m.columns.size());
    for (const EVector& c : m.columns) out.columns.push_back(c.with_zero_row_at(at - 1));
    return out;
}

NumberMatrix er_remove_null_row(const NumberMatrix& m, std::size_t at) {
    check_row(m, at);
    for (const EVector& c : m.columns)
        if (c.at(at - 1) != Entry::Zero)
            throw NotNullRow("row " + std::to_string(at) + " holds a nonzero entry");
    Bits keep(m.row_count);
    for (std::size_t i = 0; i < m.row_count; ++i)
        if (i != at - 1) keep.set(i);
    NumberMatrix out;
    out.alpha = m.alpha;
    out.row_count = m.row_count - 1;
    out.columns.reserve(m.columns.size());
    for (const EVector& c : m.columns) out.columns.push_back(c.compressed(keep));
    return out;
}

NumberMatrix er_add_dominated_column(const NumberMatrix& m, const std::vector<Entry>& entries,
                                     std::size_t at) {
    if (entries.size() != m.row_count)
        throw DimensionMismatch("new column has " + std::to_string(entries.size()) +
                                " rows, matrix has " + std::to_string(m.row_count));
    if (at < 1 || at > m.columns.size() + 1)
        throw IndexOutOfRange("insert position " + std::to_string(at) + " outside 1.." +
                              std::to_string(m.columns.size() + 1));
    const int universe =
        m.columns.empty() ? 0 : m.columns.front().pri().universe_size();
    EVector fresh = EVector::from_entries(entries, universe);
    Bits support = column_support(fresh);
    bool dominated = false;
    for (const EVector& c : m.columns)
        if (support.subset_of(column_support(c))) {
            dominated = true;
            break;
        }
    if (!dominated) throw NotDominated("new column's support fits inside no existing column");
    NumberMatrix out = m;
    out.columns.insert(out.columns.begin() + static_cast<std::ptrdiff_t>(at - 1),
                       std::move(fresh));
    return out;
}

NumberMatrix er_remove_dominated_column(const NumberMatrix& m, std::size_t at) {
    check_col(m, at);
    Bits support = column_support(m.columns[at - 1]);
    bool dominated = false;
    for (std::size_t c = 0; c < m.columns.size(); ++c)
        if (c != at - 1 && support.subset_of(column_support(m.columns[c]))) {
            dominated = true;
            break;
        }
    if (!dominated)
        throw NotDominated("column " + std::to_string(at) +
                           "'s support fits inside no other column");
    NumberMatrix out = m;
    out.columns.erase(out.columns.begin() + static_cast<std::ptrdiff_t>(at - 1));
    return out;
}

SupportComparison compare_by_support(const NumberMatrix& a, const NumberMatrix& b) {
    if (a.row_count != b.row_count || a.columns.size() != b.columns.size())
        throw DimensionMismatch("comparing matrices of different shapes");

    auto embeds = [](const NumberMatrix& lo, const NumberMatrix& hi) {
        // Largest supports are hardest to place, so match them first, each to
        // the tightest unused dominating column.
        std::vector<std::size_t> order(lo.columns.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            const std::size_t cx = column_support(lo.columns[x]).count();
            const std::size_t cy = column_support(lo.columns[y]).count();
            if (cx != cy) return cx > cy;
            return x < y;
        });
        std::vector<bool> used(hi.columns.size(), false);
        for (std::size_t i : order) {
            Bits s = column_support(lo.columns[i]);
            std::size_t pick = hi.columns.size();
            std::size_t pick_size = 0;
            for (std::size_t j = 0; j < hi.columns.size(); ++j) {
                if (used[j]) continue;
                Bits t = column_support(hi.columns[j]);
                if (!s.subset_of(t)) continue;
                if (pick == hi.columns.size() || t.count() < pick_size) {
                    pick = j;
                    pick_size = t.count();
                }
            }
            if (pick == hi.columns.size()) return false;
            used[pick] = true;
        }
        return true;
    };

    SupportComparison cmp;
    const bool le = embeds(a, b);
    const bool ge = embeds(b, a);
    cmp.equal = le && ge;
    if (le)
        cmp.order = SupportOrder::LE;
    else if (ge)
        cmp.order = SupportOrder::GE;
    else
        cmp.order = SupportOrder::Unknown;
    return cmp;
}

}  // namespace pradius
