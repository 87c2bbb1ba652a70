#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "pradius/codes.hpp"
#include "pradius/entry.hpp"
#include "pradius/poset.hpp"

namespace testutil {

using namespace pradius;

inline Poset chain(int n) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < n; ++i) rel.emplace_back(i, i + 1);
    return Poset::from_cover_relations(n, rel);
}

inline Poset antichain(int n) { return Poset::from_cover_relations(n, {}); }

inline Poset disjoint_chains(const std::vector<int>& lengths) {
    int n = 0;
    for (int l : lengths) n += l;
    std::vector<std::pair<int, int>> rel;
    int base = 0;
    for (int l : lengths) {
        for (int i = 1; i < l; ++i) rel.emplace_back(base + i, base + i + 1);
        base += l;
    }
    return Poset::from_cover_relations(n, rel);
}

// Levels bottom-up; all cross-level pairs comparable.
inline Poset hierarchy(const std::vector<int>& level_sizes) {
    int n = 0;
    for (int s : level_sizes) n += s;
    std::vector<std::pair<int, int>> rel;
    int base = 0;
    for (std::size_t l = 0; l + 1 < level_sizes.size(); ++l) {
        const int lo = level_sizes[l];
        const int hi = level_sizes[l + 1];
        for (int a = 1; a <= lo; ++a)
            for (int b = 1; b <= hi; ++b) rel.emplace_back(base + a, base + lo + b);
        base += lo;
    }
    return Poset::from_cover_relations(n, rel);
}

// Every labeled poset on n elements (meant for n <= 4).
inline std::vector<Poset> all_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    std::vector<Poset> out;
    const std::size_t np = pairs.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
        bool rel[5][5] = {};
        for (int a = 1; a <= n; ++a) rel[a][a] = true;
        for (std::size_t i = 0; i < np; ++i)
            if ((mask >> i) & 1) rel[pairs[i].first][pairs[i].second] = true;
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = 1; b <= n && ok; ++b) {
                if (a != b && rel[a][b] && rel[b][a]) ok = false;
                for (int c = 1; c <= n && ok; ++c)
                    if (rel[a][b] && rel[b][c] && !rel[a][c]) ok = false;
            }
        if (!ok) continue;
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) adj[a - 1][b - 1] = rel[a][b] ? 1 : 0;
        out.push_back(Poset::from_adjacency_matrix(adj));
    }
    return out;
}

// Random order: random strict pairs along a shuffled topological order, closed.
inline Poset random_poset(std::mt19937& rng, int n, double density) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng))
                rel.emplace_back(order[static_cast<std::size_t>(i)],
                                 order[static_cast<std::size_t>(j)]);
    return Poset::from_cover_relations(n, rel);
}

inline Poset random_poset_max(std::mt19937& rng, int n, int max_maximal) {
    std::uniform_real_distribution<double> dens(0.05, 0.6);
    for (int tries = 0; tries < 10000; ++tries) {
        Poset p = random_poset(rng, n, dens(rng));
        if (p.maximal_elements().size() <= max_maximal) return p;
    }
    return chain(n);  // unreachable in practice
}

inline Poset random_hierarchical(std::mt19937& rng, int n) {
    std::vector<int> sizes;
    int left = n;
    std::uniform_int_distribution<int> cut(1, 4);
    while (left > 0) {
        int s = std::min(left, cut(rng));
        sizes.push_back(s);
        left -= s;
    }
    return hierarchy(sizes);
}

inline std::vector<FieldVector> all_nonzero_vectors(int q, int n) {
    std::vector<FieldVector> out;
    std::vector<int> coords(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t x = idx;
        for (int i = 0; i < n; ++i) {
            coords[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(q));
            x /= static_cast<std::uint64_t>(q);
        }
        out.emplace_back(q, coords);
    }
    return out;
}

inline FieldVector random_vector(std::mt19937& rng, int q, int n) {
    std::uniform_int_distribution<int> digit(0, q - 1);
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int& c : coords) c = digit(rng);
    return FieldVector(q, std::move(coords));
}

inline FieldVector random_nonzero_vector(std::mt19937& rng, int q, int n) {
    for (;;) {
        FieldVector v = random_vector(rng, q, n);
        if (!v.is_zero()) return v;
    }
}

inline LinearCode random_code(std::mt19937& rng, int q, int n, int k) {
    std::uniform_int_distribution<int> digit(0, q - 1);
    for (;;) {
        std::vector<std::vector<int>> gen(static_cast<std::size_t>(k),
                                          std::vector<int>(static_cast<std::size_t>(n)));
        for (auto& row : gen)
            for (int& x : row) x = digit(rng);
        try {
            return LinearCode(q, n, gen);
        } catch (const InvalidGenerator&) {
        }
    }
}

// Entry rows from ints: -1, 0, 1, and 2 for the imaginary marker.
inline std::vector<std::vector<Entry>> entry_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Entry>> out;
    for (const auto& r : rows) {
        std::vector<Entry> row;
        for (int x : r)
            row.push_back(x == 0   ? Entry::Zero
                          : x == 1 ? Entry::Plus
                          : x == -1 ? Entry::Minus
                                    : Entry::Imag);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace testutil
