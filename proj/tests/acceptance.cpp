// Acceptance suite: twelve end-to-end checks, each printed as a single
// PASS/FAIL line with its wall-clock time. Exits nonzero if any line fails.
//
// Every expected value below is frozen from an independent computation
// (hand evaluation or one of the brute-force oracles), never from the
// engine under test.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pradius/classic_partition.hpp"
#include "pradius/codes.hpp"
#include "pradius/entry.hpp"
#include "pradius/errors.hpp"
#include "pradius/io.hpp"
#include "pradius/oracle.hpp"
#include "pradius/poset.hpp"
#include "pradius/poset_partition.hpp"
#include "pradius/radius_engine.hpp"

using namespace pradius;

namespace {

int g_failures = 0;

// Fails the enclosing criterion body with the offending expression text.
#define REQ(cond)                          \
    do {                                   \
        if (!(cond)) {                     \
            note = "failed: " #cond;       \
            return false;                  \
        }                                  \
    } while (0)

template <typename Body>
void criterion(int id, const char* label, double limit_ms, Body body) {
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
        ok = false;
    } catch (...) {
        note = "unknown exception";
        ok = false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ok && limit_ms > 0 && ms >= limit_ms) {
        ok = false;
        note = "over time limit";
    }
    std::printf("%s: %2d. %s (%.3f ms", ok ? "PASS" : "FAIL", id, label, ms);
    if (limit_ms > 0) std::printf(" / limit %.0f ms", limit_ms);
    std::printf(")");
    if (!ok && !note.empty()) std::printf(" -- %s", note.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---- fixtures --------------------------------------------------------------

// Seven elements whose four maximal ideals overlap pairwise.
Poset sample_overlapping_ideals() {
    return Poset::from_adjacency_matrix({
        {1, 0, 0, 1, 1, 0, 0},
        {0, 1, 0, 0, 1, 1, 1},
        {0, 0, 1, 1, 1, 0, 0},
        {0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1},
    });
}

// Seven elements with heavily nested ideals; the bound-based pruning closes
// most of the search tree here.
Poset sample_nested_ideals() {
    return Poset::from_adjacency_matrix({
        {1, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 1, 1, 1},
        {0, 0, 1, 1, 1, 1, 0},
        {0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1},
    });
}

// A seven-element poset with three maximal elements and no special structure.
Poset sample_general_seven() {
    return Poset::from_adjacency_matrix({
        {1, 0, 0, 0, 1, 0, 0},
        {0, 1, 1, 1, 1, 1, 1},
        {0, 0, 1, 0, 0, 0, 1},
        {0, 0, 0, 1, 1, 0, 1},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1},
    });
}

// An eight-element poset with four maximal elements that dominates the
// seven-element sample column by column once that one is padded.
Poset sample_general_eight() {
    return Poset::from_adjacency_matrix({
        {1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 0, 1, 1, 0, 1, 1},
        {0, 0, 1, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 1, 0, 0, 1},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
    });
}

// An eight-element poset whose standard form is known in full.
Poset sample_for_standard_form() {
    return Poset::from_adjacency_matrix({
        {1, 0, 0, 1, 1, 1, 1, 1},
        {0, 1, 0, 1, 0, 0, 1, 0},
        {0, 0, 1, 0, 1, 0, 0, 1},
        {0, 0, 0, 1, 0, 0, 1, 0},
        {0, 0, 0, 0, 1, 0, 0, 1},
        {0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
    });
}

// ---- small conversion helpers ----------------------------------------------

Entry to_entry(int v) {
    switch (v) {
        case 0: return Entry::Zero;
        case 1: return Entry::Plus;
        case -1: return Entry::Minus;
        default: return Entry::Imag;
    }
}

std::vector<Entry> entry_col(const std::vector<int>& v) {
    std::vector<Entry> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(to_entry(x));
    return out;
}

std::vector<std::vector<Entry>> to_entries(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Entry>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(entry_col(r));
    return out;
}

// Entry-wise column comparison (commitment tags deliberately ignored).
bool columns_match(const NumberMatrix& m, const std::vector<std::vector<int>>& cols) {
    if (m.columns.size() != cols.size()) return false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m.columns[j].rows() != cols[j].size()) return false;
        for (std::size_t i = 0; i < cols[j].size(); ++i)
            if (m.columns[j].at(i) != to_entry(cols[j][i])) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");

    // 1. A three-element chain over F_2: the engine's packing radius must
    // match both independent oracles (ball growth and max-weight witness).
    criterion(1, "vector radius on a chain matches ball-growth and max-weight oracles", 1.0,
              [](std::string& note) {
                  const Poset p = testutil::chain(3);
                  const FieldVector v(2, {0, 0, 1});
                  REQ(radius_of_vector(p, v).outcome.radius == 2);
                  REQ(ball_radius_oracle(p, v) == 2);
                  REQ(maxweight_oracle(p, v).radius == 2);
                  return true;
              });

    // 2. Classic number partitioning: the differencing heuristic's full
    // instance trace is frozen, and the exact search closes the gap to 0.
    criterion(2, "classic partitioning: differencing trace frozen, exact search reaches zero", 1.0,
              [](std::string& note) {
                  const IntList values{8, 7, 6, 5, 4};
                  const ClassicPartitionResult kk = kk_ldm(values);
                  REQ(kk.discrepancy == 2);
                  const std::vector<IntList> trace{
                      {8, 7, 6, 5, 4}, {6, 5, 4, 1}, {4, 1, 1}, {3, 1}, {2}};
                  REQ(kk.instances == trace);
                  REQ(ckk(values).discrepancy == 0);
                  return true;
              });

    // 3. Five disjoint chains (30 elements): both the fast path that hands
    // the chain lengths to the classic solver and the general matrix search
    // must report radius 14.
    criterion(3, "disjoint chains dispatch to the classic solver; general search agrees", 10.0,
              [](std::string& note) {
                  const Poset p = testutil::disjoint_chains({8, 7, 6, 5, 4});
                  REQ(p.size() == 30);
                  const PosetRadiusResult fast = radius_of_poset(p);
                  REQ(fast.strategy_used == "disjoint-ideals");
                  REQ(fast.outcome.radius == 14);
                  const PosetRadiusResult general = radius_of_poset(p, Strategy::Differencing);
                  REQ(general.strategy_used == "differencing");
                  REQ(general.outcome.radius == 14);
                  return true;
              });

    // 4. The radius matrix of the overlapping-ideals sample is frozen column
    // by column, and the search over it finds the known optimum.
    criterion(4, "radius matrix columns frozen; optimum split found over overlapping ideals",
              10.0, [](std::string& note) {
                  const Poset p = sample_overlapping_ideals();
                  const NumberMatrix m = radius_matrix(p);
                  REQ(m.alpha == 0);
                  REQ(m.row_count == 7);
                  REQ(columns_match(m, {{1, 0, 1, 1, 0, 0, 0},
                                        {1, 1, 1, 0, 1, 0, 0},
                                        {0, 1, 0, 0, 0, 1, 0},
                                        {0, 1, 0, 0, 0, 0, 1}}));
                  const PartitionOutcome out = packing_radius_matrix(m);
                  REQ(out.discordancy == 3);
                  REQ(out.radius == 4);
                  REQ(out.optimal);
                  REQ(radius_of_poset(p).outcome.radius == 4);
                  return true;
              });

    // 5. Pruning soundness and effect: with the bound and parity devices on,
    // the search reaches the same optimum while expanding strictly fewer
    // nodes than the unpruned run (4 vs 15 on this fixture).
    criterion(5, "pruned search keeps the optimum and expands strictly fewer nodes", 10.0,
              [](std::string& note) {
                  const Poset p = sample_nested_ideals();
                  const NumberMatrix m = radius_matrix(p);
                  MatrixSearchOptions open;
                  open.prune.discrepancy_bound = false;
                  open.prune.parity = false;
                  const PartitionOutcome pruned = packing_radius_matrix(m);
                  const PartitionOutcome plain = packing_radius_matrix(m, {}, open);
                  REQ(pruned.discordancy == 3);
                  REQ(pruned.radius == 4);
                  REQ(pruned.optimal);
                  REQ(plain.discordancy == 3);
                  REQ(plain.radius == 4);
                  REQ(plain.optimal);
                  REQ(pruned.nodes_expanded < plain.nodes_expanded);
                  REQ(pruned.nodes_expanded == 4);
                  REQ(plain.nodes_expanded == 15);
                  return true;
              });

    // 6. Two-level hierarchy (6 below 3): the closed form (n - m) + (m mod 2)
    // gives the discordancy directly and must agree with the general search.
    criterion(6, "hierarchical closed form matches the general search", 1.0,
              [](std::string& note) {
                  const Poset p = testutil::hierarchy({6, 3});
                  REQ(p.size() == 9);
                  REQ(p.maximal_elements().size() == 3);
                  const PosetRadiusResult fast = radius_of_poset(p);
                  REQ(fast.strategy_used == "hierarchical");
                  REQ(fast.outcome.discordancy == 7);  // (9 - 3) + (3 mod 2)
                  REQ(fast.outcome.radius == 7);
                  const PosetRadiusResult general = radius_of_poset(p, Strategy::Differencing);
                  REQ(general.outcome.discordancy == 7);
                  REQ(general.outcome.radius == 7);
                  return true;
              });

    // 7. Closed-form families for n = 1..14 plus 30 random hierarchies:
    // chain radius n-1, antichain radius ceil(n/2) - 1, and the hierarchy
    // formula all agree with the general engine.
    criterion(7, "chain, antichain, and hierarchy formulas agree with the engine", 1000.0,
              [](std::string& note) {
                  for (int n = 1; n <= 14; ++n) {
                      const PosetRadiusResult c = radius_of_poset(testutil::chain(n));
                      REQ(c.strategy_used == "chain");
                      REQ(c.outcome.radius == n - 1);
                      const PosetRadiusResult a = radius_of_poset(testutil::antichain(n));
                      if (n >= 2) REQ(a.strategy_used == "antichain");
                      REQ(a.outcome.radius == (n + n % 2) / 2 - 1);
                  }
                  std::mt19937 rng(20260816);
                  for (int t = 0; t < 30; ++t) {
                      std::vector<int> sizes;
                      const int levels = 2 + static_cast<int>(rng() % 3);
                      for (int l = 0; l < levels; ++l)
                          sizes.push_back(1 + static_cast<int>(rng() % 3));
                      // Keep at least one wide level so no chain form applies.
                      if (*std::max_element(sizes.begin(), sizes.end()) == 1)
                          sizes[rng() % sizes.size()] += 1;
                      const Poset p = testutil::hierarchy(sizes);
                      const int n = p.size();
                      const int m = p.maximal_elements().size();
                      const long long lambda = (n - m) + (m % 2);
                      const PosetRadiusResult fast = radius_of_poset(p);
                      REQ(fast.strategy_used == "hierarchical");
                      REQ(fast.outcome.discordancy == lambda);
                      const PosetRadiusResult gen = radius_of_poset(p, Strategy::Differencing);
                      REQ(gen.outcome.discordancy == lambda);
                      REQ(gen.outcome.radius == fast.outcome.radius);
                  }
                  return true;
              });

    // 8. Exhaustive small-instance sweep: every poset on up to 4 elements,
    // both moduli, every nonzero vector; both oracles and the engine agree.
    criterion(8, "oracles and engine agree on every poset with n <= 4 and every nonzero vector",
              60000.0, [](std::string& note) {
                  long long checked = 0;
                  for (int n = 1; n <= 4; ++n) {
                      for (const Poset& p : testutil::all_posets(n)) {
                          for (int q : {2, 3}) {
                              for (const FieldVector& v : testutil::all_nonzero_vectors(q, n)) {
                                  const long long ball = ball_radius_oracle(p, v);
                                  REQ(maxweight_oracle(p, v).radius == ball);
                                  REQ(radius_of_vector(p, v).outcome.radius == ball);
                                  ++checked;
                              }
                          }
                      }
                  }
                  REQ(checked == 21468);  // (1 + 3 + 19 + 219 posets) x (q^n - 1) vectors
                  return true;
              });

    // 9. 500 random posets: the matrix search equals full split enumeration,
    // and every single enumerated split satisfies the parity invariant
    // (discordancy and n have the same parity).
    criterion(9, "matrix search equals split enumeration; every split obeys the parity invariant",
              60000.0, [](std::string& note) {
                  std::mt19937 rng(97);
                  for (int t = 0; t < 500; ++t) {
                      const int n = 1 + static_cast<int>(rng() % 12);
                      const Poset p = testutil::random_poset_max(rng, n, 10);
                      const PartitionOutcome brute = brute_min_discordancy(p);
                      const DiscordancyResult search = min_discordancy(radius_matrix(p));
                      REQ(search.optimal);
                      REQ(search.lambda_star == brute.discordancy);
                      const std::vector<int> maxi = p.maximal_elements().labels();
                      const int m = static_cast<int>(maxi.size());
                      for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
                          ElementSet a(n), b(n);
                          a.add(maxi[0]);
                          for (int i = 1; i < m; ++i)
                              ((mask >> (i - 1)) & 1 ? a : b).add(maxi[i]);
                          const long long lam = discordancy_of_partition(p, a, b);
                          REQ(((lam + n) & 1) == 0);
                      }
                  }
                  return true;
              });

    // 10. The entry algebra: both 4x4 combination tables cell by cell, the
    // negation table, and all regrouping identities over all 64 triples.
    criterion(10, "entry combination tables and identities hold exhaustively", 0.0,
              [](std::string& note) {
                  using E = Entry;
                  const E all[4] = {E::Zero, E::Plus, E::Minus, E::Imag};
                  const E assoc[4][4] = {
                      {E::Zero, E::Plus, E::Minus, E::Imag},
                      {E::Plus, E::Plus, E::Imag, E::Imag},
                      {E::Minus, E::Imag, E::Minus, E::Imag},
                      {E::Imag, E::Imag, E::Imag, E::Imag},
                  };
                  const E diff[4][4] = {
                      {E::Zero, E::Minus, E::Plus, E::Imag},
                      {E::Plus, E::Imag, E::Plus, E::Imag},
                      {E::Minus, E::Minus, E::Imag, E::Imag},
                      {E::Imag, E::Imag, E::Imag, E::Imag},
                  };
                  for (int x = 0; x < 4; ++x)
                      for (int y = 0; y < 4; ++y) {
                          REQ(entry_assoc(all[x], all[y]) == assoc[x][y]);
                          REQ(entry_diff(all[x], all[y]) == diff[x][y]);
                      }
                  REQ(entry_neg(E::Zero) == E::Zero);
                  REQ(entry_neg(E::Plus) == E::Minus);
                  REQ(entry_neg(E::Minus) == E::Plus);
                  REQ(entry_neg(E::Imag) == E::Imag);
                  for (E x : all) {
                      REQ(entry_assoc(E::Zero, x) == x);
                      for (E y : all) {
                          REQ(entry_assoc(x, y) == entry_assoc(y, x));
                          REQ(entry_diff(x, y) == entry_assoc(x, entry_neg(y)));
                          for (E z : all) {
                              REQ(entry_assoc(entry_assoc(x, y), z) ==
                                  entry_assoc(x, entry_assoc(y, z)));
                              REQ(entry_assoc(E::Zero, entry_assoc(x, y)) ==
                                  entry_assoc(entry_assoc(E::Zero, x), y));
                              REQ(entry_assoc(E::Zero, entry_diff(x, y)) ==
                                  entry_diff(entry_assoc(E::Zero, x), y));
                              REQ(entry_diff(E::Zero, entry_assoc(x, y)) ==
                                  entry_diff(entry_diff(E::Zero, x), y));
                              REQ(entry_diff(E::Zero, entry_diff(x, y)) ==
                                  entry_assoc(entry_diff(E::Zero, x), y));
                          }
                      }
                  }
                  return true;
              });

    // 11. 200 random binary codes over random posets: the shortcut-laden code
    // engine, the same engine with every shortcut and prune disabled, and the
    // per-codeword ball oracle all agree; the distance sandwich holds.
    criterion(11, "code radius: shortcuts, plain run, and ball oracle agree; distance sandwich",
              120000.0, [](std::string& note) {
                  std::mt19937 rng(4242);
                  for (int t = 0; t < 200; ++t) {
                      const int n = 2 + static_cast<int>(rng() % 7);
                      int k = 1 + static_cast<int>(rng() % 3);
                      if (k > n) k = n;
                      const Poset p = testutil::random_poset(rng, n, 0.35);
                      const LinearCode code = testutil::random_code(rng, 2, n, k);
                      const CodeRadiusResult fast = radius_of_code(p, code);
                      CodeRadiusOptions off;
                      off.support_dedup = false;
                      off.ideal_dedup = false;
                      off.containment = false;
                      off.size_bound = false;
                      off.hierarchical_shortcut = false;
                      off.matrix_prune.discrepancy_bound = false;
                      off.matrix_prune.parity = false;
                      const CodeRadiusResult plain = radius_of_code(p, code, off);
                      REQ(fast.radius == plain.radius);
                      long long oracle = LLONG_MAX;
                      CodewordEnumerator stream(code);
                      while (auto w = stream.next())
                          if (!w->is_zero())
                              oracle = std::min(oracle, ball_radius_oracle(p, *w));
                      REQ(fast.radius == oracle);
                      const long long d = minimum_distance(p, code);
                      REQ(fast.minimum_distance == d);
                      REQ((d - 1) / 2 <= fast.radius);
                      REQ(fast.radius <= d - 1);
                  }
                  return true;
              });

    // 12. Radius-preserving matrix edits: a frozen standard form, a full
    // transformation replay with the radius checked after every step, and a
    // padded column-support comparison.
    criterion(12, "standard form bytes frozen; edit replay preserves the radius; padded compare",
              0.0, [](std::string& note) {
                  // (a) Standard form, byte-exact.
                  const Poset p8 = sample_for_standard_form();
                  const std::string expected =
                      "matrix 8\n"
                      "1 0 0 0 0 1 1 1\n"
                      "0 1 0 0 0 0 1 0\n"
                      "0 0 1 0 0 0 0 1\n"
                      "0 0 0 1 0 0 1 0\n"
                      "0 0 0 0 1 0 0 1\n"
                      "0 0 0 0 0 1 0 0\n"
                      "0 0 0 0 0 0 1 0\n"
                      "0 0 0 0 0 0 0 1\n";
                  std::ostringstream rendered;
                  write_poset_matrix(rendered, p8.standard_form());
                  REQ(rendered.str() == expected);
                  REQ(radius_of_poset(p8).outcome.radius ==
                      radius_of_poset(p8.standard_form()).outcome.radius);

                  // (b) Edit replay: start from a 5x5 adjacency matrix, strip
                  // three dominated columns, permute, then re-add dominated
                  // columns until the columns equal the target matrix; the
                  // packing radius must read 3 after every single step.
                  NumberMatrix m = NumberMatrix::from_rows(to_entries({{1, 0, 1, 1, 1},
                                                                       {0, 1, 0, 1, 1},
                                                                       {0, 0, 1, 0, 1},
                                                                       {0, 0, 0, 1, 0},
                                                                       {0, 0, 0, 0, 1}}));
                  auto radius_is_3 = [](const NumberMatrix& mm) {
                      return packing_radius_matrix(mm).radius == 3;
                  };
                  REQ(radius_is_3(m));
                  for (int step = 0; step < 3; ++step) {
                      m = er_remove_dominated_column(m, 1);
                      REQ(radius_is_3(m));
                  }
                  REQ(columns_match(m, {{1, 1, 0, 1, 0}, {1, 1, 1, 0, 1}}));
                  m = er_swap_cols(m, 1, 2);
                  REQ(radius_is_3(m));
                  m = er_swap_rows(m, 2, 3);
                  REQ(radius_is_3(m));
                  m = er_swap_rows(m, 4, 5);
                  REQ(radius_is_3(m));
                  REQ(columns_match(m, {{1, 1, 1, 1, 0}, {1, 0, 1, 0, 1}}));
                  m = er_add_dominated_column(m, entry_col({1, 0, 0, 0, 0}), 1);
                  REQ(radius_is_3(m));
                  m = er_add_dominated_column(m, entry_col({1, 1, 0, 0, 0}), 2);
                  REQ(radius_is_3(m));
                  m = er_add_dominated_column(m, entry_col({1, 0, 1, 0, 0}), 3);
                  REQ(radius_is_3(m));
                  REQ(columns_match(m, {{1, 0, 0, 0, 0},
                                        {1, 1, 0, 0, 0},
                                        {1, 0, 1, 0, 0},
                                        {1, 1, 1, 1, 0},
                                        {1, 0, 1, 0, 1}}));

                  // (c) Pad the seven-element sample (null row + null column)
                  // and compare against the eight-element sample by column
                  // support: the padded matrix must embed (LE), matching the
                  // radii 4 <= 5.
                  const Poset p7 = sample_general_seven();
                  const Poset q8 = sample_general_eight();
                  NumberMatrix padded = er_add_null_row(radius_matrix(p7), 6);
                  padded = er_add_dominated_column(padded, std::vector<Entry>(8, Entry::Zero), 2);
                  REQ(packing_radius_matrix(padded).radius == 4);
                  const SupportComparison cmp = compare_by_support(padded, radius_matrix(q8));
                  REQ(cmp.order == SupportOrder::LE);
                  REQ(radius_of_poset(p7).outcome.radius == 4);
                  REQ(radius_of_poset(q8).outcome.radius == 5);
                  return true;
              });

    if (g_failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
