#include "pradius/oracle.hpp"

#include <algorithm>

#include "pradius/radius_engine.hpp"

namespace pradius {

namespace {

constexpr std::uint64_t kSpaceCap = std::uint64_t{1} << 20;

// q^n with the cap enforced.
std::uint64_t space_size_checked(const Poset& p, int q) {
    std::uint64_t total = 1;
    for (int i = 0; i < p.size(); ++i) {
        if (total > kSpaceCap / static_cast<std::uint64_t>(q))
            throw TooLarge("q^n exceeds the oracle cap 2^20");
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > kSpaceCap) throw TooLarge("q^n exceeds the oracle cap 2^20");
    return total;
}

FieldVector vector_at(std::uint64_t index, int q, int n) {
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(q));
        index /= static_cast<std::uint64_t>(q);
    }
    return FieldVector(q, std::move(coords));
}

}  // namespace

long long ball_radius_oracle(const Poset& p, const FieldVector& v) {
    if (v.is_zero()) throw ZeroVector("packing radius undefined for 0");
    const std::uint64_t total = space_size_checked(p, v.q);
    // Distances from the two centers, indexed by vector id.
    std::vector<int> dist0(total);
    std::vector<int> distv(total);
    for (std::uint64_t id = 0; id < total; ++id) {
        FieldVector x = vector_at(id, v.q, v.length());
        dist0[id] = p_weight(p, x);
        distv[id] = p_distance(p, v, x);
    }
    // Grow r until the balls meet; r = n always meets (v itself), so the
    // loop terminates with the last disjoint radius.
    long long last_disjoint = 0;
    for (int r = 1; r <= p.size(); ++r) {
        std::vector<std::uint64_t> ball0;
        std::vector<std::uint64_t> ballv;
        for (std::uint64_t id = 0; id < total; ++id) {
            if (dist0[id] <= r) ball0.push_back(id);
            if (distv[id] <= r) ballv.push_back(id);
        }
        bool meet = false;
        for (std::uint64_t id : ball0) {
            if (std::binary_search(ballv.begin(), ballv.end(), id)) {
                meet = true;
                break;
            }
        }
        if (meet) break;
        last_disjoint = r;
    }
    return last_disjoint;
}

MaxWeightWitness maxweight_oracle(const Poset& p, const FieldVector& v) {
    const std::uint64_t total = space_size_checked(p, v.q);
    long long best = -1;
    FieldVector witness;
    for (std::uint64_t id = 0; id < total; ++id) {
        FieldVector x = vector_at(id, v.q, v.length());
        long long w = std::max(p_weight(p, x), p_weight(p, v - x));
        if (best < 0 || w < best) {
            best = w;
            witness = x;
        }
    }
    return {best - 1, witness};
}

MaxWeightWitness maxweight_oracle_restricted(const Poset& p, const FieldVector& v) {
    std::vector<int> supp = v.support().labels();
    const std::size_t s = supp.size();
    if (s > 24) throw TooLarge("restricted witness scan refused beyond 24 support positions");
    long long best = -1;
    FieldVector witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        FieldVector x(v.q, std::vector<int>(static_cast<std::size_t>(v.length()), 0));
        for (std::size_t i = 0; i < s; ++i)
            if ((mask >> i) & 1) {
                const int pos = supp[i];
                x.coords[static_cast<std::size_t>(pos - 1)] =
                    v.coords[static_cast<std::size_t>(pos - 1)];
            }
        long long w = std::max(p_weight(p, x), p_weight(p, v - x));
        if (best < 0 || w < best) {
            best = w;
            witness = x;
        }
    }
    return {best - 1, witness};
}

PartitionOutcome partition_oracle(const Poset& p) {
    std::vector<int> maxelts = p.maximal_elements().labels();
    const std::size_t m = maxelts.size();
    if (m > 24)
        throw TooManyMaximal("exhaustive split enumeration refused beyond 24 maximal elements, "
                             "got " +
                             std::to_string(m));
    const std::uint64_t masks = std::uint64_t{1} << (m - 1);
    long long best_maxweight = -1;
    long long best_lambda = -1;
    ElementSet best_a(p.size());
    ElementSet best_b(p.size());
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        ElementSet a(p.size());
        ElementSet b(p.size());
        a.add(maxelts[0]);
        for (std::size_t i = 1; i < m; ++i)
            ((mask >> (i - 1)) & 1 ? a : b).add(maxelts[i]);
        const long long wa = p.weight_of_set(a);
        const long long wb = p.weight_of_set(b);
        const long long hi = std::max(wa, wb);
        const long long lambda = discordancy_of_partition(p, a, b);
        // Self-checks: the two formulations must agree split by split.
        if (lambda != 2 * hi - p.size())
            throw Error("oracle self-check failed: discordancy != 2*max - n on a split");
        if (((lambda ^ p.size()) & 1) != 0)
            throw Error("oracle self-check failed: discordancy parity differs from n");
        if (best_maxweight < 0 || hi < best_maxweight) best_maxweight = hi;
        if (best_lambda < 0 || lambda < best_lambda) {
            best_lambda = lambda;
            best_a = a;
            best_b = b;
        }
    }
    if (best_maxweight - 1 != (p.size() + best_lambda) / 2 - 1)
        throw Error("oracle self-check failed: min-max and min-discordancy disagree on the radius");
    PartitionOutcome out;
    out.primary_set = best_a;
    out.secondary_set = best_b;
    out.discordancy = best_lambda;
    out.radius = best_maxweight - 1;
    out.optimal = true;
    out.nodes_expanded = masks;
    return out;
}

OracleReport make_report(const std::string& quantity, long long oracle_value,
                         long long engine_value, const std::string& instance) {
    return {quantity, oracle_value, engine_value, oracle_value == engine_value, instance};
}

std::vector<OracleReport> check_poset_radius(const Poset& p) {
    std::vector<OracleReport> reports;
    const std::string instance = "poset n=" + std::to_string(p.size());
    PartitionOutcome oracle = partition_oracle(p);
    reports.push_back(make_report("poset-radius/auto", oracle.radius,
                                  radius_of_poset(p).outcome.radius, instance));
    reports.push_back(make_report("poset-radius/differencing", oracle.radius,
                                  radius_of_poset(p, Strategy::Differencing).outcome.radius,
                                  instance));
    reports.push_back(make_report("poset-radius/brute", oracle.radius,
                                  radius_of_poset(p, Strategy::Brute).outcome.radius, instance));
    return reports;
}

std::vector<OracleReport> check_vector_radius(const Poset& p, const FieldVector& v) {
    std::vector<OracleReport> reports;
    std::string word;
    for (int c : v.coords) word += (word.empty() ? "" : ",") + std::to_string(c);
    const std::string instance = "vector (" + word + ") over poset n=" + std::to_string(p.size());
    const long long engine = radius_of_vector(p, v).outcome.radius;
    reports.push_back(make_report("vector-radius/ball", ball_radius_oracle(p, v), engine,
                                  instance));
    reports.push_back(make_report("vector-radius/maxweight", maxweight_oracle(p, v).radius,
                                  engine, instance));
    reports.push_back(make_report("vector-radius/maxweight-restricted",
                                  maxweight_oracle_restricted(p, v).radius, engine, instance));
    return reports;
}

std::vector<OracleReport> check_code_radius(const Poset& p, const LinearCode& code,
                                            std::uint64_t cap) {
    std::vector<OracleReport> reports;
    const std::string instance = "code q=" + std::to_string(code.q()) + " n=" +
                                 std::to_string(code.length()) + " k=" +
                                 std::to_string(code.dimension());
    // Oracle: minimum per-codeword ball oracle over nonzero codewords.
    CodewordEnumerator stream(code, cap);
    long long oracle_best = -1;
    while (auto w = stream.next()) {
        if (w->is_zero()) continue;
        long long r = ball_radius_oracle(p, *w);
        if (oracle_best < 0 || r < oracle_best) oracle_best = r;
    }
    CodeRadiusOptions opts;
    opts.cap = cap;
    const long long engine = radius_of_code(p, code, opts).radius;
    reports.push_back(make_report("code-radius", oracle_best, engine, instance));
    return reports;
}

}  // namespace pradius
