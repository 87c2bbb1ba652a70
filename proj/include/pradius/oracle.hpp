#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pradius/codes.hpp"
#include "pradius/poset.hpp"
#include "pradius/poset_partition.hpp"

namespace pradius {

// Ground-truth implementations, structured as literally as possible after the
// defining statements and kept independent of the solver code paths. Size
// caps are hard errors: an oracle must never degrade silently.

// Largest r such that the radius-r balls around 0 and v are disjoint, found
// by listing ball memberships for growing r. TooLarge when q^n > 2^20;
// ZeroVector when v = 0.
long long ball_radius_oracle(const Poset& p, const FieldVector& v);

// Minimum over all x of max{weight(x), weight(v - x)}, minus one, with the
// first minimizing x as witness. TooLarge when q^n > 2^20.
struct MaxWeightWitness {
    long long radius = 0;
    FieldVector witness;
};
MaxWeightWitness maxweight_oracle(const Poset& p, const FieldVector& v);

// Same minimization restricted to vectors x with x_i ∈ {v_i, 0}; used to
// check that the restriction loses nothing.
MaxWeightWitness maxweight_oracle_restricted(const Poset& p, const FieldVector& v);

// Exhaustive scan over the 2^(m-1) splits of the maximal elements, tracking
// min over splits of max{weight(A), weight(B)} - 1 and the minimum
// discordancy; verifies per split that discordancy = 2*max - n and that its
// parity equals n mod 2, and that both minima agree on the radius.
// TooManyMaximal beyond 24 maximal elements.
PartitionOutcome partition_oracle(const Poset& p);

// One engine-vs-oracle comparison, CLI "check" emits these as JSON lines.
struct OracleReport {
    std::string quantity;
    long long oracle_value = 0;
    long long engine_value = 0;
    bool agree = false;
    std::string instance;
};

OracleReport make_report(const std::string& quantity, long long oracle_value,
                         long long engine_value, const std::string& instance);

// Comparison bundles used by tests and the check command.
std::vector<OracleReport> check_poset_radius(const Poset& p);
std::vector<OracleReport> check_vector_radius(const Poset& p, const FieldVector& v);
std::vector<OracleReport> check_code_radius(const Poset& p, const LinearCode& code,
                                            std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace pradius
