#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pradius/element_set.hpp"
#include "pradius/poset.hpp"

namespace pradius {

// Default ceiling on q^k for codeword enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

// A vector over the prime field Z_q, coordinates reduced to 0..q-1.
struct FieldVector {
    int q = 2;
    std::vector<int> coords;

    FieldVector() = default;
    FieldVector(int modulus, std::vector<int> c);

    int length() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    ElementSet support() const;

    FieldVector operator-(const FieldVector& o) const;
    FieldVector operator+(const FieldVector& o) const;
    FieldVector scaled(int factor) const;

    friend bool operator==(const FieldVector& a, const FieldVector& b) {
        return a.q == b.q && a.coords == b.coords;
    }
};

bool is_prime(int q);

// Linear [n, k] code over Z_q given by a k x n generator matrix. The rows must
// be independent (InvalidGenerator otherwise); k = 0 with an empty generator
// is allowed and only rejected by the operations that need a codeword.
class LinearCode {
public:
    LinearCode(int q, int n, std::vector<std::vector<int>> generator);

    int q() const { return q_; }
    int length() const { return n_; }
    int dimension() const { return k_; }
    const std::vector<std::vector<int>>& generator() const { return gen_; }

    std::uint64_t codeword_count() const;  // q^k

private:
    int q_;
    int n_;
    int k_;
    std::vector<std::vector<int>> gen_;
};

// Streams the q^k codewords in mixed-radix message order; the zero vector
// comes first. Construction throws CapExceeded if q^k > cap.
class CodewordEnumerator {
public:
    explicit CodewordEnumerator(const LinearCode& code,
                                std::uint64_t cap = kDefaultEnumerationCap);

    // One codeword per call until the stream is exhausted.
    std::optional<FieldVector> next();

    std::uint64_t total() const { return total_; }

private:
    const LinearCode& code_;
    std::vector<int> message_;
    std::uint64_t total_;
    std::uint64_t produced_ = 0;
};

// Number of elements in the ideal generated by supp(v).
int p_weight(const Poset& p, const FieldVector& v);

// p_weight of the difference; LengthMismatch / ModulusMismatch on bad pairs.
int p_distance(const Poset& p, const FieldVector& a, const FieldVector& b);

// Minimum weight over the nonzero codewords (equals minimum distance by
// translation invariance). ZeroDimensionalCode if k = 0.
int minimum_distance(const Poset& p, const LinearCode& code,
                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace pradius
