#include "pradius/codes.hpp"

#include <string>

namespace pradius {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

FieldVector::FieldVector(int modulus, std::vector<int> c) : q(modulus), coords(std::move(c)) {
    if (!is_prime(q)) throw NotPrime("field modulus " + std::to_string(q) + " is not prime");
    for (int& x : coords) {
        x %= q;
        if (x < 0) x += q;
    }
}

bool FieldVector::is_zero() const {
    for (int x : coords)
        if (x != 0) return false;
    return true;
}

ElementSet FieldVector::support() const {
    ElementSet s(length());
    for (int i = 0; i < length(); ++i)
        if (coords[static_cast<std::size_t>(i)] != 0) s.add(i + 1);
    return s;
}

FieldVector FieldVector::operator-(const FieldVector& o) const {
    if (q != o.q) throw ModulusMismatch("mixing moduli " + std::to_string(q) + " and " +
                                        std::to_string(o.q));
    if (length() != o.length())
        throw LengthMismatch("mixing lengths " + std::to_string(length()) + " and " +
                             std::to_string(o.length()));
    FieldVector r = *this;
    for (int i = 0; i < length(); ++i)
        r.coords[static_cast<std::size_t>(i)] =
            (coords[static_cast<std::size_t>(i)] - o.coords[static_cast<std::size_t>(i)] + q) % q;
    return r;
}

FieldVector FieldVector::operator+(const FieldVector& o) const {
    if (q != o.q) throw ModulusMismatch("mixing moduli " + std::to_string(q) + " and " +
                                        std::to_string(o.q));
    if (length() != o.length())
        throw LengthMismatch("mixing lengths " + std::to_string(length()) + " and " +
                             std::to_string(o.length()));
    FieldVector r = *this;
    for (int i = 0; i < length(); ++i)
        r.coords[static_cast<std::size_t>(i)] =
            (coords[static_cast<std::size_t>(i)] + o.coords[static_cast<std::size_t>(i)]) % q;
    return r;
}

FieldVector FieldVector::scaled(int factor) const {
    FieldVector r = *this;
    factor %= q;
    if (factor < 0) factor += q;
    for (int& x : r.coords) x = x * factor % q;
    return r;
}

namespace {

// Row-reduce a copy of the generator over Z_q and return its rank.
int rank_mod_q(std::vector<std::vector<int>> m, int q) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(r)]);
        // Scale pivot row to 1 via modular inverse (q prime: Fermat).
        int pv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        int inv = 1;
        for (int e = q - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * pv % q;
            pv = pv * pv % q;
        }
        for (int j = 0; j < cols; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % q;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int j = 0; j < cols; ++j) {
                int& x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                x = (x - f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % q + q) % q;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

LinearCode::LinearCode(int q, int n, std::vector<std::vector<int>> generator)
    : q_(q), n_(n), k_(static_cast<int>(generator.size())), gen_(std::move(generator)) {
    if (!is_prime(q_)) throw NotPrime("field modulus " + std::to_string(q_) + " is not prime");
    if (n_ < 1) throw LengthMismatch("code length must be at least 1");
    for (auto& row : gen_) {
        if (static_cast<int>(row.size()) != n_)
            throw LengthMismatch("generator row length " + std::to_string(row.size()) +
                                 " does not match code length " + std::to_string(n_));
        for (int& x : row) {
            x %= q_;
            if (x < 0) x += q_;
        }
    }
    if (k_ > n_) throw InvalidGenerator("dimension exceeds length");
    if (k_ > 0 && rank_mod_q(gen_, q_) != k_)
        throw InvalidGenerator("generator rows are linearly dependent");
}

std::uint64_t LinearCode::codeword_count() const {
    std::uint64_t total = 1;
    for (int i = 0; i < k_; ++i) total *= static_cast<std::uint64_t>(q_);
    return total;
}

CodewordEnumerator::CodewordEnumerator(const LinearCode& code, std::uint64_t cap)
    : code_(code), message_(static_cast<std::size_t>(code.dimension()), 0) {
    // Overflow-safe q^k with cap check.
    std::uint64_t total = 1;
    for (int i = 0; i < code.dimension(); ++i) {
        if (total > cap / static_cast<std::uint64_t>(code.q()))
            throw CapExceeded("codeword count q^k exceeds cap " + std::to_string(cap));
        total *= static_cast<std::uint64_t>(code.q());
    }
    if (total > cap)
        throw CapExceeded("codeword count " + std::to_string(total) + " exceeds cap " +
                          std::to_string(cap));
    total_ = total;
}

std::optional<FieldVector> CodewordEnumerator::next() {
    if (produced_ >= total_) return std::nullopt;
    // Encode the current message, then advance the mixed-radix counter with
    // the last message symbol changing fastest.
    std::vector<int> word(static_cast<std::size_t>(code_.length()), 0);
    for (int r = 0; r < code_.dimension(); ++r) {
        int m = message_[static_cast<std::size_t>(r)];
        if (!m) continue;
        const auto& row = code_.generator()[static_cast<std::size_t>(r)];
        for (int j = 0; j < code_.length(); ++j)
            word[static_cast<std::size_t>(j)] =
                (word[static_cast<std::size_t>(j)] + m * row[static_cast<std::size_t>(j)]) %
                code_.q();
    }
    ++produced_;
    for (int r = code_.dimension() - 1; r >= 0; --r) {
        int& m = message_[static_cast<std::size_t>(r)];
        if (++m < code_.q()) break;
        m = 0;
    }
    return FieldVector(code_.q(), std::move(word));
}

int p_weight(const Poset& p, const FieldVector& v) {
    if (v.length() != p.size())
        throw LengthMismatch("vector length " + std::to_string(v.length()) +
                             " does not match poset size " + std::to_string(p.size()));
    return p.weight_of_set(v.support());
}

int p_distance(const Poset& p, const FieldVector& a, const FieldVector& b) {
    return p_weight(p, a - b);
}

int minimum_distance(const Poset& p, const LinearCode& code, std::uint64_t cap) {
    if (code.dimension() == 0)
        throw ZeroDimensionalCode("minimum distance needs at least one nonzero codeword");
    CodewordEnumerator en(code, cap);
    int best = p.size() + 1;
    while (auto w = en.next()) {
        if (w->is_zero()) continue;
        best = std::min(best, p_weight(p, *w));
    }
    return best;
}

}  // namespace pradius
