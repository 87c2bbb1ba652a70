#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pradius/bits.hpp"
#include "pradius/element_set.hpp"
#include "pradius/errors.hpp"

namespace pradius {

// The quaternary combination algebra on {0, 1, -1, i}. Encoding: bit 0 is the
// "plus" plane, bit 1 the "minus" plane; i carries both. Under this encoding
// the combination tables reduce to bitwise ORs:
//   assoc: planes OR pairwise;  diff: planes OR crosswise (y's planes swap).
enum class Entry : std::uint8_t {
    Zero = 0,
    Plus = 1,
    Minus = 2,
    Imag = 3,
};

constexpr Entry entry_assoc(Entry x, Entry y) {
    return static_cast<Entry>(static_cast<std::uint8_t>(x) | static_cast<std::uint8_t>(y));
}

constexpr Entry entry_diff(Entry x, Entry y) {
    const auto yb = static_cast<std::uint8_t>(y);
    const std::uint8_t y_swapped = static_cast<std::uint8_t>(((yb & 1u) << 1) | (yb >> 1));
    return static_cast<Entry>(static_cast<std::uint8_t>(x) | y_swapped);
}

// Unary sign flip (swaps the 1 and -1 roles; 0 and i are fixed points).
constexpr Entry entry_neg(Entry x) {
    const auto xb = static_cast<std::uint8_t>(x);
    return static_cast<Entry>(((xb & 1u) << 1) | (xb >> 1));
}

std::string entry_to_string(Entry e);  // "0", "1", "-1", "i"

// Column vector over the Entry algebra, stored as two bitplanes, together
// with the bookkeeping needed to read a partition back out of a finished
// search: pri / sec are the sets of maximal elements this column has
// committed to the primary / secondary block.
class EVector {
public:
    EVector() = default;
    // All-Zero column with empty commitments over the given label universe.
    EVector(std::size_t rows, int commitment_universe)
        : plus_(rows), minus_(rows), pri_(commitment_universe), sec_(commitment_universe) {}
    EVector(Bits plus, Bits minus, ElementSet pri, ElementSet sec);

    static EVector from_entries(const std::vector<Entry>& entries, int commitment_universe,
                                int pri_label = 0);

    std::size_t rows() const { return plus_.size(); }
    Entry at(std::size_t row) const {
        return static_cast<Entry>((plus_.test(row) ? 1u : 0u) | (minus_.test(row) ? 2u : 0u));
    }
    std::vector<Entry> entries() const;

    const Bits& plus_plane() const { return plus_; }
    const Bits& minus_plane() const { return minus_; }
    const ElementSet& pri() const { return pri_; }
    const ElementSet& sec() const { return sec_; }

    // Rows holding an Imag entry (both planes set).
    Bits imag_rows() const { return plus_ & minus_; }
    // Rows holding any nonzero entry.
    Bits nonzero_rows() const { return plus_ | minus_; }

    void set_entry(std::size_t row, Entry e);

    // Keep only the rows selected by `keep`.
    EVector compressed(const Bits& keep) const;
    // Insert a Zero entry so that it lands at row index `at`.
    EVector with_zero_row_at(std::size_t at) const;

    friend bool operator==(const EVector& a, const EVector& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_ && a.pri_ == b.pri_ && a.sec_ == b.sec_;
    }

private:
    Bits plus_;
    Bits minus_;
    ElementSet pri_;
    ElementSet sec_;
};

// Entrywise combination; LengthMismatch on unequal rows, OverlappingCommitments
// when the operands' pri/sec sets are not pairwise disjoint.
EVector vec_assoc(const EVector& v, const EVector& w);
EVector vec_diff(const EVector& v, const EVector& w);

// Formal sum of the entries: re = #Plus - #Minus, im = #Imag.
struct EntrySum {
    long long re = 0;
    long long im = 0;
};
EntrySum entry_sum(const EVector& v);

// |re| + im of the entry sum.
long long vector_discordancy(const EVector& v);

}  // namespace pradius
