#include "pradius/entry.hpp"

namespace pradius {

std::string entry_to_string(Entry e) {
    switch (e) {
        case Entry::Zero: return "0";
        case Entry::Plus: return "1";
        case Entry::Minus: return "-1";
        case Entry::Imag: return "i";
    }
    return "?";
}

EVector::EVector(Bits plus, Bits minus, ElementSet pri, ElementSet sec)
    : plus_(std::move(plus)), minus_(std::move(minus)), pri_(std::move(pri)), sec_(std::move(sec)) {
    if (plus_.size() != minus_.size())
        throw LengthMismatch("entry vector bitplanes disagree on length");
    if (pri_.universe_size() != sec_.universe_size())
        throw LengthMismatch("pri/sec commitment universes disagree");
    if (pri_.intersects(sec_))
        throw OverlappingCommitments("pri and sec commitments overlap at construction");
}

EVector EVector::from_entries(const std::vector<Entry>& entries, int commitment_universe,
                              int pri_label) {
    Bits plus(entries.size());
    Bits minus(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto b = static_cast<std::uint8_t>(entries[i]);
        if (b & 1u) plus.set(i);
        if (b & 2u) minus.set(i);
    }
    ElementSet pri(commitment_universe);
    ElementSet sec(commitment_universe);
    if (pri_label != 0) pri.add(pri_label);
    return EVector(std::move(plus), std::move(minus), std::move(pri), std::move(sec));
}

std::vector<Entry> EVector::entries() const {
    std::vector<Entry> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out[i] = at(i);
    return out;
}

void EVector::set_entry(std::size_t row, Entry e) {
    const auto b = static_cast<std::uint8_t>(e);
    if (b & 1u)
        plus_.set(row);
    else
        plus_.reset(row);
    if (b & 2u)
        minus_.set(row);
    else
        minus_.reset(row);
}

EVector EVector::compressed(const Bits& keep) const {
    return EVector(plus_.compress(keep), minus_.compress(keep), pri_, sec_);
}

EVector EVector::with_zero_row_at(std::size_t at) const {
    return EVector(plus_.with_gap_at(at), minus_.with_gap_at(at), pri_, sec_);
}

namespace {

void check_combinable(const EVector& v, const EVector& w) {
    if (v.rows() != w.rows())
        throw LengthMismatch("combining entry vectors of lengths " + std::to_string(v.rows()) +
                             " and " + std::to_string(w.rows()));
    if (v.pri().intersects(w.pri()) || v.pri().intersects(w.sec()) ||
        v.sec().intersects(w.pri()) || v.sec().intersects(w.sec()))
        throw OverlappingCommitments("operands already commit a common maximal element");
}

}  // namespace

EVector vec_assoc(const EVector& v, const EVector& w) {
    check_combinable(v, w);
    // Same-side merge: planes OR pairwise, commitments union side-with-side.
    return EVector(v.plus_plane() | w.plus_plane(), v.minus_plane() | w.minus_plane(),
                   v.pri() | w.pri(), v.sec() | w.sec());
}

EVector vec_diff(const EVector& v, const EVector& w) {
    check_combinable(v, w);
    // Opposite-side merge: w's planes swap roles, its commitments switch sides.
    return EVector(v.plus_plane() | w.minus_plane(), v.minus_plane() | w.plus_plane(),
                   v.pri() | w.sec(), v.sec() | w.pri());
}

EntrySum entry_sum(const EVector& v) {
    const Bits& p = v.plus_plane();
    const Bits& m = v.minus_plane();
    EntrySum s;
    s.im = static_cast<long long>((p & m).count());
    s.re = static_cast<long long>(p.and_not(m).count()) -
           static_cast<long long>(m.and_not(p).count());
    return s;
}

long long vector_discordancy(const EVector& v) {
    EntrySum s = entry_sum(v);
    return (s.re < 0 ? -s.re : s.re) + s.im;
}

}  // namespace pradius
