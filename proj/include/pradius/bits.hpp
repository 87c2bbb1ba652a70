#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pradius {

// Fixed-size dynamic bitset over 64-bit words. std::bitset needs a compile-time
// size and boost::dynamic_bitset would be the only boost dependency, so this
// small type carries exactly the operations the solvers need: bulk AND/OR,
// popcount, subset tests and a "compress" gather used when matrix rows are
// deleted. Bit positions are 0-based; label translation lives in ElementSet.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

    // this & ~o
    Bits and_not(const Bits& o) const {
        Bits r(*this);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

    // Lexicographic on words; gives a deterministic total order for map keys.
    friend bool operator<(const Bits& a, const Bits& b) {
        if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
        return a.w_ < b.w_;
    }

    template <typename Fn>
    void for_each_set(Fn fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Gather the bits at positions where `keep` is set, preserving order, into
    // a bitset of size keep.count(). Used when deleting matrix rows.
    Bits compress(const Bits& keep) const {
        Bits r(keep.count());
        std::size_t out = 0;
        keep.for_each_set([&](std::size_t i) {
            if (test(i)) r.set(out);
            ++out;
        });
        return r;
    }

    // Copy with a cleared bit slot spliced in at position `at` (old bits at
    // positions >= at shift up by one). Used when inserting matrix rows.
    Bits with_gap_at(std::size_t at) const {
        Bits r(nbits_ + 1);
        for (std::size_t i = 0; i < nbits_; ++i)
            if (test(i)) r.set(i < at ? i : i + 1);
        return r;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace pradius
