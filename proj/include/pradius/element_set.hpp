#pragma once

#include <initializer_list>
#include <vector>

#include "pradius/bits.hpp"
#include "pradius/errors.hpp"

namespace pradius {

// A subset of the ground set {1, ..., n}. Elements are 1-based labels in the
// public API (matching the text formats); bit position = label - 1.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
    ElementSet(int universe, std::initializer_list<int> labels) : ElementSet(universe) {
        for (int l : labels) add(l);
    }
    ElementSet(int universe, const std::vector<int>& labels) : ElementSet(universe) {
        for (int l : labels) add(l);
    }
    // Adopt an existing positional bitset.
    explicit ElementSet(Bits bits) : bits_(std::move(bits)) {}

    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (int l = 1; l <= universe; ++l) s.add(l);
        return s;
    }

    int universe_size() const { return static_cast<int>(bits_.size()); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    void add(int label) {
        check(label);
        bits_.set(static_cast<std::size_t>(label - 1));
    }
    void remove(int label) {
        check(label);
        bits_.reset(static_cast<std::size_t>(label - 1));
    }
    bool contains(int label) const {
        return label >= 1 && label <= universe_size() &&
               bits_.test(static_cast<std::size_t>(label - 1));
    }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(bits_.count());
        bits_.for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i) + 1); });
        return out;
    }

    const Bits& bits() const { return bits_; }

    ElementSet& operator|=(const ElementSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    ElementSet difference(const ElementSet& o) const { return ElementSet(bits_.and_not(o.bits_)); }

    bool subset_of(const ElementSet& o) const { return bits_.subset_of(o.bits_); }
    bool intersects(const ElementSet& o) const { return bits_.intersects(o.bits_); }

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }
    friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

private:
    void check(int label) const {
        if (label < 1 || label > universe_size())
            throw RangeError("element label " + std::to_string(label) + " outside 1.." +
                             std::to_string(universe_size()));
    }

    Bits bits_;
};

}  // namespace pradius
