#include "pradius/classic_partition.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <string>

namespace pradius {

long long discrepancy(const IntList& values, const std::vector<std::size_t>& block1) {
    long long total = std::accumulate(values.begin(), values.end(), 0LL);
    long long s1 = 0;
    for (std::size_t i : block1) {
        if (i >= values.size())
            throw IndexOutOfRange("block index " + std::to_string(i) + " outside list of size " +
                                  std::to_string(values.size()));
        s1 += values[i];
    }
    long long d = 2 * s1 - total;
    return d < 0 ? -d : d;
}

namespace {

// Commitment node: a leaf is one original index; a combine node ties its two
// children to the same side (sum) or opposite sides (difference), with the
// larger child keeping the parent's sign. Append-only, so backtracking in the
// search needs no undo.
struct Combine {
    int left = -1;   // node id of the larger operand (keeps the sign)
    int right = -1;  // node id of the smaller operand
    bool same_side = false;
};

struct Item {
    long long value = 0;
    int node = -1;          // leaf id (< n) or combine id
    std::uint64_t seq = 0;  // creation order; breaks value ties deterministically
};

bool item_before(const Item& a, const Item& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.seq < b.seq;
}

class CommitmentArena {
public:
    explicit CommitmentArena(std::size_t leaves) : leaves_(leaves) {}

    int combine(int left, int right, bool same_side) {
        nodes_.push_back({left, right, same_side});
        return static_cast<int>(leaves_ + nodes_.size()) - 1;
    }

    std::size_t mark() const { return nodes_.size(); }
    void rollback(std::size_t mark) { nodes_.resize(mark); }

    // Resolve the sign of every leaf under `node` given the node's own sign.
    void paint(int node, int sign, std::vector<int>& side) const {
        if (node < static_cast<int>(leaves_)) {
            side[static_cast<std::size_t>(node)] = sign;
            return;
        }
        const Combine& c = nodes_[static_cast<std::size_t>(node) - leaves_];
        paint(c.left, sign, side);
        paint(c.right, c.same_side ? sign : -sign, side);
    }

private:
    std::size_t leaves_;
    std::vector<Combine> nodes_;
};

// One differencing pass: repeatedly merges the two largest items. Appends
// combine nodes to the arena; optionally records the successive value lists.
Item run_differencing(std::vector<Item> items, CommitmentArena& arena, std::uint64_t& seq,
                      std::vector<IntList>* trace) {
    std::sort(items.begin(), items.end(), item_before);
    auto snapshot = [&] {
        if (!trace) return;
        IntList vals;
        vals.reserve(items.size());
        for (const Item& it : items) vals.push_back(it.value);
        trace->push_back(std::move(vals));
    };
    snapshot();
    while (items.size() > 1) {
        Item a = items[0];
        Item b = items[1];
        items.erase(items.begin(), items.begin() + 2);
        Item d{a.value - b.value, arena.combine(a.node, b.node, false), seq++};
        items.insert(std::lower_bound(items.begin(), items.end(), d, item_before), d);
        snapshot();
    }
    return items[0];
}

std::vector<Item> leaves_of(const IntList& values) {
    std::vector<Item> items;
    items.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        items.push_back({values[i], static_cast<int>(i), i});
    std::sort(items.begin(), items.end(), item_before);
    return items;
}

ClassicPartitionResult result_from_sides(const IntList& values, const std::vector<int>& side) {
    ClassicPartitionResult r;
    for (std::size_t i = 0; i < values.size(); ++i)
        (side[i] >= 0 ? r.block1 : r.block2).push_back(i);
    r.discrepancy = discrepancy(values, r.block1);
    return r;
}

// Complete anytime search. Terminal rules keep the tree tiny: lists of at
// most 5 values are solved closed-form instead of branched.
class CkkSearch {
public:
    CkkSearch(const IntList& values, const SearchControl& control)
        : values_(values),
          arena_(values.size()),
          seq_(values.size()),
          clock_(control),
          total_(std::accumulate(values.begin(), values.end(), 0LL)),
          parity_floor_(total_ & 1),
          side_best_(values.size(), 1) {}

    ClassicPartitionResult run() {
        visit(leaves_of(values_), total_);
        ClassicPartitionResult r = result_from_sides(values_, side_best_);
        r.optimal = !exhausted_;
        r.nodes_expanded = nodes_;
        return r;
    }

private:
    // Offer a terminal assignment: items[i] goes to the side of signs[i].
    void offer(const std::vector<Item>& items, const std::vector<int>& signs, long long value) {
        if (value >= best_) return;
        std::vector<int> side(values_.size(), 1);
        for (std::size_t i = 0; i < items.size(); ++i) arena_.paint(items[i].node, signs[i], side);
        best_ = value;
        side_best_ = std::move(side);
        clock_.report(best_, nodes_);
        if (best_ <= parity_floor_) done_ = true;
    }

    void offer_differencing(const std::vector<Item>& items) {
        std::size_t mark = arena_.mark();
        Item final_item = run_differencing(items, arena_, seq_, nullptr);
        offer({final_item}, {1}, final_item.value);
        arena_.rollback(mark);
    }

    void visit(std::vector<Item> items, long long total) {
        ++nodes_;
        if (!clock_.admit_node(nodes_)) {
            exhausted_ = true;
            return;
        }
        const std::size_t m = items.size();
        if (m == 1) {
            offer(items, {1}, items[0].value);
            return;
        }
        long long rest = total - items[0].value;
        if (items[0].value >= rest) {
            // Largest element dominates: it goes alone, optimal here.
            std::vector<int> signs(m, -1);
            signs[0] = 1;
            offer(items, signs, items[0].value - rest);
            return;
        }
        if (m == 3) {
            // Largest alone is optimal once it does not dominate.
            offer(items, {1, -1, -1}, rest - items[0].value);
            return;
        }
        if (m == 4) {
            offer_differencing(items);
            return;
        }
        if (m == 5) {
            offer_differencing(items);
            if (done_) return;
            // Alternative: the two largest together against the rest.
            long long alt = items[0].value + items[1].value - (total - items[0].value -
                                                               items[1].value);
            offer(items, {1, 1, -1, -1, -1}, alt < 0 ? -alt : alt);
            return;
        }

        Item a = items[0];
        Item b = items[1];
        std::vector<Item> child(items.begin() + 2, items.end());

        // Difference branch first: this is the LDM move, so depth-first
        // left descent reproduces the heuristic's trajectory.
        Item d{a.value - b.value, arena_.combine(a.node, b.node, false), seq_++};
        child.insert(std::lower_bound(child.begin(), child.end(), d, item_before), d);
        visit(child, total - 2 * b.value);
        if (done_ || exhausted_) return;

        child.erase(std::find_if(child.begin(), child.end(),
                                 [&](const Item& it) { return it.node == d.node; }));
        Item s{a.value + b.value, arena_.combine(a.node, b.node, true), seq_++};
        child.insert(child.begin(), s);  // a + b outweighs every remaining item
        visit(child, total);
    }

    const IntList& values_;
    CommitmentArena arena_;
    std::uint64_t seq_;
    BudgetClock clock_;
    long long total_;
    long long parity_floor_;
    long long best_ = LLONG_MAX;
    std::vector<int> side_best_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    bool exhausted_ = false;
};

}  // namespace

ClassicPartitionResult kk_ldm(const IntList& values) {
    if (values.empty()) throw EmptyList("cannot partition an empty list");
    CommitmentArena arena(values.size());
    std::uint64_t seq = values.size();
    std::vector<IntList> trace;
    Item final_item = run_differencing(leaves_of(values), arena, seq, &trace);
    std::vector<int> side(values.size(), 1);
    arena.paint(final_item.node, 1, side);
    ClassicPartitionResult r = result_from_sides(values, side);
    r.optimal = values.size() <= 4;
    r.nodes_expanded = values.size() - 1;
    r.instances = std::move(trace);
    return r;
}

ClassicPartitionResult ckk(const IntList& values, const SearchControl& control) {
    if (values.empty()) throw EmptyList("cannot partition an empty list");
    return CkkSearch(values, control).run();
}

ClassicPartitionResult brute_partition(const IntList& values) {
    if (values.empty()) throw EmptyList("cannot partition an empty list");
    if (values.size() > 24)
        throw TooLarge("exhaustive partition enumeration refused beyond 24 values, got " +
                       std::to_string(values.size()));
    const std::size_t n = values.size();
    const std::uint64_t masks = std::uint64_t{1} << (n - 1);
    const long long total = std::accumulate(values.begin(), values.end(), 0LL);
    long long best = LLONG_MAX;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        // Index 0 always joins block1; mask bit i covers index i+1.
        long long s1 = values[0];
        for (std::size_t i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) s1 += values[i];
        long long d = 2 * s1 - total;
        if (d < 0) d = -d;
        if (d < best) {
            best = d;
            best_mask = mask;
        }
    }
    ClassicPartitionResult r;
    r.block1.push_back(0);
    for (std::size_t i = 1; i < n; ++i)
        ((best_mask >> (i - 1)) & 1 ? r.block1 : r.block2).push_back(i);
    r.discrepancy = best;
    r.optimal = true;
    r.nodes_expanded = masks;
    return r;
}

std::optional<long long> min_discrepancy_exact(const IntList& values, std::size_t max_sum_bits) {
    long long total = std::accumulate(values.begin(), values.end(), 0LL);
    if (total < 0 || static_cast<std::size_t>(total) + 1 > max_sum_bits) return std::nullopt;
    // reachable[s] = some sub-multiset sums to s; scan half-sums downward.
    std::vector<std::uint64_t> reach((static_cast<std::size_t>(total) + 64) / 64, 0);
    reach[0] = 1;
    auto shift_or = [&](long long by) {
        const std::size_t word = static_cast<std::size_t>(by) / 64;
        const unsigned bit = static_cast<unsigned>(by % 64);
        for (std::size_t i = reach.size(); i-- > 0;) {
            std::uint64_t v = i >= word ? reach[i - word] << bit : 0;
            if (bit && i > word) v |= reach[i - word - 1] >> (64 - bit);
            reach[i] |= v;
        }
    };
    for (long long v : values)
        if (v > 0) shift_or(v);
    for (long long s = total / 2; s >= 0; --s)
        if ((reach[static_cast<std::size_t>(s) / 64] >> (static_cast<std::size_t>(s) % 64)) & 1)
            return total - 2 * s;
    return total;  // unreachable only if all values were nonpositive
}

}  // namespace pradius
