#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

namespace pradius {

// Progress snapshot passed to anytime callbacks whenever a search improves its
// incumbent. `value` is the quantity being minimized (discrepancy or
// discordancy, depending on the solver).
struct Improvement {
    long long value = 0;
    std::uint64_t nodes_expanded = 0;
    double elapsed_ms = 0.0;
};

// Budgets and callbacks shared by the anytime branch-and-bound solvers.
// Exceeding a budget stops the search gracefully: the best incumbent so far is
// returned with optimal = false.
struct SearchControl {
    std::optional<std::uint64_t> node_budget;
    std::optional<double> time_budget_ms;
    std::function<void(const Improvement&)> on_improve;
};

// Stopwatch + budget bookkeeping used inside the solvers.
class BudgetClock {
public:
    explicit BudgetClock(const SearchControl& control)
        : control_(control), start_(std::chrono::steady_clock::now()) {}

    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    // Call once per expanded node; returns false once a budget is exhausted.
    bool admit_node(std::uint64_t nodes_expanded) {
        if (control_.node_budget && nodes_expanded > *control_.node_budget) return false;
        if (control_.time_budget_ms && elapsed_ms() > *control_.time_budget_ms) return false;
        return true;
    }

    void report(long long value, std::uint64_t nodes) const {
        if (control_.on_improve) control_.on_improve({value, nodes, elapsed_ms()});
    }

private:
    const SearchControl& control_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace pradius
