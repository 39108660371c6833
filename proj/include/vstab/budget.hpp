#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace vstab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Raised when a search runs past its node budget. Distinct from a "no" answer.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("search node budget exceeded") {}
};

/// Shared branch-node counter. Thread-safe; one instance may back a whole parallel search.
class Budget {
public:
    explicit Budget(std::uint64_t limit = kDefaultNodeBudget) : limit_(limit) {}
    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

    void charge(std::uint64_t nodes = 1)
    {
        const auto total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
        if (total > limit_)
            throw BudgetExceeded();
    }
    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

} // namespace vstab
