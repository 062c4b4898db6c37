#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <string>

namespace rdlab
{
    enum class BudgetStatus
    {
        complete,
        node_budget_hit,
        timeout,
        cancelled
    };

    auto to_string(BudgetStatus s) -> std::string;

    struct Budget
    {
        std::uint64_t max_nodes = 100'000'000;
        std::chrono::duration<double> timeout = std::chrono::seconds{300};
        /// Optional cooperative stop flag shared between workers.
        const std::atomic<bool> * cancel = nullptr;

        static auto unlimited() -> Budget
        {
            return Budget{std::numeric_limits<std::uint64_t>::max(), std::chrono::hours{24 * 365}, nullptr};
        }
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t prunes = 0;
        double elapsed_seconds = 0.0;
        BudgetStatus status = BudgetStatus::complete;

        [[nodiscard]] auto complete() const -> bool { return status == BudgetStatus::complete; }

        /// Accumulates counters; the first incomplete status wins.
        void merge(const SearchStats & other);
    };

    /// Tracks nodes and wall-clock time against a Budget.
    class BudgetClock
    {
    public:
        explicit BudgetClock(const Budget & b) :
            _budget(b), _start(std::chrono::steady_clock::now())
        {
        }

        /// Registers one search node; returns false once the budget is gone.
        auto tick(SearchStats & stats) -> bool;

        [[nodiscard]] auto elapsed() const -> double;

    private:
        Budget _budget;
        std::chrono::steady_clock::time_point _start;
    };

    /// Thrown by value-returning operations whose search ran out of budget.
    class SearchIncomplete : public std::exception
    {
    public:
        explicit SearchIncomplete(SearchStats s) :
            stats(s), _what("search incomplete: " + to_string(s.status))
        {
        }

        [[nodiscard]] auto what() const noexcept -> const char * override { return _what.c_str(); }

        SearchStats stats;

    private:
        std::string _what;
    };
}
