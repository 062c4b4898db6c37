#include <rdlab/budget.hh>

using std::chrono::duration;
using std::chrono::steady_clock;

namespace rdlab
{
    auto to_string(BudgetStatus s) -> std::string
    {
        switch (s) {
        case BudgetStatus::complete: return "complete";
        case BudgetStatus::node_budget_hit: return "node-budget-hit";
        case BudgetStatus::timeout: return "timeout";
        case BudgetStatus::cancelled: return "cancelled";
        }
        return "?";
    }

    void SearchStats::merge(const SearchStats & other)
    {
        nodes += other.nodes;
        prunes += other.prunes;
        if (other.elapsed_seconds > elapsed_seconds)
            elapsed_seconds = other.elapsed_seconds;
        if (status == BudgetStatus::complete)
            status = other.status;
    }

    auto BudgetClock::tick(SearchStats & stats) -> bool
    {
        if (stats.status != BudgetStatus::complete)
            return false;

        ++stats.nodes;
        if (stats.nodes > _budget.max_nodes) {
            stats.status = BudgetStatus::node_budget_hit;
            return false;
        }
        if (0 == (stats.nodes & 0x3ff)) {
            if (_budget.cancel && _budget.cancel->load(std::memory_order_relaxed)) {
                stats.status = BudgetStatus::cancelled;
                return false;
            }
            if (elapsed() > _budget.timeout.count()) {
                stats.status = BudgetStatus::timeout;
                return false;
            }
        }
        return true;
    }

    auto BudgetClock::elapsed() const -> double
    {
        return duration<double>(steady_clock::now() - _start).count();
    }
}
