#include "mpv/oracle.hpp"

#include <chrono>

#include "mpv/core.hpp"

namespace mpv {

namespace {

class Search {
public:
    Search(const Instance& instance, std::uint64_t budget, std::size_t limit)
        : instance_(instance), budget_(budget), limit_(limit)
    {
    }

    void run()
    {
        if (limit_ == 0)
            return;
        stage_options_.resize(instance_.stages());
        for (std::size_t t = 0; t < instance_.stages(); ++t) {
            std::vector<CandidateId> current;
            collect(t, 1, current);
        }
        sequence_.resize(instance_.stages());
        descend(0);
    }

    std::uint64_t steps() const { return steps_; }
    std::vector<CommitteeSequence>& found() { return found_; }

private:
    void charge()
    {
        if (++steps_ > budget_)
            throw BudgetExceeded("brute force exceeded its budget of " + std::to_string(budget_)
                                     + " steps",
                                 budget_);
    }

    // Every subset of {next..m} extending `current`, in lexicographic order,
    // keeping those with score >= x.
    void collect(std::size_t t, CandidateId next, std::vector<CandidateId>& current)
    {
        charge();
        Committee c(current);
        if (score(instance_, t, c) >= instance_.x())
            stage_options_[t].push_back(std::move(c));
        if (current.size() == instance_.k())
            return;
        for (CandidateId id = next; id <= instance_.candidates(); ++id) {
            current.push_back(id);
            collect(t, id + 1, current);
            current.pop_back();
        }
    }

    bool descend(std::size_t t)
    {
        if (t == instance_.stages()) {
            found_.push_back(sequence_);
            return found_.size() >= limit_;
        }
        for (const auto& option : stage_options_[t]) {
            charge();
            if (t > 0
                && !transition_ok(instance_.variant(), instance_.ell(),
                                  symdiff_size(sequence_[t - 1], option)))
                continue;
            sequence_[t] = option;
            if (descend(t + 1))
                return true;
        }
        return false;
    }

    const Instance& instance_;
    std::uint64_t budget_;
    std::size_t limit_;
    std::uint64_t steps_ = 0;
    std::vector<std::vector<Committee>> stage_options_;
    CommitteeSequence sequence_;
    std::vector<CommitteeSequence> found_;
};

}  // namespace

SolveReport brute_force(const Instance& instance, std::uint64_t budget)
{
    auto start = std::chrono::steady_clock::now();
    Search search(instance, budget, 1);
    search.run();

    SolveReport report;
    report.algorithm = "brute";
    report.answer = !search.found().empty();
    if (report.answer)
        report.witness = std::move(search.found().front());
    report.stats.states = search.steps();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<CommitteeSequence> enumerate_solutions(const Instance& instance, std::size_t limit,
                                                   std::uint64_t budget)
{
    Search search(instance, budget, limit);
    search.run();
    return std::move(search.found());
}

}  // namespace mpv
