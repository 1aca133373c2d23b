#include "mpv/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "mpv/core.hpp"
#include "mpv/oracle.hpp"

namespace mpv {

bool unconstrained_regime(const Instance& instance)
{
    if (instance.stages() == 1)
        return true;
    if (instance.variant() == Variant::conservative)
        return instance.ell() >= 2 * instance.k();
    return instance.ell() == 0;
}

SolveReport solve_unconstrained(const Instance& instance)
{
    if (!unconstrained_regime(instance))
        throw PreconditionError("greedy requires conservative ell >= 2k, revolutionary ell = 0, "
                                "or a single stage");
    auto start = std::chrono::steady_clock::now();
    SolveReport report;
    report.algorithm = "greedy";
    CommitteeSequence seq;
    bool ok = true;
    for (std::size_t t = 0; t < instance.stages() && ok; ++t) {
        seq.push_back(top_committee(instance, t));
        ok = score(instance, t, seq.back()) >= instance.x();
    }
    report.answer = ok;
    if (ok)
        report.witness = std::move(seq);
    report.stats.states = instance.stages();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

double binomial_sum(double m, std::size_t k)
{
    double total = 0.0, term = 1.0;
    for (std::size_t j = 0; j <= k && j <= m; ++j) {
        total += term;
        term = term * (m - static_cast<double>(j)) / static_cast<double>(j + 1);
    }
    return total;
}

}  // namespace

std::vector<CostEstimate> estimate_costs(const Instance& instance)
{
    const double m = static_cast<double>(instance.candidates());
    const double tau = static_cast<double>(instance.stages());
    const double k = static_cast<double>(instance.k());
    const double ell = static_cast<double>(instance.ell());
    const double x = static_cast<double>(instance.x());
    const double ell_eff = std::min(ell, 2 * k);

    // Listed in tie-break order: on equal estimates the earlier entry wins.
    std::vector<CostEstimate> costs;
    if (instance.variant() == Variant::revolutionary)
        costs.push_back({"inout-ell", tau * std::pow(m, 2 * ell)});
    costs.push_back({"layered-k", tau * std::pow(m, k)});
    costs.push_back({"dp-tau", std::pow(k + 1, tau) * std::pow(ell_eff + 1, tau - 1)
                                   * std::pow(x + 1, tau) * m});
    costs.push_back({"brute", std::pow(binomial_sum(m, instance.k()), tau)});
    std::stable_sort(costs.begin(), costs.end(),
                     [](const CostEstimate& a, const CostEstimate& b) { return a.cost < b.cost; });
    return costs;
}

SolveReport solve_auto(const Instance& instance, std::uint64_t budget)
{
    if (unconstrained_regime(instance))
        return solve_unconstrained(instance);
    auto costs = estimate_costs(instance);
    for (const auto& estimate : costs) {
        try {
            return solve_with(estimate.algorithm, instance, budget);
        } catch (const BudgetExceeded&) {
        }
    }
    std::ostringstream os;
    os << "every algorithm exceeded the budget of " << budget << " (estimates:";
    for (const auto& estimate : costs)
        os << ' ' << estimate.algorithm << '=' << estimate.cost;
    os << ')';
    throw BudgetExceeded(os.str(), budget);
}

SolveReport solve_with(const std::string& algorithm, const Instance& instance, std::uint64_t budget)
{
    if (algorithm == "auto")
        return solve_auto(instance, budget);
    if (algorithm == "brute")
        return brute_force(instance, budget);
    if (algorithm == "layered-k")
        return solve_layered_k(instance, budget);
    if (algorithm == "inout-ell")
        return solve_inout_ell(instance, budget);
    if (algorithm == "dp-tau")
        return solve_dp_tau(instance, budget);
    if (algorithm == "greedy")
        return solve_unconstrained(instance);
    throw DomainError("unknown algorithm '" + algorithm + "'");
}

}  // namespace mpv
