#include <gtest/gtest.h>

#include <cmath>

#include "common.hpp"
#include "mpv/core.hpp"
#include "mpv/oracle.hpp"
#include "mpv/reductions.hpp"
#include "mpv/solvers.hpp"
#include "oracles.hpp"

using namespace mpv;
using mpv::testing::e1;

namespace {

double binomial(std::size_t n, std::size_t r)
{
    if (r > n)
        return 0;
    double out = 1;
    for (std::size_t i = 0; i < r; ++i)
        out = out * double(n - i) / double(i + 1);
    return out;
}

void expect_agrees(const Instance& instance, const SolveReport& report, bool expected)
{
    EXPECT_EQ(report.answer, expected) << report.algorithm;
    if (report.answer) {
        ASSERT_TRUE(report.witness) << report.algorithm;
        EXPECT_TRUE(verify(instance, *report.witness).valid()) << report.algorithm;
    }
}

}  // namespace

TEST(Unconstrained, RegimeExamples)
{
    EXPECT_TRUE(unconstrained_regime(e1(Variant::conservative, 1, 2, 2)));
    EXPECT_TRUE(unconstrained_regime(e1(Variant::revolutionary, 1, 0, 2)));
    EXPECT_FALSE(unconstrained_regime(e1(Variant::conservative, 1, 1, 2)));
    EXPECT_FALSE(solve_unconstrained(e1(Variant::conservative, 1, 2, 2)).answer);
    EXPECT_FALSE(solve_unconstrained(e1(Variant::revolutionary, 1, 0, 2)).answer);
    EXPECT_TRUE(solve_unconstrained(e1(Variant::revolutionary, 1, 0, 1)).answer);
}

TEST(Solvers, FixtureExamples)
{
    auto c_yes = e1(Variant::conservative, 1, 2, 1);
    auto c_no = e1(Variant::conservative, 1, 0, 1);
    auto r_yes = e1(Variant::revolutionary, 1, 2, 1);
    for (const auto& algorithm : {"layered-k", "dp-tau", "brute", "auto"}) {
        expect_agrees(c_yes, solve_with(algorithm, c_yes), true);
        expect_agrees(c_no, solve_with(algorithm, c_no), false);
        expect_agrees(r_yes, solve_with(algorithm, r_yes), true);
    }
    expect_agrees(r_yes, solve_inout_ell(r_yes), true);
}

TEST(Solvers, TwoStageForcedSwitchIsNo)
{
    Instance instance(Variant::revolutionary, 2, 2, {{1, 1}, {1, 1}}, 1, 2, 2);
    EXPECT_FALSE(brute_force(instance).answer);
    EXPECT_FALSE(solve_layered_k(instance).answer);
    EXPECT_FALSE(solve_inout_ell(instance).answer);
    EXPECT_FALSE(solve_dp_tau(instance).answer);
}

TEST(Solvers, SingleStageMatchesUnconstrained)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto instance = random_instance(4, 5, 1, 1 + seed % 3, seed % 3, 1 + seed % 4,
                                        Variant::conservative, 0.2, seed);
        EXPECT_EQ(solve_dp_tau(instance).answer, solve_unconstrained(instance).answer);
    }
}

TEST(Solvers, AgreeWithBruteForceOnSmallSweep)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto shape = mpv::testing::sweep_shape(seed);
        for (auto variant : {Variant::conservative, Variant::revolutionary})
            for (std::size_t ell = 0; ell <= 2 * shape.k; ++ell)
                for (std::size_t x = 1; x <= shape.agents; ++x) {
                    auto instance = mpv::testing::sweep_instance(shape, variant, ell, x);
                    bool expected = brute_force(instance).answer;
                    expect_agrees(instance, solve_layered_k(instance), expected);
                    expect_agrees(instance, solve_dp_tau(instance), expected);
                    expect_agrees(instance, solve_auto(instance), expected);
                    if (variant == Variant::revolutionary && ell >= 1 && instance.stages() >= 2)
                        expect_agrees(instance, solve_inout_ell(instance), expected);
                    if (unconstrained_regime(instance))
                        expect_agrees(instance, solve_unconstrained(instance), expected);
                }
    }
}

TEST(Solvers, Deterministic)
{
    auto instance = random_instance(6, 7, 4, 2, 2, 3, Variant::revolutionary, 0.1, 42);
    for (const auto& algorithm : {"layered-k", "inout-ell", "dp-tau", "brute", "auto"}) {
        auto a = solve_with(algorithm, instance), b = solve_with(algorithm, instance);
        EXPECT_EQ(a.answer, b.answer);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.stats.states, b.stats.states);
        EXPECT_EQ(a.algorithm, b.algorithm);
    }
}

TEST(Solvers, UnknownAlgorithmRejected)
{
    EXPECT_THROW(solve_with("simplex", e1(Variant::conservative, 1, 0, 1)), DomainError);
}

TEST(SolveAuto, RoutesRevolutionaryEllZeroToGreedy)
{
    auto report = solve_auto(random_instance(5, 6, 4, 2, 0, 2, Variant::revolutionary, 0.0, 3));
    EXPECT_EQ(report.algorithm, "greedy");
}

TEST(SolveAuto, AvoidsBruteForceOnWideInstances)
{
    auto instance = random_instance(20, 10'000, 3, 1, 1, 2, Variant::conservative, 0.0, 4);
    auto report = solve_auto(instance);
    EXPECT_TRUE(report.algorithm == "layered-k" || report.algorithm == "dp-tau") << report.algorithm;
}

TEST(SolveAuto, RoutesLongRevolutionaryToInOut)
{
    auto instance = random_instance(10, 30, 50, 2, 1, 2, Variant::revolutionary, 0.0, 5);
    auto estimates = estimate_costs(instance);
    ASSERT_FALSE(estimates.empty());
    EXPECT_EQ(estimates.front().algorithm, "inout-ell");
    EXPECT_EQ(solve_auto(instance).algorithm, "inout-ell");
}

TEST(DpTau, LiveStatesWithinBound)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto shape = mpv::testing::sweep_shape(seed);
        auto variant = seed % 2 ? Variant::revolutionary : Variant::conservative;
        const std::size_t ell = seed % (2 * shape.k + 1), x = 1 + seed % shape.agents;
        auto instance = mpv::testing::sweep_instance(shape, variant, ell, x);
        DpStats stats;
        solve_dp_tau(instance, default_solver_budget, &stats);
        const double tau = double(instance.stages());
        const double gaps = double(std::min(2 * instance.k(), ell) + 1);
        const double bound = std::pow(double(instance.k() + 1), tau) * std::pow(gaps, tau - 1)
                             * std::pow(double(x + 1), tau);
        EXPECT_LE(double(stats.max_live_states), bound) << "seed " << seed;
    }
}

TEST(InOut, NodeCountWithinBound)
{
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t ell = 1; ell <= 4; ++ell) {
            double bound = 0;
            for (std::size_t j = 0; j <= ell; ++j)
                bound += binomial(m, j) * binomial(m - j, ell - j);
            EXPECT_LE(double(inout_nodes(m, ell).size()), bound);
            for (const auto& node : inout_nodes(m, ell)) {
                EXPECT_TRUE(disjoint(node.leaving, node.entering));
                EXPECT_EQ(node.leaving.size() + node.entering.size(), ell);
            }
        }
}

TEST(InOut, RequiresRevolutionaryWithPositiveEll)
{
    EXPECT_THROW(build_inout_graph(e1(Variant::conservative, 1, 2, 1)), PreconditionError);
    EXPECT_THROW(build_inout_graph(e1(Variant::revolutionary, 1, 0, 1)), PreconditionError);
}
