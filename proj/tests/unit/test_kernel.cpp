#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "mpv/core.hpp"
#include "mpv/kernel.hpp"
#include "mpv/oracle.hpp"
#include "mpv/reductions.hpp"
#include "oracles.hpp"

using namespace mpv;
using mpv::testing::e1;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

}  // namespace

TEST(KernelNtauCmpv, DropsNeverApprovedCandidates)
{
    Instance instance(Variant::conservative, 2, 10, {{1, 2}, {3, 4}}, 2, 1, 1);
    auto reduced = kernel_ntau_cmpv(instance);
    EXPECT_EQ(reduced.instance.candidates(), 4u);
    EXPECT_EQ(reduced.original_ids, (std::vector<CandidateId>{1, 2, 3, 4}));
}

TEST(KernelNtauCmpv, LeavesSmallInstancesAlone)
{
    Instance instance(Variant::conservative, 2, 4, {{1, 1}, {1, 1}}, 1, 0, 1);
    auto reduced = kernel_ntau_cmpv(instance);
    EXPECT_EQ(reduced.instance, instance);
}

TEST(KernelNtauCmpv, PreservesAnswersAndLiftsWitnesses)
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t m = 3 + seed % 6;
        auto instance = random_instance(1 + seed % 2, m, 1 + seed % 3, 1 + seed % 2, seed % 3,
                                        1, Variant::conservative, 0.3, seed);
        auto reduced = kernel_ntau_cmpv(instance);
        const std::size_t cap = instance.agents() * instance.stages();
        if (m > cap) {
            EXPECT_LE(reduced.instance.candidates(), cap);
        } else {
            EXPECT_EQ(reduced.instance.candidates(), m);
        }
        auto report = brute_force(reduced.instance);
        EXPECT_EQ(report.answer, brute_force(instance).answer) << "seed " << seed;
        if (report.answer) {
            EXPECT_TRUE(verify(instance, lift_witness(reduced, *report.witness)).valid());
        }
    }
}

TEST(KernelNtauRmpv, TrivialNoWhenEllExceedsTwiceK)
{
    Instance instance(Variant::revolutionary, 2, 4, {{1, 2}, {3, 4}}, 1, 3, 1);
    auto kernel = kernel_ntau_rmpv(instance);
    EXPECT_TRUE(kernel.trivial_no);
    EXPECT_FALSE(brute_force(instance).answer);
}

TEST(KernelNtauRmpv, RescalesWhenKExceedsN)
{
    Instance instance(Variant::revolutionary, 1, 4, {{1}, {2}}, 2, 3, 1);
    auto kernel = kernel_ntau_rmpv(instance);
    ASSERT_FALSE(kernel.trivial_no);
    ASSERT_TRUE(kernel.reduced);
    EXPECT_TRUE(kernel.rescaled);
    const auto& out = kernel.reduced->instance;
    EXPECT_EQ(out.candidates(), 2u);
    EXPECT_EQ(out.k(), 1u);
    EXPECT_EQ(out.ell(), 1u);
    EXPECT_EQ(kernel.fillers_per_stage, 1u);
    auto report = brute_force(out);
    ASSERT_EQ(report.answer, brute_force(instance).answer);
    if (report.answer) {
        EXPECT_TRUE(verify(instance, lift_witness(kernel, *report.witness)).valid());
    }
}

TEST(KernelNtauRmpv, PreservesAnswers)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 2, tau = 1 + seed % 3, k = 1 + seed % 3;
        const std::size_t m = seed % 2 ? std::min<std::size_t>(k * tau, 8) : 2 + seed % 7;
        auto instance = random_instance(n, m, tau, k, seed % (2 * k + 2), 1, Variant::revolutionary,
                                        0.2, seed);
        auto kernel = kernel_ntau_rmpv(instance);
        bool expected = brute_force(instance).answer;
        if (kernel.trivial_no) {
            EXPECT_FALSE(expected) << "seed " << seed;
            continue;
        }
        ASSERT_TRUE(kernel.reduced);
        const auto& out = kernel.reduced->instance;
        EXPECT_LE(out.candidates(), std::max(n, k) * tau);
        if (kernel.rescaled) {
            EXPECT_LE(out.candidates(), n * tau);
        }
        auto report = brute_force(out);
        EXPECT_EQ(report.answer, expected) << "seed " << seed;
        if (report.answer) {
            EXPECT_TRUE(verify(instance, lift_witness(kernel, *report.witness)).valid());
        }
    }
}

TEST(ToWeighted, ReadsCounts)
{
    auto w = to_weighted(e1(Variant::conservative, 1, 2, 1));
    EXPECT_EQ(w.weights[0], ints({2, 0, 0}));
    EXPECT_EQ(w.weights[1], ints({0, 2, 0}));
    EXPECT_EQ(w.weights[2], ints({1, 0, 1}));
    EXPECT_TRUE(solve_weighted(w).answer);
}

TEST(ToWeighted, AbstainingStageIsZero)
{
    auto w = to_weighted(Instance(Variant::conservative, 2, 2, {{0, 0}, {1, 2}}, 1, 0, 1));
    EXPECT_EQ(w.weights[0], ints({0, 0}));
}

TEST(SolveWeighted, Examples)
{
    WeightedInstance zero{Variant::conservative, 1, 0, 1, {ints({0, 0, 0})}};
    EXPECT_FALSE(solve_weighted(zero).answer);
    WeightedInstance forced{Variant::conservative, 1, 0, 7, {ints({7, 1})}};
    auto report = solve_weighted(forced);
    ASSERT_TRUE(report.answer);
    EXPECT_EQ(report.witness->front(), Committee{1});
}

TEST(SolveWeighted, MatchesBruteForce)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto instance = random_instance(3, 4, 3, 1 + seed % 2, seed % 4, 1 + seed % 3,
                                        seed % 2 ? Variant::revolutionary : Variant::conservative,
                                        0.2, seed);
        EXPECT_EQ(solve_weighted(to_weighted(instance)).answer, brute_force(instance).answer);
    }
}

TEST(FromWeighted, RoundTripsUnitInstances)
{
    auto instance = e1(Variant::revolutionary, 1, 2, 1);
    auto back = from_weighted(to_weighted(instance), 10);
    ASSERT_TRUE(back);
    EXPECT_EQ(brute_force(*back).answer, true);
    for (std::size_t t = 0; t < 3; ++t)
        for (CandidateId c = 1; c <= 3; ++c)
            EXPECT_EQ(back->count(t, c), instance.count(t, c));
}

TEST(FromWeighted, RefusesAboveCap)
{
    WeightedInstance big{Variant::conservative, 1, 0, 1, {ints({50, 60})}};
    EXPECT_FALSE(from_weighted(big, 100));
}

TEST(ShrinkWeights, ZeroAndSingleton)
{
    EXPECT_EQ(shrink_weights(ints({0, 0, 0}), 3), ints({0, 0, 0}));
    auto one = shrink_weights(ints({5}), 2);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_GT(one[0], 0);
}

TEST(ShrinkWeights, KnownPairKeepsSigns)
{
    auto w = ints({3, 5});
    auto v = shrink_weights(w, 3);
    EXPECT_TRUE(mpv::testing::signs_agree(w, v, 3));
    EXPECT_TRUE(mpv::testing::signs_agree(w, ints({2, 3}), 3));
}

TEST(ShrinkWeights, ContractOnLargeRandomVectors)
{
    std::mt19937_64 rng(8);
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::uint64_t N = 2; N <= 4; ++N)
            for (int i = 0; i < 20; ++i) {
                std::vector<BigInt> w(d);
                for (auto& value : w) {
                    value = BigInt(rng() >> 4) * BigInt(rng() >> 4);
                    if (rng() % 3 == 0)
                        value = -value;
                }
                auto v = shrink_weights(w, N);
                BigInt bound = shrink_norm_bound(d, N);
                for (const auto& value : v)
                    EXPECT_LE(abs(value), bound);
                EXPECT_TRUE(mpv::testing::signs_agree(w, v, N));
            }
}

TEST(ShrinkWeights, NonnegativeStaysNonnegative)
{
    auto v = shrink_weights(ints({1000003, 7, 0, 999999}), 3);
    for (const auto& value : v)
        EXPECT_GE(value, 0);
}

TEST(ShrinkWeights, RejectsSmallN)
{
    EXPECT_THROW(shrink_weights(ints({1, 2}), 1), DomainError);
}

TEST(KernelMtau, PreservesAnswersAndBound)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t m = 1 + seed % 4, tau = 1 + seed % 3, k = 1 + seed % 2;
        auto instance = random_instance(6, m, tau, k, seed % (2 * k + 1), 1 + seed % 5,
                                        seed % 2 ? Variant::revolutionary : Variant::conservative,
                                        0.1, seed);
        auto kernel = kernel_mtau(instance);
        EXPECT_EQ(solve_weighted(kernel).answer, brute_force(instance).answer) << "seed " << seed;
        BigInt bound = shrink_norm_bound(m * tau + 1, k + 2);
        EXPECT_LE(kernel.x, bound);
        for (const auto& row : kernel.weights)
            for (const auto& value : row)
                EXPECT_LE(value, bound);
    }
}
