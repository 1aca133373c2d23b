#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "common.hpp"
#include "mpv/core.hpp"
#include "mpv/oracle.hpp"
#include "mpv/reductions.hpp"

using namespace mpv;
using mpv::testing::e1;

TEST(BruteForce, ConservativeStationaryNo)
{
    auto report = brute_force(e1(Variant::conservative, 1, 0, 1));
    EXPECT_FALSE(report.answer);
    EXPECT_FALSE(report.witness);
}

TEST(BruteForce, RevolutionaryWitnessIsLexicographicallyFirst)
{
    auto report = brute_force(e1(Variant::revolutionary, 1, 2, 1));
    ASSERT_TRUE(report.answer);
    ASSERT_TRUE(report.witness);
    EXPECT_EQ(*report.witness, (CommitteeSequence{{1}, {2}, {1}}));
}

TEST(BruteForce, SingleStageIsBestCommitteeCheck)
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t k = 1 + seed % 3, x = 1 + seed % 5;
        auto instance = random_instance(5, 4, 1, k, seed % 3, x, Variant::conservative, 0.2, seed);
        EXPECT_EQ(brute_force(instance).answer, score(instance, 0, top_committee(instance, 0)) >= x);
    }
}

TEST(BruteForce, BudgetIsDistinctFromNo)
{
    auto instance = random_instance(4, 8, 4, 3, 2, 4, Variant::revolutionary, 0.0, 1);
    EXPECT_THROW(brute_force(instance, 5), BudgetExceeded);
}

TEST(EnumerateSolutions, ContainsKnownWitness)
{
    auto all = enumerate_solutions(e1(Variant::revolutionary, 1, 2, 1), 10);
    EXPECT_NE(std::find(all.begin(), all.end(), CommitteeSequence{{1}, {2}, {1}}), all.end());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    for (const auto& seq : all)
        EXPECT_TRUE(verify(e1(Variant::revolutionary, 1, 2, 1), seq).valid());
}

TEST(EnumerateSolutions, EmptyForUnsatisfiableOrZeroLimit)
{
    EXPECT_TRUE(enumerate_solutions(e1(Variant::conservative, 1, 0, 1), 10).empty());
    EXPECT_TRUE(enumerate_solutions(e1(Variant::revolutionary, 1, 2, 1), 0).empty());
}

TEST(BruteForce, MonotoneInParameters)
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        auto base = random_instance(3, 4, 3, 1 + seed % 2, 0, 1, seed % 2 ? Variant::revolutionary
                                                                          : Variant::conservative,
                                    0.2, seed);
        const std::size_t k = base.k();
        for (std::size_t ell = 0; ell < 2 * k; ++ell)
            for (std::size_t x = 1; x <= 3; ++x) {
                bool here = brute_force(base.with_parameters(k, ell, x)).answer;
                if (!here)
                    continue;
                EXPECT_TRUE(brute_force(base.with_parameters(k + 1, ell, x)).answer);
                if (x > 1) {
                    EXPECT_TRUE(brute_force(base.with_parameters(k, ell, x - 1)).answer);
                }
                if (base.variant() == Variant::conservative) {
                    EXPECT_TRUE(brute_force(base.with_parameters(k, ell + 1, x)).answer);
                } else if (ell > 0) {
                    EXPECT_TRUE(brute_force(base.with_parameters(k, ell - 1, x)).answer);
                }
            }
    }
}

TEST(BruteForce, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto instance = random_instance(4, 5, 3, 2, seed % 5, 1 + seed % 4,
                                        seed % 2 ? Variant::revolutionary : Variant::conservative,
                                        0.25, seed);
        std::vector<CandidateId> relabel(6);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::shuffle(relabel.begin() + 1, relabel.end(), rng);
        std::vector<std::size_t> order(4);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        auto ballots = instance.all_ballots();
        for (auto& stage : ballots) {
            auto original = stage;
            for (std::size_t a = 0; a < stage.size(); ++a)
                stage[a] = relabel[original[order[a]]];
        }
        Instance permuted(instance.variant(), 4, 5, ballots, instance.k(), instance.ell(), instance.x());
        EXPECT_EQ(brute_force(instance).answer, brute_force(permuted).answer) << "seed " << seed;
    }
}
