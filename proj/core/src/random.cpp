#include <random>

#include "mpv/reductions.hpp"

namespace mpv {

namespace {

// Lemire's nearly divisionless bounded draw in [0, range).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range)
{
    unsigned __int128 product = static_cast<unsigned __int128>(rng()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(rng()) * range;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance random_instance(std::size_t agents, std::size_t candidates, std::size_t stages,
                         std::size_t k, std::size_t ell, std::size_t x, Variant variant,
                         double abstain_probability, std::uint64_t seed)
{
    if (!(abstain_probability >= 0.0 && abstain_probability <= 1.0))
        throw DomainError("abstain probability must lie in [0, 1]");
    if (candidates == 0 && agents > 0 && abstain_probability < 1.0)
        throw DomainError("agents need at least one candidate to approve");
    if (stages == 0)
        throw DomainError("an instance needs at least one stage");

    std::mt19937_64 rng(seed);
    std::vector<std::vector<CandidateId>> ballots(stages, std::vector<CandidateId>(agents));
    for (auto& stage : ballots)
        for (auto& ballot : stage)
            ballot = unit(rng) < abstain_probability
                         ? abstain
                         : static_cast<CandidateId>(1 + bounded(rng, candidates));
    return Instance(variant, agents, candidates, std::move(ballots), k, ell, x);
}

}  // namespace mpv
