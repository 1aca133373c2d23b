#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpv/lattice.hpp"
#include "mpv/model.hpp"

namespace mpv {

// Candidates carry arbitrary-precision weights instead of unit agents.
// weights[t][c - 1] is the weight of candidate c at stage t.
struct WeightedInstance {
    Variant variant = Variant::conservative;
    std::size_t k = 1;
    std::size_t ell = 0;
    BigInt x = 1;
    std::vector<std::vector<BigInt>> weights;

    std::size_t stages() const { return weights.size(); }
    std::size_t candidates() const { return weights.empty() ? 0 : weights.front().size(); }

    // Throws DomainError unless tau >= 1, k >= 1, x >= 1, rows have equal
    // length and all weights are nonnegative.
    void validate() const;

    friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;
};

BigInt weighted_score(const WeightedInstance& instance, std::size_t stage, const Committee& committee);

WeightedInstance to_weighted(const Instance& instance);

// Unit-agent form of a weighted instance, provided every stage's total
// weight is at most `cap`. Agents beyond a stage's total weight abstain.
std::optional<Instance> from_weighted(const WeightedInstance& instance, const BigInt& cap);

// Exhaustive search in the weighted setting; same order and budget
// accounting as brute_force.
SolveReport solve_weighted(const WeightedInstance& instance,
                           std::uint64_t budget = 100'000'000);

// A vector preserving sign(w.b) for every integer b with |b|_1 <= N - 1,
// built by repeated simultaneous Diophantine approximation.
std::vector<BigInt> shrink_weights(std::span<const BigInt> w, std::uint64_t N);

// 2^(4d^3) * N^(d(d+2)), the max-norm guarantee of shrink_weights.
BigInt shrink_norm_bound(std::size_t d, std::uint64_t N);

// Shrinks all weights together with x, using N = k + 2.
WeightedInstance kernel_mtau(const WeightedInstance& instance);
WeightedInstance kernel_mtau(const Instance& instance);

// An instance on a subset of candidates. original_ids[c - 1] is the input id
// of output candidate c.
struct ReducedInstance {
    Instance instance;
    std::vector<CandidateId> original_ids;
};

ReducedInstance kernel_ntau_cmpv(const Instance& instance);

struct RmpvKernel {
    bool trivial_no = false;
    std::optional<ReducedInstance> reduced;
    bool rescaled = false;
    // nτ < m < kτ after deleting never-approved candidates; no rescaling applies.
    bool gap = false;
    std::size_t fillers_per_stage = 0;
    // Input ids of the never-approved candidates dropped by rescaling.
    std::vector<CandidateId> spare;
};

RmpvKernel kernel_ntau_rmpv(const Instance& instance);

// Maps a witness of the reduced instance back to input ids.
CommitteeSequence lift_witness(const ReducedInstance& reduced, const CommitteeSequence& seq);
// Also re-adds fillers_per_stage spare candidates per stage, disjoint
// across stages, when the kernel rescaled k.
CommitteeSequence lift_witness(const RmpvKernel& kernel, const CommitteeSequence& seq);

}  // namespace mpv
