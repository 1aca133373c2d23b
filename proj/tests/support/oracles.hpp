#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the solver code beyond reading instance data.

#include <cstdint>
#include <random>
#include <vector>

#include "mpv/kernel.hpp"
#include "mpv/model.hpp"
#include "mpv/reductions.hpp"

namespace mpv::testing {

// Full boolean table over (candidate prefix, k1, k2, d, s1, s2) for two
// stages, with exact (unsaturated) tallies.
bool dense_table_two_stages(const Instance& instance);

// Conservative ell = 0 instances need one committee serving every stage;
// scores are monotone, so only committees of size min(k, m) are tried.
bool stationary_committee_exists(const Instance& instance);

bool has_vertex_cover(const Graph& graph, std::size_t r);

bool has_multicolored_clique(const PartitionedGraph& graph);

// sign(w.b) == sign(v.b) for every integer b with |b|_1 <= N - 1.
bool signs_agree(const std::vector<BigInt>& w, const std::vector<BigInt>& v, std::uint64_t N);

// Parameters of the small-instance sweep: n <= 4, m <= 5, tau <= 4, k <= 3.
struct SweepShape {
    std::size_t agents, candidates, stages, k;
    double abstain;
    std::uint64_t seed;
};
SweepShape sweep_shape(std::uint64_t seed);
Instance sweep_instance(const SweepShape& shape, Variant variant, std::size_t ell, std::size_t x);

Graph random_graph(std::size_t vertices, double density, std::mt19937_64& rng);

}  // namespace mpv::testing
