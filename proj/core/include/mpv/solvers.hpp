#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpv/model.hpp"

namespace mpv {

// Whether the inter-stage constraint is vacuous: Conservative with ell >= 2k,
// Revolutionary with ell = 0, or a single stage.
bool unconstrained_regime(const Instance& instance);

// Per-stage greedy top-k. Throws PreconditionError outside the vacuous regime.
SolveReport solve_unconstrained(const Instance& instance);

// Layer t holds every committee of size <= k reaching score x at stage t;
// arcs join consecutive layers whose symmetric difference meets ell.
struct LayeredGraph {
    std::vector<std::vector<Committee>> layers;
    // For each layer node: index of its chosen predecessor in the previous
    // layer, -1 when unreachable from the source (layer 0: 0 when reachable).
    std::vector<std::vector<std::int64_t>> predecessor;
    std::uint64_t arcs_checked = 0;
    std::uint64_t subsets_visited = 0;
};

// Candidates considered when enumerating layer nodes: only ever-approved
// ones for Conservative, all candidates for Revolutionary.
std::vector<CandidateId> layered_pool(const Instance& instance);

LayeredGraph build_layered_graph(const Instance& instance,
                                 std::uint64_t budget = default_solver_budget);

SolveReport solve_layered_k(const Instance& instance, std::uint64_t budget = default_solver_budget);

// In-out node: X leaves and Y enters the committee between two consecutive
// stages; |X ∪ Y| = ell.
struct InOutNode {
    Committee leaving;
    Committee entering;
};

struct InOutGraph {
    // Layer i (0-based) sits between stages i and i+1.
    std::vector<InOutNode> nodes;  // identical node set on every layer
    std::vector<std::vector<std::int64_t>> predecessor;  // -1 unreachable; layer 0: 0 from source
    std::vector<bool> reaches_sink;                     // over the last layer
    std::optional<std::size_t> sink_predecessor;
    std::uint64_t arcs_checked = 0;
};

// All disjoint (X, Y) with |X ∪ Y| = ell over candidates 1..m, ordered by
// the union in lexicographic order, then by the membership mask of X.
std::vector<InOutNode> inout_nodes(std::size_t candidates, std::size_t ell,
                                   std::uint64_t budget = default_solver_budget);

// Requires Revolutionary, ell >= 1 and at least two stages.
InOutGraph build_inout_graph(const Instance& instance,
                             std::uint64_t budget = default_solver_budget);

SolveReport solve_inout_ell(const Instance& instance, std::uint64_t budget = default_solver_budget);

struct DpStats {
    std::uint64_t max_live_states = 0;
    std::uint64_t total_states = 0;
};

// Sparse forward dynamic program over candidate prefixes with per-candidate
// stage fingerprints. Scores saturate at x; Conservative prunes gap tallies
// above ell, Revolutionary saturates them at ell.
SolveReport solve_dp_tau(const Instance& instance, std::uint64_t budget = default_solver_budget,
                         DpStats* dp_stats = nullptr);

struct CostEstimate {
    std::string algorithm;
    double cost;
};

// Estimated work for each applicable algorithm, cheapest first.
std::vector<CostEstimate> estimate_costs(const Instance& instance);

SolveReport solve_auto(const Instance& instance, std::uint64_t budget = default_solver_budget);

// Runs the named algorithm: brute | layered-k | inout-ell | dp-tau | greedy | auto.
SolveReport solve_with(const std::string& algorithm, const Instance& instance,
                       std::uint64_t budget = default_solver_budget);

}  // namespace mpv
