#pragma once

#include <cstdint>
#include <vector>

#include "mpv/model.hpp"

namespace mpv {

inline constexpr std::uint64_t default_oracle_budget = 100'000'000;

// Exhaustive depth-first search over committee sequences. Committees are
// tried in lexicographic order of their sorted id lists, so the witness is
// the lexicographically first solution. The budget counts partial sequences
// extended (plus committees enumerated per stage).
SolveReport brute_force(const Instance& instance, std::uint64_t budget = default_oracle_budget);

// Up to `limit` distinct solutions in lexicographic order.
std::vector<CommitteeSequence> enumerate_solutions(const Instance& instance, std::size_t limit,
                                                   std::uint64_t budget = default_oracle_budget);

}  // namespace mpv
