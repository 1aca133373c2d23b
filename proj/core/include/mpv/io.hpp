#pragma once

#include <span>
#include <string>
#include <string_view>

#include "mpv/kernel.hpp"
#include "mpv/model.hpp"
#include "mpv/reductions.hpp"

namespace mpv {

// Malformed input; `line` is 1-based (0 when no single line is to blame).
struct ParseError : DomainError {
    ParseError(std::size_t line, const std::string& message);
    std::size_t line;
};

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   mpv 1
//   variant C|R
//   agents <n>             (unit instances only)
//   candidates <m>
//   stages <tau>
//   k <k>
//   ell <ell>
//   x <x>
//   profile <t>: e_1 .. e_n      (0 = abstain)   or
//   weights <t>: w_1 .. w_m      (weighted instances)
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

WeightedInstance parse_weighted(std::string_view text);
std::string emit_weighted(const WeightedInstance& instance);

// True when the text carries weight lines instead of ballots.
bool is_weighted_text(std::string_view text);

// "stage <t>: id id ..." per stage, t = 1..tau.
CommitteeSequence parse_solution(std::string_view text, std::size_t stages, std::size_t candidates);
CommitteeSequence parse_solution(std::string_view text, const Instance& instance);
std::string emit_solution(const CommitteeSequence& seq);

// "graph <vertices> <edges>" then one "u v" line per edge; a partitioned
// graph follows with "parts <p>" and p lines of vertex ids.
Graph parse_graph(std::string_view text);
PartitionedGraph parse_partitioned_graph(std::string_view text);
std::string emit_graph(const Graph& graph);
std::string emit_partitioned_graph(const PartitionedGraph& graph);

// Sidecar written next to a kernelized instance: "map <new> <original>" per
// kept candidate, plus the rescaling fillers when present.
std::string emit_id_map(std::span<const CandidateId> original_ids, std::size_t fillers_per_stage = 0,
                        std::span<const CandidateId> spare = {});

}  // namespace mpv
