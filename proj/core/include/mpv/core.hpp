#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpv/model.hpp"

namespace mpv {

// Number of agents approving a member of the committee at the stage.
std::size_t score(const Instance& instance, std::size_t stage, const Committee& committee);

std::size_t symdiff_size(const Committee& a, const Committee& b);

// Whether |a △ b| satisfies the variant's bound.
bool transition_ok(Variant variant, std::size_t ell, std::size_t symdiff);

struct Violation {
    enum class Kind { size, score, symdiff };
    Kind kind;
    std::size_t stage;  // 0-based; for symdiff the earlier stage of the pair
    std::size_t value;  // offending size, score, or symmetric difference
    std::string describe() const;
};

struct Verdict {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

Verdict verify(const Instance& instance, const CommitteeSequence& seq);

// Greedy completion: start from `required`, add allowed candidates in
// ranking order until the committee has k members. Absent when the result
// misses x or `required` alone is larger than k.
std::optional<Committee> feasible_committee(const Instance& instance, std::size_t stage,
                                            const Committee& required, const Committee& forbidden);

// The k highest-ranked candidates at the stage (fewer if m < k).
Committee top_committee(const Instance& instance, std::size_t stage);

}  // namespace mpv
