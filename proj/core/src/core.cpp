#include "mpv/core.hpp"

#include <algorithm>

namespace mpv {

std::size_t score(const Instance& instance, std::size_t stage, const Committee& committee)
{
    auto counts = instance.counts(stage);
    std::size_t total = 0;
    for (auto c : committee) {
        if (c == abstain || c > instance.candidates())
            throw DomainError("candidate id " + std::to_string(c) + " out of range");
        total += counts[c];
    }
    return total;
}

std::size_t symdiff_size(const Committee& a, const Committee& b)
{
    std::size_t common = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) {
            ++common;
            ++i;
            ++j;
        } else if (*i < *j) {
            ++i;
        } else {
            ++j;
        }
    }
    return a.size() + b.size() - 2 * common;
}

bool transition_ok(Variant variant, std::size_t ell, std::size_t symdiff)
{
    return variant == Variant::conservative ? symdiff <= ell : symdiff >= ell;
}

std::string Violation::describe() const
{
    switch (kind) {
    case Kind::size:
        return "stage " + std::to_string(stage + 1) + ": committee size " + std::to_string(value)
            + " exceeds k";
    case Kind::score:
        return "stage " + std::to_string(stage + 1) + ": score " + std::to_string(value)
            + " below x";
    case Kind::symdiff:
        return "stages " + std::to_string(stage + 1) + "-" + std::to_string(stage + 2)
            + ": symmetric difference " + std::to_string(value) + " violates ell";
    }
    return {};
}

Verdict verify(const Instance& instance, const CommitteeSequence& seq)
{
    if (seq.size() != instance.stages())
        throw DomainError("sequence has " + std::to_string(seq.size()) + " committees, expected "
                          + std::to_string(instance.stages()));
    Verdict verdict;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        if (seq[t].size() > instance.k())
            verdict.violations.push_back({Violation::Kind::size, t, seq[t].size()});
        auto s = score(instance, t, seq[t]);
        if (s < instance.x())
            verdict.violations.push_back({Violation::Kind::score, t, s});
        if (t + 1 < seq.size()) {
            auto d = symdiff_size(seq[t], seq[t + 1]);
            if (!transition_ok(instance.variant(), instance.ell(), d))
                verdict.violations.push_back({Violation::Kind::symdiff, t, d});
        }
    }
    return verdict;
}

std::optional<Committee> feasible_committee(const Instance& instance, std::size_t stage,
                                            const Committee& required, const Committee& forbidden)
{
    if (!disjoint(required, forbidden))
        throw PreconditionError("required and forbidden sets overlap");
    if (required.size() > instance.k())
        return std::nullopt;

    auto counts = instance.counts(stage);
    std::vector<CandidateId> members(required.begin(), required.end());
    std::size_t total = 0;
    for (auto c : required) {
        if (c == abstain || c > instance.candidates())
            throw DomainError("candidate id " + std::to_string(c) + " out of range");
        total += counts[c];
    }
    for (auto c : instance.ranking(stage)) {
        if (members.size() >= instance.k())
            break;
        if (required.contains(c) || forbidden.contains(c))
            continue;
        members.push_back(c);
        total += counts[c];
    }
    if (total < instance.x())
        return std::nullopt;
    return Committee(std::move(members));
}

Committee top_committee(const Instance& instance, std::size_t stage)
{
    auto order = instance.ranking(stage);
    auto take = std::min(instance.k(), order.size());
    return Committee(std::vector<CandidateId>(order.begin(), order.begin() + take));
}

}  // namespace mpv
