#include "mpv/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace mpv {

char variant_letter(Variant v)
{
    return v == Variant::conservative ? 'C' : 'R';
}

std::string variant_name(Variant v)
{
    return v == Variant::conservative ? "conservative" : "revolutionary";
}

Committee::Committee(std::initializer_list<CandidateId> ids)
    : Committee(std::vector<CandidateId>(ids))
{
}

Committee::Committee(std::vector<CandidateId> ids)
    : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Committee::contains(CandidateId c) const
{
    return std::binary_search(ids_.begin(), ids_.end(), c);
}

void Committee::insert(CandidateId c)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), c);
    if (it == ids_.end() || *it != c)
        ids_.insert(it, c);
}

void Committee::erase(CandidateId c)
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), c);
    if (it != ids_.end() && *it == c)
        ids_.erase(it);
}

Committee set_union(const Committee& a, const Committee& b)
{
    std::vector<CandidateId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Committee(std::move(out));
}

bool disjoint(const Committee& a, const Committee& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

std::string to_string(const Committee& c)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto id : c) {
        if (!first)
            os << ',';
        os << id;
        first = false;
    }
    os << '}';
    return os.str();
}

Instance::Instance(Variant variant, std::size_t agents, std::size_t candidates,
                   std::vector<std::vector<CandidateId>> ballots,
                   std::size_t k, std::size_t ell, std::size_t x)
    : variant_(variant)
    , agents_(agents)
    , candidates_(candidates)
    , ballots_(std::move(ballots))
    , k_(k)
    , ell_(ell)
    , x_(x)
{
    if (ballots_.empty())
        throw DomainError("instance needs at least one stage");
    if (k_ < 1)
        throw DomainError("k must be at least 1");
    if (x_ < 1)
        throw DomainError("x must be at least 1");
    if (candidates_ >= std::numeric_limits<CandidateId>::max())
        throw DomainError("too many candidates");

    counts_.assign(ballots_.size(), std::vector<std::uint32_t>(candidates_ + 1, 0));
    ranking_.resize(ballots_.size());
    for (std::size_t t = 0; t < ballots_.size(); ++t) {
        if (ballots_[t].size() != agents_)
            throw DomainError("stage " + std::to_string(t + 1) + " has "
                              + std::to_string(ballots_[t].size()) + " ballots, expected "
                              + std::to_string(agents_));
        for (auto c : ballots_[t]) {
            if (c > candidates_)
                throw DomainError("stage " + std::to_string(t + 1) + " approves unknown candidate "
                                  + std::to_string(c));
            ++counts_[t][c];
        }
        auto& order = ranking_[t];
        order.resize(candidates_);
        std::iota(order.begin(), order.end(), CandidateId{1});
        const auto& cnt = counts_[t];
        std::stable_sort(order.begin(), order.end(),
                         [&](CandidateId a, CandidateId b) { return cnt[a] > cnt[b]; });
    }
}

std::span<const CandidateId> Instance::ballots(std::size_t stage) const
{
    if (stage >= ballots_.size())
        throw DomainError("stage index out of range");
    return ballots_[stage];
}

std::uint32_t Instance::count(std::size_t stage, CandidateId c) const
{
    if (stage >= counts_.size())
        throw DomainError("stage index out of range");
    if (c > candidates_)
        throw DomainError("candidate id out of range");
    return counts_[stage][c];
}

std::span<const std::uint32_t> Instance::counts(std::size_t stage) const
{
    if (stage >= counts_.size())
        throw DomainError("stage index out of range");
    return counts_[stage];
}

std::span<const CandidateId> Instance::ranking(std::size_t stage) const
{
    if (stage >= ranking_.size())
        throw DomainError("stage index out of range");
    return ranking_[stage];
}

bool Instance::ever_approved(CandidateId c) const
{
    for (const auto& cnt : counts_)
        if (cnt.at(c) > 0)
            return true;
    return false;
}

Instance Instance::with_parameters(std::size_t k, std::size_t ell, std::size_t x) const
{
    return Instance(variant_, agents_, candidates_, ballots_, k, ell, x);
}

Instance Instance::with_variant(Variant v) const
{
    return Instance(v, agents_, candidates_, ballots_, k_, ell_, x_);
}

bool operator==(const Instance& a, const Instance& b)
{
    return a.variant_ == b.variant_ && a.agents_ == b.agents_ && a.candidates_ == b.candidates_
        && a.ballots_ == b.ballots_ && a.k_ == b.k_ && a.ell_ == b.ell_ && a.x_ == b.x_;
}

}  // namespace mpv
