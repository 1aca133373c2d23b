#include <algorithm>
#include <chrono>
#include <cstring>

#include "mpv/solvers.hpp"

namespace mpv {

namespace {

// Open-addressing index over fixed-width tuples of uint32 tallies.
class TupleStore {
public:
    explicit TupleStore(std::size_t width)
        : width_(width), table_(1024, empty)
    {
    }

    std::size_t size() const { return size_; }
    const std::uint32_t* at(std::size_t index) const { return data_.data() + index * width_; }

    // Index of the tuple and whether it was newly inserted.
    std::pair<std::uint32_t, bool> insert(const std::uint32_t* tuple)
    {
        if ((size_ + 1) * 2 > table_.size())
            grow();
        auto slot = probe(tuple);
        if (table_[slot] != empty)
            return {table_[slot], false};
        auto index = static_cast<std::uint32_t>(size_++);
        data_.insert(data_.end(), tuple, tuple + width_);
        table_[slot] = index;
        return {index, true};
    }

private:
    static constexpr std::uint32_t empty = 0xffffffffu;

    std::uint64_t hash(const std::uint32_t* tuple) const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= tuple[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return h ^ (h >> 33);
    }

    std::size_t probe(const std::uint32_t* tuple) const
    {
        const std::size_t mask = table_.size() - 1;
        std::size_t slot = hash(tuple) & mask;
        while (table_[slot] != empty
               && std::memcmp(at(table_[slot]), tuple, width_ * sizeof(std::uint32_t)) != 0)
            slot = (slot + 1) & mask;
        return slot;
    }

    void grow()
    {
        table_.assign(table_.size() * 2, empty);
        for (std::size_t i = 0; i < size_; ++i)
            table_[probe(at(i))] = static_cast<std::uint32_t>(i);
    }

    std::size_t width_;
    std::size_t size_ = 0;
    std::vector<std::uint32_t> data_;
    std::vector<std::uint32_t> table_;
};

struct Origin {
    std::uint32_t candidate;  // prefix length at discovery; 0 for the empty state
    std::uint32_t predecessor;
    std::uint32_t fingerprint;
};

}  // namespace

SolveReport solve_dp_tau(const Instance& instance, std::uint64_t budget, DpStats* dp_stats)
{
    auto start = std::chrono::steady_clock::now();
    const std::size_t tau = instance.stages();
    if (tau > 24)
        throw BudgetExceeded("dp over " + std::to_string(tau) + " stages needs 2^tau fingerprints",
                             budget);

    const bool conservative = instance.variant() == Variant::conservative;
    const auto k = static_cast<std::uint32_t>(std::min<std::size_t>(instance.k(), 0xfffffffu));
    const auto ell = static_cast<std::uint32_t>(std::min<std::size_t>(instance.ell(), 0xfffffffu));
    const auto x = static_cast<std::uint32_t>(std::min<std::size_t>(instance.x(), 0xfffffffu));

    // tuple layout: sizes[0..tau), gaps[tau..2tau-1), scores[2tau-1..3tau-1)
    const std::size_t gap_base = tau;
    const std::size_t score_base = 2 * tau - 1;
    const std::size_t width = 3 * tau - 1;

    auto accepting = [&](const std::uint32_t* s) {
        for (std::size_t t = 0; t < tau; ++t)
            if (s[score_base + t] < x)
                return false;
        if (!conservative)
            for (std::size_t g = 0; g + 1 < tau; ++g)
                if (s[gap_base + g] < ell)
                    return false;
        return true;
    };

    TupleStore store(width);
    std::vector<Origin> origin;
    std::vector<std::uint32_t> scratch(width, 0);
    store.insert(scratch.data());
    origin.push_back({0, 0, 0});

    std::optional<std::uint32_t> accepted;
    if (accepting(store.at(0)))
        accepted = 0;

    std::vector<std::uint32_t> column(tau);
    std::uint64_t max_live = 1;
    const std::uint32_t fingerprints = std::uint32_t{1} << tau;

    for (CandidateId c = 1; c <= instance.candidates() && !accepted; ++c) {
        // Never-approved candidates only inflate sizes and gaps under the
        // conservative bound, so some solution avoids them.
        if (conservative && !instance.ever_approved(c))
            continue;
        for (std::size_t t = 0; t < tau; ++t)
            column[t] = instance.count(t, c);

        const std::size_t live = store.size();
        for (std::size_t index = 0; index < live && !accepted; ++index) {
            for (std::uint32_t f = 1; f < fingerprints; ++f) {
                const std::uint32_t* from = store.at(index);
                bool ok = true;
                for (std::size_t t = 0; t < tau && ok; ++t) {
                    bool in = (f >> t) & 1;
                    scratch[t] = from[t] + in;
                    ok = scratch[t] <= k;
                    scratch[score_base + t] =
                        in ? std::min(x, from[score_base + t] + column[t]) : from[score_base + t];
                }
                for (std::size_t g = 0; g + 1 < tau && ok; ++g) {
                    bool changes = ((f >> g) & 1) != ((f >> (g + 1)) & 1);
                    std::uint32_t d = from[gap_base + g] + changes;
                    if (conservative)
                        ok = d <= ell;
                    else
                        d = std::min(d, ell);
                    scratch[gap_base + g] = d;
                }
                if (!ok)
                    continue;
                auto [id, inserted] = store.insert(scratch.data());
                if (!inserted)
                    continue;
                origin.push_back({c, static_cast<std::uint32_t>(index), f});
                if (accepting(store.at(id))) {
                    accepted = id;
                    break;
                }
            }
        }
        max_live = std::max<std::uint64_t>(max_live, store.size());
        if (store.size() > budget)
            throw BudgetExceeded("dp exceeded its budget of " + std::to_string(budget) + " states",
                                 budget);
    }

    SolveReport report;
    report.algorithm = "dp-tau";
    report.answer = accepted.has_value();
    if (accepted) {
        CommitteeSequence seq(tau);
        std::uint32_t cur = *accepted;
        while (origin[cur].candidate != 0) {
            const auto& o = origin[cur];
            for (std::size_t t = 0; t < tau; ++t)
                if ((o.fingerprint >> t) & 1)
                    seq[t].insert(o.candidate);
            cur = o.predecessor;
        }
        report.witness = std::move(seq);
    }
    report.stats.states = store.size();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (dp_stats) {
        dp_stats->max_live_states = max_live;
        dp_stats->total_states = store.size();
    }
    return report;
}

}  // namespace mpv
