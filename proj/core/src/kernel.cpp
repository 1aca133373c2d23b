#include "mpv/kernel.hpp"

#include <algorithm>
#include <chrono>

#include "mpv/core.hpp"

namespace mpv {

void WeightedInstance::validate() const
{
    if (weights.empty())
        throw DomainError("weighted instance needs at least one stage");
    if (k < 1)
        throw DomainError("k must be at least 1");
    if (x < 1)
        throw DomainError("x must be at least 1");
    for (const auto& row : weights) {
        if (row.size() != weights.front().size())
            throw DomainError("weight rows differ in length");
        for (const auto& w : row)
            if (w < 0)
                throw DomainError("weights must be nonnegative");
    }
}

BigInt weighted_score(const WeightedInstance& instance, std::size_t stage, const Committee& committee)
{
    if (stage >= instance.stages())
        throw DomainError("stage out of range");
    BigInt total = 0;
    for (auto c : committee) {
        if (c == abstain || c > instance.candidates())
            throw DomainError("candidate id " + std::to_string(c) + " out of range");
        total += instance.weights[stage][c - 1];
    }
    return total;
}

WeightedInstance to_weighted(const Instance& instance)
{
    WeightedInstance out;
    out.variant = instance.variant();
    out.k = instance.k();
    out.ell = instance.ell();
    out.x = instance.x();
    out.weights.resize(instance.stages());
    for (std::size_t t = 0; t < instance.stages(); ++t) {
        auto counts = instance.counts(t);
        out.weights[t].assign(counts.begin() + 1, counts.end());
    }
    return out;
}

std::optional<Instance> from_weighted(const WeightedInstance& instance, const BigInt& cap)
{
    instance.validate();
    BigInt agents = 0;
    for (const auto& row : instance.weights) {
        BigInt total = 0;
        for (const auto& w : row)
            total += w;
        if (total > cap)
            return std::nullopt;
        agents = std::max(agents, total);
    }
    const auto n = agents.convert_to<std::size_t>();
    std::vector<std::vector<CandidateId>> ballots(instance.stages());
    for (std::size_t t = 0; t < instance.stages(); ++t) {
        auto& stage = ballots[t];
        stage.reserve(n);
        for (std::size_t c = 0; c < instance.candidates(); ++c)
            stage.insert(stage.end(), instance.weights[t][c].convert_to<std::size_t>(),
                         static_cast<CandidateId>(c + 1));
        stage.resize(n, abstain);
    }
    // Any x above n is equally unreachable.
    const std::size_t x = instance.x > agents ? n + 1 : instance.x.convert_to<std::size_t>();
    return Instance(instance.variant, n, instance.candidates(), std::move(ballots), instance.k,
                    instance.ell, x);
}

namespace {

class WeightedSearch {
public:
    WeightedSearch(const WeightedInstance& instance, std::uint64_t budget)
        : instance_(instance), budget_(budget)
    {
    }

    std::optional<CommitteeSequence> run()
    {
        options_.resize(instance_.stages());
        for (std::size_t t = 0; t < instance_.stages(); ++t) {
            std::vector<CandidateId> current;
            collect(t, 1, current);
        }
        sequence_.resize(instance_.stages());
        if (descend(0))
            return sequence_;
        return std::nullopt;
    }

    std::uint64_t steps() const { return steps_; }

private:
    void charge()
    {
        if (++steps_ > budget_)
            throw BudgetExceeded("weighted search exceeded its budget of "
                                     + std::to_string(budget_) + " steps",
                                 budget_);
    }

    void collect(std::size_t t, CandidateId next, std::vector<CandidateId>& current)
    {
        charge();
        Committee c(current);
        if (weighted_score(instance_, t, c) >= instance_.x)
            options_[t].push_back(std::move(c));
        if (current.size() == instance_.k)
            return;
        for (CandidateId id = next; id <= instance_.candidates(); ++id) {
            current.push_back(id);
            collect(t, id + 1, current);
            current.pop_back();
        }
    }

    bool descend(std::size_t t)
    {
        if (t == instance_.stages())
            return true;
        for (const auto& option : options_[t]) {
            charge();
            if (t > 0
                && !transition_ok(instance_.variant, instance_.ell,
                                  symdiff_size(sequence_[t - 1], option)))
                continue;
            sequence_[t] = option;
            if (descend(t + 1))
                return true;
        }
        return false;
    }

    const WeightedInstance& instance_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<std::vector<Committee>> options_;
    CommitteeSequence sequence_;
};

}  // namespace

SolveReport solve_weighted(const WeightedInstance& instance, std::uint64_t budget)
{
    instance.validate();
    auto start = std::chrono::steady_clock::now();
    WeightedSearch search(instance, budget);
    SolveReport report;
    report.algorithm = "weighted-brute";
    report.witness = search.run();
    report.answer = report.witness.has_value();
    report.stats.states = search.steps();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<BigInt> shrink_weights(std::span<const BigInt> w, std::uint64_t N)
{
    if (N < 2)
        throw DomainError("shrink_weights needs N >= 2");
    const std::size_t d = w.size();
    const Rational epsilon(1, N);

    // Each round writes the residual as q * alpha - p with |q alpha - p|_inf
    // <= 1/N; the coordinate attaining the max norm cancels exactly, so the
    // support shrinks and at most d rounds run.
    std::vector<Rational> residual(w.begin(), w.end());
    std::vector<std::vector<BigInt>> rounds;
    for (;;) {
        std::vector<std::size_t> support;
        Rational norm = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (residual[j].is_zero())
                continue;
            support.push_back(j);
            norm = std::max(norm, Rational(abs(residual[j])));
        }
        if (support.empty())
            break;
        if (rounds.size() >= d)
            throw std::logic_error("shrink_weights: support failed to shrink");

        std::vector<Rational> alpha;
        alpha.reserve(support.size());
        for (auto j : support)
            alpha.push_back(residual[j] / norm);
        auto approx = lattice::simultaneous_approximation(alpha, epsilon);

        std::vector<BigInt> p(d, 0);
        std::vector<Rational> next(d, 0);
        for (std::size_t s = 0; s < support.size(); ++s) {
            p[support[s]] = approx.numerators[s];
            next[support[s]] = Rational(approx.denominator) * alpha[s] - approx.numerators[s];
        }
        rounds.push_back(std::move(p));
        residual = std::move(next);
    }

    std::vector<BigInt> out(d, 0);
    if (rounds.empty())
        return out;

    BigInt largest = 0;
    for (const auto& p : rounds)
        for (const auto& v : p)
            largest = std::max(largest, BigInt(abs(v)));
    const BigInt base = BigInt(N - 1) * largest + 1;
    for (const auto& p : rounds)
        for (std::size_t j = 0; j < d; ++j)
            out[j] = out[j] * base + p[j];
    return out;
}

BigInt shrink_norm_bound(std::size_t d, std::uint64_t N)
{
    BigInt bound = BigInt(1) << static_cast<unsigned>(4 * d * d * d);
    bound *= boost::multiprecision::pow(BigInt(N), static_cast<unsigned>(d * (d + 2)));
    return bound;
}

WeightedInstance kernel_mtau(const WeightedInstance& instance)
{
    instance.validate();
    const std::size_t m = instance.candidates();
    std::vector<BigInt> flat;
    flat.reserve(m * instance.stages() + 1);
    for (const auto& row : instance.weights)
        flat.insert(flat.end(), row.begin(), row.end());
    flat.push_back(instance.x);

    auto shrunk = shrink_weights(flat, instance.k + 2);

    WeightedInstance out = instance;
    for (std::size_t t = 0; t < instance.stages(); ++t)
        std::copy_n(shrunk.begin() + static_cast<std::ptrdiff_t>(t * m), m, out.weights[t].begin());
    out.x = shrunk.back();
    return out;
}

WeightedInstance kernel_mtau(const Instance& instance)
{
    return kernel_mtau(to_weighted(instance));
}

namespace {

// Keeps the listed candidates, renumbered 1.. in list order.
ReducedInstance restrict_candidates(const Instance& instance, std::vector<CandidateId> kept,
                                    std::size_t k, std::size_t ell)
{
    std::vector<CandidateId> renumber(instance.candidates() + 1, abstain);
    for (std::size_t i = 0; i < kept.size(); ++i)
        renumber[kept[i]] = static_cast<CandidateId>(i + 1);
    auto ballots = instance.all_ballots();
    for (auto& stage : ballots)
        for (auto& ballot : stage) {
            if (ballot != abstain && renumber[ballot] == abstain)
                throw std::logic_error("restrict_candidates: dropped an approved candidate");
            ballot = renumber[ballot];
        }
    Instance reduced(instance.variant(), instance.agents(), kept.size(), std::move(ballots), k, ell,
                     instance.x());
    return {std::move(reduced), std::move(kept)};
}

// Candidate ids minus the `drop` highest-numbered never-approved ones.
std::vector<CandidateId> drop_never_approved(const Instance& instance, std::size_t drop)
{
    std::vector<bool> removed(instance.candidates() + 1, false);
    for (auto c = static_cast<CandidateId>(instance.candidates()); c >= 1 && drop > 0; --c)
        if (!instance.ever_approved(c)) {
            removed[c] = true;
            --drop;
        }
    std::vector<CandidateId> kept;
    for (CandidateId c = 1; c <= instance.candidates(); ++c)
        if (!removed[c])
            kept.push_back(c);
    return kept;
}

std::size_t excess(std::size_t m, std::size_t bound)
{
    return m > bound ? m - bound : 0;
}

}  // namespace

ReducedInstance kernel_ntau_cmpv(const Instance& instance)
{
    if (instance.variant() != Variant::conservative)
        throw PreconditionError("kernel_ntau_cmpv expects a conservative instance");
    auto bound = instance.agents() * instance.stages();
    auto kept = drop_never_approved(instance, excess(instance.candidates(), bound));
    return restrict_candidates(instance, std::move(kept), instance.k(), instance.ell());
}

RmpvKernel kernel_ntau_rmpv(const Instance& instance)
{
    if (instance.variant() != Variant::revolutionary)
        throw PreconditionError("kernel_ntau_rmpv expects a revolutionary instance");
    const std::size_t n = instance.agents();
    const std::size_t k = instance.k();
    const std::size_t tau = instance.stages();

    RmpvKernel out;
    // Two committees of size at most k differ in at most 2k candidates; with no
    // agents nothing reaches x >= 1.
    if ((tau >= 2 && 2 * k < instance.ell()) || n == 0) {
        out.trivial_no = true;
        return out;
    }

    auto kept = drop_never_approved(instance, excess(instance.candidates(), std::max(n, k) * tau));
    const std::size_t m = kept.size();

    if (k > n && m == k * tau) {
        std::vector<CandidateId> approved, fillers;
        for (auto c : kept)
            (instance.ever_approved(c) ? approved : fillers).push_back(c);
        const std::size_t keep_fillers = n * tau - approved.size();
        std::vector<CandidateId> order = approved;
        order.insert(order.end(), fillers.begin(),
                     fillers.begin() + static_cast<std::ptrdiff_t>(keep_fillers));
        out.spare.assign(fillers.begin() + static_cast<std::ptrdiff_t>(keep_fillers), fillers.end());
        const std::size_t shift = 2 * (k - n);
        const std::size_t ell = instance.ell() > shift ? instance.ell() - shift : 0;
        out.reduced = restrict_candidates(instance, std::move(order), n, ell);
        out.rescaled = true;
        out.fillers_per_stage = k - n;
        return out;
    }

    out.gap = k > n && n * tau < m && m < k * tau;
    out.reduced = restrict_candidates(instance, std::move(kept), k, instance.ell());
    return out;
}

CommitteeSequence lift_witness(const ReducedInstance& reduced, const CommitteeSequence& seq)
{
    CommitteeSequence out;
    out.reserve(seq.size());
    for (const auto& committee : seq) {
        std::vector<CandidateId> ids;
        for (auto c : committee) {
            if (c == abstain || c > reduced.original_ids.size())
                throw DomainError("candidate id " + std::to_string(c) + " out of range");
            ids.push_back(reduced.original_ids[c - 1]);
        }
        out.emplace_back(std::move(ids));
    }
    return out;
}

CommitteeSequence lift_witness(const RmpvKernel& kernel, const CommitteeSequence& seq)
{
    if (!kernel.reduced)
        throw PreconditionError("a trivial-no kernel has no witnesses");
    auto out = lift_witness(*kernel.reduced, seq);
    if (!kernel.rescaled)
        return out;
    const std::size_t per = kernel.fillers_per_stage;
    if (kernel.spare.size() < per * out.size())
        throw std::logic_error("lift_witness: not enough spare candidates");
    for (std::size_t t = 0; t < out.size(); ++t)
        for (std::size_t j = 0; j < per; ++j)
            out[t].insert(kernel.spare[t * per + j]);
    return out;
}

}  // namespace mpv
