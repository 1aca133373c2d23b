#include <algorithm>
#include <chrono>

#include "mpv/core.hpp"
#include "mpv/solvers.hpp"

namespace mpv {

namespace {

class LayerBuilder {
public:
    LayerBuilder(const Instance& instance, std::size_t stage, const std::vector<CandidateId>& pool,
                 std::uint64_t budget, std::uint64_t& visited)
        : instance_(instance)
        , counts_(instance.counts(stage))
        , pool_(pool)
        , budget_(budget)
        , visited_(visited)
    {
        // best_suffix_[i] = largest count among pool_[i..]
        best_suffix_.assign(pool_.size() + 1, 0);
        for (std::size_t i = pool_.size(); i-- > 0;)
            best_suffix_[i] = std::max<std::size_t>(best_suffix_[i + 1], counts_[pool_[i]]);
    }

    std::vector<Committee> build()
    {
        std::vector<CandidateId> current;
        walk(0, current, 0);
        return std::move(nodes_);
    }

private:
    void walk(std::size_t next, std::vector<CandidateId>& current, std::size_t total)
    {
        if (++visited_ > budget_)
            throw BudgetExceeded("layered graph exceeded its budget of " + std::to_string(budget_)
                                     + " states",
                                 budget_);
        if (total >= instance_.x())
            nodes_.emplace_back(current);
        if (current.size() == instance_.k())
            return;
        for (std::size_t i = next; i < pool_.size(); ++i) {
            std::size_t room = instance_.k() - current.size();
            if (total + room * best_suffix_[i] < instance_.x())
                break;
            current.push_back(pool_[i]);
            walk(i + 1, current, total + counts_[pool_[i]]);
            current.pop_back();
        }
    }

    const Instance& instance_;
    std::span<const std::uint32_t> counts_;
    const std::vector<CandidateId>& pool_;
    std::uint64_t budget_;
    std::uint64_t& visited_;
    std::vector<std::size_t> best_suffix_;
    std::vector<Committee> nodes_;
};

}  // namespace

std::vector<CandidateId> layered_pool(const Instance& instance)
{
    std::vector<CandidateId> pool;
    for (CandidateId c = 1; c <= instance.candidates(); ++c)
        if (instance.variant() == Variant::revolutionary || instance.ever_approved(c))
            pool.push_back(c);
    return pool;
}

LayeredGraph build_layered_graph(const Instance& instance, std::uint64_t budget)
{
    LayeredGraph graph;
    auto pool = layered_pool(instance);
    const auto tau = instance.stages();
    graph.layers.reserve(tau);
    for (std::size_t t = 0; t < tau; ++t)
        graph.layers.push_back(
            LayerBuilder(instance, t, pool, budget, graph.subsets_visited).build());

    graph.predecessor.resize(tau);
    graph.predecessor[0].assign(graph.layers[0].size(), 0);
    std::vector<std::size_t> reachable;
    for (std::size_t i = 0; i < graph.layers[0].size(); ++i)
        reachable.push_back(i);

    for (std::size_t t = 1; t < tau; ++t) {
        const auto& prev = graph.layers[t - 1];
        const auto& layer = graph.layers[t];
        auto& pred = graph.predecessor[t];
        pred.assign(layer.size(), -1);
        std::vector<std::size_t> next_reachable;
        for (std::size_t j = 0; j < layer.size(); ++j) {
            for (auto i : reachable) {
                ++graph.arcs_checked;
                if (transition_ok(instance.variant(), instance.ell(),
                                  symdiff_size(prev[i], layer[j]))) {
                    pred[j] = static_cast<std::int64_t>(i);
                    next_reachable.push_back(j);
                    break;
                }
            }
        }
        reachable = std::move(next_reachable);
    }
    return graph;
}

SolveReport solve_layered_k(const Instance& instance, std::uint64_t budget)
{
    auto start = std::chrono::steady_clock::now();
    auto graph = build_layered_graph(instance, budget);

    SolveReport report;
    report.algorithm = "layered-k";
    const auto tau = instance.stages();
    const auto& last = graph.predecessor[tau - 1];
    auto end = std::find_if(last.begin(), last.end(), [](std::int64_t p) { return p >= 0; });
    if (end != last.end()) {
        report.answer = true;
        CommitteeSequence seq(tau);
        auto node = static_cast<std::size_t>(end - last.begin());
        for (std::size_t t = tau; t-- > 0;) {
            seq[t] = graph.layers[t][node];
            node = static_cast<std::size_t>(graph.predecessor[t][node]);
        }
        report.witness = std::move(seq);
    }
    for (const auto& layer : graph.layers)
        report.stats.states += layer.size();
    report.stats.arcs = graph.arcs_checked;
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace mpv
