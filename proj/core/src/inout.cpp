#include <chrono>

#include "mpv/core.hpp"
#include "mpv/solvers.hpp"

namespace mpv {

namespace {

void unions_of_size(std::size_t candidates, std::size_t size, CandidateId next,
                    std::vector<CandidateId>& current, std::vector<InOutNode>& out,
                    std::uint64_t budget)
{
    if (current.size() == size) {
        const std::size_t splits = std::size_t{1} << size;
        for (std::size_t mask = 0; mask < splits; ++mask) {
            if (out.size() >= budget)
                throw BudgetExceeded("in-out graph exceeded its budget of "
                                         + std::to_string(budget) + " nodes",
                                     budget);
            std::vector<CandidateId> leaving, entering;
            for (std::size_t b = 0; b < size; ++b)
                ((mask >> b) & 1 ? leaving : entering).push_back(current[b]);
            out.push_back({Committee(std::move(leaving)), Committee(std::move(entering))});
        }
        return;
    }
    for (CandidateId c = next; c <= candidates; ++c) {
        if (candidates - c + 1 < size - current.size())
            break;
        current.push_back(c);
        unions_of_size(candidates, size, c + 1, current, out, budget);
        current.pop_back();
    }
}

void check_inout_preconditions(const Instance& instance)
{
    if (instance.variant() != Variant::revolutionary)
        throw PreconditionError("the in-out graph algorithm applies to the revolutionary variant only");
}

}  // namespace

std::vector<InOutNode> inout_nodes(std::size_t candidates, std::size_t ell, std::uint64_t budget)
{
    std::vector<InOutNode> nodes;
    if (ell > candidates)
        return nodes;
    if (ell >= 63)
        throw BudgetExceeded("in-out graph with ell >= 63 is out of reach", budget);
    std::vector<CandidateId> current;
    unions_of_size(candidates, ell, 1, current, nodes, budget);
    return nodes;
}

InOutGraph build_inout_graph(const Instance& instance, std::uint64_t budget)
{
    check_inout_preconditions(instance);
    if (instance.ell() == 0 || instance.stages() < 2)
        throw PreconditionError("in-out graph needs ell >= 1 and at least two stages");

    InOutGraph graph;
    graph.nodes = inout_nodes(instance.candidates(), instance.ell(), budget);
    const auto& nodes = graph.nodes;
    const auto gaps = instance.stages() - 1;
    if (nodes.size() * gaps > budget)
        throw BudgetExceeded("in-out graph exceeded its budget of " + std::to_string(budget)
                                 + " nodes",
                             budget);

    graph.predecessor.assign(gaps, std::vector<std::int64_t>(nodes.size(), -1));
    std::vector<std::size_t> reachable;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        ++graph.arcs_checked;
        if (feasible_committee(instance, 0, nodes[v].leaving, nodes[v].entering)) {
            graph.predecessor[0][v] = 0;
            reachable.push_back(v);
        }
    }

    for (std::size_t i = 1; i < gaps; ++i) {
        std::vector<std::size_t> next_reachable;
        for (std::size_t w = 0; w < nodes.size(); ++w) {
            const auto& to = nodes[w];
            for (auto v : reachable) {
                const auto& from = nodes[v];
                ++graph.arcs_checked;
                if (!disjoint(from.leaving, to.leaving) || !disjoint(from.entering, to.entering))
                    continue;
                auto required = set_union(from.entering, to.leaving);
                auto forbidden = set_union(from.leaving, to.entering);
                if (feasible_committee(instance, i, required, forbidden)) {
                    graph.predecessor[i][w] = static_cast<std::int64_t>(v);
                    next_reachable.push_back(w);
                    break;
                }
            }
        }
        reachable = std::move(next_reachable);
    }

    graph.reaches_sink.assign(nodes.size(), false);
    for (auto v : reachable) {
        ++graph.arcs_checked;
        if (feasible_committee(instance, gaps, nodes[v].entering, nodes[v].leaving)) {
            graph.reaches_sink[v] = true;
            if (!graph.sink_predecessor)
                graph.sink_predecessor = v;
        }
    }
    return graph;
}

SolveReport solve_inout_ell(const Instance& instance, std::uint64_t budget)
{
    check_inout_preconditions(instance);
    if (instance.stages() == 1 || instance.ell() == 0) {
        auto report = solve_unconstrained(instance);
        report.algorithm = "inout-ell";
        return report;
    }

    auto start = std::chrono::steady_clock::now();
    auto graph = build_inout_graph(instance, budget);

    SolveReport report;
    report.algorithm = "inout-ell";
    report.stats.states = graph.nodes.size() * (instance.stages() - 1);
    report.stats.arcs = graph.arcs_checked;
    if (graph.sink_predecessor) {
        report.answer = true;
        const auto gaps = instance.stages() - 1;
        std::vector<std::size_t> path(gaps);
        path[gaps - 1] = *graph.sink_predecessor;
        for (std::size_t i = gaps - 1; i > 0; --i)
            path[i - 1] = static_cast<std::size_t>(graph.predecessor[i][path[i]]);

        CommitteeSequence seq(instance.stages());
        const auto& nodes = graph.nodes;
        for (std::size_t t = 0; t < instance.stages(); ++t) {
            Committee required, forbidden;
            if (t > 0) {
                required = set_union(required, nodes[path[t - 1]].entering);
                forbidden = set_union(forbidden, nodes[path[t - 1]].leaving);
            }
            if (t < gaps) {
                required = set_union(required, nodes[path[t]].leaving);
                forbidden = set_union(forbidden, nodes[path[t]].entering);
            }
            auto committee = feasible_committee(instance, t, required, forbidden);
            if (!committee)
                throw std::logic_error("in-out path does not instantiate at stage "
                                       + std::to_string(t + 1));
            seq[t] = std::move(*committee);
        }
        report.witness = std::move(seq);
    }
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace mpv
