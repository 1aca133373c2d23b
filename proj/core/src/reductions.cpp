#include "mpv/reductions.hpp"

#include <algorithm>
#include <set>

namespace mpv {

void Graph::validate() const
{
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > vertices || v > vertices)
            throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v)
                              + "} has an endpoint outside 1.." + std::to_string(vertices));
        if (u == v)
            throw DomainError("self-loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second)
            throw DomainError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v)
                              + "}");
    }
}

void PartitionedGraph::validate() const
{
    graph.validate();
    if (parts.size() < 2)
        throw DomainError("a partitioned graph needs at least two parts");
    std::vector<std::size_t> part_of(graph.vertices + 1, parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto v : parts[i]) {
            if (v < 1 || v > graph.vertices)
                throw DomainError("part vertex " + std::to_string(v) + " out of range");
            if (part_of[v] != parts.size())
                throw DomainError("vertex " + std::to_string(v) + " lies in two parts");
            part_of[v] = i;
        }
    for (std::size_t v = 1; v <= graph.vertices; ++v)
        if (part_of[v] == parts.size())
            throw DomainError("vertex " + std::to_string(v) + " lies in no part");
    for (auto [u, v] : graph.edges)
        if (part_of[u] == part_of[v])
            throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v)
                              + "} lies inside one part");
}

PaddedCover pad_half_vertex_cover(const Graph& graph, std::size_t r)
{
    graph.validate();
    const std::size_t n = graph.vertices;
    if (r > n)
        throw DomainError("cover size exceeds the vertex count");
    PaddedCover out{graph, r};
    if (2 * r < n) {
        const std::size_t clique = n - 2 * r + 2;
        for (std::size_t a = 0; a < clique; ++a)
            for (std::size_t b = a + 1; b < clique; ++b)
                out.graph.edges.emplace_back(static_cast<std::uint32_t>(n + 1 + a),
                                             static_cast<std::uint32_t>(n + 1 + b));
        out.graph.vertices = n + clique;
        out.r = n - r + 1;
    } else if (2 * r > n) {
        out.graph.vertices = 2 * r;
    }
    return out;
}

CoverReduction vc_to_cmpv(const Graph& graph)
{
    graph.validate();
    if (graph.edges.empty())
        return true;
    if (graph.vertices % 2 != 0)
        throw PreconditionError("vc_to_cmpv needs an even vertex count; pad the graph first");
    std::vector<std::vector<CandidateId>> ballots;
    for (auto [u, v] : graph.edges)
        ballots.push_back({u, v});
    return Instance(Variant::conservative, 2, graph.vertices, std::move(ballots),
                    graph.vertices / 2, 0, 1);
}

Instance cmpv_normalize_half(const Instance& instance)
{
    if (instance.variant() != Variant::conservative || instance.ell() != 0)
        throw PreconditionError("cmpv_normalize_half expects a conservative instance with ell = 0");
    const std::size_t m = instance.candidates();
    const std::size_t k = instance.k();
    if (2 * k == m)
        return instance;
    if (2 * k > m)
        return Instance(instance.variant(), instance.agents(), 2 * k, instance.all_ballots(), k, 0,
                        instance.x());

    const std::size_t n = instance.agents();
    const std::size_t added = m - 2 * k;
    auto ballots = instance.all_ballots();
    for (auto& stage : ballots)
        for (std::size_t j = 0; j < added; ++j)
            stage.insert(stage.end(), n, static_cast<CandidateId>(m + 1 + j));
    return Instance(instance.variant(), n + n * added, m + added, std::move(ballots), m - k, 0,
                    instance.x() + n * added);
}

Instance cmpv_to_rmpv(const Instance& instance)
{
    if (instance.variant() != Variant::conservative || instance.ell() != 0
        || 2 * instance.k() != instance.candidates())
        throw PreconditionError(
            "cmpv_to_rmpv expects a conservative instance with ell = 0 and k = m/2");
    const std::size_t m = instance.candidates();
    const std::size_t n = instance.agents();
    const auto z = static_cast<CandidateId>(m + 1);
    const auto y = static_cast<CandidateId>(m + 2);
    std::vector<std::vector<CandidateId>> ballots;
    for (const auto& stage : instance.all_ballots()) {
        ballots.push_back(stage);
        ballots.emplace_back(n, y);
    }
    ballots.emplace_back(n, z);
    const std::size_t k = instance.k() + 1;
    return Instance(Variant::revolutionary, n, m + 2, std::move(ballots), k, 2 * k, instance.x());
}

namespace {

// Collects profiles whose agent blocks are disjoint: each appended profile
// gets fresh agents, and every agent abstains outside its own profile.
class BlockProfiles {
public:
    void add(std::vector<CandidateId> block) { blocks_.push_back(std::move(block)); }

    std::vector<std::vector<CandidateId>> ballots() const
    {
        std::size_t total = agents();
        std::vector<std::vector<CandidateId>> out;
        std::size_t offset = 0;
        for (const auto& block : blocks_) {
            std::vector<CandidateId> stage(total, abstain);
            std::copy(block.begin(), block.end(), stage.begin() + static_cast<std::ptrdiff_t>(offset));
            offset += block.size();
            out.push_back(std::move(stage));
        }
        return out;
    }

    std::size_t agents() const
    {
        std::size_t total = 0;
        for (const auto& block : blocks_)
            total += block.size();
        return total;
    }

private:
    std::vector<std::vector<CandidateId>> blocks_;
};

void approve(std::vector<CandidateId>& block, CandidateId c, std::uint64_t times)
{
    block.insert(block.end(), times, c);
}

}  // namespace

Instance mcc_to_cmpv(const PartitionedGraph& pgraph)
{
    pgraph.validate();
    const auto& parts = pgraph.parts;
    const std::size_t q = parts.size();
    for (const auto& part : parts)
        if (part.empty())
            throw PreconditionError("mcc_to_cmpv needs every part nonempty");

    const std::size_t h = pgraph.graph.vertices;
    const auto ids = sidon(h);
    auto id = [&](std::uint32_t v) { return ids.elements[v - 1]; };
    const std::uint64_t x = 2 * ids.elements.back();

    std::vector<std::size_t> part_of(h + 1);
    for (std::size_t i = 0; i < q; ++i)
        for (auto v : parts[i])
            part_of[v] = i;

    // Edge candidates follow the vertices, in input edge order.
    const auto& edges = pgraph.graph.edges;
    auto edge_candidate = [&](std::size_t e) { return static_cast<CandidateId>(h + 1 + e); };
    auto edges_between = [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> out;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto a = part_of[edges[e].first], b = part_of[edges[e].second];
            if ((a == i && b == j) || (a == j && b == i))
                out.push_back(e);
        }
        return out;
    };

    BlockProfiles profiles;
    for (const auto& part : parts) {
        std::vector<CandidateId> block;
        for (auto v : part)
            approve(block, v, x);
        profiles.add(std::move(block));
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            std::vector<CandidateId> block;
            for (auto e : edges_between(i, j))
                approve(block, edge_candidate(e), x);
            profiles.add(std::move(block));
        }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            auto between = edges_between(i, j);
            std::vector<CandidateId> first, second;
            for (auto part : {i, j})
                for (auto v : parts[part]) {
                    approve(first, v, id(v));
                    approve(second, v, x / 2 - id(v));
                }
            for (auto e : between) {
                auto sum = id(edges[e].first) + id(edges[e].second);
                approve(first, edge_candidate(e), x - sum);
                approve(second, edge_candidate(e), sum);
            }
            profiles.add(std::move(first));
            profiles.add(std::move(second));
        }

    return Instance(Variant::conservative, profiles.agents(), h + edges.size(), profiles.ballots(),
                    q + q * (q - 1) / 2, 0, static_cast<std::size_t>(x));
}

Instance lift_ell1(const Instance& instance)
{
    if (instance.variant() != Variant::conservative || instance.agents() != 2
        || instance.ell() != 0 || instance.x() != 1)
        throw PreconditionError(
            "lift_ell1 expects a conservative instance with two agents, ell = 0 and x = 1");
    const std::size_t m = instance.candidates();
    const auto v_prime = static_cast<CandidateId>(m + 1);
    const auto v = static_cast<CandidateId>(m + 2);
    const auto w = static_cast<CandidateId>(m + 3);
    std::vector<std::vector<CandidateId>> ballots;
    for (std::size_t t = 1; t <= instance.stages(); ++t) {
        auto stage = instance.ballots(t - 1);
        CandidateId middle = t % 2 == 1 ? w : (t % 4 == 0 ? v_prime : v);
        ballots.push_back({stage[0], stage[1], middle, middle, w, w});
    }
    return Instance(Variant::conservative, 6, m + 3, std::move(ballots), instance.k() + 2, 1,
                    instance.x() + 4);
}

Instance lift_ell_2km2(const Instance& instance)
{
    if (instance.variant() != Variant::revolutionary || instance.agents() != 2
        || instance.ell() != 2 * instance.k() || instance.x() != 1
        || 2 * instance.k() != instance.candidates())
        throw PreconditionError("lift_ell_2km2 expects a revolutionary instance with two agents, "
                                "ell = 2k, x = 1 and k = m/2");
    const std::size_t m = instance.candidates();
    const auto w = static_cast<CandidateId>(m + 1);
    std::vector<std::vector<CandidateId>> ballots;
    for (const auto& stage : instance.all_ballots())
        ballots.push_back({stage[0], stage[1], w, w});
    const std::size_t k = instance.k() + 1;
    return Instance(Variant::revolutionary, 4, m + 1, std::move(ballots), k, 2 * k - 2,
                    instance.x() + 2);
}

namespace {

void check_composable(std::span<const Instance> instances, Variant variant, const char* name)
{
    if (instances.empty())
        throw DomainError(std::string(name) + " needs at least one instance");
    const auto& first = instances.front();
    for (const auto& other : instances) {
        if (other.variant() != variant)
            throw DomainError(std::string(name) + ": every instance must be "
                              + variant_name(variant));
        if (other.agents() != first.agents() || other.candidates() != first.candidates()
            || other.stages() != first.stages() || other.k() != first.k()
            || other.x() != first.x() || other.ell() != first.ell())
            throw DomainError(std::string(name) + ": instances differ in shape");
    }
}

}  // namespace

Instance and_compose_cmpv(std::span<const Instance> instances)
{
    check_composable(instances, Variant::conservative, "and_compose_cmpv");
    const auto& first = instances.front();
    if (first.ell() != 1)
        throw DomainError("and_compose_cmpv: instances must have ell = 1");
    const std::size_t n = first.agents();
    const std::size_t m = first.candidates();
    const std::size_t k = first.k();
    const auto z = static_cast<CandidateId>(m + 1);

    std::vector<std::vector<CandidateId>> ballots;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (i > 0)
            for (std::size_t j = 0; j < 2 * k; ++j)
                ballots.emplace_back(2 * n, z);
        for (const auto& stage : instances[i].all_ballots()) {
            ballots.push_back(stage);
            ballots.back().insert(ballots.back().end(), n, z);
        }
    }
    return Instance(Variant::conservative, 2 * n, m + 1, std::move(ballots), k + 1, 1,
                    first.x() + n);
}

Instance and_compose_rmpv(std::span<const Instance> instances)
{
    check_composable(instances, Variant::revolutionary, "and_compose_rmpv");
    const auto& first = instances.front();
    const std::size_t ell = first.ell();
    if (ell != 2 * first.k() || first.candidates() != ell)
        throw DomainError("and_compose_rmpv: instances must have ell = 2k = m");
    const std::size_t n = first.agents();
    const std::size_t m = first.candidates();
    const auto z = static_cast<CandidateId>(m + 1);
    const std::size_t agents = n + n * (ell + 1);

    std::vector<std::vector<CandidateId>> ballots;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (i > 0)
            ballots.emplace_back(agents, z);
        for (const auto& stage : instances[i].all_ballots()) {
            ballots.push_back(stage);
            // block 0 approves z, block j approves y_j = z + j
            for (std::size_t j = 0; j <= ell; ++j)
                ballots.back().insert(ballots.back().end(), n, static_cast<CandidateId>(z + j));
        }
    }
    return Instance(Variant::revolutionary, agents, m + 1 + ell, std::move(ballots),
                    first.k() + ell + 1, ell, first.x() + n * (ell + 1));
}

}  // namespace mpv
