#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mpv/model.hpp"

namespace mpv {

// Simple undirected graph on vertices 1..vertices.
struct Graph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    // Throws DomainError on self-loops, duplicates or out-of-range endpoints.
    void validate() const;
    friend bool operator==(const Graph&, const Graph&) = default;
};

// Graph whose vertex set is split into parts with edges only across parts.
struct PartitionedGraph {
    Graph graph;
    std::vector<std::vector<std::uint32_t>> parts;

    void validate() const;
    friend bool operator==(const PartitionedGraph&, const PartitionedGraph&) = default;
};

struct SidonSet {
    std::uint64_t b = 0;
    std::uint64_t hat_b = 0;  // smallest prime above b
    std::vector<std::uint64_t> elements;
};

// Primes up to and including `limit`.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// s_i = 2 hat_b i + (i^2 mod hat_b), i = 1..b.
SidonSet sidon(std::uint64_t b);

struct PaddedCover {
    Graph graph;
    std::size_t r;  // always graph.vertices / 2
};

// Vertex Cover (graph, r) to an equivalent instance asking for a cover of
// half the vertices.
PaddedCover pad_half_vertex_cover(const Graph& graph, std::size_t r);

// Either a conservative instance or, for an edgeless graph, a direct verdict.
using CoverReduction = std::variant<Instance, bool>;
CoverReduction vc_to_cmpv(const Graph& graph);

Instance cmpv_normalize_half(const Instance& instance);
Instance cmpv_to_rmpv(const Instance& instance);
Instance mcc_to_cmpv(const PartitionedGraph& graph);
Instance lift_ell1(const Instance& instance);
Instance lift_ell_2km2(const Instance& instance);
Instance and_compose_cmpv(std::span<const Instance> instances);
Instance and_compose_rmpv(std::span<const Instance> instances);

// Each ballot abstains with probability abstain_probability, else picks a
// uniform candidate. Draws come from std::mt19937_64 seeded with `seed`:
// one 53-bit uniform for the abstain test, then a Lemire bounded draw
// for the candidate.
Instance random_instance(std::size_t agents, std::size_t candidates, std::size_t stages,
                         std::size_t k, std::size_t ell, std::size_t x, Variant variant,
                         double abstain_probability, std::uint64_t seed);

}  // namespace mpv
