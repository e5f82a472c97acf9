#pragma once

#include "phom/graph.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace phom {

struct PositiveDNF;

/// Label-preserving homomorphism test by backtracking. Labels are matched by name.
bool hom_exists_bf(const Graph& g, const Graph& w);

/// Same, also reporting a witness (query vertex -> target vertex) when one exists.
bool hom_exists_bf(const Graph& g, const Graph& w, std::vector<std::size_t>& witness);

struct BruteOptions {
    std::size_t max_uncertain_edges = 24;
    unsigned threads = 1;
};

/// Pr(G ⇝ H) by summing over possible worlds. Edges with probability 0 or 1
/// are conditioned on; only the others count towards the cap.
Rational brute_prob(const Graph& g, const ProbGraph& h, const BruteOptions& opts = {});

struct PossibleWorld {
    std::vector<bool> kept;  // indexed by edge id
    Rational probability;
};

/// Every subgraph of `h` with its probability (including zero-probability
/// worlds), in binary-counter order over the edge ids.
std::vector<PossibleWorld> enumerate_worlds(const ProbGraph& h, std::size_t max_edges = 20);

/// The graph keeping exactly the edges flagged in `kept`.
Graph world_graph(const Graph& h, const std::vector<bool>& kept);

struct BipartiteGraph {
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based (left, right), edge j is edges[j-1]
};

Integer count_edge_covers(const BipartiteGraph& gamma);

struct PP2DNF {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::vector<std::pair<std::size_t, std::size_t>> clauses;  // 1-based (x, y)
};

/// Checks ranges and that every variable occurs; throws MalformedFormula / UncoveredVariable.
void validate_pp2dnf(const PP2DNF& phi);

Integer count_pp2dnf(const PP2DNF& phi);

Rational dnf_prob_bf(const PositiveDNF& phi, std::span<const Rational> pi);

}  // namespace phom
