#pragma once

#include "phom/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace phom {

struct Edge {
    std::size_t src = 0;
    std::size_t dst = 0;
    std::size_t label = 0;
};

/// Directed edge-labeled graph without multi-edges. Immutable once built.
///
/// Vertices are kept in lexicographic order of their names and the alphabet
/// is sorted; edges keep their input order, which is also the enumeration
/// order used by the world oracles.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& vertex_names() const noexcept { return names_; }
    const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    const std::string& label_name(std::size_t l) const { return alphabet_.at(l); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    /// Edge ids leaving / entering `v`, in increasing id order.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_.at(v); }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_.at(v); }

    std::optional<std::size_t> find_vertex(const std::string& name) const;
    std::optional<std::size_t> find_label(const std::string& name) const;
    std::optional<std::size_t> find_edge(std::size_t src, std::size_t dst) const;

    /// `src->dst`, used as the variable name of an edge in lineages.
    std::string edge_name(std::size_t e) const;

    bool labeled() const noexcept { return alphabet_.size() > 1; }

private:
    friend Graph make_graph(std::vector<std::string>, std::vector<std::string>, std::vector<Edge>);

    std::vector<std::string> names_;
    std::vector<std::string> alphabet_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

struct ProbGraph {
    Graph graph;
    std::vector<Rational> prob;  // indexed by edge id

    const Rational& pi(std::size_t e) const { return prob.at(e); }
};

struct EdgeSpec {
    std::string src;
    std::string dst;
    std::string label = "_";
    std::optional<Rational> prob;
};

/// Low-level constructor from sorted, validated parts. Vertex names must be
/// sorted and unique, the alphabet sorted and unique, and edge endpoints and
/// labels in range; violations raise the usual validation errors.
Graph make_graph(std::vector<std::string> names, std::vector<std::string> alphabet, std::vector<Edge> edges);

/// Builds a query graph. An empty `alphabet` means "the labels used by the
/// edges", or `{_}` when there are none. Vertices mentioned only by edges are
/// added implicitly.
Graph build_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                  const std::vector<std::string>& alphabet = {});

/// Same as build_graph, but every edge must carry a probability in [0,1].
ProbGraph build_prob_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                           const std::vector<std::string>& alphabet = {});

/// Same graph with a different (super-)alphabet.
Graph with_alphabet(const Graph& g, const std::vector<std::string>& alphabet);

/// Directed path `v0 -> v1 -> ... -> v_length` over a one-letter alphabet.
Graph directed_path(std::size_t length, const std::string& label = "_");

struct Subgraph {
    ProbGraph graph;
    std::vector<std::size_t> vertex_origin;  // new vertex -> old vertex
    std::vector<std::size_t> edge_origin;    // new edge -> old edge
};

/// Induced subgraph on `vertices` (old indices), keeping the alphabet.
Subgraph induced_subgraph(const ProbGraph& g, const std::vector<std::size_t>& vertices);
Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices);

/// Spec list of a graph, handy for rebuilding or serialising.
std::vector<EdgeSpec> edge_specs(const Graph& g);
std::vector<EdgeSpec> edge_specs(const ProbGraph& g);

}  // namespace phom
