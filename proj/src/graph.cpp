#include "phom/graph.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace phom {

std::optional<std::size_t> Graph::find_vertex(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::optional<std::size_t> Graph::find_label(const std::string& name) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet_.begin());
}

std::optional<std::size_t> Graph::find_edge(std::size_t src, std::size_t dst) const {
    for (std::size_t e : out_.at(src))
        if (edges_[e].dst == dst) return e;
    return std::nullopt;
}

std::string Graph::edge_name(std::size_t e) const {
    const Edge& ed = edges_.at(e);
    return names_[ed.src] + "->" + names_[ed.dst];
}

Graph make_graph(std::vector<std::string> names, std::vector<std::string> alphabet, std::vector<Edge> edges) {
    if (names.empty()) throw Error(ErrorCode::EmptyVertexSet, "a graph needs at least one vertex");
    if (alphabet.empty()) alphabet.push_back("_");
    Graph g;
    g.names_ = std::move(names);
    g.alphabet_ = std::move(alphabet);
    g.edges_ = std::move(edges);
    g.out_.assign(g.names_.size(), {});
    g.in_.assign(g.names_.size(), {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < g.edges_.size(); ++e) {
        const Edge& ed = g.edges_[e];
        if (ed.src >= g.names_.size() || ed.dst >= g.names_.size())
            throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
        if (ed.label >= g.alphabet_.size()) throw Error(ErrorCode::UnknownLabel, "edge label out of range");
        if (!seen.emplace(ed.src, ed.dst).second)
            throw Error(ErrorCode::DuplicateEdge, "two edges from '" + g.names_[ed.src] + "' to '" + g.names_[ed.dst] + "'");
        g.out_[ed.src].push_back(e);
        g.in_[ed.dst].push_back(e);
    }
    return g;
}

namespace {

Graph build_impl(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& specs,
                 const std::vector<std::string>& alphabet) {
    std::set<std::string> names(vertices.begin(), vertices.end());
    for (const EdgeSpec& s : specs) {
        names.insert(s.src);
        names.insert(s.dst);
    }
    std::set<std::string> labels(alphabet.begin(), alphabet.end());
    if (alphabet.empty()) {
        for (const EdgeSpec& s : specs) labels.insert(s.label);
    } else {
        for (const EdgeSpec& s : specs)
            if (!labels.count(s.label))
                throw Error(ErrorCode::UnknownLabel, "label '" + s.label + "' is not in the alphabet");
    }
    std::vector<std::string> name_list(names.begin(), names.end());
    std::vector<std::string> label_list(labels.begin(), labels.end());
    auto index_of = [](const std::vector<std::string>& v, const std::string& x) {
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(specs.size());
    for (const EdgeSpec& s : specs)
        edges.push_back({index_of(name_list, s.src), index_of(name_list, s.dst), index_of(label_list, s.label)});
    return make_graph(std::move(name_list), std::move(label_list), std::move(edges));
}

}  // namespace

Graph build_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                  const std::vector<std::string>& alphabet) {
    return build_impl(vertices, edges, alphabet);
}

ProbGraph build_prob_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
                           const std::vector<std::string>& alphabet) {
    ProbGraph pg;
    pg.graph = build_impl(vertices, edges, alphabet);
    pg.prob.reserve(edges.size());
    for (const EdgeSpec& s : edges) {
        if (!s.prob) throw Error(ErrorCode::MissingProbability, "edge " + s.src + "->" + s.dst + " has no probability");
        if (!is_probability(*s.prob))
            throw Error(ErrorCode::ProbabilityOutOfRange,
                        "edge " + s.src + "->" + s.dst + " has probability " + to_string(*s.prob));
        pg.prob.push_back(*s.prob);
    }
    return pg;
}

Graph with_alphabet(const Graph& g, const std::vector<std::string>& alphabet) {
    std::vector<std::string> sorted(alphabet.begin(), alphabet.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), g.label_name(e.label));
        if (it == sorted.end() || *it != g.label_name(e.label))
            throw Error(ErrorCode::UnknownLabel, "label '" + g.label_name(e.label) + "' is not in the alphabet");
        e.label = static_cast<std::size_t>(it - sorted.begin());
    }
    return make_graph(g.vertex_names(), std::move(sorted), std::move(edges));
}

Graph directed_path(std::size_t length, const std::string& label) {
    const std::size_t width = std::to_string(length).size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= length; ++i) {
        std::string s = std::to_string(i);
        names.push_back("p" + std::string(width - s.size(), '0') + s);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < length; ++i) edges.push_back({i, i + 1, 0});
    return make_graph(std::move(names), {label}, std::move(edges));
}

Subgraph induced_subgraph(const ProbGraph& g, const std::vector<std::size_t>& vertices) {
    std::vector<std::size_t> verts(vertices);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<std::size_t> remap(g.graph.vertex_count(), SIZE_MAX);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        remap[verts[i]] = i;
        names.push_back(g.graph.vertex_name(verts[i]));
    }
    Subgraph out;
    out.vertex_origin = verts;
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < g.graph.edge_count(); ++e) {
        const Edge& ed = g.graph.edge(e);
        if (remap[ed.src] == SIZE_MAX || remap[ed.dst] == SIZE_MAX) continue;
        edges.push_back({remap[ed.src], remap[ed.dst], ed.label});
        out.edge_origin.push_back(e);
        if (!g.prob.empty()) out.graph.prob.push_back(g.prob[e]);
    }
    out.graph.graph = make_graph(std::move(names), g.graph.alphabet(), std::move(edges));
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& vertices) {
    ProbGraph pg{g, {}};
    return induced_subgraph(pg, vertices).graph.graph;
}

std::vector<EdgeSpec> edge_specs(const Graph& g) {
    std::vector<EdgeSpec> out;
    for (const Edge& e : g.edges())
        out.push_back({g.vertex_name(e.src), g.vertex_name(e.dst), g.label_name(e.label), std::nullopt});
    return out;
}

std::vector<EdgeSpec> edge_specs(const ProbGraph& g) {
    std::vector<EdgeSpec> out = edge_specs(g.graph);
    for (std::size_t e = 0; e < out.size(); ++e) out[e].prob = g.prob.at(e);
    return out;
}

}  // namespace phom
