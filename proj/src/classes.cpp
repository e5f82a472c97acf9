#include "phom/classes.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>

namespace phom {

std::string_view class_name(GraphClass c) {
    switch (c) {
    case GraphClass::OneWayPath: return "1WP";
    case GraphClass::TwoWayPath: return "2WP";
    case GraphClass::DownwardTree: return "DWT";
    case GraphClass::Polytree: return "PT";
    case GraphClass::Connected: return "Connected";
    case GraphClass::UnionOneWayPath: return "U1WP";
    case GraphClass::UnionTwoWayPath: return "U2WP";
    case GraphClass::UnionDownwardTree: return "UDWT";
    case GraphClass::UnionPolytree: return "UPT";
    case GraphClass::All: return "All";
    }
    return "?";
}

GraphClass parse_class(std::string_view name) {
    std::string s(name);
    const std::string cup = "⊔";
    if (s.rfind(cup, 0) == 0) s = "U" + s.substr(cup.size());
    for (GraphClass c : all_classes) {
        std::string_view n = class_name(c);
        if (s.size() != n.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(s[i])) != std::tolower(static_cast<unsigned char>(n[i]))) same = false;
        if (same) return c;
    }
    throw Error(ErrorCode::UnknownClass, "unknown graph class '" + std::string(name) + "'");
}

bool is_connected_class(GraphClass c) {
    switch (c) {
    case GraphClass::OneWayPath:
    case GraphClass::TwoWayPath:
    case GraphClass::DownwardTree:
    case GraphClass::Polytree:
    case GraphClass::Connected: return true;
    default: return false;
    }
}

GraphClass union_of(GraphClass c) {
    switch (c) {
    case GraphClass::OneWayPath: return GraphClass::UnionOneWayPath;
    case GraphClass::TwoWayPath: return GraphClass::UnionTwoWayPath;
    case GraphClass::DownwardTree: return GraphClass::UnionDownwardTree;
    case GraphClass::Polytree: return GraphClass::UnionPolytree;
    case GraphClass::Connected: return GraphClass::All;
    default: return c;
    }
}

namespace {

// Direct (Hasse) successors in the inclusion diagram.
std::vector<GraphClass> parents(GraphClass c) {
    using G = GraphClass;
    switch (c) {
    case G::OneWayPath: return {G::TwoWayPath, G::DownwardTree, G::UnionOneWayPath};
    case G::TwoWayPath: return {G::Polytree, G::UnionTwoWayPath};
    case G::DownwardTree: return {G::Polytree, G::UnionDownwardTree};
    case G::Polytree: return {G::Connected, G::UnionPolytree};
    case G::Connected: return {G::All};
    case G::UnionOneWayPath: return {G::UnionTwoWayPath, G::UnionDownwardTree};
    case G::UnionTwoWayPath: return {G::UnionPolytree};
    case G::UnionDownwardTree: return {G::UnionPolytree};
    case G::UnionPolytree: return {G::All};
    case G::All: return {};
    }
    return {};
}

}  // namespace

bool class_includes(GraphClass sub, GraphClass super) {
    if (sub == super) return true;
    for (GraphClass p : parents(sub))
        if (class_includes(p, super)) return true;
    return false;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        std::vector<std::size_t> members{s};
        comp[s] = out.size();
        for (std::size_t head = 0; head < members.size(); ++head) {
            std::size_t v = members[head];
            auto visit = [&](std::size_t w) {
                if (comp[w] == SIZE_MAX) {
                    comp[w] = out.size();
                    members.push_back(w);
                }
            };
            for (std::size_t e : g.out_edges(v)) visit(g.edge(e).dst);
            for (std::size_t e : g.in_edges(v)) visit(g.edge(e).src);
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

namespace {

struct ShapeFacts {
    bool polytree = false;
    bool downward = false;   // every in-degree <= 1
    bool path = false;       // every undirected degree <= 2
    bool one_way = false;    // every in- and out-degree <= 1
};

// Shape of one weakly connected component given as a vertex list.
ShapeFacts component_shape(const Graph& g, const std::vector<std::size_t>& verts) {
    ShapeFacts f;
    std::size_t edges = 0;
    for (std::size_t v : verts) edges += g.out_edges(v).size();
    // Connected with |E| = |V| - 1 forces a tree shape; a loop or a 2-cycle
    // would spend an edge on a cycle and break connectivity.
    if (edges + 1 != verts.size()) return f;
    f.polytree = true;
    f.downward = f.path = f.one_way = true;
    for (std::size_t v : verts) {
        std::size_t in = g.in_edges(v).size(), out = g.out_edges(v).size();
        if (in > 1) f.downward = false;
        if (in + out > 2) f.path = false;
        if (in > 1 || out > 1) f.one_way = false;
    }
    return f;
}

}  // namespace

ClassReport recognize(const Graph& g) {
    using G = GraphClass;
    ClassReport r;
    auto comps = connected_components(g);
    bool all_pt = true, all_dwt = true, all_2wp = true, all_1wp = true;
    for (const auto& c : comps) {
        ShapeFacts f = component_shape(g, c);
        all_pt = all_pt && f.polytree;
        all_dwt = all_dwt && f.polytree && f.downward;
        all_2wp = all_2wp && f.polytree && f.path;
        all_1wp = all_1wp && f.polytree && f.one_way;
    }
    const bool connected = comps.size() == 1;
    r.classes.insert(G::All);
    if (all_pt) r.classes.insert(G::UnionPolytree);
    if (all_dwt) r.classes.insert(G::UnionDownwardTree);
    if (all_2wp) r.classes.insert(G::UnionTwoWayPath);
    if (all_1wp) r.classes.insert(G::UnionOneWayPath);
    if (connected) {
        r.classes.insert(G::Connected);
        if (all_pt) r.classes.insert(G::Polytree);
        if (all_dwt) r.classes.insert(G::DownwardTree);
        if (all_2wp) r.classes.insert(G::TwoWayPath);
        if (all_1wp) r.classes.insert(G::OneWayPath);
    }
    for (GraphClass c : all_classes) {
        if (r.contains(c)) {
            r.most_specific = c;
            break;
        }
    }
    return r;
}

bool in_class(const Graph& g, GraphClass c) { return recognize(g).contains(c); }

std::optional<LevelMapping> level_mapping(const Graph& g) {
    const std::size_t n = g.vertex_count();
    LevelMapping lm;
    lm.level.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (const auto& comp : connected_components(g)) {
        std::size_t root = comp.front();
        seen[root] = 1;
        lm.level[root] = 0;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            auto assign = [&](std::size_t w, long want) {
                if (!seen[w]) {
                    seen[w] = 1;
                    lm.level[w] = want;
                    queue.push_back(w);
                    return true;
                }
                return lm.level[w] == want;
            };
            for (std::size_t e : g.out_edges(v))
                if (!assign(g.edge(e).dst, lm.level[v] - 1)) return std::nullopt;
            for (std::size_t e : g.in_edges(v))
                if (!assign(g.edge(e).src, lm.level[v] + 1)) return std::nullopt;
        }
        long lo = lm.level[root];
        for (std::size_t v : comp) lo = std::min(lo, lm.level[v]);
        for (std::size_t v : comp) {
            lm.level[v] -= lo;
            lm.difference = std::max(lm.difference, lm.level[v]);
        }
    }
    return lm;
}

std::optional<std::size_t> longest_directed_path(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> indeg(n, 0), dist(n, 0);
    for (const Edge& e : g.edges()) ++indeg[e.dst];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    std::size_t processed = 0, best = 0;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        ++processed;
        best = std::max(best, dist[v]);
        for (std::size_t e : g.out_edges(v)) {
            std::size_t w = g.edge(e).dst;
            dist[w] = std::max(dist[w], dist[v] + 1);
            if (--indeg[w] == 0) stack.push_back(w);
        }
    }
    if (processed != n) return std::nullopt;
    return best;
}

}  // namespace phom
