#include "phom/tractable.hpp"

#include "phom/classes.hpp"
#include "phom/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace phom {

PathLayout path_layout(const Graph& path) {
    if (!in_class(path, GraphClass::TwoWayPath)) throw Error(ErrorCode::NotA2WP, "target is not a two-way path");
    PathLayout lay;
    const std::size_t n = path.vertex_count();
    std::size_t start = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (path.in_edges(v).size() + path.out_edges(v).size() <= 1) {
            start = v;
            break;
        }
    }
    std::size_t prev_edge = SIZE_MAX, v = start;
    lay.vertex_at.push_back(v);
    while (lay.vertex_at.size() < n) {
        std::size_t next_edge = SIZE_MAX, next = SIZE_MAX;
        for (std::size_t e : path.out_edges(v))
            if (e != prev_edge) next_edge = e, next = path.edge(e).dst;
        for (std::size_t e : path.in_edges(v))
            if (e != prev_edge) next_edge = e, next = path.edge(e).src;
        lay.edge_at.push_back(next_edge);
        lay.vertex_at.push_back(next);
        prev_edge = next_edge;
        v = next;
    }
    return lay;
}

namespace {

// Arc consistency of a query over the path positions lo..hi (inclusive).
class PathCsp {
public:
    PathCsp(const Graph& g, const Graph& path) : g_(g), lay_(path_layout(path)) {
        const std::size_t n = lay_.edge_at.size();
        fwd_.assign(n, SIZE_MAX);
        bwd_.assign(n, SIZE_MAX);
        std::vector<std::size_t> pos(path.vertex_count());
        for (std::size_t p = 0; p < lay_.vertex_at.size(); ++p) pos[lay_.vertex_at[p]] = p;
        for (std::size_t k = 0; k < n; ++k) {
            const Edge& e = path.edge(lay_.edge_at[k]);
            (pos[e.src] == k ? fwd_[k] : bwd_[k]) = e.label;
        }
        label_map_.assign(g.alphabet().size(), SIZE_MAX);
        for (std::size_t l = 0; l < g.alphabet().size(); ++l)
            if (auto t = path.find_label(g.label_name(l))) label_map_[l] = *t;
    }

    const PathLayout& layout() const { return lay_; }
    std::size_t positions() const { return lay_.vertex_at.size(); }

    // Fills `out` with the minimum of each domain; false if some domain empties.
    bool solve(std::size_t lo, std::size_t hi, std::vector<std::size_t>* out) {
        const std::size_t nv = g_.vertex_count(), np = positions();
        for (const Edge& e : g_.edges())
            if (label_map_[e.label] == SIZE_MAX) return false;
        dom_.assign(nv, std::vector<char>(np, 0));
        for (auto& d : dom_) std::fill(d.begin() + static_cast<long>(lo), d.begin() + static_cast<long>(hi) + 1, 1);
        std::vector<char> queued(g_.edge_count(), 1);
        std::vector<std::size_t> work(g_.edge_count());
        for (std::size_t e = 0; e < work.size(); ++e) work[e] = e;
        while (!work.empty()) {
            std::size_t e = work.back();
            work.pop_back();
            queued[e] = 0;
            const Edge& ed = g_.edge(e);
            const std::size_t lab = label_map_[ed.label];
            for (bool src_side : {true, false}) {
                std::size_t x = src_side ? ed.src : ed.dst;
                std::size_t y = src_side ? ed.dst : ed.src;
                bool changed = false;
                for (std::size_t p = lo; p <= hi; ++p) {
                    if (!dom_[x][p]) continue;
                    bool ok = false;
                    if (src_side) {
                        // p -> q with label lab
                        ok = (p + 1 <= hi && fwd_[p] == lab && dom_[y][p + 1]) ||
                             (p >= lo + 1 && bwd_[p - 1] == lab && dom_[y][p - 1]);
                    } else {
                        // q -> p with label lab
                        ok = (p >= lo + 1 && fwd_[p - 1] == lab && dom_[y][p - 1]) ||
                             (p + 1 <= hi && bwd_[p] == lab && dom_[y][p + 1]);
                    }
                    if (!ok) {
                        dom_[x][p] = 0;
                        changed = true;
                    }
                }
                if (!changed) continue;
                if (std::find(dom_[x].begin(), dom_[x].end(), 1) == dom_[x].end()) return false;
                auto requeue = [&](std::size_t f) {
                    if (!queued[f]) {
                        queued[f] = 1;
                        work.push_back(f);
                    }
                };
                for (std::size_t f : g_.out_edges(x)) requeue(f);
                for (std::size_t f : g_.in_edges(x)) requeue(f);
            }
        }
        if (out) {
            out->assign(nv, 0);
            for (std::size_t v = 0; v < nv; ++v)
                (*out)[v] = static_cast<std::size_t>(std::find(dom_[v].begin(), dom_[v].end(), 1) - dom_[v].begin());
        }
        return true;
    }

    // Whether position map `at` is a homomorphism.
    bool verify(const std::vector<std::size_t>& at) const {
        for (const Edge& e : g_.edges()) {
            std::size_t p = at[e.src], q = at[e.dst], lab = label_map_[e.label];
            bool ok = (q == p + 1 && fwd_[p] == lab) || (p == q + 1 && bwd_[q] == lab);
            if (!ok) return false;
        }
        return true;
    }

private:
    const Graph& g_;
    PathLayout lay_;
    std::vector<std::size_t> fwd_, bwd_;  // label of the edge k->k+1 / k+1->k, or SIZE_MAX
    std::vector<std::size_t> label_map_;
    std::vector<std::vector<char>> dom_;
};

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::ClassMismatch, what);
}

// A query without edges matches every world; no positive DNF expresses that.
void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorCode::MalformedFormula, "the lineage of an edgeless query is constant true");
}

}  // namespace

HomResult hom_to_2wp(const Graph& g, const Graph& path) {
    PathCsp csp(g, path);
    std::vector<std::size_t> at;
    HomResult r;
    if (!csp.solve(0, csp.positions() - 1, &at)) return r;
    if (!csp.verify(at)) throw std::logic_error("hom_to_2wp: domain minima do not form a homomorphism");
    r.exists = true;
    r.witness.resize(at.size());
    for (std::size_t v = 0; v < at.size(); ++v) r.witness[v] = csp.layout().vertex_at[at[v]];
    return r;
}

IntervalFamily interval_family(const Graph& g, const Graph& path, bool minimal) {
    PathCsp csp(g, path);
    IntervalFamily f;
    f.length = csp.layout().edge_at.size();
    auto matches = [&](std::size_t l, std::size_t r) { return csp.solve(l, r + 1, nullptr); };
    for (std::size_t r = 0; r < f.length; ++r) {
        if (!minimal) {
            for (std::size_t l = 0; l <= r; ++l)
                if (matches(l, r)) f.intervals.emplace_back(l, r);
            continue;
        }
        // Largest l with a match on [l, r]; matches are monotone in the interval.
        const std::size_t floor = f.intervals.empty() ? 0 : f.intervals.back().first + 1;
        for (std::size_t l = r + 1; l-- > floor;) {
            if (matches(l, r)) {
                f.intervals.emplace_back(l, r);
                break;
            }
        }
    }
    return f;
}

Rational interval_union_prob(const IntervalFamily& f, const std::vector<Rational>& prob_at) {
    if (f.intervals.empty()) return 0;
    std::size_t cap = 0;
    for (auto [l, r] : f.intervals) cap = std::max(cap, r - l + 1);
    std::vector<std::size_t> need(f.length, 0);  // run length completing an interval ending here
    for (auto [l, r] : f.intervals) {
        std::size_t len = r - l + 1;
        need[r] = need[r] == 0 ? len : std::min(need[r], len);
    }
    // dist[k]: probability of no completed interval so far with a current run of k.
    std::vector<Rational> dist(cap + 1, 0), next(cap + 1);
    dist[0] = 1;
    for (std::size_t pos = 0; pos < f.length; ++pos) {
        const Rational& p = prob_at.at(pos);
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t k = 0; k <= cap; ++k) {
            if (dist[k] == 0) continue;
            next[std::min(cap, k + 1)] += dist[k] * p;
            next[0] += dist[k] * (1 - p);
        }
        if (need[pos])
            for (std::size_t k = need[pos]; k <= cap; ++k) next[k] = 0;
        std::swap(dist, next);
    }
    Rational none = 0;
    for (const Rational& d : dist) none += d;
    return 1 - none;
}

Rational prob_l_connected_2wp(const Graph& g, const ProbGraph& h) {
    require(in_class(g, GraphClass::Connected), "query must be connected");
    require(in_class(h.graph, GraphClass::TwoWayPath), "instance must be a two-way path");
    if (g.edge_count() == 0) return 1;
    IntervalFamily f = interval_family(g, h.graph, true);
    PathLayout lay = path_layout(h.graph);
    std::vector<Rational> prob_at;
    for (std::size_t e : lay.edge_at) prob_at.push_back(h.prob[e]);
    return interval_union_prob(f, prob_at);
}

namespace {

std::vector<std::string> edge_variables(const Graph& h) {
    std::vector<std::string> vars;
    for (std::size_t e = 0; e < h.edge_count(); ++e) vars.push_back(h.edge_name(e));
    return vars;
}

}  // namespace

PositiveDNF lineage_l_connected_2wp(const Graph& g, const ProbGraph& h, bool minimal) {
    require(in_class(g, GraphClass::Connected), "query must be connected");
    require(in_class(h.graph, GraphClass::TwoWayPath), "instance must be a two-way path");
    require_edges(g);
    PositiveDNF phi;
    phi.variables = edge_variables(h.graph);
    PathLayout lay = path_layout(h.graph);
    for (auto [l, r] : interval_family(g, h.graph, minimal).intervals) {
        std::vector<std::size_t> clause(lay.edge_at.begin() + static_cast<long>(l), lay.edge_at.begin() + static_cast<long>(r) + 1);
        std::sort(clause.begin(), clause.end());
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

namespace {

// Label word of a one-way path query, as instance label indices.
// Returns false if some query label does not occur in the instance.
bool path_word(const Graph& g, const Graph& h, std::vector<std::size_t>& word) {
    std::size_t v = 0;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        if (g.in_edges(u).empty()) v = u;
    word.clear();
    bool ok = true;
    while (!g.out_edges(v).empty()) {
        const Edge& e = g.edge(g.out_edges(v).front());
        auto lab = h.find_label(g.label_name(e.label));
        if (!lab) ok = false;
        word.push_back(lab ? *lab : SIZE_MAX);
        v = e.dst;
    }
    return ok;
}

// Vertices of a forest so that parents precede children.
std::vector<std::size_t> top_down_order(const Graph& h) {
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
        if (h.in_edges(v).empty()) order.push_back(v);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t e : h.out_edges(order[i])) order.push_back(h.edge(e).dst);
    return order;
}

}  // namespace

Rational prob_l_1wp_dwt(const Graph& g, const ProbGraph& h) {
    require(in_class(g, GraphClass::OneWayPath), "query must be a one-way path");
    require(in_class(h.graph, GraphClass::DownwardTree), "instance must be a downward tree");
    std::vector<std::size_t> word;
    if (g.edge_count() == 0) return 1;
    if (!path_word(g, h.graph, word)) return 0;
    const std::size_t len = word.size(), sigma = h.graph.alphabet().size();
    // Failure links and the matching automaton over the instance alphabet.
    std::vector<std::size_t> fail(len, 0);
    for (std::size_t i = 1, k = 0; i < len; ++i) {
        while (k > 0 && word[i] != word[k]) k = fail[k - 1];
        if (word[i] == word[k]) ++k;
        fail[i] = k;
    }
    std::vector<std::vector<std::size_t>> delta(len, std::vector<std::size_t>(sigma, 0));
    for (std::size_t s = 0; s < len; ++s)
        for (std::size_t a = 0; a < sigma; ++a) {
            if (word[s] == a) delta[s][a] = s + 1;
            else delta[s][a] = s == 0 ? 0 : delta[fail[s - 1]][a];
        }
    // none[v][s]: probability of no full match inside the subtree of v, given
    // that the present path ending at v has matched s letters.
    const std::vector<std::size_t> order = top_down_order(h.graph);
    std::vector<std::vector<Rational>> none(h.graph.vertex_count());
    for (std::size_t i = order.size(); i-- > 0;) {
        std::size_t v = order[i];
        none[v].assign(len, 1);
        for (std::size_t e : h.graph.out_edges(v)) {
            const Edge& ed = h.graph.edge(e);
            const Rational& p = h.prob[e];
            const auto& child = none[ed.dst];
            for (std::size_t s = 0; s < len; ++s) {
                std::size_t t = delta[s][ed.label];
                Rational kept = t == len ? Rational(0) : child[t];
                none[v][s] *= p * kept + (1 - p) * child[0];
            }
        }
    }
    Rational all_none = 1;
    for (std::size_t v = 0; v < h.graph.vertex_count(); ++v)
        if (h.graph.in_edges(v).empty()) all_none *= none[v][0];
    return 1 - all_none;
}

PositiveDNF lineage_l_1wp_dwt(const Graph& g, const ProbGraph& h) {
    require(in_class(g, GraphClass::OneWayPath), "query must be a one-way path");
    require(in_class(h.graph, GraphClass::DownwardTree), "instance must be a downward tree");
    require_edges(g);
    PositiveDNF phi;
    phi.variables = edge_variables(h.graph);
    std::vector<std::size_t> word;
    if (!path_word(g, h.graph, word)) return phi;
    for (std::size_t v = 0; v < h.graph.vertex_count(); ++v) {
        // Walk up from v reading the word backwards.
        std::vector<std::size_t> clause;
        std::size_t u = v;
        bool ok = true;
        for (std::size_t i = word.size(); i-- > 0;) {
            if (h.graph.in_edges(u).empty()) {
                ok = false;
                break;
            }
            std::size_t e = h.graph.in_edges(u).front();
            if (h.graph.edge(e).label != word[i]) {
                ok = false;
                break;
            }
            clause.push_back(e);
            u = h.graph.edge(e).src;
        }
        if (!ok) continue;
        std::sort(clause.begin(), clause.end());
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

namespace {

EpsTree binarize_from(const ProbGraph& h, std::size_t root, std::vector<std::string> edge_names) {
    const Graph& g = h.graph;
    EpsTree t;
    t.edge_names = std::move(edge_names);
    auto add = [&](EpsNode n) {
        t.nodes.push_back(std::move(n));
        return t.nodes.size() - 1;
    };
    auto pad = [&]() { return add(EpsNode{}); };

    // Preorder with parent edges, then build bottom-up.
    std::vector<std::size_t> order{root}, parent_edge(g.vertex_count(), SIZE_MAX);
    std::vector<char> seen(g.vertex_count(), 0);
    seen[root] = 1;
    std::vector<std::vector<std::size_t>> child_edges(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t v = order[i];
        // Up-children (edge into v) first, then down-children.
        for (std::size_t e : g.in_edges(v)) {
            std::size_t c = g.edge(e).src;
            if (seen[c]) continue;
            seen[c] = 1;
            parent_edge[c] = e;
            child_edges[v].push_back(e);
            order.push_back(c);
        }
        for (std::size_t e : g.out_edges(v)) {
            std::size_t c = g.edge(e).dst;
            if (seen[c]) continue;
            seen[c] = 1;
            parent_edge[c] = e;
            child_edges[v].push_back(e);
            order.push_back(c);
        }
    }
    std::vector<std::size_t> node_of(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = order.size(); i-- > 0;) {
        std::size_t v = order[i];
        std::vector<std::size_t> kids;
        for (std::size_t e : child_edges[v]) {
            const Edge& ed = g.edge(e);
            kids.push_back(node_of[ed.src == v ? ed.dst : ed.src]);
        }
        EpsNode n;
        if (parent_edge[v] != SIZE_MAX) {
            const Edge& ed = g.edge(parent_edge[v]);
            n.label = ed.src == v ? Direction::Up : Direction::Down;
            n.prob = h.prob[parent_edge[v]];
            n.edge = parent_edge[v];
        }
        if (kids.size() == 1) {
            n.left = kids[0];
            n.right = pad();
        } else if (kids.size() >= 2) {
            std::size_t tail = kids.back();
            for (std::size_t k = kids.size() - 1; k-- > 1;) {
                EpsNode chain;
                chain.left = kids[k];
                chain.right = tail;
                tail = add(std::move(chain));
            }
            n.left = kids[0];
            n.right = tail;
        }
        node_of[v] = add(std::move(n));
    }
    EpsNode top;
    top.left = node_of[root];
    top.right = pad();
    t.root = add(std::move(top));
    t.validate();
    return t;
}

std::vector<std::string> edge_table(const Graph& g) {
    std::vector<std::string> names;
    for (std::size_t e = 0; e < g.edge_count(); ++e) names.push_back(g.edge_name(e));
    return names;
}

}  // namespace

EpsTree binarize_polytree(const ProbGraph& h) {
    require(in_class(h.graph, GraphClass::Polytree), "instance must be a polytree");
    return binarize_from(h, 0, edge_table(h.graph));
}

std::vector<EpsTree> binarize_forest(const ProbGraph& h) {
    require(in_class(h.graph, GraphClass::UnionPolytree), "instance must be a union of polytrees");
    std::vector<EpsTree> forest;
    for (const auto& comp : connected_components(h.graph)) forest.push_back(binarize_from(h, comp.front(), edge_table(h.graph)));
    return forest;
}

PathAutomaton build_path_automaton(int m) { return PathAutomaton(m); }

Rational prob_u_1wp_pt(std::size_t m, const ProbGraph& h, Route route) {
    require(in_class(h.graph, GraphClass::Polytree), "instance must be a polytree");
    if (m == 0) return 1;
    if (m > h.graph.edge_count()) return 0;
    PathAutomaton a(static_cast<int>(m));
    EpsTree t = binarize_polytree(h);
    if (route == Route::Dp) return automaton_accept_prob(a, t);
    Circuit c = compile_automaton_circuit(a, t);
    return circuit_prob(c, h.prob, true);
}

std::size_t longest_path_reduction(const Graph& g) {
    require(in_class(g, GraphClass::UnionDownwardTree), "query must be a union of downward trees");
    return *longest_directed_path(g);
}

Rational prob_dwt_path_at_least(std::size_t m, const ProbGraph& h) {
    require(in_class(h.graph, GraphClass::UnionDownwardTree), "instance must be a union of downward trees");
    if (m == 0) return 1;
    // none[v][k]: no path of m present edges below v, given a present run of k ending at v.
    const std::vector<std::size_t> order = top_down_order(h.graph);
    std::vector<std::vector<Rational>> none(h.graph.vertex_count());
    for (std::size_t i = order.size(); i-- > 0;) {
        std::size_t v = order[i];
        none[v].assign(m, 1);
        for (std::size_t e : h.graph.out_edges(v)) {
            const Rational& p = h.prob[e];
            const auto& child = none[h.graph.edge(e).dst];
            for (std::size_t k = 0; k < m; ++k) {
                Rational kept = k + 1 == m ? Rational(0) : child[k + 1];
                none[v][k] *= p * kept + (1 - p) * child[0];
            }
        }
    }
    Rational all_none = 1;
    for (std::size_t v = 0; v < h.graph.vertex_count(); ++v)
        if (h.graph.in_edges(v).empty()) all_none *= none[v][0];
    return 1 - all_none;
}

Rational prob_u_all_dwt(const Graph& g, const ProbGraph& h) {
    require(in_class(h.graph, GraphClass::UnionDownwardTree), "instance must be a union of downward trees");
    auto lm = level_mapping(g);
    if (!lm) return 0;
    if (lm->difference == 0) return 1;
    const std::size_t m = static_cast<std::size_t>(lm->difference);
    return prob_disconnected_instance(directed_path(m), h,
                                      [m](const Graph&, const ProbGraph& comp) { return prob_dwt_path_at_least(m, comp); });
}

Rational prob_disconnected_instance(const Graph& g, const ProbGraph& h, const ComponentSolver& solve) {
    require(in_class(g, GraphClass::Connected), "query must be connected");
    auto comps = connected_components(h.graph);
    if (comps.size() == 1) return solve(g, h);
    Rational none = 1;
    for (const auto& comp : comps) {
        Subgraph sub = induced_subgraph(h, comp);
        none *= 1 - solve(g, sub.graph);
    }
    return 1 - none;
}

}  // namespace phom
