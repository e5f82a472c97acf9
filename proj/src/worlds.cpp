#include "phom/worlds.hpp"

#include "hom_search.hpp"
#include "phom/dnf.hpp"
#include "phom/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>

namespace phom {
namespace detail {

HomSearch::HomSearch(const Graph& query, const Graph& target) : present(target.edge_count(), 1), target_(target) {
    const std::size_t n = query.vertex_count();
    assign_.assign(n, SIZE_MAX);
    std::vector<std::size_t> label_map(query.alphabet().size(), SIZE_MAX);
    for (std::size_t l = 0; l < query.alphabet().size(); ++l)
        if (auto t = target.find_label(query.label_name(l))) label_map[l] = *t;
    for (const Edge& e : query.edges())
        if (label_map[e.label] == SIZE_MAX) impossible_ = true;
    if (impossible_) return;

    std::vector<std::size_t> pos(n, SIZE_MAX);
    for (std::size_t s = 0; s < n; ++s) {
        if (pos[s] != SIZE_MAX) continue;
        std::vector<std::size_t> order{s};
        pos[s] = steps_.size();
        for (std::size_t head = 0; head < order.size(); ++head) {
            std::size_t v = order[head];
            for (std::size_t e : query.out_edges(v))
                if (pos[query.edge(e).dst] == SIZE_MAX) {
                    pos[query.edge(e).dst] = steps_.size() + order.size();
                    order.push_back(query.edge(e).dst);
                }
            for (std::size_t e : query.in_edges(v))
                if (pos[query.edge(e).src] == SIZE_MAX) {
                    pos[query.edge(e).src] = steps_.size() + order.size();
                    order.push_back(query.edge(e).src);
                }
        }
        for (std::size_t v : order) {
            Step st{v, false, {}, {}};
            for (std::size_t e : query.out_edges(v)) {
                const Edge& ed = query.edge(e);
                if (pos[ed.dst] <= pos[v]) st.checks.push_back({ed.dst, label_map[ed.label], true});
            }
            for (std::size_t e : query.in_edges(v)) {
                const Edge& ed = query.edge(e);
                if (pos[ed.src] < pos[v]) st.checks.push_back({ed.src, label_map[ed.label], false});
            }
            for (std::size_t i = 0; i < st.checks.size(); ++i) {
                if (st.checks[i].other != v) {
                    st.anchored = true;
                    st.anchor = st.checks[i];
                    st.checks.erase(st.checks.begin() + static_cast<long>(i));
                    break;
                }
            }
            steps_.push_back(std::move(st));
        }
        component_end_.push_back(steps_.size());
    }
}

bool HomSearch::has_edge(std::size_t a, std::size_t b, std::size_t label) const {
    for (std::size_t e : target_.out_edges(a)) {
        const Edge& ed = target_.edge(e);
        if (ed.dst == b) return ed.label == label && present[e];
    }
    return false;
}

bool HomSearch::place(std::size_t step, std::size_t end) {
    if (step == end) return true;
    const Step& st = steps_[step];
    auto consistent = [&](std::size_t c) {
        for (const Link& l : st.checks) {
            std::size_t other = l.other == st.vertex ? c : assign_[l.other];
            if (l.outgoing ? !has_edge(c, other, l.label) : !has_edge(other, c, l.label)) return false;
        }
        return true;
    };
    auto attempt = [&](std::size_t c) {
        if (!consistent(c)) return false;
        assign_[st.vertex] = c;
        return place(step + 1, end);
    };
    if (!st.anchored) {
        for (std::size_t c = 0; c < target_.vertex_count(); ++c)
            if (attempt(c)) return true;
        return false;
    }
    const std::size_t base = assign_[st.anchor.other];
    if (st.anchor.outgoing) {
        // query edge current -> anchor: candidates are in-neighbours of base
        for (std::size_t e : target_.in_edges(base)) {
            const Edge& ed = target_.edge(e);
            if (present[e] && ed.label == st.anchor.label && attempt(ed.src)) return true;
        }
    } else {
        for (std::size_t e : target_.out_edges(base)) {
            const Edge& ed = target_.edge(e);
            if (present[e] && ed.label == st.anchor.label && attempt(ed.dst)) return true;
        }
    }
    return false;
}

bool HomSearch::run() {
    if (impossible_) return false;
    std::size_t begin = 0;
    for (std::size_t end : component_end_) {
        if (!place(begin, end)) return false;
        begin = end;
    }
    return true;
}

}  // namespace detail

bool hom_exists_bf(const Graph& g, const Graph& w, std::vector<std::size_t>& witness) {
    detail::HomSearch search(g, w);
    if (!search.run()) return false;
    witness = search.assignment();
    return true;
}

bool hom_exists_bf(const Graph& g, const Graph& w) {
    detail::HomSearch search(g, w);
    return search.run();
}

namespace {

// Depth-first walk over the uncertain edges. At each node two monotone
// bounds are tried first: with every undecided edge kept (no match means the
// whole subtree contributes nothing) and with every undecided edge dropped
// (a match means the whole subtree counts).
struct WorldWalk {
    detail::HomSearch lower;  // decided-kept edges only
    detail::HomSearch upper;  // decided-kept plus undecided edges
    const std::vector<std::size_t>& uncertain;
    const std::vector<Integer>& keep_w;
    const std::vector<Integer>& drop_w;
    const std::vector<Integer>& tail_den;  // product of denominators from index i on

    Integer walk(std::size_t i, const Integer& prefix) {
        if (!upper.run()) return 0;
        if (lower.run()) return prefix * tail_den[i];
        // Both bounds disagree, so at least one undecided edge remains.
        std::size_t e = uncertain[i];
        Integer total = 0;
        lower.present[e] = 1;
        total += walk(i + 1, prefix * keep_w[i]);
        lower.present[e] = 0;
        upper.present[e] = 0;
        total += walk(i + 1, prefix * drop_w[i]);
        upper.present[e] = 1;
        return total;
    }
};

}  // namespace

Rational brute_prob(const Graph& g, const ProbGraph& h, const BruteOptions& opts) {
    const Graph& hg = h.graph;
    std::vector<std::size_t> uncertain;
    std::vector<char> base(hg.edge_count(), 0);
    for (std::size_t e = 0; e < hg.edge_count(); ++e) {
        if (h.prob[e] == 1) base[e] = 1;
        else if (h.prob[e] != 0) uncertain.push_back(e);
    }
    if (uncertain.size() > opts.max_uncertain_edges)
        throw Error(ErrorCode::TooManyUncertainEdges, std::to_string(uncertain.size()) + " uncertain edges exceed the cap of " +
                                                          std::to_string(opts.max_uncertain_edges));
    const std::size_t k = uncertain.size();
    std::vector<Integer> keep_w(k), drop_w(k), den(k), tail_den(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& p = h.prob[uncertain[i]];
        den[i] = p.get_den();
        keep_w[i] = p.get_num();
        drop_w[i] = den[i] - keep_w[i];
    }
    tail_den[k] = 1;
    for (std::size_t i = k; i-- > 0;) tail_den[i] = tail_den[i + 1] * den[i];

    auto make_walk = [&]() {
        WorldWalk w{detail::HomSearch(g, hg), detail::HomSearch(g, hg), uncertain, keep_w, drop_w, tail_den};
        w.lower.present = base;
        w.upper.present = base;
        for (std::size_t e : uncertain) w.upper.present[e] = 1;
        return w;
    };

    Integer numerator;
    unsigned threads = std::max(1u, opts.threads);
    std::size_t split = 0;
    while (threads > 1 && split < k && (std::size_t{1} << split) < 4 * static_cast<std::size_t>(threads)) ++split;
    if (split == 0) {
        WorldWalk w = make_walk();
        numerator = w.walk(0, 1);
    } else {
        // Fix the first `split` uncertain edges per task; the per-task sums are
        // added in task order so the result does not depend on scheduling.
        const std::size_t tasks = std::size_t{1} << split;
        std::vector<Integer> partial(tasks);
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            WorldWalk w = make_walk();
            for (std::size_t t = next++; t < tasks; t = next++) {
                Integer prefix = 1;
                for (std::size_t i = 0; i < split; ++i) {
                    bool keep = (t >> i) & 1;
                    w.lower.present[uncertain[i]] = keep;
                    w.upper.present[uncertain[i]] = keep;
                    prefix *= keep ? keep_w[i] : drop_w[i];
                }
                partial[t] = prefix == 0 ? Integer(0) : w.walk(split, prefix);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        for (const Integer& p : partial) numerator += p;
    }
    Rational result(numerator, tail_den[0]);
    result.canonicalize();
    return result;
}

std::vector<PossibleWorld> enumerate_worlds(const ProbGraph& h, std::size_t max_edges) {
    const std::size_t m = h.graph.edge_count();
    if (m > max_edges)
        throw Error(ErrorCode::TooManyEdges, std::to_string(m) + " edges exceed the world enumeration cap");
    std::vector<PossibleWorld> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        PossibleWorld w{std::vector<bool>(m), Rational(1)};
        for (std::size_t e = 0; e < m; ++e) {
            bool keep = (mask >> e) & 1;
            w.kept[e] = keep;
            w.probability *= keep ? h.prob[e] : Rational(1 - h.prob[e]);
        }
        out.push_back(std::move(w));
    }
    return out;
}

Graph world_graph(const Graph& h, const std::vector<bool>& kept) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (kept.at(e)) edges.push_back(h.edge(e));
    return make_graph(h.vertex_names(), h.alphabet(), std::move(edges));
}

Integer count_edge_covers(const BipartiteGraph& gamma) {
    const std::size_t m = gamma.edges.size();
    if (m > 24) throw Error(ErrorCode::TooManyEdges, std::to_string(m) + " edges exceed the cap of 24");
    const std::size_t n = gamma.left_count + gamma.right_count;
    std::vector<char> touched(n, 0);
    for (auto [l, r] : gamma.edges) {
        if (l < 1 || l > gamma.left_count || r < 1 || r > gamma.right_count)
            throw Error(ErrorCode::UnknownVertex, "bipartite edge endpoint out of range");
        touched[l - 1] = touched[gamma.left_count + r - 1] = 1;
    }
    if (std::find(touched.begin(), touched.end(), 0) != touched.end()) return 0;
    // No isolated vertex, so n <= 2m <= 48 and masks fit in 64 bits.
    std::vector<std::uint64_t> mask(m), suffix(m + 1, 0);
    for (std::size_t j = 0; j < m; ++j)
        mask[j] = (std::uint64_t{1} << (gamma.edges[j].first - 1)) |
                  (std::uint64_t{1} << (gamma.left_count + gamma.edges[j].second - 1));
    for (std::size_t j = m; j-- > 0;) suffix[j] = suffix[j + 1] | mask[j];
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t count = 0;
    auto walk = [&](auto&& self, std::size_t j, std::uint64_t covered) -> void {
        if ((covered | suffix[j]) != full) return;
        if (j == m) {
            ++count;
            return;
        }
        self(self, j + 1, covered | mask[j]);
        self(self, j + 1, covered);
    };
    walk(walk, 0, 0);
    return Integer(static_cast<unsigned long>(count));
}

void validate_pp2dnf(const PP2DNF& phi) {
    std::vector<char> seen_x(phi.n1, 0), seen_y(phi.n2, 0);
    for (auto [x, y] : phi.clauses) {
        if (x < 1 || x > phi.n1 || y < 1 || y > phi.n2)
            throw Error(ErrorCode::MalformedFormula, "clause (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
        seen_x[x - 1] = seen_y[y - 1] = 1;
    }
    for (std::size_t i = 0; i < phi.n1; ++i)
        if (!seen_x[i]) throw Error(ErrorCode::UncoveredVariable, "X" + std::to_string(i + 1) + " occurs in no clause");
    for (std::size_t i = 0; i < phi.n2; ++i)
        if (!seen_y[i]) throw Error(ErrorCode::UncoveredVariable, "Y" + std::to_string(i + 1) + " occurs in no clause");
}

Integer count_pp2dnf(const PP2DNF& phi) {
    if (phi.n1 + phi.n2 > 24)
        throw Error(ErrorCode::TooManyVariables, std::to_string(phi.n1 + phi.n2) + " variables exceed the cap of 24");
    validate_pp2dnf(phi);
    std::uint64_t count = 0;
    for (std::uint64_t xs = 0; xs < (std::uint64_t{1} << phi.n1); ++xs) {
        // Y variables that would satisfy some clause given this X valuation.
        std::uint64_t wanted = 0;
        for (auto [x, y] : phi.clauses)
            if ((xs >> (x - 1)) & 1) wanted |= std::uint64_t{1} << (y - 1);
        for (std::uint64_t ys = 0; ys < (std::uint64_t{1} << phi.n2); ++ys)
            if (ys & wanted) ++count;
    }
    return Integer(static_cast<unsigned long>(count));
}

Rational dnf_prob_bf(const PositiveDNF& phi, std::span<const Rational> pi) {
    validate_dnf(phi);
    const std::size_t n = phi.variables.size();
    if (n > 24) throw Error(ErrorCode::TooManyVariables, std::to_string(n) + " variables exceed the cap of 24");
    if (pi.size() != n) throw Error(ErrorCode::MissingProbability, "one probability per variable is required");
    std::vector<std::uint32_t> clause_mask;
    for (const auto& c : phi.clauses) {
        std::uint32_t m = 0;
        for (std::size_t v : c) m |= std::uint32_t{1} << v;
        clause_mask.push_back(m);
    }
    std::vector<Integer> keep(n), drop(n), tail(n + 1);
    tail[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
        keep[i] = pi[i].get_num();
        drop[i] = pi[i].get_den() - pi[i].get_num();
        tail[i] = tail[i + 1] * pi[i].get_den();
    }
    auto satisfied = [&](std::uint32_t val) {
        for (std::uint32_t c : clause_mask)
            if ((c & val) == c) return true;
        return false;
    };
    auto walk = [&](auto&& self, std::size_t i, std::uint32_t val, const Integer& prefix) -> Integer {
        const std::uint32_t rest = i >= 32 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - (std::uint64_t{1} << i));
        if (!satisfied(val | rest)) return 0;
        if (satisfied(val)) return prefix * tail[i];
        return self(self, i + 1, val | (std::uint32_t{1} << i), prefix * keep[i]) +
               self(self, i + 1, val, prefix * drop[i]);
    };
    Rational r(walk(walk, 0, 0, 1), tail[0]);
    r.canonicalize();
    return r;
}

}  // namespace phom
