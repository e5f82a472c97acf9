#include "phom/automaton.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <map>

namespace phom {

PathAutomaton::PathAutomaton(int m) : m_(m) {
    if (m < 0) throw Error(ErrorCode::MalformedTree, "path bound must be non-negative");
}

std::size_t PathAutomaton::state_count() const noexcept {
    const std::size_t n = static_cast<std::size_t>(m_) + 1;
    return n * n * n;
}

std::size_t PathAutomaton::index(const PathState& s) const {
    const std::size_t n = static_cast<std::size_t>(m_) + 1;
    return (static_cast<std::size_t>(s.up) * n + static_cast<std::size_t>(s.down)) * n + static_cast<std::size_t>(s.max);
}

PathState PathAutomaton::state(std::size_t index) const {
    const std::size_t n = static_cast<std::size_t>(m_) + 1;
    return {static_cast<int>(index / (n * n)), static_cast<int>(index / n % n), static_cast<int>(index % n)};
}

PathState PathAutomaton::initial(Direction d, bool kept) const {
    if (!kept || d == Direction::None || m_ == 0) return {0, 0, 0};
    return d == Direction::Up ? PathState{1, 0, 1} : PathState{0, 1, 1};
}

PathState PathAutomaton::transition(Direction d, bool kept, const PathState& l, const PathState& r) const {
    const int through = std::max(l.up + r.down, r.up + l.down);
    const int inner = std::max({l.max, r.max, through});
    if (!kept) return {0, 0, std::min(m_, inner)};
    switch (d) {
    case Direction::Up: {
        const int up = std::min(m_, std::max(l.up, r.up) + 1);
        return {up, 0, std::min(m_, std::max(up, inner))};
    }
    case Direction::Down: {
        const int down = std::min(m_, std::max(l.down, r.down) + 1);
        return {0, down, std::min(m_, std::max(down, inner))};
    }
    case Direction::None: break;
    }
    return {std::max(l.up, r.up), std::max(l.down, r.down), std::min(m_, inner)};
}

void EpsTree::validate() const {
    if (nodes.empty()) throw Error(ErrorCode::MalformedTree, "empty tree");
    if (root != nodes.size() - 1) throw Error(ErrorCode::MalformedTree, "root must be the last node");
    std::vector<int> parents(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const EpsNode& n = nodes[i];
        if ((n.left == EpsNode::npos) != (n.right == EpsNode::npos))
            throw Error(ErrorCode::MalformedTree, "node " + std::to_string(i) + " has exactly one child");
        if (!n.leaf()) {
            if (n.left >= i || n.right >= i || n.left == n.right)
                throw Error(ErrorCode::MalformedTree, "node " + std::to_string(i) + " has invalid children");
            ++parents[n.left];
            ++parents[n.right];
        }
        if (!is_probability(n.prob)) throw Error(ErrorCode::MalformedTree, "node probability outside [0,1]");
        if (n.edge) {
            if (n.label == Direction::None) throw Error(ErrorCode::MalformedTree, "edge node without a direction");
            if (*n.edge >= edge_names.size()) throw Error(ErrorCode::MalformedTree, "edge id out of range");
        } else if (n.prob != 1) {
            throw Error(ErrorCode::MalformedTree, "structural node with probability below 1");
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (parents[i] != (i == root ? 0 : 1))
            throw Error(ErrorCode::MalformedTree, "node " + std::to_string(i) + " is not referenced exactly once");
    if (nodes[root].label != Direction::None || nodes[root].prob != 1 || nodes[root].edge)
        throw Error(ErrorCode::MalformedTree, "root must be an unlabeled node of probability 1");
}

std::size_t EpsTree::labeled_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const EpsNode& n) { return n.edge.has_value(); }));
}

Rational automaton_accept_prob(const PathAutomaton& a, const EpsTree& t) {
    t.validate();
    using Dist = std::map<std::size_t, Rational>;
    std::vector<Dist> dist(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const EpsNode& n = t.nodes[i];
        Dist& out = dist[i];
        const Rational keep = n.prob, drop = 1 - n.prob;
        for (bool kept : {true, false}) {
            const Rational& w = kept ? keep : drop;
            if (w == 0) continue;
            if (n.leaf()) {
                out[a.index(a.initial(n.label, kept))] += w;
                continue;
            }
            for (const auto& [ls, lp] : dist[n.left])
                for (const auto& [rs, rp] : dist[n.right])
                    out[a.index(a.transition(n.label, kept, a.state(ls), a.state(rs)))] += w * lp * rp;
        }
        if (!n.leaf()) {
            dist[n.left].clear();
            dist[n.right].clear();
        }
    }
    Rational total = 0;
    for (const auto& [s, p] : dist[t.root])
        if (a.accepting(a.state(s))) total += p;
    return total;
}

namespace {

// Gate per reachable state at the root of `t`.
std::map<std::size_t, std::size_t> compile_states(const PathAutomaton& a, const EpsTree& t, Circuit& c) {
    t.validate();
    using Gates = std::map<std::size_t, std::vector<std::size_t>>;
    std::vector<std::map<std::size_t, std::size_t>> at(t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const EpsNode& n = t.nodes[i];
        Gates pending;
        for (bool kept : {true, false}) {
            std::size_t lit;
            if (n.edge) lit = c.literal(*n.edge, kept);
            else if (kept) lit = c.constant(true);
            else continue;
            if (n.leaf()) {
                pending[a.index(a.initial(n.label, kept))].push_back(lit);
                continue;
            }
            for (const auto& [ls, lg] : at[n.left])
                for (const auto& [rs, rg] : at[n.right])
                    pending[a.index(a.transition(n.label, kept, a.state(ls), a.state(rs)))].push_back(c.make_and({lit, lg, rg}));
        }
        for (auto& [s, parts] : pending) {
            std::size_t g = c.make_or(std::move(parts), true);
            if (c.gate(g).kind != GateKind::False) at[i][s] = g;
        }
        if (!n.leaf()) {
            at[n.left].clear();
            at[n.right].clear();
        }
    }
    return at[t.root];
}

}  // namespace

Circuit compile_automaton_circuit(const PathAutomaton& a, const EpsTree& t) {
    Circuit c(t.edge_names);
    std::vector<std::size_t> accept;
    for (const auto& [s, g] : compile_states(a, t, c))
        if (a.accepting(a.state(s))) accept.push_back(g);
    c.set_output(c.make_or(std::move(accept), true));
    return c;
}

Circuit compile_automaton_forest(const PathAutomaton& a, const std::vector<EpsTree>& forest) {
    if (forest.empty()) throw Error(ErrorCode::MalformedTree, "empty forest");
    Circuit c(forest.front().edge_names);
    std::vector<std::size_t> disjuncts;
    std::vector<std::size_t> rejected_so_far;
    for (const EpsTree& t : forest) {
        if (t.edge_names != forest.front().edge_names)
            throw Error(ErrorCode::MalformedTree, "forest trees must share one edge table");
        std::vector<std::size_t> accept, reject;
        for (const auto& [s, g] : compile_states(a, t, c))
            (a.accepting(a.state(s)) ? accept : reject).push_back(g);
        std::size_t acc = c.make_or(std::move(accept), true);
        std::size_t rej = c.make_or(std::move(reject), true);
        // This tree accepts and every earlier one rejects.
        std::vector<std::size_t> conj = rejected_so_far;
        conj.push_back(acc);
        disjuncts.push_back(c.make_and(std::move(conj)));
        rejected_so_far.push_back(rej);
    }
    c.set_output(c.make_or(std::move(disjuncts), true));
    return c;
}

}  // namespace phom
