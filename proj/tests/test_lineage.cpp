#include "doctest.h"

#include "phom/automaton.hpp"
#include "phom/circuit.hpp"
#include "phom/dnf.hpp"
#include "phom/error.hpp"
#include "phom/tractable.hpp"
#include "phom/worlds.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

#include <functional>
#include <map>
#include <sstream>

using namespace phom;
using namespace phom::testing;

namespace {

Hypergraph hyper(std::size_t n, std::vector<std::vector<std::size_t>> edges) {
    Hypergraph h;
    for (std::size_t i = 0; i < n; ++i) h.vertices.push_back("v" + std::to_string(i));
    h.edges = std::move(edges);
    return h;
}

// Searches every elimination sequence, memoised on the set of removed vertices.
bool beta_acyclic_exhaustive(const Hypergraph& h) {
    std::size_t n = h.vertices.size();
    std::map<std::uint32_t, bool> memo;
    auto reduced = [&](std::uint32_t removed) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& e : h.edges) {
            std::vector<std::size_t> r;
            for (std::size_t v : e)
                if (!((removed >> v) & 1)) r.push_back(v);
            if (!r.empty()) out.push_back(r);
        }
        return out;
    };
    auto leaf = [](const std::vector<std::vector<std::size_t>>& edges, std::size_t v) {
        std::vector<const std::vector<std::size_t>*> inc;
        for (const auto& e : edges)
            if (std::find(e.begin(), e.end(), v) != e.end()) inc.push_back(&e);
        for (auto* a : inc)
            for (auto* b : inc) {
                bool ab = std::includes(b->begin(), b->end(), a->begin(), a->end());
                bool ba = std::includes(a->begin(), a->end(), b->begin(), b->end());
                if (!ab && !ba) return false;
            }
        return true;
    };
    std::function<bool(std::uint32_t)> go = [&](std::uint32_t removed) {
        auto edges = reduced(removed);
        if (edges.empty()) return true;
        if (auto it = memo.find(removed); it != memo.end()) return it->second;
        bool ok = false;
        for (std::size_t v = 0; v < n && !ok; ++v)
            if (!((removed >> v) & 1) && leaf(edges, v)) ok = go(removed | (1u << v));
        return memo[removed] = ok;
    };
    return go(0);
}

}  // namespace

TEST_CASE("DNF hypergraphs") {
    PositiveDNF phi{{"a", "b", "c"}, {{0, 1}, {1, 2}}};
    Hypergraph h = dnf_hypergraph(phi);
    CHECK(h.edges == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
    CHECK(dnf_hypergraph({{"a"}, {{0}, {0}}}).edges.size() == 1);
    CHECK(error_of([] { validate_dnf({{"a"}, {{}}}); }) == ErrorCode::MalformedFormula);
    CHECK(error_of([] { validate_dnf({{"a"}, {{1}}}); }) == ErrorCode::MalformedFormula);

    PositiveDNF m = minimize_dnf({{"a", "b", "c"}, {{0, 1}, {1, 0}, {0}, {1, 2}}});
    CHECK(m.clauses == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
}

TEST_CASE("beta elimination examples") {
    CHECK(beta_elimination_order(hyper(0, {})) == std::vector<std::size_t>{});
    CHECK(beta_elimination_order(hyper(2, {{0}, {0, 1}})) == std::vector<std::size_t>{0, 1});
    CHECK(!beta_elimination_order(hyper(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK(!is_beta_leaf({{0, 1}, {1, 2}, {0, 2}}, 0));
    CHECK(is_beta_leaf({{0}, {0, 1}, {0, 1, 2}}, 0));
    // adding the full edge makes the triangle beta-cyclic still, but alpha-acyclic
    CHECK(!beta_elimination_order(hyper(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}})));
}

TEST_CASE("greedy beta elimination agrees with exhaustive search") {
    Rng rng(31);
    for (int it = 0; it < 400; ++it) {
        std::size_t n = uniform(rng, 1, 7);
        std::vector<std::vector<std::size_t>> edges;
        std::size_t k = uniform(rng, 0, 6);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> e;
            for (std::size_t v = 0; v < n; ++v)
                if (coin(rng, 0.4)) e.push_back(v);
            if (!e.empty()) edges.push_back(e);
        }
        Hypergraph h = hyper(n, edges);
        auto order = beta_elimination_order(h);
        CHECK(order.has_value() == beta_acyclic_exhaustive(h));
        if (!order) continue;
        // replaying the order removes one beta-leaf at a time
        std::vector<std::vector<std::size_t>> cur = edges;
        for (std::size_t v : *order) {
            CHECK(is_beta_leaf(cur, v));
            for (auto& e : cur) e.erase(std::remove(e.begin(), e.end(), v), e.end());
            cur.erase(std::remove_if(cur.begin(), cur.end(), [](const auto& e) { return e.empty(); }), cur.end());
        }
        CHECK(cur.empty());
    }
}

TEST_CASE("circuit probability") {
    Circuit x({"x"});
    x.set_output(x.literal(0));
    std::vector<Rational> p{Rational(2, 5)};
    CHECK(circuit_prob(x, p) == Rational(2, 5));

    Circuit c({"x", "y"});
    std::size_t left = c.make_and({c.literal(0)});
    std::size_t right = c.make_and({c.literal(0, false), c.literal(1)});
    c.set_output(c.make_or({left, right}, true));
    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK(circuit_prob(c, half, true) == Rational(3, 4));
    CHECK(validate_ddnnf(c).ok());
    CHECK(validate_ddnnf(c).exhaustive);

    Circuit k;
    k.set_output(k.constant(true));
    CHECK(circuit_prob(k, {}) == 1);
}

TEST_CASE("d-DNNF validation finds violations") {
    Circuit dup({"x"});
    std::size_t lx = dup.literal(0);
    Gate g;
    g.kind = GateKind::And;
    g.children = {lx, lx};
    dup.set_output(dup.add_gate(g));
    CHECK(!validate_ddnnf(dup).decomposable);

    Circuit nondet({"x", "y"});
    nondet.set_output(nondet.make_or({nondet.literal(0), nondet.literal(1)}));
    DdnnfReport r = validate_ddnnf(nondet);
    CHECK(r.decomposable);
    CHECK(!r.deterministic);
    CHECK(!r.violations.empty());
    std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK(error_of([&] { circuit_prob(nondet, half, true); }) == ErrorCode::NotValidated);

    // past the exhaustive limit only certificates count
    DdnnfReport coarse = validate_ddnnf(nondet, 1);
    CHECK(!coarse.exhaustive);
    CHECK(!coarse.deterministic);
}

TEST_CASE("folding builders") {
    Circuit c({"x", "y"});
    std::size_t t = c.constant(true), f = c.constant(false), x = c.literal(0);
    CHECK(c.make_and({t, x}) == x);
    CHECK(c.gate(c.make_and({f, x})).kind == GateKind::False);
    CHECK(c.gate(c.make_or({t, x})).kind == GateKind::True);
    CHECK(c.make_or({f, x}) == x);
    std::size_t a = c.make_and({x, c.literal(1)});
    CHECK(c.make_and({c.literal(1), x}) == a);
}

TEST_CASE("circuit text round-trip") {
    Circuit c({"a->b", "b->c"});
    std::size_t l = c.make_and({c.literal(0), c.literal(1, false)});
    c.set_output(c.make_or({l, c.literal(0, false)}, true));
    std::ostringstream os;
    write_circuit(os, c);
    std::istringstream is(os.str());
    Circuit back = read_circuit(is);
    std::ostringstream again;
    write_circuit(again, back);
    CHECK(os.str() == again.str());
    for (int v = 0; v < 4; ++v) {
        std::vector<bool> val{bool(v & 1), bool(v & 2)};
        CHECK(circuit_eval(c, val) == circuit_eval(back, val));
    }
    std::istringstream bad("circuit 1 0\n0 AND 3\nout 0\n");
    CHECK(error_of([&] { read_circuit(bad); }).has_value());
}

TEST_CASE("path automaton on single letters") {
    PathAutomaton a(2);
    CHECK(a.state_count() == 27);
    for (std::size_t i = 0; i < a.state_count(); ++i) CHECK(a.index(a.state(i)) == i);
    CHECK(a.initial(Direction::Up, true) == PathState{1, 0, 1});
    CHECK(a.initial(Direction::Down, true) == PathState{0, 1, 1});
    CHECK(a.initial(Direction::Down, false) == PathState{0, 0, 0});
    CHECK(a.initial(Direction::None, true) == PathState{0, 0, 0});
    PathState one = a.initial(Direction::Down, true);
    PathState zero{};
    // two kept down-edges stacked give a path of length 2
    CHECK(a.accepting(a.transition(Direction::Down, true, one, zero)));
    // an up edge over a down edge does not
    CHECK(!a.accepting(a.transition(Direction::Up, true, one, zero)));
    // a node joining an up branch and a down branch
    PathState up = a.initial(Direction::Up, true);
    CHECK(a.accepting(a.transition(Direction::None, true, up, one)));
    CHECK(PathAutomaton(0).initial(Direction::Up, true) == PathState{0, 0, 0});
    CHECK(PathAutomaton(0).accepting(PathState{}));
}

TEST_CASE("binarization shapes") {
    ProbGraph v = build_prob_graph({"v"}, {});
    EpsTree tv = binarize_polytree(v);
    CHECK(tv.nodes.size() == 3);
    CHECK(tv.labeled_count() == 0);

    ProbGraph e = build_prob_graph({}, {{"u", "v", "_", q("1/3")}});
    EpsTree te = binarize_polytree(e);
    REQUIRE(te.labeled_count() == 1);
    for (const auto& n : te.nodes)
        if (n.edge) {
            CHECK(n.label == Direction::Down);
            CHECK(n.prob == Rational(1, 3));
        }

    ProbGraph pt = with_uniform_prob(pt_example(), Rational(1, 2));
    EpsTree tp = binarize_polytree(pt);
    CHECK(tp.labeled_count() == pt.graph.edge_count());
    std::set<std::size_t> used;
    for (const auto& n : tp.nodes) {
        CHECK((n.leaf() || n.right != EpsNode::npos));
        if (n.edge) CHECK(used.insert(*n.edge).second);
    }
    CHECK(tp.root == tp.nodes.size() - 1);

    EpsTree broken = tp;
    broken.nodes.back().left = broken.nodes.back().right;
    CHECK(error_of([&] { broken.validate(); }) == ErrorCode::MalformedTree);
    CHECK(error_of([] { binarize_polytree(example_instance()); }) == ErrorCode::ClassMismatch);
}

TEST_CASE("compiled automaton circuits") {
    ProbGraph v = build_prob_graph({"v"}, {});
    Circuit c0 = compile_automaton_circuit(PathAutomaton(0), binarize_polytree(v));
    CHECK(c0.gate(c0.output()).kind == GateKind::True);

    ProbGraph e = build_prob_graph({}, {{"u", "v", "_", q("2/9")}});
    Circuit c1 = compile_automaton_circuit(PathAutomaton(1), binarize_polytree(e));
    CHECK(!circuit_eval(c1, {false}));
    CHECK(circuit_eval(c1, {true}));
    CHECK(circuit_prob(c1, e.prob, true) == Rational(2, 9));
    CHECK(circuit_prob(c1, e.prob, true) == brute_prob(directed_path(1), e));

    ProbGraph pt = with_uniform_prob(pt_example(), Rational(1, 2));
    Circuit c2 = compile_automaton_circuit(PathAutomaton(2), binarize_polytree(pt));
    CHECK(validate_ddnnf(c2).ok());
    CHECK(circuit_prob(c2, pt.prob, true) == brute_prob(directed_path(2), pt));
    CHECK(automaton_accept_prob(PathAutomaton(2), binarize_polytree(pt)) == brute_prob(directed_path(2), pt));
}

TEST_CASE("compiled circuits accept exactly the worlds with a long path") {
    Rng rng(32);
    for (int it = 0; it < 60; ++it) {
        ProbGraph h = to_prob_graph(rng, tree(rng, uniform(rng, 2, 9), false, unlabeled_alphabet), unlabeled_alphabet);
        int m = static_cast<int>(uniform(rng, 1, 4));
        PathAutomaton a(m);
        Circuit c = compile_automaton_circuit(a, binarize_polytree(h));
        CHECK(validate_ddnnf(c).ok());
        Graph path = directed_path(static_cast<std::size_t>(m));
        for (const auto& w : enumerate_worlds(h)) CHECK(circuit_eval(c, w.kept) == hom_exists_bf(path, world_graph(h.graph, w.kept)));
    }
}

TEST_CASE("forest circuits") {
    Rng rng(33);
    for (int it = 0; it < 40; ++it) {
        Shape s = disjoint_union({tree(rng, uniform(rng, 1, 5), false, unlabeled_alphabet),
                                  tree(rng, uniform(rng, 1, 5), false, unlabeled_alphabet)});
        ProbGraph h = to_prob_graph(rng, s, unlabeled_alphabet);
        int m = static_cast<int>(uniform(rng, 1, 3));
        Circuit c = compile_automaton_forest(PathAutomaton(m), binarize_forest(h));
        CHECK(validate_ddnnf(c).ok());
        CHECK(circuit_prob(c, h.prob, true) == brute_prob(directed_path(static_cast<std::size_t>(m)), h));
    }
}
