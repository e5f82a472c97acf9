#pragma once

// Small named graphs used across the test binaries.

#include "phom/error.hpp"
#include "phom/graph.hpp"
#include "phom/worlds.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phom::testing {

inline Rational q(const char* s) { return parse_rational(s); }

/// Error code thrown by `f`, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Query x -R-> y -S-> z <-S- w.
inline Graph example_query() {
    return build_graph({}, {{"x", "y", "R"}, {"y", "z", "S"}, {"w", "z", "S"}}, {"R", "S"});
}

/// Four-vertex instance with a 2-cycle a<->c and the cycle a->b->c->d->a.
inline ProbGraph example_instance() {
    return build_prob_graph({},
                            {{"a", "b", "R", q("1")},
                             {"b", "c", "R", q("0.1")},
                             {"c", "d", "R", q("0.1")},
                             {"d", "a", "R", q("0.05")},
                             {"c", "a", "S", q("0.7")},
                             {"a", "c", "R", q("0.8")}},
                            {"R", "S"});
}

/// R S S T one-way path.
inline Graph labeled_1wp_example() {
    return build_graph({}, {{"a1", "a2", "R"}, {"a2", "a3", "S"}, {"a3", "a4", "S"}, {"a4", "a5", "T"}},
                       {"R", "S", "T"});
}

/// R <-S <-S T <-R two-way path.
inline Graph labeled_2wp_example() {
    return build_graph({},
                       {{"b1", "b2", "R"}, {"b3", "b2", "S"}, {"b4", "b3", "S"}, {"b4", "b5", "T"}, {"b6", "b5", "R"}},
                       {"R", "S", "T"});
}

inline std::vector<EdgeSpec> dwt_example_edges() {
    return {{"c01", "c02"}, {"c01", "c03"}, {"c02", "c04"}, {"c02", "c05"}, {"c03", "c06"},
            {"c03", "c07"}, {"c05", "c08"}, {"c05", "c09"}, {"c09", "c11"}, {"c06", "c10"},
            {"c10", "c12"}, {"c10", "c13"}, {"c10", "c14"}};
}

inline std::vector<EdgeSpec> pt_example_edges() {
    return {{"d02", "d04"}, {"d05", "d02"}, {"d01", "d02"}, {"d03", "d01"}, {"d03", "d06"},
            {"d03", "d07"}, {"d08", "d05"}, {"d05", "d09"}, {"d09", "d11"}, {"d06", "d10"},
            {"d12", "d10"}, {"d13", "d10"}, {"d10", "d14"}};
}

/// 14-vertex downward tree of height 4.
inline Graph dwt_example() { return build_graph({}, dwt_example_edges()); }

/// 14-vertex polytree with mixed orientations.
inline Graph pt_example() { return build_graph({}, pt_example_edges()); }

inline ProbGraph with_uniform_prob(const Graph& g, const Rational& p) {
    auto specs = edge_specs(g);
    for (auto& e : specs) e.prob = p;
    return build_prob_graph(g.vertex_names(), specs, g.alphabet());
}

/// Graded DAG whose levels run from 0 to 5; the two-digit names encode
/// (x position, level) of the drawing.
inline Graph level_mapping_example() {
    return build_graph({}, {{"02", "11"}, {"11", "20"}, {"22", "11"}, {"22", "31"}, {"33", "22"},
                            {"u1", "33"}, {"33", "u2"}, {"u2", "51"}, {"62", "51"}, {"62", "71"},
                            {"v2", "71"}, {"73", "62"}, {"73", "v2"}, {"64", "73"}, {"v1", "73"},
                            {"75", "64"}});
}

/// Two left vertices, three right vertices, four edges.
inline BipartiteGraph cover_example() { return {2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}}}; }

/// X1Y2 ∨ X1Y1 ∨ X2Y2.
inline PP2DNF formula_example() { return {2, 2, {{1, 2}, {1, 1}, {2, 2}}}; }

}  // namespace phom::testing
