#pragma once

#include "phom/automaton.hpp"
#include "phom/dnf.hpp"
#include "phom/graph.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace phom {

struct HomResult {
    bool exists = false;
    std::vector<std::size_t> witness;  // query vertex -> target vertex, when `exists`
};

/// Homomorphism test into a two-way path by arc consistency over path
/// positions; a witness is read off the domain minima and checked.
HomResult hom_to_2wp(const Graph& g, const Graph& path);

/// Vertices and edges of a two-way path in path order. `edge_at[k]` joins
/// `vertex_at[k]` and `vertex_at[k+1]`.
struct PathLayout {
    std::vector<std::size_t> vertex_at;
    std::vector<std::size_t> edge_at;
};

/// Throws NotA2WP. Starts from the smallest endpoint.
PathLayout path_layout(const Graph& path);

/// Intervals `[l, r]` of edge positions (0-based, inclusive) whose subpath
/// admits a match of the query.
struct IntervalFamily {
    std::size_t length = 0;
    std::vector<std::pair<std::size_t, std::size_t>> intervals;
};

/// All matching subpaths, or only the inclusion-minimal ones.
IntervalFamily interval_family(const Graph& g, const Graph& path, bool minimal = true);

/// Probability that at least one interval has all its edges present, given
/// per-position probabilities. Expects a minimal family.
Rational interval_union_prob(const IntervalFamily& f, const std::vector<Rational>& prob_at);

/// Labeled connected query on a two-way path instance.
Rational prob_l_connected_2wp(const Graph& g, const ProbGraph& h);
PositiveDNF lineage_l_connected_2wp(const Graph& g, const ProbGraph& h, bool minimal = true);

/// Labeled one-way path query on a downward tree instance.
Rational prob_l_1wp_dwt(const Graph& g, const ProbGraph& h);
PositiveDNF lineage_l_1wp_dwt(const Graph& g, const ProbGraph& h);

/// Full binary ε-tree of a polytree instance rooted at vertex 0.
EpsTree binarize_polytree(const ProbGraph& h);
/// One tree per component of a ⊔PT instance, sharing the edge table of `h`.
std::vector<EpsTree> binarize_forest(const ProbGraph& h);

PathAutomaton build_path_automaton(int m);

enum class Route { Dp, Circuit };

/// Pr(→^m ⇝ H) for an unlabeled polytree H.
Rational prob_u_1wp_pt(std::size_t m, const ProbGraph& h, Route route = Route::Dp);

/// Height of a ⊔DWT query: the length of the path it is equivalent to.
std::size_t longest_path_reduction(const Graph& g);

/// Probability that a ⊔DWT instance keeps a directed path of at least m edges.
Rational prob_dwt_path_at_least(std::size_t m, const ProbGraph& h);

/// Any unlabeled query on a ⊔DWT instance, through its level mapping.
Rational prob_u_all_dwt(const Graph& g, const ProbGraph& h);

using ComponentSolver = std::function<Rational(const Graph&, const ProbGraph&)>;

/// Connected query on a possibly disconnected instance, solving each
/// component separately and combining the complements.
Rational prob_disconnected_instance(const Graph& g, const ProbGraph& h, const ComponentSolver& solve);

}  // namespace phom
