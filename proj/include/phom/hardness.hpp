#pragma once

#include "phom/graph.hpp"
#include "phom/worlds.hpp"

#include <cstddef>
#include <iosfwd>

namespace phom {

enum class TargetCount { EdgeCovers, Pp2dnfSat };

/// A query/instance pair whose probability, scaled by 2^s, equals the count
/// of the source object.
struct ReductionOutput {
    Graph query;
    ProbGraph instance;
    std::size_t scaling_exponent = 0;
    TargetCount target = TargetCount::EdgeCovers;
};

/// ⊔1WP query on a 1WP instance over {C, L, R, V}.
ReductionOutput gen_edge_cover_labeled(const BipartiteGraph& gamma);
/// ⊔2WP query on a 2WP instance, unlabeled.
ReductionOutput gen_edge_cover_unlabeled(const BipartiteGraph& gamma);
/// 1WP query on a polytree instance over {S, T}.
ReductionOutput gen_pp2dnf_labeled(const PP2DNF& phi);
/// 2WP query on a polytree instance, unlabeled.
ReductionOutput gen_pp2dnf_unlabeled(const PP2DNF& phi);

/// `e j l r` lines (edge j joins x_l and y_r), optional `sizes nl nr`, `#` comments.
BipartiteGraph parse_bipartite(std::istream& is);
/// Header `n1 n2`, then one `x y` line per clause, `#` comments.
PP2DNF parse_pp2dnf(std::istream& is);

}  // namespace phom
