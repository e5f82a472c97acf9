#pragma once

#include "phom/graph.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace phom {

enum class GraphClass {
    OneWayPath,
    TwoWayPath,
    DownwardTree,
    Polytree,
    Connected,
    UnionOneWayPath,
    UnionTwoWayPath,
    UnionDownwardTree,
    UnionPolytree,
    All,
};

/// Every class, from most to least specific.
inline constexpr std::array<GraphClass, 10> all_classes = {
    GraphClass::OneWayPath,      GraphClass::TwoWayPath,      GraphClass::DownwardTree,
    GraphClass::Polytree,        GraphClass::Connected,       GraphClass::UnionOneWayPath,
    GraphClass::UnionTwoWayPath, GraphClass::UnionDownwardTree, GraphClass::UnionPolytree,
    GraphClass::All,
};

std::string_view class_name(GraphClass c);

/// Accepts the short names (`1WP`, `U2WP`, `⊔PT`, `All`, ...); throws UnknownClass.
GraphClass parse_class(std::string_view name);

/// Inclusion `sub ⊆ super` in the class lattice (reflexive).
bool class_includes(GraphClass sub, GraphClass super);

/// Connected classes are 1WP, 2WP, DWT, PT and Connected.
bool is_connected_class(GraphClass c);

/// ⊔X for a connected tree class X, identity elsewhere.
GraphClass union_of(GraphClass c);

struct ClassReport {
    std::set<GraphClass> classes;
    GraphClass most_specific = GraphClass::All;

    bool contains(GraphClass c) const { return classes.count(c) != 0; }
};

/// Weakly connected components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

ClassReport recognize(const Graph& g);

/// Membership test for a single class.
bool in_class(const Graph& g, GraphClass c);

struct LevelMapping {
    std::vector<long> level;
    long difference = 0;
};

/// Level mapping with `level(dst) = level(src) - 1` on every edge, each
/// component shifted to minimum 0. Labels are ignored.
std::optional<LevelMapping> level_mapping(const Graph& g);

/// Number of edges on a longest directed path; nullopt if a directed cycle exists.
std::optional<std::size_t> longest_directed_path(const Graph& g);

}  // namespace phom
