#pragma once

#include "phom/classes.hpp"
#include "phom/dispatch.hpp"
#include "phom/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace phom {

struct ProblemInstance {
    Graph query;
    ProbGraph instance;
};

struct SolveOptions {
    bool force_brute = false;
    std::size_t max_brute_edges = 24;
    unsigned threads = 1;
    /// Forced classes; checked against the graphs before use.
    std::optional<GraphClass> assume_query_class;
    std::optional<GraphClass> assume_instance_class;
};

struct HardReport {
    GraphClass query_class = GraphClass::All;
    GraphClass instance_class = GraphClass::All;
    std::string citation;
    std::size_t uncertain_edges = 0;
    std::size_t cap = 0;
};

struct SolveResult {
    std::optional<Rational> probability;  // absent iff `hard` is set
    Verdict verdict;
    std::string route;
    GraphClass query_class = GraphClass::All;
    GraphClass instance_class = GraphClass::All;
    bool labeled = false;
    std::optional<HardReport> hard;
};

/// Whether the union of both alphabets has more than one label.
bool is_labeled(const Graph& query, const Graph& instance);

std::size_t uncertain_edge_count(const ProbGraph& h);

/// Classifies both graphs, runs the first tractable algorithm found over the
/// recognised class pairs, and otherwise falls back to world enumeration
/// within the cap. Past the cap a HardReport is returned.
SolveResult solve(const ProblemInstance& p, const SolveOptions& opts = {});

}  // namespace phom
