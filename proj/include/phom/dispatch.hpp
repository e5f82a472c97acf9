#pragma once

#include "phom/classes.hpp"
#include "phom/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace phom {

enum class AlgorithmId {
    LConnected2WP,  // interval lineage on a two-way path
    L1WPDWT,        // pattern-matching DP on a downward tree
    UAllDWT,        // level mapping collapse on ⊔DWT
    UDWTPT,         // height collapse plus path automaton on ⊔PT
};

std::string_view algorithm_name(AlgorithmId a);

struct Verdict {
    enum class Status { Tractable, Hard, BruteForceOnly };

    Status status = Status::Hard;
    std::optional<AlgorithmId> algorithm;  // set iff Tractable
    std::string citation;

    bool operator==(const Verdict&) const = default;
};

std::string_view status_name(Verdict::Status s);

/// Table lookup for a query class, instance class and setting. ⊔X instance
/// classes read the X column and All reads the Connected column.
Verdict dispatch(GraphClass query, GraphClass instance, bool labeled);
/// String form; throws UnknownClass.
Verdict dispatch(std::string_view query, std::string_view instance, bool labeled);

/// The three classification tables as plain text.
std::string render_tables();

/// Runs a tractable algorithm; the caller guarantees class membership
/// (ClassMismatch otherwise).
Rational run_tractable(AlgorithmId a, const Graph& query, const ProbGraph& instance);

}  // namespace phom
