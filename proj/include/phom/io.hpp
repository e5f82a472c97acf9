#pragma once

#include "phom/dnf.hpp"
#include "phom/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace phom {

enum class GraphKind { Query, Instance };

struct GraphFile {
    GraphKind kind = GraphKind::Query;
    ProbGraph graph;  // `prob` is empty for queries
};

/// Line-oriented graph format:
///   alphabet R S T        (optional; `alphabet _` for the unlabeled case)
///   kind query|instance   (optional; inferred from the presence of probabilities)
///   node <id>
///   edge <src> <dst> <label> [<prob>]
/// `#` starts a comment. Errors are Parse / validation errors with line numbers.
GraphFile parse_graph(std::istream& is, const std::string& source = "<input>");
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& os, const Graph& g);
void write_graph(std::ostream& os, const ProbGraph& g);
void write_graph_file(const std::string& path, const Graph& g);
void write_graph_file(const std::string& path, const ProbGraph& g);

/// `dnf <vars> <clauses>`, then `v <idx> <name> <prob>` and `clause <idx>...` lines.
void write_dnf(std::ostream& os, const PositiveDNF& phi, std::span<const Rational> pi);

}  // namespace phom
