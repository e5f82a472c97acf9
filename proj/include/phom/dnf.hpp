#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace phom {

/// Monotone DNF: a disjunction of clauses, each a set of variable indices.
struct PositiveDNF {
    std::vector<std::string> variables;
    std::vector<std::vector<std::size_t>> clauses;
};

/// Throws MalformedFormula on empty clauses or out-of-range variables.
void validate_dnf(const PositiveDNF& phi);

struct Hypergraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::size_t>> edges;  // sorted, distinct, non-empty
};

/// One hyperedge per distinct clause.
Hypergraph dnf_hypergraph(const PositiveDNF& phi);

/// True when the hyperedges containing `v` form a chain under inclusion.
bool is_beta_leaf(const std::vector<std::vector<std::size_t>>& edges, std::size_t v);

/// Greedy β-elimination, smallest eligible vertex first. Stops once no
/// hyperedge is left; nullopt when the greedy process gets stuck.
std::optional<std::vector<std::size_t>> beta_elimination_order(const Hypergraph& h);

/// Drops every clause that strictly contains another one (and duplicates).
PositiveDNF minimize_dnf(const PositiveDNF& phi);

}  // namespace phom
