#include "phom/dnf.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <cstdint>

namespace phom {

void validate_dnf(const PositiveDNF& phi) {
    for (const auto& c : phi.clauses) {
        if (c.empty()) throw Error(ErrorCode::MalformedFormula, "empty clause");
        for (std::size_t v : c)
            if (v >= phi.variables.size()) throw Error(ErrorCode::MalformedFormula, "clause uses an undeclared variable");
    }
}

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Hypergraph dnf_hypergraph(const PositiveDNF& phi) {
    validate_dnf(phi);
    Hypergraph h;
    h.vertices = phi.variables;
    for (const auto& c : phi.clauses) h.edges.push_back(normalized(c));
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    return h;
}

bool is_beta_leaf(const std::vector<std::vector<std::size_t>>& edges, std::size_t v) {
    std::vector<const std::vector<std::size_t>*> incident;
    for (const auto& e : edges)
        if (std::binary_search(e.begin(), e.end(), v)) incident.push_back(&e);
    std::sort(incident.begin(), incident.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
    for (std::size_t i = 1; i < incident.size(); ++i)
        if (!subset_of(*incident[i - 1], *incident[i])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> beta_elimination_order(const Hypergraph& h) {
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& e : h.edges)
        if (!e.empty()) edges.push_back(normalized(e));
    std::vector<char> removed(h.vertices.size(), 0);
    std::vector<std::size_t> order;
    while (!edges.empty()) {
        std::size_t pick = SIZE_MAX;
        for (std::size_t v = 0; v < h.vertices.size() && pick == SIZE_MAX; ++v)
            if (!removed[v] && is_beta_leaf(edges, v)) pick = v;
        if (pick == SIZE_MAX) return std::nullopt;
        removed[pick] = 1;
        order.push_back(pick);
        std::vector<std::vector<std::size_t>> next;
        for (auto& e : edges) {
            e.erase(std::remove(e.begin(), e.end(), pick), e.end());
            if (!e.empty()) next.push_back(std::move(e));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        edges = std::move(next);
    }
    return order;
}

PositiveDNF minimize_dnf(const PositiveDNF& phi) {
    validate_dnf(phi);
    std::vector<std::vector<std::size_t>> cs;
    for (const auto& c : phi.clauses) cs.push_back(normalized(c));
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    PositiveDNF out;
    out.variables = phi.variables;
    for (const auto& c : cs) {
        bool dominated = false;
        for (const auto& kept : out.clauses)
            if (subset_of(kept, c)) dominated = true;
        if (!dominated) out.clauses.push_back(c);
    }
    return out;
}

}  // namespace phom
