#pragma once

#include "phom/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace phom {

enum class GateKind { False, True, Var, NegVar, And, Or };

struct Gate {
    GateKind kind = GateKind::False;
    std::size_t var = 0;                 // Var / NegVar
    std::vector<std::size_t> children;   // And / Or, all with smaller ids
    bool certified = false;              // Or: children mutually exclusive by construction
};

/// Boolean circuit with negation on inputs only. Gates are stored in
/// topological order (children before parents).
class Circuit {
public:
    explicit Circuit(std::vector<std::string> variables = {});

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    const Gate& gate(std::size_t id) const { return gates_.at(id); }
    std::size_t output() const noexcept { return output_; }
    void set_output(std::size_t id);

    /// Appends a gate verbatim (no folding, no sharing).
    std::size_t add_gate(Gate g);

    std::size_t constant(bool value);
    std::size_t literal(std::size_t var, bool positive = true);
    /// Folding builders: AND drops 1-children and collapses on a 0-child, OR
    /// symmetrically; single-child gates disappear; structurally equal gates
    /// are shared.
    std::size_t make_and(std::vector<std::size_t> children);
    std::size_t make_or(std::vector<std::size_t> children, bool certified = false);

private:
    std::size_t intern(Gate g);

    std::vector<std::string> variables_;
    std::vector<Gate> gates_;
    std::size_t output_ = 0;
    std::map<std::tuple<int, std::size_t, std::vector<std::size_t>, bool>, std::size_t> cache_;
};

struct DdnnfReport {
    bool decomposable = true;
    bool deterministic = true;
    bool exhaustive = false;  // determinism checked on every valuation
    std::vector<std::string> violations;

    bool ok() const { return decomposable && deterministic; }
};

/// Decomposability is checked exactly. Determinism is checked on all
/// valuations when there are at most `exhaustive_limit` variables, otherwise
/// every OR gate with two or more children must carry a certificate.
DdnnfReport validate_ddnnf(const Circuit& c, std::size_t exhaustive_limit = 20);

/// One bottom-up pass. With `require_certificates`, every OR gate of arity
/// two or more must be certified, else NotValidated is thrown.
Rational circuit_prob(const Circuit& c, std::span<const Rational> pi, bool require_certificates = false);

bool circuit_eval(const Circuit& c, const std::vector<bool>& valuation);

/// Line format: `circuit <gates> <vars>`, then `var <idx> <name>` lines,
/// then `<gid> KIND args...` lines, and `out <gid>` last.
void write_circuit(std::ostream& os, const Circuit& c);
Circuit read_circuit(std::istream& is);

}  // namespace phom
