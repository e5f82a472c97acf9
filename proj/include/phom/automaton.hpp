#pragma once

#include "phom/circuit.hpp"
#include "phom/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace phom {

/// Direction of the edge between a tree node and its parent: `Up` when the
/// edge points towards the parent, `Down` when it points away, `None` for
/// structural padding.
enum class Direction : std::uint8_t { Up, Down, None };

struct PathState {
    int up = 0;    // longest directed path ending at the top of the subtree
    int down = 0;  // longest directed path starting at the top of the subtree
    int max = 0;   // longest directed path anywhere in the subtree, saturated

    bool operator==(const PathState&) const = default;
};

/// Bottom-up deterministic tree automaton recognising trees that contain a
/// directed path of at least `m` edges. Letters are (direction, kept) pairs.
class PathAutomaton {
public:
    explicit PathAutomaton(int m);

    int bound() const noexcept { return m_; }
    std::size_t state_count() const noexcept;
    std::size_t index(const PathState& s) const;
    PathState state(std::size_t index) const;

    PathState initial(Direction d, bool kept) const;
    PathState transition(Direction d, bool kept, const PathState& left, const PathState& right) const;
    bool accepting(const PathState& s) const { return s.max == m_; }

private:
    int m_;
};

struct EpsNode {
    Direction label = Direction::None;
    Rational prob = 1;
    std::optional<std::size_t> edge;  // instance edge for labeled nodes
    std::size_t left = npos;
    std::size_t right = npos;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    bool leaf() const { return left == npos; }
};

/// Full binary tree; children always precede their parent, so the root is last.
struct EpsTree {
    std::vector<EpsNode> nodes;
    std::size_t root = 0;
    std::vector<std::string> edge_names;  // circuit variable names, indexed by edge id

    /// Throws MalformedTree if the shape or the labels are inconsistent.
    void validate() const;
    std::size_t labeled_count() const;
};

/// State distribution DP: probability that the automaton accepts.
Rational automaton_accept_prob(const PathAutomaton& a, const EpsTree& t);

/// d-DNNF over the edge variables of `t` accepting exactly the valuations
/// whose induced tree the automaton accepts.
Circuit compile_automaton_circuit(const PathAutomaton& a, const EpsTree& t);

/// For a forest: accepted iff at least one tree is accepted. Each tree gets
/// the edge ids it refers to in `edge_names` of the first tree; all trees
/// must share that table.
Circuit compile_automaton_forest(const PathAutomaton& a, const std::vector<EpsTree>& forest);

}  // namespace phom
