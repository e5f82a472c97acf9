#pragma once

#include "phom/graph.hpp"

#include <cstddef>
#include <vector>

namespace phom::detail {

// Backtracking homomorphism search from a fixed query into a fixed target
// whose edges can be switched on and off between calls.
class HomSearch {
public:
    HomSearch(const Graph& query, const Graph& target);

    // Edge ids of the target that are currently present.
    std::vector<char> present;

    bool run();
    const std::vector<std::size_t>& assignment() const { return assign_; }

private:
    struct Link {
        std::size_t other;  // earlier vertex in the order (or the vertex itself)
        std::size_t label;  // target label index
        bool outgoing;      // query edge goes current -> other
    };
    struct Step {
        std::size_t vertex;
        bool anchored;  // false on the first vertex of a component
        Link anchor;
        std::vector<Link> checks;
    };

    bool has_edge(std::size_t a, std::size_t b, std::size_t label) const;
    bool place(std::size_t step, std::size_t end);

    const Graph& target_;
    bool impossible_ = false;
    std::vector<Step> steps_;
    std::vector<std::size_t> component_end_;
    std::vector<std::size_t> assign_;
};

}  // namespace phom::detail
