#include "phom/dispatch.hpp"

#include "phom/error.hpp"
#include "phom/tractable.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace phom {

std::string_view algorithm_name(AlgorithmId a) {
    switch (a) {
    case AlgorithmId::LConnected2WP: return "l-connected-2wp";
    case AlgorithmId::L1WPDWT: return "l-1wp-dwt";
    case AlgorithmId::UAllDWT: return "u-all-dwt";
    case AlgorithmId::UDWTPT: return "u-dwt-pt";
    }
    return "?";
}

std::string_view status_name(Verdict::Status s) {
    switch (s) {
    case Verdict::Status::Tractable: return "tractable";
    case Verdict::Status::Hard: return "hard";
    case Verdict::Status::BruteForceOnly: return "brute-force-only";
    }
    return "?";
}

namespace {

using G = GraphClass;

// 'T' tractable, 'H' hard; `ref` is the result printed in the cell, if any.
struct Cell {
    char kind;
    const char* ref;
};

constexpr std::array<G, 5> columns = {G::OneWayPath, G::TwoWayPath, G::DownwardTree, G::Polytree, G::Connected};
constexpr std::array<G, 5> union_rows = {G::UnionOneWayPath, G::UnionTwoWayPath, G::UnionDownwardTree, G::UnionPolytree, G::All};
constexpr std::array<G, 5> connected_rows = {G::OneWayPath, G::TwoWayPath, G::DownwardTree, G::Polytree, G::Connected};

// Unlabeled, disconnected queries; also valid for unions of the column classes.
constexpr Cell unlabeled_union[5][5] = {
    {{'T', ""}, {'T', ""}, {'T', ""}, {'T', ""}, {'H', "u-1WP-Connected"}},
    {{'T', ""}, {'H', "u-⊔2WP-2WP"}, {'T', ""}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'T', ""}, {'T', "u-DWT-PT"}, {'H', ""}},
    {{'T', ""}, {'H', ""}, {'T', ""}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'H', ""}, {'T', "u-all-DWT"}, {'H', ""}, {'H', ""}},
};

// Labeled, connected queries.
constexpr Cell labeled_connected[5][5] = {
    {{'T', ""}, {'T', ""}, {'T', "l-1WP-DWT"}, {'H', "l-1WP-PT"}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'H', "l-2WP-DWT"}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'H', "l-DWT-DWT"}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'H', ""}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'T', "l-Connected-2WP"}, {'H', ""}, {'H', ""}, {'H', ""}},
};

// Unlabeled, connected queries.
constexpr Cell unlabeled_connected[5][5] = {
    {{'T', ""}, {'T', ""}, {'T', ""}, {'T', ""}, {'H', "u-1WP-Connected"}},
    {{'T', ""}, {'T', ""}, {'T', ""}, {'H', "u-2WP-PT"}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'T', ""}, {'T', "u-DWT-PT"}, {'H', ""}},
    {{'T', ""}, {'T', ""}, {'T', ""}, {'H', ""}, {'H', ""}},
    {{'T', ""}, {'T', "l-Connected-2WP"}, {'T', "u-all-DWT"}, {'H', ""}, {'H', ""}},
};

// Hard cells that carry their own result, used to cite the cells they imply.
struct HardSource {
    G query;
    G column;
    const char* ref;
};

constexpr HardSource labeled_sources[] = {
    {G::UnionOneWayPath, G::OneWayPath, "l-⊔1WP-1WP"},
    {G::OneWayPath, G::Polytree, "l-1WP-PT"},
    {G::TwoWayPath, G::DownwardTree, "l-2WP-DWT"},
    {G::DownwardTree, G::DownwardTree, "l-DWT-DWT"},
};

constexpr HardSource unlabeled_sources[] = {
    {G::OneWayPath, G::Connected, "u-1WP-Connected"},
    {G::TwoWayPath, G::Polytree, "u-2WP-PT"},
    {G::UnionTwoWayPath, G::TwoWayPath, "u-⊔2WP-2WP"},
};

G column_of(G instance) {
    switch (instance) {
    case G::UnionOneWayPath: return G::OneWayPath;
    case G::UnionTwoWayPath: return G::TwoWayPath;
    case G::UnionDownwardTree: return G::DownwardTree;
    case G::UnionPolytree: return G::Polytree;
    case G::All: return G::Connected;
    default: return instance;
    }
}

std::size_t position(const std::array<G, 5>& axis, G c) {
    for (std::size_t i = 0; i < axis.size(); ++i)
        if (axis[i] == c) return i;
    throw std::logic_error("class not on this axis");
}

AlgorithmId pick_algorithm(G query, G column, bool labeled) {
    if (labeled) {
        if (column == G::OneWayPath || column == G::TwoWayPath) return AlgorithmId::LConnected2WP;
        if (column == G::DownwardTree && query == G::OneWayPath) return AlgorithmId::L1WPDWT;
    } else {
        const bool forest_query = class_includes(query, G::UnionDownwardTree);
        if (column == G::OneWayPath || column == G::DownwardTree) return AlgorithmId::UAllDWT;
        if (column == G::TwoWayPath) return forest_query ? AlgorithmId::UDWTPT : AlgorithmId::LConnected2WP;
        if (column == G::Polytree && forest_query) return AlgorithmId::UDWTPT;
    }
    throw std::logic_error("tractable cell without an algorithm");
}

std::string algorithm_citation(AlgorithmId a, G query) {
    switch (a) {
    case AlgorithmId::LConnected2WP: return "l-Connected-2WP";
    case AlgorithmId::L1WPDWT: return "l-1WP-DWT";
    case AlgorithmId::UAllDWT: return "u-all-DWT";
    case AlgorithmId::UDWTPT:
        return class_includes(query, G::UnionOneWayPath) ? "u-1WP-PT" : "u-DWT-PT";
    }
    return "";
}

}  // namespace

Verdict dispatch(GraphClass query, GraphClass instance, bool labeled) {
    const G column = column_of(instance);
    const std::size_t col = position(columns, column);
    Cell cell{'H', ""};
    if (labeled) {
        if (is_connected_class(query)) cell = labeled_connected[position(connected_rows, query)][col];
    } else if (is_connected_class(query)) {
        cell = unlabeled_connected[position(connected_rows, query)][col];
    } else {
        cell = unlabeled_union[position(union_rows, query)][col];
    }
    Verdict v;
    if (cell.kind == 'T') {
        v.status = Verdict::Status::Tractable;
        v.algorithm = pick_algorithm(query, column, labeled);
        v.citation = algorithm_citation(*v.algorithm, query);
        return v;
    }
    v.status = Verdict::Status::Hard;
    if (*cell.ref) {
        v.citation = cell.ref;
        return v;
    }
    auto inherit = [&](const auto& sources) {
        for (const HardSource& s : sources)
            if (class_includes(s.query, query) && class_includes(s.column, column)) return std::string(s.ref);
        throw std::logic_error("hard cell with no hardness source");
    };
    v.citation = labeled ? inherit(labeled_sources) : inherit(unlabeled_sources);
    return v;
}

Verdict dispatch(std::string_view query, std::string_view instance, bool labeled) {
    return dispatch(parse_class(query), parse_class(instance), labeled);
}

std::string render_tables() {
    std::ostringstream os;
    auto table = [&](const char* title, const std::array<G, 5>& rows, bool labeled) {
        os << "## " << title << '\n';
        os << "query\\instance";
        for (G c : columns) os << " | " << class_name(c);
        os << '\n';
        for (G q : rows) {
            os << class_name(q);
            for (G c : columns) {
                Verdict v = dispatch(q, c, labeled);
                os << " | " << (v.status == Verdict::Status::Tractable ? "T " : "H ") << v.citation;
            }
            os << '\n';
        }
    };
    table("unlabeled, disconnected queries (columns also cover their unions)", union_rows, false);
    os << '\n';
    table("labeled, connected queries", connected_rows, true);
    os << '\n';
    table("unlabeled, connected queries", connected_rows, false);
    return os.str();
}

Rational run_tractable(AlgorithmId a, const Graph& query, const ProbGraph& instance) {
    switch (a) {
    case AlgorithmId::LConnected2WP: return prob_disconnected_instance(query, instance, prob_l_connected_2wp);
    case AlgorithmId::L1WPDWT: return prob_disconnected_instance(query, instance, prob_l_1wp_dwt);
    case AlgorithmId::UAllDWT: return prob_u_all_dwt(query, instance);
    case AlgorithmId::UDWTPT: {
        const std::size_t m = longest_path_reduction(query);
        if (m == 0) return 1;
        return prob_disconnected_instance(directed_path(m), instance,
                                          [m](const Graph&, const ProbGraph& comp) { return prob_u_1wp_pt(m, comp); });
    }
    }
    throw std::logic_error("unknown algorithm");
}

}  // namespace phom
