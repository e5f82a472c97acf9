#include "phom/io.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace phom {

GraphFile parse_graph(std::istream& is, const std::string& source) {
    std::vector<std::string> alphabet, nodes;
    std::vector<EdgeSpec> edges;
    std::optional<GraphKind> kind;
    std::map<std::pair<std::string, std::string>, std::size_t> edge_line;
    std::size_t lineno = 0, with_prob = 0;
    std::string line;
    auto fail = [&](ErrorCode code, const std::string& msg) {
        throw Error(code, source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string& head = tok[0];
        if (head == "alphabet") {
            if (tok.size() < 2) fail(ErrorCode::Parse, "empty alphabet");
            if (!alphabet.empty()) fail(ErrorCode::Parse, "alphabet declared twice");
            alphabet.assign(tok.begin() + 1, tok.end());
        } else if (head == "kind") {
            if (tok.size() != 2 || (tok[1] != "query" && tok[1] != "instance")) fail(ErrorCode::Parse, "expected 'kind query' or 'kind instance'");
            kind = tok[1] == "query" ? GraphKind::Query : GraphKind::Instance;
        } else if (head == "node") {
            if (tok.size() != 2) fail(ErrorCode::Parse, "expected 'node <id>'");
            nodes.push_back(tok[1]);
        } else if (head == "edge") {
            if (tok.size() != 4 && tok.size() != 5) fail(ErrorCode::Parse, "expected 'edge <src> <dst> <label> [<prob>]'");
            EdgeSpec e{tok[1], tok[2], tok[3], std::nullopt};
            if (!alphabet.empty() && std::find(alphabet.begin(), alphabet.end(), e.label) == alphabet.end())
                fail(ErrorCode::UnknownLabel, "label '" + e.label + "' is not in the alphabet");
            if (tok.size() == 5) {
                try {
                    e.prob = parse_rational(tok[4]);
                } catch (const Error& err) {
                    fail(ErrorCode::Parse, err.what());
                }
                if (!is_probability(*e.prob)) fail(ErrorCode::ProbabilityOutOfRange, "probability " + tok[4] + " is outside [0,1]");
                ++with_prob;
            }
            auto [it, fresh] = edge_line.emplace(std::make_pair(e.src, e.dst), lineno);
            if (!fresh) fail(ErrorCode::DuplicateEdge, "second edge " + e.src + "->" + e.dst + " (first on line " + std::to_string(it->second) + ")");
            edges.push_back(std::move(e));
        } else {
            fail(ErrorCode::Parse, "unknown directive '" + head + "'");
        }
    }
    if (!kind) kind = (!edges.empty() && with_prob == edges.size()) ? GraphKind::Instance : GraphKind::Query;
    if (*kind == GraphKind::Query && with_prob > 0) {
        lineno = 0;
        fail(ErrorCode::Parse, "query edges must not carry probabilities");
    }
    if (*kind == GraphKind::Instance && with_prob != edges.size()) {
        for (const EdgeSpec& e : edges)
            if (!e.prob) {
                lineno = edge_line[{e.src, e.dst}];
                fail(ErrorCode::MissingProbability, "instance edge " + e.src + "->" + e.dst + " has no probability");
            }
    }
    if (nodes.empty() && edges.empty()) {
        lineno = 0;
        fail(ErrorCode::EmptyVertexSet, "graph has no vertices");
    }
    GraphFile out;
    out.kind = *kind;
    if (*kind == GraphKind::Instance) out.graph = build_prob_graph(nodes, edges, alphabet);
    else out.graph.graph = build_graph(nodes, edges, alphabet);
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
    return parse_graph(in, path);
}

namespace {

void write_impl(std::ostream& os, const Graph& g, const std::vector<Rational>* prob) {
    os << "alphabet";
    for (const std::string& l : g.alphabet()) os << ' ' << l;
    os << "\nkind " << (prob ? "instance" : "query") << '\n';
    for (const std::string& v : g.vertex_names()) os << "node " << v << '\n';
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << "edge " << g.vertex_name(ed.src) << ' ' << g.vertex_name(ed.dst) << ' ' << g.label_name(ed.label);
        if (prob) os << ' ' << to_string(prob->at(e));
        os << '\n';
    }
}

template <class T>
void write_file(const std::string& path, const T& g) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
    write_graph(out, g);
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) { write_impl(os, g, nullptr); }
void write_graph(std::ostream& os, const ProbGraph& g) { write_impl(os, g.graph, &g.prob); }
void write_graph_file(const std::string& path, const Graph& g) { write_file(path, g); }
void write_graph_file(const std::string& path, const ProbGraph& g) { write_file(path, g); }

void write_dnf(std::ostream& os, const PositiveDNF& phi, std::span<const Rational> pi) {
    validate_dnf(phi);
    os << "dnf " << phi.variables.size() << ' ' << phi.clauses.size() << '\n';
    for (std::size_t v = 0; v < phi.variables.size(); ++v) {
        os << "v " << v << ' ' << phi.variables[v];
        if (v < pi.size()) os << ' ' << to_string(pi[v]);
        os << '\n';
    }
    for (const auto& c : phi.clauses) {
        os << "clause";
        for (std::size_t v : c) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace phom
