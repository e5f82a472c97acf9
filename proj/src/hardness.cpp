#include "phom/hardness.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace phom {
namespace {

// Edge list being assembled, in insertion order.
struct Draft {
    std::vector<EdgeSpec> edges;

    void add(const std::string& a, const std::string& b, const std::string& label, const Rational& p = 1) {
        edges.push_back({a, b, label, p});
    }
};

std::string num(std::size_t i) { return std::to_string(i); }

void check_gamma(const BipartiteGraph& gamma) {
    if (gamma.edges.empty()) throw Error(ErrorCode::EmptyGraph, "the bipartite graph has no edges");
    for (auto [l, r] : gamma.edges)
        if (l < 1 || l > gamma.left_count || r < 1 || r > gamma.right_count)
            throw Error(ErrorCode::UnknownVertex, "bipartite edge endpoint out of range");
}

void check_phi(const PP2DNF& phi) {
    if (phi.clauses.empty()) throw Error(ErrorCode::MalformedFormula, "the formula has no clause");
    validate_pp2dnf(phi);
}

// Rewrites each labeled edge a -L-> b into a chain of unlabeled edges.
// `shape` uses '>' for a forward edge and '<' for a backward one; the
// original probability goes to edge `carrier`, the others get 1.
struct Gadget {
    std::string shape;
    std::size_t carrier;
};

std::vector<EdgeSpec> rewrite(const std::vector<EdgeSpec>& in, const std::map<std::string, Gadget>& gadgets) {
    std::vector<EdgeSpec> out;
    for (const EdgeSpec& e : in) {
        const Gadget& g = gadgets.at(e.label);
        const std::size_t k = g.shape.size();
        auto node = [&](std::size_t i) {
            if (i == 0) return e.src;
            if (i == k) return e.dst;
            return e.src + "~" + e.dst + "." + num(i);
        };
        for (std::size_t i = 0; i < k; ++i) {
            std::optional<Rational> p;
            if (e.prob) p = i == g.carrier ? *e.prob : Rational(1);
            if (g.shape[i] == '>') out.push_back({node(i), node(i + 1), "_", p});
            else out.push_back({node(i + 1), node(i), "_", p});
        }
    }
    return out;
}

Draft edge_cover_instance(const BipartiteGraph& gamma) {
    Draft h;
    std::size_t next = 0;
    const std::size_t total = [&] {
        std::size_t t = gamma.edges.size() + 1;
        for (auto [l, r] : gamma.edges) t += l + r + 1;
        return t;
    }();
    const std::size_t width = num(total).size();
    auto fresh = [&] {
        std::string s = num(next++);
        return "h" + std::string(width - s.size(), '0') + s;
    };
    std::string cur = fresh();
    auto step = [&](const std::string& label, const Rational& p) {
        std::string nxt = fresh();
        h.add(cur, nxt, label, p);
        cur = nxt;
    };
    step("C", 1);
    for (auto [l, r] : gamma.edges) {
        for (std::size_t i = 0; i < l; ++i) step("L", 1);
        step("V", Rational(1, 2));
        for (std::size_t i = 0; i < r; ++i) step("R", 1);
        step("C", 1);
    }
    return h;
}

std::vector<EdgeSpec> edge_cover_query(const BipartiteGraph& gamma) {
    std::vector<EdgeSpec> q;
    auto chain = [&](const std::string& prefix, const std::vector<std::string>& word) {
        for (std::size_t k = 0; k < word.size(); ++k) q.push_back({prefix + "." + num(k), prefix + "." + num(k + 1), word[k], std::nullopt});
    };
    for (std::size_t i = 1; i <= gamma.left_count; ++i) {
        std::vector<std::string> w{"C"};
        w.insert(w.end(), i, "L");
        w.push_back("V");
        chain("x" + num(i), w);
    }
    for (std::size_t j = 1; j <= gamma.right_count; ++j) {
        std::vector<std::string> w{"V"};
        w.insert(w.end(), j, "R");
        w.push_back("C");
        chain("y" + num(j), w);
    }
    return q;
}

const std::vector<std::string> edge_cover_alphabet{"C", "L", "R", "V"};
const std::vector<std::string> pp2dnf_alphabet{"S", "T"};

Draft pp2dnf_instance(const PP2DNF& phi) {
    const std::size_t m = phi.clauses.size();
    Draft h;
    const Rational half(1, 2);
    for (std::size_t i = 1; i <= phi.n1; ++i) h.add("X" + num(i), "R", "S", half);
    for (std::size_t i = 1; i <= phi.n2; ++i) h.add("R", "Y" + num(i), "S", half);
    for (std::size_t i = 1; i <= phi.n1; ++i) {
        for (std::size_t j = 1; j < m; ++j) h.add("X" + num(i) + "," + num(j), "X" + num(i) + "," + num(j + 1), "S");
        h.add("X" + num(i) + "," + num(m), "X" + num(i), "S");
    }
    for (std::size_t i = 1; i <= phi.n2; ++i) {
        h.add("Y" + num(i), "Y" + num(i) + ",1", "S");
        for (std::size_t j = 1; j < m; ++j) h.add("Y" + num(i) + "," + num(j), "Y" + num(i) + "," + num(j + 1), "S");
    }
    for (std::size_t j = 1; j <= m; ++j) {
        auto [x, y] = phi.clauses[j - 1];
        h.add("A" + num(x) + "," + num(j), "X" + num(x) + "," + num(j), "T");
        h.add("Y" + num(y) + "," + num(j), "B" + num(y) + "," + num(j), "T");
    }
    return h;
}

std::vector<EdgeSpec> pp2dnf_query(const PP2DNF& phi) {
    const std::size_t len = phi.clauses.size() + 5;
    const std::size_t width = num(len).size();
    auto name = [&](std::size_t k) {
        std::string s = num(k);
        return "g" + std::string(width - s.size(), '0') + s;
    };
    std::vector<EdgeSpec> q;
    for (std::size_t k = 0; k < len; ++k) q.push_back({name(k), name(k + 1), k == 0 || k + 1 == len ? "T" : "S", std::nullopt});
    return q;
}

}  // namespace

ReductionOutput gen_edge_cover_labeled(const BipartiteGraph& gamma) {
    check_gamma(gamma);
    ReductionOutput out;
    out.query = build_graph({}, edge_cover_query(gamma), edge_cover_alphabet);
    out.instance = build_prob_graph({}, edge_cover_instance(gamma).edges, edge_cover_alphabet);
    out.scaling_exponent = gamma.edges.size();
    out.target = TargetCount::EdgeCovers;
    return out;
}

ReductionOutput gen_edge_cover_unlabeled(const BipartiteGraph& gamma) {
    check_gamma(gamma);
    const std::map<std::string, Gadget> gadgets{
        {"L", {">><", 0}}, {"R", {">><", 0}}, {"C", {"<<<", 0}}, {"V", {">>>>><", 0}}};
    ReductionOutput out;
    out.query = build_graph({}, rewrite(edge_cover_query(gamma), gadgets), {"_"});
    out.instance = build_prob_graph({}, rewrite(edge_cover_instance(gamma).edges, gadgets), {"_"});
    out.scaling_exponent = gamma.edges.size();
    out.target = TargetCount::EdgeCovers;
    return out;
}

ReductionOutput gen_pp2dnf_labeled(const PP2DNF& phi) {
    check_phi(phi);
    ReductionOutput out;
    out.query = build_graph({}, pp2dnf_query(phi), pp2dnf_alphabet);
    out.instance = build_prob_graph({}, pp2dnf_instance(phi).edges, pp2dnf_alphabet);
    out.scaling_exponent = phi.n1 + phi.n2;
    out.target = TargetCount::Pp2dnfSat;
    return out;
}

ReductionOutput gen_pp2dnf_unlabeled(const PP2DNF& phi) {
    check_phi(phi);
    const std::map<std::string, Gadget> gadgets{{"S", {">><", 1}}, {"T", {">>>", 0}}};
    ReductionOutput out;
    out.query = build_graph({}, rewrite(pp2dnf_query(phi), gadgets), {"_"});
    out.instance = build_prob_graph({}, rewrite(pp2dnf_instance(phi).edges, gadgets), {"_"});
    out.scaling_exponent = phi.n1 + phi.n2;
    out.target = TargetCount::Pp2dnfSat;
    return out;
}

namespace {

// Next non-empty, non-comment line split into tokens.
bool next_tokens(std::istream& is, std::size_t& lineno, std::vector<std::string>& tok) {
    std::string line;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        tok.clear();
        for (std::string t; ls >> t;) tok.push_back(t);
        if (!tok.empty()) return true;
    }
    return false;
}

std::size_t to_index(const std::string& s, std::size_t lineno) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw Error(ErrorCode::Parse, "line " + num(lineno) + ": expected a non-negative integer, got '" + s + "'");
    return std::stoul(s);
}

}  // namespace

BipartiteGraph parse_bipartite(std::istream& is) {
    BipartiteGraph g;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_index;
    std::size_t lineno = 0, nl = 0, nr = 0;
    bool sized = false;
    std::vector<std::string> tok;
    while (next_tokens(is, lineno, tok)) {
        if (tok[0] == "sizes" && tok.size() == 3) {
            g.left_count = to_index(tok[1], lineno);
            g.right_count = to_index(tok[2], lineno);
            sized = true;
        } else if (tok[0] == "e" && tok.size() == 4) {
            std::size_t j = to_index(tok[1], lineno), l = to_index(tok[2], lineno), r = to_index(tok[3], lineno);
            if (l == 0 || r == 0) throw Error(ErrorCode::Parse, "line " + num(lineno) + ": vertex indices start at 1");
            if (!by_index.emplace(j, std::make_pair(l, r)).second)
                throw Error(ErrorCode::Parse, "line " + num(lineno) + ": edge index " + num(j) + " repeated");
            nl = std::max(nl, l);
            nr = std::max(nr, r);
        } else {
            throw Error(ErrorCode::Parse, "line " + num(lineno) + ": expected 'e j l r' or 'sizes nl nr'");
        }
    }
    std::size_t expect = 1;
    for (auto& [j, e] : by_index) {
        if (j != expect++) throw Error(ErrorCode::Parse, "edge indices must be exactly 1..m");
        g.edges.push_back(e);
    }
    if (!sized) {
        g.left_count = nl;
        g.right_count = nr;
    } else if (nl > g.left_count || nr > g.right_count) {
        throw Error(ErrorCode::UnknownVertex, "edge endpoint exceeds the declared sizes");
    }
    return g;
}

PP2DNF parse_pp2dnf(std::istream& is) {
    PP2DNF phi;
    std::size_t lineno = 0;
    std::vector<std::string> tok;
    if (!next_tokens(is, lineno, tok) || tok.size() != 2) throw Error(ErrorCode::Parse, "expected a header 'n1 n2'");
    phi.n1 = to_index(tok[0], lineno);
    phi.n2 = to_index(tok[1], lineno);
    while (next_tokens(is, lineno, tok)) {
        if (tok.size() != 2) throw Error(ErrorCode::Parse, "line " + num(lineno) + ": expected a clause 'x y'");
        phi.clauses.emplace_back(to_index(tok[0], lineno), to_index(tok[1], lineno));
    }
    validate_pp2dnf(phi);
    return phi;
}

}  // namespace phom
