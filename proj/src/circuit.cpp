#include "phom/circuit.hpp"

#include "phom/error.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

namespace phom {

Circuit::Circuit(std::vector<std::string> variables) : variables_(std::move(variables)) {}

void Circuit::set_output(std::size_t id) {
    if (id >= gates_.size()) throw Error(ErrorCode::MalformedFormula, "output gate out of range");
    output_ = id;
}

std::size_t Circuit::add_gate(Gate g) {
    if ((g.kind == GateKind::Var || g.kind == GateKind::NegVar) && g.var >= variables_.size())
        throw Error(ErrorCode::MalformedFormula, "gate refers to an undeclared variable");
    for (std::size_t c : g.children)
        if (c >= gates_.size()) throw Error(ErrorCode::MalformedFormula, "gate child must precede its parent");
    gates_.push_back(std::move(g));
    return gates_.size() - 1;
}

std::size_t Circuit::intern(Gate g) {
    auto key = std::make_tuple(static_cast<int>(g.kind), g.var, g.children, g.certified);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::size_t id = add_gate(std::move(g));
    cache_.emplace(std::move(key), id);
    return id;
}

std::size_t Circuit::constant(bool value) { return intern({value ? GateKind::True : GateKind::False, 0, {}, false}); }

std::size_t Circuit::literal(std::size_t var, bool positive) {
    return intern({positive ? GateKind::Var : GateKind::NegVar, var, {}, false});
}

std::size_t Circuit::make_and(std::vector<std::size_t> children) {
    std::vector<std::size_t> kept;
    for (std::size_t c : children) {
        GateKind k = gates_.at(c).kind;
        if (k == GateKind::False) return constant(false);
        if (k != GateKind::True) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty()) return constant(true);
    if (kept.size() == 1) return kept.front();
    return intern({GateKind::And, 0, std::move(kept), false});
}

std::size_t Circuit::make_or(std::vector<std::size_t> children, bool certified) {
    std::vector<std::size_t> kept;
    for (std::size_t c : children) {
        GateKind k = gates_.at(c).kind;
        if (k == GateKind::True) return constant(true);
        if (k != GateKind::False) kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept.empty()) return constant(false);
    if (kept.size() == 1) return kept.front();
    return intern({GateKind::Or, 0, std::move(kept), certified});
}

DdnnfReport validate_ddnnf(const Circuit& c, std::size_t exhaustive_limit) {
    DdnnfReport rep;
    const auto& gates = c.gates();
    const std::size_t nv = c.variables().size();
    const std::size_t words = (nv + 63) / 64;
    std::vector<std::uint64_t> deps(gates.size() * std::max<std::size_t>(words, 1), 0);
    auto row = [&](std::size_t g) { return deps.data() + g * std::max<std::size_t>(words, 1); };

    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gt = gates[g];
        std::uint64_t* mine = row(g);
        if (gt.kind == GateKind::Var || gt.kind == GateKind::NegVar) {
            mine[gt.var / 64] |= std::uint64_t{1} << (gt.var % 64);
            continue;
        }
        bool clash = false;
        for (std::size_t ch : gt.children) {
            const std::uint64_t* theirs = row(ch);
            for (std::size_t w = 0; w < words; ++w) {
                if (mine[w] & theirs[w]) clash = true;
                mine[w] |= theirs[w];
            }
        }
        if (gt.kind == GateKind::And && clash) {
            rep.decomposable = false;
            rep.violations.push_back("gate " + std::to_string(g) + ": AND children share variables");
        }
    }

    if (nv <= exhaustive_limit) {
        rep.exhaustive = true;
        std::vector<std::uint64_t> val(gates.size());
        std::vector<char> flagged(gates.size(), 0);
        const std::uint64_t blocks = nv <= 6 ? 1 : (std::uint64_t{1} << (nv - 6));
        const std::uint64_t live = nv >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (std::uint64_t{1} << nv)) - 1);
        static constexpr std::uint64_t low_patterns[6] = {
            0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
            0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
        };
        for (std::uint64_t b = 0; b < blocks; ++b) {
            for (std::size_t g = 0; g < gates.size(); ++g) {
                const Gate& gt = gates[g];
                std::uint64_t v = 0;
                switch (gt.kind) {
                case GateKind::False: v = 0; break;
                case GateKind::True: v = ~std::uint64_t{0}; break;
                case GateKind::Var:
                case GateKind::NegVar:
                    v = gt.var < 6 ? low_patterns[gt.var] : (((b >> (gt.var - 6)) & 1) ? ~std::uint64_t{0} : 0);
                    if (gt.kind == GateKind::NegVar) v = ~v;
                    break;
                case GateKind::And:
                    v = ~std::uint64_t{0};
                    for (std::size_t ch : gt.children) v &= val[ch];
                    break;
                case GateKind::Or:
                    for (std::size_t ch : gt.children) {
                        if ((v & val[ch] & live) && !flagged[g]) {
                            flagged[g] = 1;
                            rep.deterministic = false;
                            rep.violations.push_back("gate " + std::to_string(g) + ": OR children not mutually exclusive");
                        }
                        v |= val[ch];
                    }
                    break;
                }
                val[g] = v;
            }
        }
    } else {
        for (std::size_t g = 0; g < gates.size(); ++g) {
            const Gate& gt = gates[g];
            if (gt.kind == GateKind::Or && gt.children.size() > 1 && !gt.certified) {
                rep.deterministic = false;
                rep.violations.push_back("gate " + std::to_string(g) + ": OR gate without a determinism certificate");
            }
        }
    }
    return rep;
}

Rational circuit_prob(const Circuit& c, std::span<const Rational> pi, bool require_certificates) {
    if (pi.size() != c.variables().size())
        throw Error(ErrorCode::MissingProbability, "one probability per circuit variable is required");
    const auto& gates = c.gates();
    if (gates.empty()) throw Error(ErrorCode::MalformedFormula, "empty circuit");
    std::vector<Rational> val(gates.size());
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gt = gates[g];
        switch (gt.kind) {
        case GateKind::False: val[g] = 0; break;
        case GateKind::True: val[g] = 1; break;
        case GateKind::Var: val[g] = pi[gt.var]; break;
        case GateKind::NegVar: val[g] = 1 - pi[gt.var]; break;
        case GateKind::And:
            val[g] = 1;
            for (std::size_t ch : gt.children) val[g] *= val[ch];
            break;
        case GateKind::Or:
            if (require_certificates && gt.children.size() > 1 && !gt.certified)
                throw Error(ErrorCode::NotValidated, "OR gate " + std::to_string(g) + " carries no determinism certificate");
            val[g] = 0;
            for (std::size_t ch : gt.children) val[g] += val[ch];
            break;
        }
    }
    return val[c.output()];
}

bool circuit_eval(const Circuit& c, const std::vector<bool>& valuation) {
    const auto& gates = c.gates();
    std::vector<char> val(gates.size());
    for (std::size_t g = 0; g < gates.size(); ++g) {
        const Gate& gt = gates[g];
        switch (gt.kind) {
        case GateKind::False: val[g] = 0; break;
        case GateKind::True: val[g] = 1; break;
        case GateKind::Var: val[g] = valuation.at(gt.var); break;
        case GateKind::NegVar: val[g] = !valuation.at(gt.var); break;
        case GateKind::And:
            val[g] = 1;
            for (std::size_t ch : gt.children) val[g] = val[g] && val[ch];
            break;
        case GateKind::Or:
            val[g] = 0;
            for (std::size_t ch : gt.children) val[g] = val[g] || val[ch];
            break;
        }
    }
    return val.at(c.output());
}

namespace {

const char* kind_token(GateKind k) {
    switch (k) {
    case GateKind::False: return "FALSE";
    case GateKind::True: return "TRUE";
    case GateKind::Var: return "VAR";
    case GateKind::NegVar: return "NEG";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    }
    return "?";
}

}  // namespace

void write_circuit(std::ostream& os, const Circuit& c) {
    os << "circuit " << c.gates().size() << ' ' << c.variables().size() << '\n';
    for (std::size_t v = 0; v < c.variables().size(); ++v) os << "var " << v << ' ' << c.variables()[v] << '\n';
    for (std::size_t g = 0; g < c.gates().size(); ++g) {
        const Gate& gt = c.gate(g);
        os << g << ' ' << (gt.kind == GateKind::Or && gt.certified ? "DOR" : kind_token(gt.kind));
        if (gt.kind == GateKind::Var || gt.kind == GateKind::NegVar) os << ' ' << gt.var;
        for (std::size_t ch : gt.children) os << ' ' << ch;
        os << '\n';
    }
    os << "out " << c.output() << '\n';
}

Circuit read_circuit(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorCode::Parse, "circuit line " + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::string> vars;
    std::vector<Gate> gates;
    bool have_out = false;
    std::size_t out = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (have_out) fail("content after the output line");
        if (head == "circuit") continue;
        if (head == "var") {
            std::size_t idx;
            std::string name;
            if (!(ls >> idx >> name) || idx != vars.size()) fail("bad variable declaration");
            vars.push_back(name);
        } else if (head == "out") {
            if (!(ls >> out)) fail("bad output line");
            have_out = true;
        } else {
            std::size_t id;
            try {
                id = std::stoul(head);
            } catch (const std::exception&) {
                fail("expected a gate id");
            }
            if (id != gates.size()) fail("gate ids must be consecutive");
            std::string kind;
            ls >> kind;
            Gate g;
            if (kind == "FALSE") g.kind = GateKind::False;
            else if (kind == "TRUE") g.kind = GateKind::True;
            else if (kind == "VAR" || kind == "NEG") {
                g.kind = kind == "VAR" ? GateKind::Var : GateKind::NegVar;
                if (!(ls >> g.var)) fail("literal without a variable");
            } else if (kind == "AND" || kind == "OR" || kind == "DOR") {
                g.kind = kind == "AND" ? GateKind::And : GateKind::Or;
                g.certified = kind == "DOR";
                std::size_t ch;
                while (ls >> ch) g.children.push_back(ch);
            } else {
                fail("unknown gate kind '" + kind + "'");
            }
            gates.push_back(std::move(g));
        }
    }
    if (!have_out) throw Error(ErrorCode::Parse, "circuit has no output line");
    Circuit c(vars);
    for (Gate& g : gates) c.add_gate(std::move(g));
    c.set_output(out);
    return c;
}

}  // namespace phom
