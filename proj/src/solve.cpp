#include "phom/solve.hpp"

#include "phom/error.hpp"
#include "phom/worlds.hpp"

#include <set>
#include <vector>

namespace phom {

bool is_labeled(const Graph& query, const Graph& instance) {
    std::set<std::string> sigma(query.alphabet().begin(), query.alphabet().end());
    sigma.insert(instance.alphabet().begin(), instance.alphabet().end());
    return sigma.size() > 1;
}

std::size_t uncertain_edge_count(const ProbGraph& h) {
    std::size_t k = 0;
    for (const Rational& p : h.prob)
        if (p != 0 && p != 1) ++k;
    return k;
}

namespace {

std::vector<GraphClass> candidates(const Graph& g, const std::optional<GraphClass>& assumed, const char* role) {
    ClassReport rep = recognize(g);
    if (assumed) {
        if (!rep.contains(*assumed))
            throw Error(ErrorCode::ClassMismatch,
                        std::string(role) + " is not in class " + std::string(class_name(*assumed)));
        return {*assumed};
    }
    std::vector<GraphClass> out;
    for (GraphClass c : all_classes)
        if (rep.contains(c)) out.push_back(c);
    return out;
}

}  // namespace

SolveResult solve(const ProblemInstance& p, const SolveOptions& opts) {
    SolveResult res;
    res.labeled = is_labeled(p.query, p.instance.graph);
    const auto qs = candidates(p.query, opts.assume_query_class, "query");
    const auto is = candidates(p.instance.graph, opts.assume_instance_class, "instance");
    res.query_class = qs.front();
    res.instance_class = is.front();
    const BruteOptions brute{opts.max_brute_edges, opts.threads};

    if (opts.force_brute) {
        res.verdict = {Verdict::Status::BruteForceOnly, std::nullopt, "forced"};
        res.route = "brute-force";
        res.probability = brute_prob(p.query, p.instance, brute);
        return res;
    }
    for (GraphClass q : qs) {
        for (GraphClass i : is) {
            Verdict v = dispatch(q, i, res.labeled);
            if (v.status != Verdict::Status::Tractable) continue;
            res.verdict = v;
            res.query_class = q;
            res.instance_class = i;
            res.route = std::string(algorithm_name(*v.algorithm));
            res.probability = run_tractable(*v.algorithm, p.query, p.instance);
            return res;
        }
    }
    res.verdict = dispatch(res.query_class, res.instance_class, res.labeled);
    const std::size_t k = uncertain_edge_count(p.instance);
    if (k <= opts.max_brute_edges) {
        res.route = "brute-force";
        res.probability = brute_prob(p.query, p.instance, brute);
        return res;
    }
    res.route = "none";
    res.hard = HardReport{res.query_class, res.instance_class, res.verdict.citation, k, opts.max_brute_edges};
    return res;
}

}  // namespace phom
