// Command-line front end: classification, solving, lineage export, table
// lookup, hardness instance generation and the brute-force oracles.

#include "phom/circuit.hpp"
#include "phom/classes.hpp"
#include "phom/dispatch.hpp"
#include "phom/error.hpp"
#include "phom/hardness.hpp"
#include "phom/io.hpp"
#include "phom/solve.hpp"
#include "phom/tractable.hpp"
#include "phom/worlds.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_hard = 3;

void print_probability(const phom::Rational& p) {
    std::cout << "probability: " << phom::to_string(p) << '\n';
    std::cout << "decimal: " << phom::to_decimal(p, 12) << '\n';
}

phom::Graph load_query(const std::string& path) { return phom::read_graph_file(path).graph.graph; }

phom::ProbGraph load_instance(const std::string& path) {
    phom::GraphFile f = phom::read_graph_file(path);
    if (f.kind != phom::GraphKind::Instance)
        throw phom::Error(phom::ErrorCode::MissingProbability, path + ": expected an instance (edges with probabilities)");
    return f.graph;
}

std::string join_classes(const phom::ClassReport& r) {
    std::string s;
    for (phom::GraphClass c : phom::all_classes) {
        if (!r.contains(c)) continue;
        if (!s.empty()) s += ' ';
        s += phom::class_name(c);
    }
    return s;
}

int cmd_classify(const std::string& path) {
    phom::GraphFile f = phom::read_graph_file(path);
    const phom::Graph& g = f.graph.graph;
    phom::ClassReport r = phom::recognize(g);
    std::cout << "kind: " << (f.kind == phom::GraphKind::Instance ? "instance" : "query") << '\n';
    std::cout << "vertices: " << g.vertex_count() << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    std::cout << "labeled: " << (g.labeled() ? "yes" : "no") << '\n';
    std::cout << "classes: " << join_classes(r) << '\n';
    std::cout << "most specific: " << phom::class_name(r.most_specific) << '\n';
    std::cout << "components: " << phom::connected_components(g).size() << '\n';
    if (auto lm = phom::level_mapping(g)) std::cout << "difference of levels: " << lm->difference << '\n';
    else std::cout << "difference of levels: none (not graded)\n";
    return exit_ok;
}

struct SolveArgs {
    std::string query, instance, assume;
    bool brute = false;
    std::size_t max_brute = 24;
    unsigned threads = 1;
};

int cmd_solve(const SolveArgs& a) {
    phom::ProblemInstance p{load_query(a.query), load_instance(a.instance)};
    phom::SolveOptions opts;
    opts.force_brute = a.brute;
    opts.max_brute_edges = a.max_brute;
    opts.threads = a.threads;
    if (!a.assume.empty()) {
        auto comma = a.assume.find(',');
        opts.assume_query_class = phom::parse_class(a.assume.substr(0, comma));
        if (comma != std::string::npos) opts.assume_instance_class = phom::parse_class(a.assume.substr(comma + 1));
    }
    phom::SolveResult r = phom::solve(p, opts);
    std::cout << "setting: " << (r.labeled ? "labeled" : "unlabeled") << '\n';
    std::cout << "query class: " << phom::class_name(r.query_class) << '\n';
    std::cout << "instance class: " << phom::class_name(r.instance_class) << '\n';
    std::cout << "verdict: " << phom::status_name(r.verdict.status);
    if (!r.verdict.citation.empty()) std::cout << " (" << r.verdict.citation << ')';
    std::cout << '\n';
    std::cout << "route: " << r.route << '\n';
    if (r.hard) {
        std::cout << "result: not computed, " << r.hard->uncertain_edges << " uncertain edges exceed the brute-force cap of "
                  << r.hard->cap << '\n';
        return exit_hard;
    }
    print_probability(*r.probability);
    return exit_ok;
}

// Lineage as a DNF of minimal satisfying worlds, by enumeration.
phom::PositiveDNF enumerated_lineage(const phom::Graph& g, const phom::ProbGraph& h) {
    phom::PositiveDNF phi;
    for (std::size_t e = 0; e < h.graph.edge_count(); ++e) phi.variables.push_back(h.graph.edge_name(e));
    std::vector<std::vector<std::size_t>> sat;
    for (const phom::PossibleWorld& w : phom::enumerate_worlds(h, 20)) {
        if (!phom::hom_exists_bf(g, phom::world_graph(h.graph, w.kept))) continue;
        std::vector<std::size_t> clause;
        for (std::size_t e = 0; e < w.kept.size(); ++e)
            if (w.kept[e]) clause.push_back(e);
        if (clause.empty())
            throw phom::Error(phom::ErrorCode::MalformedFormula, "the query matches the empty world; its lineage is constant true");
        sat.push_back(std::move(clause));
    }
    phi.clauses = std::move(sat);
    return phom::minimize_dnf(phi);
}

struct LineageArgs {
    std::string query, instance, format, out;
};

int cmd_lineage(const LineageArgs& a) {
    const phom::Graph g = load_query(a.query);
    const phom::ProbGraph h = load_instance(a.instance);
    std::ofstream out(a.out);
    if (!out) throw phom::Error(phom::ErrorCode::Parse, "cannot write '" + a.out + "'");
    using phom::GraphClass;
    if (a.format == "dnf") {
        phom::PositiveDNF phi;
        std::string how;
        if (phom::in_class(g, GraphClass::OneWayPath) && phom::in_class(h.graph, GraphClass::DownwardTree)) {
            phi = phom::lineage_l_1wp_dwt(g, h);
            how = "descending paths";
        } else if (phom::in_class(g, GraphClass::Connected) && phom::in_class(h.graph, GraphClass::TwoWayPath)) {
            phi = phom::lineage_l_connected_2wp(g, h, true);
            how = "minimal intervals";
        } else {
            phi = enumerated_lineage(g, h);
            how = "minimal worlds";
        }
        phom::write_dnf(out, phi, h.prob);
        std::cout << "lineage: " << how << ", " << phi.variables.size() << " variables, " << phi.clauses.size()
                  << " clauses\n";
        auto order = phom::beta_elimination_order(phom::dnf_hypergraph(phi));
        std::cout << "beta-acyclic: " << (order ? "yes" : "no") << '\n';
        return exit_ok;
    }
    // d-DNNF through the path automaton; the query must reduce to a directed path.
    std::size_t m = 0;
    bool absent = false;
    if (phom::in_class(g, GraphClass::UnionDownwardTree) && phom::in_class(h.graph, GraphClass::UnionPolytree)) {
        m = phom::longest_path_reduction(g);
    } else if (phom::in_class(h.graph, GraphClass::UnionDownwardTree)) {
        auto lm = phom::level_mapping(g);
        absent = !lm;
        if (lm) m = static_cast<std::size_t>(lm->difference);
    } else {
        throw phom::Error(phom::ErrorCode::ClassMismatch,
                          "d-DNNF lineage needs a ⊔DWT query on a ⊔PT instance or any query on a ⊔DWT instance");
    }
    phom::Circuit c;
    if (absent) {
        c = phom::Circuit(phom::binarize_forest(h).front().edge_names);
        c.set_output(c.constant(false));
    } else {
        c = phom::compile_automaton_forest(phom::build_path_automaton(static_cast<int>(m)), phom::binarize_forest(h));
    }
    phom::write_circuit(out, c);
    phom::DdnnfReport rep = phom::validate_ddnnf(c);
    std::cout << "circuit: " << c.gates().size() << " gates, " << c.variables().size() << " variables, path length " << m
              << '\n';
    std::cout << "d-DNNF: " << (rep.ok() ? "valid" : "INVALID") << (rep.exhaustive ? " (exhaustive)" : " (certified)") << '\n';
    print_probability(phom::circuit_prob(c, h.prob, true));
    return exit_ok;
}

int cmd_dispatch(const std::string& q, const std::string& i, bool labeled) {
    phom::Verdict v = phom::dispatch(q, i, labeled);
    std::cout << "verdict: " << phom::status_name(v.status) << '\n';
    if (v.algorithm) std::cout << "algorithm: " << phom::algorithm_name(*v.algorithm) << '\n';
    std::cout << "citation: " << v.citation << '\n';
    return exit_ok;
}

struct GenArgs {
    std::string source, input, out_query, out_instance;
    bool labeled = false;
};

int cmd_gen(const GenArgs& a) {
    std::ifstream in(a.input);
    if (!in) throw phom::Error(phom::ErrorCode::Parse, "cannot open '" + a.input + "'");
    phom::ReductionOutput r;
    if (a.source == "edge-cover") {
        phom::BipartiteGraph gamma = phom::parse_bipartite(in);
        r = a.labeled ? phom::gen_edge_cover_labeled(gamma) : phom::gen_edge_cover_unlabeled(gamma);
    } else {
        phom::PP2DNF phi = phom::parse_pp2dnf(in);
        r = a.labeled ? phom::gen_pp2dnf_labeled(phi) : phom::gen_pp2dnf_unlabeled(phi);
    }
    phom::write_graph_file(a.out_query, r.query);
    phom::write_graph_file(a.out_instance, r.instance);
    std::cout << "query: " << r.query.vertex_count() << " vertices, " << r.query.edge_count() << " edges, "
              << phom::class_name(phom::recognize(r.query).most_specific) << '\n';
    std::cout << "instance: " << r.instance.graph.vertex_count() << " vertices, " << r.instance.graph.edge_count()
              << " edges, " << phom::class_name(phom::recognize(r.instance.graph).most_specific) << '\n';
    std::cout << "scaling exponent: " << r.scaling_exponent << '\n';
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact probabilistic graph homomorphism solver"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Report the graph classes of a graph file");
    std::string classify_file;
    classify->add_option("file", classify_file, "Graph file")->required()->check(CLI::ExistingFile);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Compute Pr(query ⇝ instance) exactly");
    solve->add_option("--query", solve_args.query, "Query graph file")->required()->check(CLI::ExistingFile);
    solve->add_option("--instance", solve_args.instance, "Probabilistic instance file")->required()->check(CLI::ExistingFile);
    solve->add_flag("--brute", solve_args.brute, "Always enumerate possible worlds");
    solve->add_option("--max-brute-edges", solve_args.max_brute, "Cap on uncertain edges for enumeration")->capture_default_str();
    solve->add_option("--assume-class", solve_args.assume, "Force the query class, or 'QUERY,INSTANCE' classes");
    solve->add_option("--threads", solve_args.threads, "Threads for world enumeration")->capture_default_str();

    LineageArgs lineage_args;
    auto* lineage = app.add_subcommand("lineage", "Write the lineage of a query on an instance");
    lineage->add_option("--query", lineage_args.query, "Query graph file")->required()->check(CLI::ExistingFile);
    lineage->add_option("--instance", lineage_args.instance, "Probabilistic instance file")->required()->check(CLI::ExistingFile);
    lineage->add_option("--format", lineage_args.format, "dnf or ddnnf")->required()->check(CLI::IsMember({"dnf", "ddnnf"}));
    lineage->add_option("--out", lineage_args.out, "Output file")->required();

    std::string dq, di;
    bool labeled = false, unlabeled = false;
    auto* disp = app.add_subcommand("dispatch", "Look up the verdict for a pair of classes");
    disp->add_option("--query-class", dq, "Query class")->required();
    disp->add_option("--instance-class", di, "Instance class")->required();
    auto* lab = disp->add_flag("--labeled", labeled, "Labeled setting");
    auto* unlab = disp->add_flag("--unlabeled", unlabeled, "Unlabeled setting");
    lab->excludes(unlab);

    GenArgs gen_args;
    bool gen_labeled = false, gen_unlabeled = false;
    auto* gen = app.add_subcommand("gen", "Generate a hardness reduction instance");
    gen->add_option("source", gen_args.source, "edge-cover or pp2dnf")->required()->check(CLI::IsMember({"edge-cover", "pp2dnf"}));
    gen->add_option("--input", gen_args.input, "Source object file")->required()->check(CLI::ExistingFile);
    auto* glab = gen->add_flag("--labeled", gen_labeled, "Labeled construction");
    auto* gunlab = gen->add_flag("--unlabeled", gen_unlabeled, "Unlabeled construction");
    glab->excludes(gunlab);
    gen->add_option("--out-query", gen_args.out_query, "Query output file")->required();
    gen->add_option("--out-instance", gen_args.out_instance, "Instance output file")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
    oracle->require_subcommand(1);
    std::string oq, oi, oinput;
    std::size_t omax = 24;
    auto* obrute = oracle->add_subcommand("brute-prob", "Probability by possible-world enumeration");
    obrute->add_option("--query", oq, "Query graph file")->required()->check(CLI::ExistingFile);
    obrute->add_option("--instance", oi, "Probabilistic instance file")->required()->check(CLI::ExistingFile);
    obrute->add_option("--max-brute-edges", omax, "Cap on uncertain edges")->capture_default_str();
    auto* ocover = oracle->add_subcommand("count-edge-covers", "Count edge covers of a bipartite graph");
    ocover->add_option("--input", oinput, "Bipartite graph file")->required()->check(CLI::ExistingFile);
    auto* opp = oracle->add_subcommand("count-pp2dnf", "Count satisfying valuations of a PP2DNF");
    opp->add_option("--input", oinput, "PP2DNF file")->required()->check(CLI::ExistingFile);

    auto* tables = app.add_subcommand("tables", "Print the classification tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*classify) return cmd_classify(classify_file);
        if (*solve) return cmd_solve(solve_args);
        if (*lineage) return cmd_lineage(lineage_args);
        if (*disp) {
            if (!labeled && !unlabeled) throw phom::Error(phom::ErrorCode::Parse, "one of --labeled or --unlabeled is required");
            return cmd_dispatch(dq, di, labeled);
        }
        if (*gen) {
            if (!gen_labeled && !gen_unlabeled) throw phom::Error(phom::ErrorCode::Parse, "one of --labeled or --unlabeled is required");
            gen_args.labeled = gen_labeled;
            return cmd_gen(gen_args);
        }
        if (*obrute) {
            print_probability(phom::brute_prob(load_query(oq), load_instance(oi), {omax, 1}));
            return exit_ok;
        }
        if (*ocover) {
            std::ifstream in(oinput);
            std::cout << "edge covers: " << phom::count_edge_covers(phom::parse_bipartite(in)).get_str() << '\n';
            return exit_ok;
        }
        if (*opp) {
            std::ifstream in(oinput);
            std::cout << "satisfying valuations: " << phom::count_pp2dnf(phom::parse_pp2dnf(in)).get_str() << '\n';
            return exit_ok;
        }
        if (*tables) {
            std::cout << phom::render_tables();
            return exit_ok;
        }
    } catch (const phom::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
