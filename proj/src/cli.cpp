#include "stemforge/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stemforge/generators.hpp"
#include "stemforge/graph.hpp"
#include "stemforge/improve.hpp"
#include "stemforge/oracle.hpp"

namespace stemforge {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

// Edge-list input starts with a digit header; anything else is graph6.
Graph load_graph(const std::string& path, std::istream& in) {
    std::string text = slurp(path, in);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (std::isdigit(static_cast<unsigned char>(line[pos])))
            return parse_edge_list(text);
        return parse_graph6(line.substr(pos));
    }
    throw ParseError(0, "empty input");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json edge_json(const Edge& e) { return json::array({e.a, e.b}); }

json edges_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(edge_json(e));
    return arr;
}

int cmd_analyze(const std::string& path, bool as_json, std::istream& in,
                std::ostream& out) {
    Graph g = load_graph(path, in);
    bool connected = is_connected(g);
    auto star3 = find_induced_star(g, 3);
    auto star4 = find_induced_star(g, 4);
    auto star5 = find_induced_star(g, 5);
    int alpha = independence_number(g);

    if (as_json) {
        json j;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["connected"] = connected;
        j["k13_free"] = !star3;
        j["k14_free"] = !star4;
        j["k15_free"] = !star5;
        j["alpha"] = alpha;
        json sigmas = json::object();
        for (int p = 1; p <= alpha + 1; ++p) {
            SigmaValue s = sigma_p(g, p);
            sigmas[std::to_string(p)] = s.infinite ? json() : json(s.value);
        }
        j["sigma"] = sigmas;
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "n=" << g.order() << "\n";
    out << "m=" << g.edge_count() << "\n";
    out << "connected=" << yes_no(connected) << "\n";
    auto star_line = [&](int r, const std::optional<StarWitness>& w) {
        out << "k1" << r << "_free=" << yes_no(!w);
        if (w) out << " witness=(" << w->describe() << ")";
        out << "\n";
    };
    star_line(3, star3);
    star_line(4, star4);
    star_line(5, star5);
    out << "alpha=" << alpha << "\n";
    for (int p = 1; p <= alpha + 1; ++p)
        out << "sigma[" << p << "]=" << sigma_p(g, p).to_string() << "\n";
    return kExitOk;
}

json outcome_json(const Graph& g, const Outcome& outcome) {
    json j;
    j["status"] = outcome.good() ? "good_tree" : "hypothesis_violation";
    j["n"] = g.order();
    j["k"] = outcome.k;
    j["m"] = outcome.m;
    j["bound"] = outcome.bound;
    j["parents"] = outcome.tree.parent_array();
    j["leaves"] = outcome.tree.leaves().size();
    j["branch_vertices"] = outcome.tree.branch_vertices().size();
    j["moves"] = json::array();
    for (const MoveRecord& rec : outcome.trace) {
        json mv;
        mv["claim"] = rec.move.claim;
        mv["remove"] = edges_json(rec.move.removed);
        mv["add"] = edges_json(rec.move.added);
        mv["leaves"] = rec.leaves_after;
        mv["branch_vertices"] = rec.branches_after;
        mv["stem"] = rec.branches_after == 0 ? json() : json(rec.after.stem_component);
        j["moves"].push_back(mv);
    }
    if (outcome.certificate) {
        const Certificate& cert = *outcome.certificate;
        j["certificate"] = {{"S", cert.independent_set},
                            {"h", cert.uncovered_edges},
                            {"degree_sum", cert.degree_sum},
                            {"sigma_bound", g.order() - 1 - outcome.k}};
    }
    return j;
}

int cmd_tree(const std::string& path, int k, int m, bool trace, bool as_json,
             std::istream& in, std::ostream& out) {
    Graph g = load_graph(path, in);
    Outcome outcome = improve(g, k, m);

    if (as_json) {
        out << outcome_json(g, outcome).dump(2) << "\n";
        return kExitOk;
    }

    int leaves = static_cast<int>(outcome.tree.leaves().size());
    int branches = static_cast<int>(outcome.tree.branch_vertices().size());
    out << "status="
        << (outcome.good() ? "good_tree" : "hypothesis_violation") << "\n";
    out << "n=" << g.order() << " k=" << k << " m=" << m << " bound=" << outcome.bound
        << "\n";
    out << "tree=" << outcome.tree.parent_line() << "\n";
    out << "L=" << leaves << " B=" << branches << " total=" << leaves + branches << "\n";
    if (outcome.certificate) {
        const Certificate& cert = *outcome.certificate;
        out << "certificate: S={";
        for (std::size_t i = 0; i < cert.independent_set.size(); ++i) {
            if (i) out << ",";
            out << cert.independent_set[i];
        }
        out << "} h=" << cert.uncovered_edges << " degree_sum=" << cert.degree_sum
            << "\n";
        out << "implied: sigma[" << m + 2 << "] <= " << g.order() - 1 - k
            << " = n-1-k, so sigma[" << m + 2 << "] >= " << g.order() - k
            << " = n-k fails\n";
    }
    out << "moves=" << outcome.trace.size() << "\n";
    if (trace)
        for (const MoveRecord& rec : outcome.trace) out << "move: " << rec.line() << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& path, int k_max, bool as_json, std::istream& in,
               std::ostream& out) {
    Graph g = load_graph(path, in);
    OracleReport report = oracle_report(g, k_max);

    if (as_json) {
        json j;
        j["n"] = g.order();
        j["m"] = g.edge_count();
        j["tree_count"] = report.scan.tree_count;
        j["min_leaf_plus_branch"] = report.scan.min_leaf_plus_branch;
        j["min_leaves"] = report.scan.min_leaves;
        if (!report.scan.lb_witness.empty())
            j["lb_witness"] = SpanningTree(g, report.scan.lb_witness).parent_array();
        if (!report.scan.leaves_witness.empty())
            j["leaves_witness"] =
                SpanningTree(g, report.scan.leaves_witness).parent_array();
        j["table"] = json::array();
        for (const TheoremCheckRecord& rec : report.table) {
            j["table"].push_back({{"k", rec.k},
                                  {"m", rec.m},
                                  {"sigma", rec.sigma.infinite ? json() : json(rec.sigma.value)},
                                  {"hypothesis", rec.hypothesis},
                                  {"conclusion", rec.conclusion},
                                  {"improve", rec.improve_good ? "good_tree"
                                                               : "hypothesis_violation"},
                                  {"total", rec.improve_total},
                                  {"ok", rec.ok()}});
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "n=" << g.order() << " m=" << g.edge_count() << "\n";
    out << "tree_count=" << report.scan.tree_count << "\n";
    out << "min_leaf_plus_branch=" << report.scan.min_leaf_plus_branch;
    if (!report.scan.lb_witness.empty())
        out << " witness=" << SpanningTree(g, report.scan.lb_witness).parent_line();
    out << "\n";
    out << "min_leaves=" << report.scan.min_leaves;
    if (!report.scan.leaves_witness.empty())
        out << " witness=" << SpanningTree(g, report.scan.leaves_witness).parent_line();
    out << "\n";
    for (const TheoremCheckRecord& rec : report.table) {
        out << "k=" << rec.k << " m=" << rec.m << " sigma[" << rec.m + 2
            << "]=" << rec.sigma.to_string() << " hypothesis=" << yes_no(rec.hypothesis)
            << " conclusion=" << yes_no(rec.conclusion) << " improve="
            << (rec.improve_good ? "good_tree" : "hypothesis_violation")
            << " total=" << rec.improve_total << " ok=" << yes_no(rec.ok()) << "\n";
    }
    return kExitOk;
}

int cmd_sharpness(int k, int p, bool check, bool allow_k0, std::ostream& out) {
    Graph g = sharpness_graph(k, p, allow_k0);
    int n = g.order();
    out << "# sharpness family k=" << k << " p=" << p << " order=" << n << " ((k+1)+(k+3)p)"
        << "\n";
    int variant = (k + 1) + (k + 2) * p;
    if (variant != n)
        out << "# note: variant count (k+1)+(k+2)p = " << variant
            << " differs from the constructed order\n";
    if (k == 0) out << "# note: k=0 extension; no tightness property is claimed\n";
    write_edge_list(g, out);
    if (check) {
        bool connected = is_connected(g);
        bool free4 = is_k1r_free(g, 4);
        out << "# check connected=" << yes_no(connected) << "\n";
        out << "# check k14_free=" << yes_no(free4) << "\n";
        if (k >= 1) {
            SigmaValue sigma = sigma_p(g, k + 3);
            bool sigma_ok = !sigma.infinite && sigma.value == n - k - 1;
            out << "# check sigma[" << k + 3 << "]=" << sigma.to_string()
                << " expected=" << n - k - 1 << " (n-k-1) ok=" << yes_no(sigma_ok) << "\n";
            if (n <= 10) {
                auto [min_lb, witness] = min_leaf_branch(g);
                out << "# check min_leaf_plus_branch=" << min_lb << " threshold=" << 2 * k + 4
                    << " (2k+4) ok=" << yes_no(min_lb >= 2 * k + 4) << "\n";
            } else {
                out << "# check min_leaf_plus_branch skipped (n=" << n << " > 10)\n";
            }
        }
    }
    return kExitOk;
}

int cmd_random(int n, double prob, std::uint64_t seed, int max_tries, std::ostream& out) {
    Graph g = random_connected_k14_free(n, prob, seed, max_tries);
    out << "# random connected K_{1,4}-free n=" << n << " prob=" << prob
        << " seed=" << seed << "\n";
    write_edge_list(g, out);
    return kExitOk;
}

int cmd_verify(bool exhaustive, int n_max, const std::vector<std::uint64_t>& random_args,
               int k_max, int jobs, bool as_json, std::ostream& out) {
    SweepOptions opts;
    opts.jobs = jobs;
    SweepReport report;
    if (exhaustive) {
        report = sweep_exhaustive(n_max, k_max, opts);
    } else {
        report = sweep_random(static_cast<int>(random_args[0]),
                              static_cast<int>(random_args[1]), random_args[2], k_max,
                              opts);
    }

    if (as_json) {
        json j;
        j["mode"] = exhaustive ? "exhaustive" : "random";
        if (exhaustive) {
            j["n_max"] = n_max;
        } else {
            j["n"] = random_args[0];
            j["samples"] = random_args[1];
            j["seed"] = random_args[2];
        }
        j["k_max"] = k_max;
        j["graphs_scanned"] = report.graphs_scanned;
        j["k14free_count"] = report.k14free_count;
        j["checks_run"] = report.checks_run;
        j["max_moves"] = report.max_moves;
        j["counterexamples"] = report.counterexamples.size();
        out << j.dump(2) << "\n";
    } else {
        out << "mode=" << (exhaustive ? "exhaustive" : "random") << "\n";
        if (exhaustive)
            out << "n_max=" << n_max << "\n";
        else
            out << "n=" << random_args[0] << " samples=" << random_args[1]
                << " seed=" << random_args[2] << "\n";
        out << "k_max=" << k_max << "\n";
        out << "graphs_scanned=" << report.graphs_scanned << "\n";
        out << "k14free_count=" << report.k14free_count << "\n";
        out << "checks_run=" << report.checks_run << "\n";
        out << "max_moves=" << report.max_moves << "\n";
        out << "counterexamples=" << report.counterexamples.size() << "\n";
        for (const Counterexample& ce : report.counterexamples)
            out << "counterexample: " << ce.id << " " << ce.report << "\n";
    }
    return report.counterexamples.empty() ? kExitOk : kExitCounterexamples;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "stemforge: spanning trees with few leaves and branch vertices in "
        "K_{1,4}-free graphs"};
    app.require_subcommand(1);

    std::string path = "-";
    int k = 0, m = 0, p = 1, k_max = 2, n_max = 5, jobs = 1, n = 1, max_tries = 1000;
    double prob = 0.5;
    std::uint64_t seed = 1;
    bool trace = false, as_json = false, check = false, allow_k0 = false;
    std::vector<std::uint64_t> random_args;

    auto* analyze = app.add_subcommand("analyze", "graph invariants and sigma table");
    analyze->add_option("path", path, "edge-list or graph6 file, - for stdin");
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* tree = app.add_subcommand(
        "tree", "spanning tree with at most m+k+2 leaves and branch vertices, "
                "or a degree-sum violation certificate");
    tree->add_option("path", path, "edge-list or graph6 file, - for stdin");
    tree->add_option("-k,--k", k, "slack parameter k >= 0")->required();
    tree->add_option("-m,--m", m, "independent-set parameter m, 0 <= m <= k+1")
        ->required();
    tree->add_flag("--trace", trace, "print one line per applied move");
    tree->add_flag("--json", as_json, "machine-readable output");

    auto* oracle = app.add_subcommand("oracle",
                                      "exhaustive spanning-tree minima and per-(k,m) "
                                      "comparison against the search");
    oracle->add_option("path", path, "edge-list or graph6 file, - for stdin");
    oracle->add_option("--k-max", k_max, "check k = 0..k_max (default 2)");
    oracle->add_flag("--json", as_json, "machine-readable output");

    auto* sharp = app.add_subcommand("sharpness",
                                     "generate the tightness family for parameters k, p");
    sharp->add_option("-k,--k", k, "path length parameter (k >= 1)")->required();
    sharp->add_option("-p,--p", p, "blob order (p >= 1)")->required();
    sharp->add_flag("--check", check, "append invariant checks as comments");
    sharp->add_flag("--allow-k0", allow_k0, "permit the degenerate k=0 construction");

    auto* random = app.add_subcommand("random",
                                      "generate a random connected K_{1,4}-free graph");
    random->add_option("--n", n, "vertex count")->required();
    random->add_option("--prob", prob, "edge probability in (0,1)")->required();
    random->add_option("--seed", seed, "random seed")->required();
    random->add_option("--max-tries", max_tries, "rejection-sampling budget");

    auto* verify = app.add_subcommand("verify", "sweep graphs and compare the search "
                                                "against exhaustive ground truth");
    auto* opt_exh = verify->add_option("--exhaustive", n_max,
                                       "all labeled graphs on 1..n_max vertices");
    auto* opt_rand = verify->add_option("--random", random_args,
                                        "random sweep: N SAMPLES SEED")
                         ->expected(3);
    opt_exh->excludes(opt_rand);
    verify->add_option("--k-max", k_max, "check k = 0..k_max (default 2)");
    verify->add_option("--jobs", jobs, "worker threads (default 1)");
    verify->add_flag("--json", as_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("stemforge");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream buffer;
        int code = app.exit(e, out, buffer);
        err << buffer.str();
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(path, as_json, in, out);
        if (tree->parsed()) return cmd_tree(path, k, m, trace, as_json, in, out);
        if (oracle->parsed()) return cmd_oracle(path, k_max, as_json, in, out);
        if (sharp->parsed()) return cmd_sharpness(k, p, check, allow_k0, out);
        if (random->parsed())
            return cmd_random(n, prob, seed, max_tries, out);
        if (verify->parsed()) {
            if (opt_exh->count() == 0 && opt_rand->count() == 0) {
                err << "verify: one of --exhaustive or --random is required\n";
                return kExitError;
            }
            if (jobs < 1) {
                err << "verify: --jobs must be positive\n";
                return kExitError;
            }
            return cmd_verify(opt_exh->count() > 0, n_max, random_args, k_max, jobs,
                              as_json, out);
        }
    } catch (const std::exception& ex) {
        err << "stemforge: error: " << ex.what() << "\n";
        return kExitError;
    }
    err << "stemforge: no subcommand\n";
    return kExitError;
}

} // namespace stemforge
