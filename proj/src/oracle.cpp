#include "stemforge/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "stemforge/generators.hpp"
#include "stemforge/rng.hpp"

namespace stemforge {

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Can the edges from `idx` on still merge every component of `dsu`?
bool can_complete(const Dsu& dsu, const std::vector<Edge>& edges, std::size_t idx,
                  int components) {
    if (components == 1) return true;
    Dsu probe = dsu;
    for (std::size_t i = idx; i < edges.size(); ++i) {
        if (probe.unite(edges[i].a, edges[i].b) && --components == 1) return true;
    }
    return false;
}

void enumerate_rec(const std::vector<Edge>& edges, std::size_t idx, Dsu& dsu,
                   int components, std::vector<Edge>& chosen,
                   const std::function<void(const std::vector<Edge>&)>& visit) {
    if (components == 1) {
        visit(chosen);
        return;
    }
    if (idx == edges.size() || !can_complete(dsu, edges, idx, components)) return;

    const Edge& e = edges[idx];
    if (dsu.find(e.a) != dsu.find(e.b)) {
        Dsu saved = dsu;
        dsu.unite(e.a, e.b);
        chosen.push_back(e);
        enumerate_rec(edges, idx + 1, dsu, components - 1, chosen, visit);
        chosen.pop_back();
        dsu = saved;
    }
    enumerate_rec(edges, idx + 1, dsu, components, chosen, visit);
}

} // namespace

void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<Edge>&)>& visit) {
    if (!is_connected(g))
        throw std::invalid_argument("spanning tree enumeration: graph disconnected");
    int n = g.order();
    if (n == 0) return;
    Dsu dsu(n);
    std::vector<Edge> chosen;
    chosen.reserve(std::max(0, n - 1));
    enumerate_rec(g.edges(), 0, dsu, n, chosen, visit);
}

long long spanning_tree_count(const Graph& g) {
    long long count = 0;
    enumerate_spanning_trees(g, [&](const std::vector<Edge>&) { ++count; });
    return count;
}

long long spanning_tree_count_determinant(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (!is_connected(g)) return 0;

    // Laplacian with row and column 0 removed; Bareiss keeps every entry an
    // exact integer (each is a minor of the original matrix).
    int d = n - 1;
    std::vector<std::vector<long long>> a(d, std::vector<long long>(d, 0));
    for (int i = 1; i < n; ++i) {
        a[i - 1][i - 1] = g.degree(i);
        for (int j = 1; j < n; ++j)
            if (i != j && g.has_edge(i, j)) a[i - 1][j - 1] = -1;
    }

    long long prev = 1;
    int sign = 1;
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row) {
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int row = col + 1; row < d; ++row) {
            for (int j = col + 1; j < d; ++j)
                a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
            a[row][col] = 0;
        }
        prev = a[col][col];
    }
    return sign * a[d - 1][d - 1];
}

OracleScan scan_spanning_trees(const Graph& g) {
    int n = g.order();
    OracleScan scan;
    scan.min_leaf_plus_branch = n + 1;
    scan.min_leaves = n + 1;
    std::vector<int> deg(std::max(n, 1));
    enumerate_spanning_trees(g, [&](const std::vector<Edge>& edges) {
        ++scan.tree_count;
        std::fill(deg.begin(), deg.end(), 0);
        for (const Edge& e : edges) {
            ++deg[e.a];
            ++deg[e.b];
        }
        int leaves = 0, branches = 0;
        for (int v = 0; v < n; ++v) {
            leaves += deg[v] == 1;
            branches += deg[v] >= 3;
        }
        if (leaves + branches < scan.min_leaf_plus_branch) {
            scan.min_leaf_plus_branch = leaves + branches;
            scan.lb_witness = edges;
        }
        if (leaves < scan.min_leaves) {
            scan.min_leaves = leaves;
            scan.leaves_witness = edges;
        }
    });
    if (n <= 1 || scan.tree_count == 0) {
        scan.min_leaf_plus_branch = 0;
        scan.min_leaves = 0;
    }
    return scan;
}

std::pair<int, std::vector<Edge>> min_leaf_branch(const Graph& g) {
    OracleScan scan = scan_spanning_trees(g);
    return {scan.min_leaf_plus_branch, scan.lb_witness};
}

TheoremCheckRecord theorem_check(const Graph& g, int k, int m, const OracleScan* scan) {
    if (m > k + 1) throw std::invalid_argument("theorem_check requires m <= k+1");
    int n = g.order();
    TheoremCheckRecord rec;
    rec.k = k;
    rec.m = m;

    OracleScan local;
    if (!scan) {
        local = scan_spanning_trees(g);
        scan = &local;
    }
    rec.min_lb = scan->min_leaf_plus_branch;
    rec.sigma = sigma_p(g, m + 2);
    rec.hypothesis = rec.sigma.at_least(n - k);
    rec.conclusion = rec.min_lb <= m + k + 2;
    rec.flag_theorem = !rec.hypothesis || rec.conclusion;
    if (!rec.flag_theorem) rec.failure = "hypothesis holds but no tree meets the bound";

    try {
        Outcome outcome = improve(g, k, m);
        rec.moves = outcome.trace.size();
        rec.improve_good = outcome.good();
        int total = static_cast<int>(outcome.tree.leaves().size()) +
                    static_cast<int>(outcome.tree.branch_vertices().size());
        rec.improve_total = total;
        if (outcome.good()) {
            if (total > outcome.bound) {
                rec.flag_good = false;
                rec.failure = "good tree exceeds the bound";
            } else if (n > 2 && total < rec.min_lb) {
                rec.flag_good = false;
                rec.failure = "good tree beats the exhaustive minimum";
            }
        } else {
            const Certificate& cert = *outcome.certificate;
            if (static_cast<int>(cert.independent_set.size()) != m + 2) {
                rec.flag_cert = false;
                rec.failure = "certificate set has the wrong size";
            } else if (cert.uncovered_edges < k) {
                rec.flag_cert = false;
                rec.failure = "certificate uncovered-edge count below k";
            } else if (cert.degree_sum > n - 1 - k) {
                rec.flag_cert = false;
                rec.failure = "certificate degree sum exceeds n-1-k";
            } else {
                for (std::size_t i = 0; i < cert.independent_set.size() && rec.flag_cert;
                     ++i) {
                    for (std::size_t j = i + 1; j < cert.independent_set.size(); ++j) {
                        if (g.has_edge(cert.independent_set[i], cert.independent_set[j])) {
                            rec.flag_cert = false;
                            rec.failure = "certificate set not independent";
                            break;
                        }
                    }
                }
                if (rec.flag_cert && !rec.sigma.at_most(n - 1 - k)) {
                    rec.flag_cert = false;
                    rec.failure = "sigma cross-check contradicts the certificate";
                }
            }
        }
    } catch (const std::exception& ex) {
        rec.flag_good = rec.flag_cert = false;
        rec.failure = std::string("improve raised: ") + ex.what();
    }
    return rec;
}

OracleReport oracle_report(const Graph& g, int k_max) {
    OracleReport report;
    report.scan = scan_spanning_trees(g);
    for (int k = 0; k <= k_max; ++k)
        for (int m = 0; m <= k + 1; ++m)
            report.table.push_back(theorem_check(g, k, m, &report.scan));
    return report;
}

void SweepReport::merge(SweepReport&& other) {
    graphs_scanned += other.graphs_scanned;
    k14free_count += other.k14free_count;
    checks_run += other.checks_run;
    max_moves = std::max(max_moves, other.max_moves);
    for (auto& ce : other.counterexamples) counterexamples.push_back(std::move(ce));
}

std::string resolve_counterexample_dir(const SweepOptions& opts) {
    if (!opts.counterexample_dir.empty()) return opts.counterexample_dir;
    if (const char* env = std::getenv("STEMFORGE_COUNTEREXAMPLE_DIR"))
        if (*env) return env;
    return "counterexamples";
}

namespace {

std::string record_report(const Graph& g, const TheoremCheckRecord& rec) {
    std::ostringstream out;
    out << "n=" << g.order() << " k=" << rec.k << " m=" << rec.m
        << " sigma[" << rec.m + 2 << "]=" << rec.sigma.to_string()
        << " hypothesis=" << (rec.hypothesis ? "yes" : "no")
        << " min_leaf_plus_branch=" << rec.min_lb
        << " conclusion=" << (rec.conclusion ? "yes" : "no")
        << " improve=" << (rec.improve_good ? "good_tree" : "hypothesis_violation")
        << " failure=" << rec.failure;
    return out.str();
}

// Check one graph for every (k, m) combination, reusing a single scan.
void check_graph(const Graph& g, int k_max, const std::string& id, SweepReport& report) {
    ++report.k14free_count;
    OracleScan scan = scan_spanning_trees(g);
    for (int k = 0; k <= k_max; ++k) {
        for (int m = 0; m <= k + 1; ++m) {
            TheoremCheckRecord rec = theorem_check(g, k, m, &scan);
            ++report.checks_run;
            report.max_moves = std::max(report.max_moves, rec.moves);
            if (!rec.ok()) {
                report.counterexamples.push_back(Counterexample{
                    id + "_k" + std::to_string(k) + "_m" + std::to_string(m),
                    to_edge_list(g), record_report(g, rec)});
            }
        }
    }
}

void persist_counterexamples(const SweepReport& report, const SweepOptions& opts) {
    if (!opts.persist || report.counterexamples.empty()) return;
    namespace fs = std::filesystem;
    fs::path dir = resolve_counterexample_dir(opts);
    fs::create_directories(dir);
    for (const Counterexample& ce : report.counterexamples) {
        std::ofstream out(dir / (ce.id + ".txt"));
        out << "# " << ce.report << "\n" << ce.edge_list;
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t count,
                                                                 int jobs) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    int parts = std::max(1, jobs);
    std::uint64_t base = count / parts, extra = count % parts, start = 0;
    for (int i = 0; i < parts; ++i) {
        std::uint64_t len = base + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
        if (len > 0) chunks.emplace_back(start, start + len);
        start += len;
    }
    return chunks;
}

// Deterministic parallel map over an index range; partial reports merged in
// chunk order so the result is independent of the job count.
template <typename Fn>
SweepReport run_chunks(std::uint64_t count, int jobs, Fn per_index) {
    auto chunks = split_range(count, jobs);
    std::vector<SweepReport> partial(chunks.size());
    if (jobs <= 1 || chunks.size() <= 1) {
        for (std::size_t c = 0; c < chunks.size(); ++c)
            for (std::uint64_t i = chunks[c].first; i < chunks[c].second; ++i)
                per_index(i, partial[c]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(chunks.size());
        for (std::size_t c = 0; c < chunks.size(); ++c) {
            workers.emplace_back([&, c] {
                for (std::uint64_t i = chunks[c].first; i < chunks[c].second; ++i)
                    per_index(i, partial[c]);
            });
        }
        for (auto& w : workers) w.join();
    }
    SweepReport report;
    for (auto& p : partial) report.merge(std::move(p));
    return report;
}

std::vector<Edge> mask_to_edges(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return edges;
}

} // namespace

SweepReport sweep_exhaustive(int n_max, int k_max, const SweepOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("sweep_exhaustive requires n_max >= 1");
    if (n_max > 8)
        throw std::invalid_argument(
            "sweep_exhaustive refuses n_max > 8 (labeled enumeration blows up)");

    SweepReport total;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
        SweepReport part = run_chunks(masks, opts.jobs, [&](std::uint64_t mask,
                                                            SweepReport& report) {
            ++report.graphs_scanned;
            Graph g(n, mask_to_edges(n, mask));
            if (!is_connected(g) || !is_k1r_free(g, 4)) return;
            check_graph(g, k_max, "n" + std::to_string(n) + "_mask" + std::to_string(mask),
                        report);
        });
        total.merge(std::move(part));
    }
    persist_counterexamples(total, opts);
    return total;
}

SweepReport sweep_random(int n, int samples, std::uint64_t seed, int k_max,
                         const SweepOptions& opts) {
    if (n < 1) throw std::invalid_argument("sweep_random requires n >= 1");
    if (samples < 0) throw std::invalid_argument("sweep_random requires samples >= 0");

    constexpr double kEdgeProb = 0.5;
    SweepReport total = run_chunks(
        static_cast<std::uint64_t>(samples), opts.jobs,
        [&](std::uint64_t index, SweepReport& report) {
            ++report.graphs_scanned;
            Graph g = random_connected_k14_free(n, kEdgeProb, Rng::derive(seed, index),
                                                100000);
            check_graph(g, k_max,
                        "n" + std::to_string(n) + "_sample" + std::to_string(index),
                        report);
        });
    persist_counterexamples(total, opts);
    return total;
}

} // namespace stemforge
