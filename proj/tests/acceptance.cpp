// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Set STEMFORGE_ACCEPT_N7=1 to extend criterion 1 to n=7 (long run).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "stemforge/generators.hpp"
#include "stemforge/graph.hpp"
#include "stemforge/improve.hpp"
#include "stemforge/oracle.hpp"
#include "stemforge/rng.hpp"
#include "test_util.hpp"

using namespace stemforge;
using namespace stemforge::testutil;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << " (" << name << "): " << (pass ? "PASS" : "FAIL")
              << " (" << detail << ")\n";
    if (!pass) ++failures;
}

std::vector<Edge> mask_to_edges(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(i, j);
    return edges;
}

void for_each_connected_k14free(int n_lo, int n_hi,
                                const std::function<void(const Graph&)>& fn) {
    for (int n = n_lo; n <= n_hi; ++n) {
        std::uint64_t masks = 1ULL << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g(n, mask_to_edges(n, mask));
            if (is_connected(g) && is_k1r_free(g, 4)) fn(g);
        }
    }
}

// 1. On every connected K_{1,4}-free graph with n <= 6 and every (k, m),
//    0 <= k <= 3, 0 <= m <= k+1, with sigma_{m+2} >= n-k: the search returns
//    a good tree within m+k+2 and the exhaustive minimum confirms the bound.
void criterion1() {
    int n_hi = 6;
    bool extended = false;
    if (const char* env = std::getenv("STEMFORGE_ACCEPT_N7"); env && *env == '1') {
        n_hi = 7;
        extended = true;
    }
    long long graphs = 0, qualifying_checks = 0, bad = 0;
    for_each_connected_k14free(1, n_hi, [&](const Graph& g) {
        ++graphs;
        int n = g.order();
        OracleScan scan = scan_spanning_trees(g);
        for (int k = 0; k <= 3; ++k) {
            for (int m = 0; m <= k + 1; ++m) {
                if (!sigma_p(g, m + 2).at_least(n - k)) continue;
                ++qualifying_checks;
                Outcome out = improve(g, k, m);
                int total = static_cast<int>(out.tree.leaves().size() +
                                             out.tree.branch_vertices().size());
                if (!out.good() || total > m + k + 2 ||
                    scan.min_leaf_plus_branch > m + k + 2)
                    ++bad;
            }
        }
    });
    std::ostringstream detail;
    detail << "graphs=" << graphs << " qualifying_checks=" << qualifying_checks
           << " counterexamples=" << bad << (extended ? ", extended to n=7" : "");
    report(1, "theorem reproduction, exhaustive n<=" + std::to_string(n_hi), bad == 0,
           detail.str());
    if (!extended)
        std::cout << "criterion 1 extension (n=7): SKIPPED (set STEMFORGE_ACCEPT_N7=1; "
                     "~2 minutes)\n";
}

// 2. Tightness family: sigma_{k+3} = n-k-1 exactly, and no spanning tree
//    reaches 2k+3 leaves plus branch vertices (oracle-sized instances).
void criterion2() {
    int sigma_checked = 0, oracle_checked = 0;
    bool ok = true;
    for (int k = 1; k <= 2; ++k) {
        for (int p = 1; p <= 2; ++p) {
            Graph g = sharpness_graph(k, p);
            SigmaValue sigma = sigma_p(g, k + 3);
            ++sigma_checked;
            if (sigma.infinite || sigma.value != g.order() - k - 1) ok = false;
            if (g.order() <= 10) {
                auto [min_lb, witness] = min_leaf_branch(g);
                ++oracle_checked;
                if (min_lb < 2 * k + 4) ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << "sigma_identities=" << sigma_checked << " oracle_minima=" << oracle_checked
           << ", exact equality";
    report(2, "sharpness family", ok, detail.str());
}

// 3. For 200 random connected K_{1,4}-free graphs with n in 6..9 and
//    sigma_3 >= n, the (k,m) = (0,1) search returns a tree with at most 3
//    leaves plus branch vertices, necessarily a Hamiltonian path.
void criterion3() {
    int found = 0, bad = 0;
    std::uint64_t attempt = 0;
    while (found < 200 && attempt < 40000) {
        int n = 6 + static_cast<int>(attempt % 4);
        std::uint64_t seed = Rng::derive(0xC3, attempt);
        ++attempt;
        Graph g = random_connected_k14_free(n, 0.75, seed, 200);
        if (!sigma_p(g, 3).at_least(n)) continue;
        ++found;
        Outcome out = improve(g, 0, 1);
        int total = static_cast<int>(out.tree.leaves().size() +
                                     out.tree.branch_vertices().size());
        if (!out.good() || total > 3) {
            ++bad;
            continue;
        }
        // The witness must be a path through every vertex.
        bool is_path = out.tree.branch_vertices().empty() &&
                       out.tree.leaves().size() == 2 &&
                       static_cast<int>(out.tree.edges().size()) == n - 1;
        if (is_path) {
            int cur = out.tree.leaves()[0], prev = -1, visited = 1;
            while (out.tree.degree(cur) > 1 || prev == -1) {
                int next = -1;
                for (int w : out.tree.neighbors(cur))
                    if (w != prev) next = w;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++visited;
            }
            if (visited != n) is_path = false;
        }
        if (!is_path) ++bad;
    }
    std::ostringstream detail;
    detail << "samples=" << found << " failures=" << bad;
    report(3, "Hamiltonian path corollary", found >= 200 && bad == 0, detail.str());
}

// 4. Oblique-degree identity on >= 1000 random (graph, tree) pairs.
void criterion4() {
    long long pairs = 0, bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        int n = 4 + static_cast<int>(i % 9);
        double prob = 0.3 + 0.2 * static_cast<double>(i % 3);
        Graph g = random_connected_graph(n, prob, Rng::derive(0xC4, i));
        SpanningTree t = random_spanning_tree(g, Rng::derive(0xC4 + 1, i));
        ++pairs;
        for (int v = 0; v < n; ++v) {
            int oblique = 0;
            for (const Edge& e : t.edges()) oblique += t.is_oblique_neighbor(v, e);
            if (oblique != g.degree(v)) ++bad;
        }
    }
    std::ostringstream detail;
    detail << "pairs=" << pairs << " mismatches=" << bad << ", exact";
    report(4, "oblique-degree identity", pairs >= 1000 && bad == 0, detail.str());
}

// 5. Leaf identity |L| = 2 + sum(deg-2 over branch vertices) on every tree in
//    an enumerated corpus, checked from raw degree arrays. (The SpanningTree
//    constructor additionally enforces it on every tree built anywhere.)
void criterion5() {
    long long trees = 0, bad = 0;
    auto check_graph = [&](const Graph& g) {
        std::vector<int> deg(g.order());
        enumerate_spanning_trees(g, [&](const std::vector<Edge>& edges) {
            ++trees;
            std::fill(deg.begin(), deg.end(), 0);
            for (const Edge& e : edges) {
                ++deg[e.a];
                ++deg[e.b];
            }
            int leaves = 0, excess = 0;
            for (int v = 0; v < g.order(); ++v) {
                leaves += deg[v] == 1;
                if (deg[v] >= 3) excess += deg[v] - 2;
            }
            if (leaves != 2 + excess) ++bad;
        });
    };
    check_graph(complete_graph(4));
    check_graph(cycle_graph(6));
    check_graph(sharpness_graph(1, 2));
    for (std::uint64_t i = 0; i < 50; ++i)
        check_graph(random_connected_graph(6 + static_cast<int>(i % 2), 0.5,
                                           Rng::derive(0xC5, i)));
    std::ostringstream detail;
    detail << "trees=" << trees << " violations=" << bad << ", exact";
    report(5, "leaf identity", trees > 1000 && bad == 0, detail.str());
}

// Replay a trace independently of apply_move: raw edge-set surgery from the
// deterministic initial tree, potentials recomputed per step.
bool replay_descends(const Graph& g, const Outcome& out, std::size_t& moves) {
    SpanningTree cur = initial_tree(g);
    Potential pot = tree_potential(cur);
    moves = out.trace.size();
    if (moves > static_cast<std::size_t>(g.order()) * g.order()) return false;
    for (const MoveRecord& rec : out.trace) {
        std::vector<Edge> edges = cur.edges();
        for (const Edge& e : rec.move.removed) {
            auto it = std::find(edges.begin(), edges.end(), e);
            if (it == edges.end()) return false;
            edges.erase(it);
        }
        edges.insert(edges.end(), rec.move.added.begin(), rec.move.added.end());
        cur = SpanningTree(g, edges);
        Potential next = tree_potential(cur);
        if (!next.decreased_from(pot)) return false;
        pot = next;
    }
    return cur.edges() == out.tree.edges();
}

// 6. Every applied move strictly decreases the lexicographic potential and
//    no run exceeds n^2 moves, replayed across exhaustive and random sweeps.
void criterion6() {
    long long runs = 0, bad = 0;
    std::size_t max_moves = 0;
    auto drive = [&](const Graph& g) {
        for (int k = 0; k <= 3; ++k) {
            for (int m = 0; m <= k + 1; ++m) {
                Outcome out = improve(g, k, m);
                ++runs;
                std::size_t moves = 0;
                if (!replay_descends(g, out, moves)) ++bad;
                max_moves = std::max(max_moves, moves);
            }
        }
    };
    for_each_connected_k14free(1, 5, drive);
    for (std::uint64_t i = 0; i < 150; ++i) {
        int n = 7 + static_cast<int>(i % 3);
        drive(random_connected_k14_free(n, 0.5, Rng::derive(0xC6, i), 100000));
    }
    std::ostringstream detail;
    detail << "runs=" << runs << " max_moves=" << max_moves << " violations=" << bad;
    report(6, "descent and termination", bad == 0, detail.str());
}

// 7. Every violation certificate emitted across sweeps is sound, and the
//    sharpness family at m = k+1 always produces one.
void criterion7() {
    long long certificates = 0, bad = 0;
    auto validate = [&](const Graph& g, int k, int m, const Outcome& out) {
        ++certificates;
        const Certificate& cert = *out.certificate;
        int n = g.order();
        bool ok = static_cast<int>(cert.independent_set.size()) == m + 2;
        for (std::size_t i = 0; i < cert.independent_set.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cert.independent_set.size() && ok; ++j)
                ok = !g.has_edge(cert.independent_set[i], cert.independent_set[j]);
        long long deg_sum = 0;
        for (int v : cert.independent_set) deg_sum += g.degree(v);
        ok = ok && deg_sum == cert.degree_sum && cert.uncovered_edges >= k &&
             deg_sum <= n - 1 - k && sigma_p(g, m + 2).at_most(n - 1 - k);
        if (!ok) ++bad;
    };
    auto drive = [&](const Graph& g) {
        for (int k = 0; k <= 3; ++k) {
            for (int m = 0; m <= k + 1; ++m) {
                Outcome out = improve(g, k, m);
                if (!out.good()) validate(g, k, m, out);
            }
        }
    };
    for_each_connected_k14free(1, 5, drive);
    for (std::uint64_t i = 0; i < 100; ++i)
        drive(random_connected_k14_free(7, 0.4, Rng::derive(0xC7, i), 100000));

    bool family_ok = true;
    for (int k = 1; k <= 2; ++k) {
        for (int p = 1; p <= 2; ++p) {
            Graph g = sharpness_graph(k, p);
            Outcome out = improve(g, k, k + 1);
            if (out.good()) {
                family_ok = false;
            } else {
                long long before = bad;
                validate(g, k, k + 1, out);
                family_ok = family_ok && bad == before;
            }
        }
    }
    std::ostringstream detail;
    detail << "certificates=" << certificates << " unsound=" << bad
           << " family_always_certifies=" << (family_ok ? "yes" : "no");
    report(7, "certificate soundness", certificates > 0 && bad == 0 && family_ok,
           detail.str());
}

// 8. Spanning-tree counts match the Laplacian determinant on 100 random
//    graphs with n <= 8; cycles give n; K4 gives 16.
void criterion8() {
    long long checked = 0, bad = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(i % 7);
        Graph g = random_connected_graph(n, 0.5, Rng::derive(0xC8, i));
        ++checked;
        if (spanning_tree_count(g) != spanning_tree_count_determinant(g)) ++bad;
    }
    bool special = spanning_tree_count(complete_graph(4)) == 16;
    for (int n = 3; n <= 8; ++n)
        special = special && spanning_tree_count(cycle_graph(n)) == n;
    std::ostringstream detail;
    detail << "random_graphs=" << checked << " mismatches=" << bad
           << " fixed_counts=" << (special ? "ok" : "bad");
    report(8, "oracle self-check via matrix-tree", bad == 0 && special, detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) {
        std::cout << "RESULT: all criteria PASS\n";
        return 0;
    }
    std::cout << "RESULT: " << failures << " criteria FAILED\n";
    return 1;
}
