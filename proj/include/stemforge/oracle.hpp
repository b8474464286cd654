#ifndef STEMFORGE_ORACLE_HPP
#define STEMFORGE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stemforge/graph.hpp"
#include "stemforge/improve.hpp"
#include "stemforge/spanning_tree.hpp"

namespace stemforge {

// Visit every spanning tree of g exactly once (edge subset canonical form),
// by include/exclude branching over the edge list with connectivity pruning.
// Intended for n <= ~10.
void enumerate_spanning_trees(const Graph& g,
                              const std::function<void(const std::vector<Edge>&)>& visit);

long long spanning_tree_count(const Graph& g);

// Spanning tree count through the Laplacian minor determinant, in exact
// integer arithmetic (Bareiss elimination). Independent of the enumerator.
long long spanning_tree_count_determinant(const Graph& g);

// Exact minima over all spanning trees.
struct OracleScan {
    long long tree_count = 0;
    int min_leaf_plus_branch = 0;
    std::vector<Edge> lb_witness;
    int min_leaves = 0;
    std::vector<Edge> leaves_witness;
};

OracleScan scan_spanning_trees(const Graph& g);

// min over spanning trees of |L(T)| + |B(T)|, with an argmin witness.
std::pair<int, std::vector<Edge>> min_leaf_branch(const Graph& g);

// One (k, m) comparison of hypothesis, exhaustive conclusion, and the
// improve engine, with soundness checks on whichever outcome was produced.
struct TheoremCheckRecord {
    int k = 0;
    int m = 0;
    SigmaValue sigma;       // sigma_{m+2}(g)
    bool hypothesis = false; // sigma_{m+2} >= n-k
    int min_lb = 0;
    bool conclusion = false; // min_lb <= m+k+2
    bool improve_good = false;
    int improve_total = 0; // |L|+|B| of the final tree
    std::size_t moves = 0;
    bool flag_theorem = true; // hypothesis implies conclusion
    bool flag_good = true;    // good tree outcomes are sound
    bool flag_cert = true;    // violation certificates are sound
    std::string failure;

    bool ok() const { return flag_theorem && flag_good && flag_cert; }
};

TheoremCheckRecord theorem_check(const Graph& g, int k, int m,
                                 const OracleScan* scan = nullptr);

struct OracleReport {
    OracleScan scan;
    std::vector<TheoremCheckRecord> table; // k = 0..k_max, m = 0..k+1
};

OracleReport oracle_report(const Graph& g, int k_max);

struct Counterexample {
    std::string id;
    std::string edge_list;
    std::string report;
};

struct SweepReport {
    long long graphs_scanned = 0;
    long long k14free_count = 0;
    long long checks_run = 0;
    std::size_t max_moves = 0;
    std::vector<Counterexample> counterexamples;

    void merge(SweepReport&& other);
};

struct SweepOptions {
    int jobs = 1;
    bool persist = true;              // write counterexamples to disk
    std::string counterexample_dir;   // empty: env or "counterexamples"
};

// All labeled graphs on 1..n_max vertices, filtered to connected and
// K_{1,4}-free, checked for every 0 <= k <= k_max, 0 <= m <= k+1.
// Refuses n_max > 8.
SweepReport sweep_exhaustive(int n_max, int k_max, const SweepOptions& opts = {});

// Same checks on seeded random connected K_{1,4}-free graphs.
SweepReport sweep_random(int n, int samples, std::uint64_t seed, int k_max,
                         const SweepOptions& opts = {});

std::string resolve_counterexample_dir(const SweepOptions& opts);

} // namespace stemforge

#endif
