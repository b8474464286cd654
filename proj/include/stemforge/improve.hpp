#ifndef STEMFORGE_IMPROVE_HPP
#define STEMFORGE_IMPROVE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stemforge/graph.hpp"
#include "stemforge/spanning_tree.hpp"

namespace stemforge {

// Witness of a violated tree condition. Field meaning depends on the claim:
//   1: adjacent leaves (s, t)
//   2: leaf s adjacent to x in N_T(b) with b between s and x
//   3: leaf s adjacent to consecutive vertices x, pred(x) on the b-r path
//   4: interior x of the b-r path with two leaf neighbors s, t
//   5: leaves s, t both oblique to edge e (case 1: far endpoints differ)
//   6: every edge of the b-r path has an oblique leaf; s, t witness the
//      first two path edges (case 1: s sees the near endpoint of the
//      second edge, case 2: the far one)
struct ClaimViolation {
    int claim = 0;
    int s = -1;
    int t = -1;
    int b = -1;
    int r = -1;
    int x = -1;
    Edge e{};
    int case_tag = 0;

    std::string describe() const;
};

std::optional<ClaimViolation> check_claim1(const Graph& g, const SpanningTree& t);
std::optional<ClaimViolation> check_claim2(const Graph& g, const SpanningTree& t);
std::optional<ClaimViolation> check_claim3(const Graph& g, const SpanningTree& t);
std::optional<ClaimViolation> check_claim4(const Graph& g, const SpanningTree& t);
std::optional<ClaimViolation> check_claim5(const Graph& g, const SpanningTree& t);
std::optional<ClaimViolation> check_claim6(const Graph& g, const SpanningTree& t);

// Claims in order 1..6; first violation wins. The later move derivations
// assume all earlier claims hold.
std::optional<ClaimViolation> first_violation(const Graph& g, const SpanningTree& t);

// Edge exchange: tree edges out, graph edges in, equal counts in {1,2,3}.
struct Move {
    int claim = 0;
    std::vector<Edge> removed;
    std::vector<Edge> added;

    std::string describe() const;
};

// Lexicographic descent key: leaf count first, then larger reducible stem.
// stem_component is |R_Stem(T)|, or n for a tree without branch vertices
// (never compared in that case; the search stops on paths first).
struct Potential {
    int leaf_count = 0;
    int stem_component = 0;

    bool decreased_from(const Potential& old) const {
        return leaf_count < old.leaf_count ||
               (leaf_count == old.leaf_count && stem_component > old.stem_component);
    }
    friend bool operator==(const Potential&, const Potential&) = default;
};

Potential tree_potential(const SpanningTree& t);

// DFS tree rooted at 0, children in ascending order. Requires connectivity.
SpanningTree initial_tree(const Graph& g);

// Raised when none of the chords a move derivation relies on exists; the
// witness is then an induced K_{1,4}, so the input was not K_{1,4}-free.
class NoApplicableChord : public std::logic_error {
public:
    NoApplicableChord(const StarWitness& w, const std::string& context);
    const StarWitness& witness() const { return witness_; }

private:
    StarWitness witness_;
};

// Turn a verified violation into a strictly improving exchange, following
// the case analysis for that claim. Claims 1..claim-1 must hold on (g, t).
Move derive_move(const Graph& g, const SpanningTree& t, const ClaimViolation& v);

// Apply an exchange and validate the result: removed edges present, added
// edges are non-tree graph edges, the result spans, and the potential
// strictly decreases. Throws std::logic_error otherwise.
SpanningTree apply_move(const Graph& g, const SpanningTree& t, const Move& mv);

struct MoveRecord {
    Move move;
    Potential before{};
    Potential after{};
    int leaves_after = 0;
    int branches_after = 0;

    // "claim=<id> remove={..} add={..} L=<..> B=<..> stem=<..>" with values
    // taken after the move; stem prints "-" when no branch vertex remains.
    std::string line() const;
};

// Violation certificate: an independent leaf set whose degree sum is small.
struct Certificate {
    std::vector<int> independent_set; // ascending, size m+2
    int uncovered_edges = 0;          // tree edges with no oblique neighbor in the set
    long long degree_sum = 0;
};

// Requires: all six claims pass and |L|+|B| >= m+k+3 (refused otherwise).
// Asserts uncovered_edges >= k and degree_sum <= n-1-uncovered_edges.
Certificate build_certificate(const Graph& g, const SpanningTree& t, int k, int m);

struct Outcome {
    enum class Status { good_tree, hypothesis_violation };

    Status status = Status::good_tree;
    int k = 0;
    int m = 0;
    int bound = 0; // m + k + 2
    SpanningTree tree;
    std::optional<Certificate> certificate;
    std::vector<MoveRecord> trace;

    bool good() const { return status == Status::good_tree; }
};

// Decision procedure. Returns either a spanning tree with
// |L(T)| + |B(T)| <= m+k+2, or a certificate that sigma_{m+2}(g) <= n-1-k.
// Requires g connected and K_{1,4}-free and 0 <= m <= k+1.
Outcome improve(const Graph& g, int k, int m);

} // namespace stemforge

#endif
