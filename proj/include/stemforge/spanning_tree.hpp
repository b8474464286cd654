#ifndef STEMFORGE_SPANNING_TREE_HPP
#define STEMFORGE_SPANNING_TREE_HPP

#include <string>
#include <vector>

#include "stemforge/graph.hpp"

namespace stemforge {

// Spanning tree of a host graph. Immutable; edge exchanges build new values.
// The host graph must outlive the tree.
class SpanningTree {
public:
    SpanningTree(const Graph& g, std::vector<Edge> edges);

    const Graph& graph() const { return *g_; }
    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Degree-1 and degree>=3 vertices, ascending. Empty for n <= 1.
    const std::vector<int>& leaves() const { return leaves_; }
    const std::vector<int>& branch_vertices() const { return branches_; }

    // Unique u-v path, oriented from u to v.
    std::vector<int> path(int u, int v) const;

    // The tree neighbor of u on the path toward v; requires u != v.
    int step_toward(int u, int v) const;

    // Endpoint of tree edge e farther from v (the other endpoint when v is
    // itself an endpoint of e).
    int far_endpoint(Edge e, int v) const;

    // v is an oblique neighbor of e when v and the far endpoint of e from v
    // are adjacent in the host graph.
    bool is_oblique_neighbor(int v, Edge e) const;
    std::vector<int> oblique_neighbors_in(Edge e, const std::vector<int>& xs) const;
    bool has_oblique_neighbor_in(Edge e, const std::vector<int>& xs) const;

    // Vertices u, v are pseudoadjacent when some tree edge has both as
    // oblique neighbors.
    bool pseudoadjacent(int u, int v) const;

    // Tree minus, for each leaf, the run of vertices up to (excluding) its
    // nearest branch vertex. Requires at least one branch vertex.
    std::vector<int> reducible_stem() const;

    // First branch vertex on the walk from a leaf. Requires B nonempty.
    int nearest_branch(int leaf) const;

    // Parent array rooted at `root` via ascending BFS; parent[root] = -1.
    std::vector<int> parent_array(int root = 0) const;
    // Line format "n: p_0 p_1 ... p_{n-1}".
    std::string parent_line(int root = 0) const;

    bool operator==(const SpanningTree& other) const {
        return g_ == other.g_ && edges_ == other.edges_;
    }

private:
    std::vector<int> bfs_depths(int source) const;

    const Graph* g_ = nullptr;
    int n_ = 0;
    std::vector<Edge> edges_; // sorted
    std::vector<std::vector<int>> adj_;
    std::vector<int> leaves_;
    std::vector<int> branches_;
};

} // namespace stemforge

#endif
