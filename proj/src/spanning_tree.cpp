#include "stemforge/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace stemforge {

SpanningTree::SpanningTree(const Graph& g, std::vector<Edge> edges)
    : g_(&g), n_(g.order()), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (static_cast<int>(edges_.size()) != std::max(0, n_ - 1))
        throw std::invalid_argument("spanning tree needs exactly n-1 distinct edges");

    adj_.resize(n_);
    std::vector<int> comp(n_);
    for (int v = 0; v < n_; ++v) comp[v] = v;
    auto find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (const Edge& e : edges_) {
        if (!g.has_edge(e.a, e.b))
            throw std::invalid_argument("tree edge " + to_string(e) +
                                        " is not a graph edge");
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb)
            throw std::invalid_argument("tree edges contain a cycle through " +
                                        to_string(e));
        comp[ra] = rb;
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    // n-1 acyclic edges on n vertices already span; keep adjacency sorted.
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    if (n_ >= 2) {
        int degree_excess = 0;
        for (int v = 0; v < n_; ++v) {
            if (degree(v) == 1) leaves_.push_back(v);
            if (degree(v) >= 3) {
                branches_.push_back(v);
                degree_excess += degree(v) - 2;
            }
        }
        if (static_cast<int>(leaves_.size()) != 2 + degree_excess)
            throw std::logic_error("leaf count identity violated");
    }
}

bool SpanningTree::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> SpanningTree::bfs_depths(int source) const {
    std::vector<int> depth(n_, -1);
    std::queue<int> q;
    depth[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                q.push(w);
            }
        }
    }
    return depth;
}

std::vector<int> SpanningTree::path(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("path endpoint out of range");
    // Parents toward v let the walk from u read off the path in order.
    std::vector<int> parent(n_, -1);
    std::vector<int> seen(n_, 0);
    std::queue<int> q;
    seen[v] = 1;
    q.push(v);
    while (!q.empty() && !seen[u]) {
        int w = q.front();
        q.pop();
        for (int x : adj_[w]) {
            if (!seen[x]) {
                seen[x] = 1;
                parent[x] = w;
                q.push(x);
            }
        }
    }
    std::vector<int> result;
    for (int cur = u; cur != -1; cur = parent[cur]) result.push_back(cur);
    return result;
}

int SpanningTree::step_toward(int u, int v) const {
    if (u == v) throw std::invalid_argument("step_toward requires distinct vertices");
    return path(u, v)[1];
}

int SpanningTree::far_endpoint(Edge e, int v) const {
    if (v == e.a) return e.b;
    if (v == e.b) return e.a;
    std::vector<int> depth = bfs_depths(v);
    return depth[e.a] > depth[e.b] ? e.a : e.b;
}

bool SpanningTree::is_oblique_neighbor(int v, Edge e) const {
    return g_->has_edge(v, far_endpoint(e, v));
}

std::vector<int> SpanningTree::oblique_neighbors_in(Edge e,
                                                    const std::vector<int>& xs) const {
    std::vector<int> result;
    for (int v : xs)
        if (is_oblique_neighbor(v, e)) result.push_back(v);
    return result;
}

bool SpanningTree::has_oblique_neighbor_in(Edge e, const std::vector<int>& xs) const {
    for (int v : xs)
        if (is_oblique_neighbor(v, e)) return true;
    return false;
}

bool SpanningTree::pseudoadjacent(int u, int v) const {
    if (u == v) throw std::invalid_argument("pseudoadjacency needs distinct vertices");
    for (const Edge& e : edges_)
        if (is_oblique_neighbor(u, e) && is_oblique_neighbor(v, e)) return true;
    return false;
}

std::vector<int> SpanningTree::reducible_stem() const {
    if (branches_.empty())
        throw std::invalid_argument("reducible stem undefined: no branch vertices");
    std::vector<bool> keep(n_, true);
    for (int leaf : leaves_) {
        int prev = -1, cur = leaf;
        while (degree(cur) < 3) {
            keep[cur] = false;
            int next = -1;
            for (int w : adj_[cur]) {
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
    }
    std::vector<int> stem;
    for (int v = 0; v < n_; ++v)
        if (keep[v]) stem.push_back(v);
    return stem;
}

int SpanningTree::nearest_branch(int leaf) const {
    if (leaf < 0 || leaf >= n_ || degree(leaf) != 1)
        throw std::invalid_argument("nearest_branch requires a leaf");
    if (branches_.empty())
        throw std::invalid_argument("nearest_branch undefined: no branch vertices");
    int prev = -1, cur = leaf;
    while (degree(cur) < 3) {
        int next = -1;
        for (int w : adj_[cur]) {
            if (w != prev) {
                next = w;
                break;
            }
        }
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<int> SpanningTree::parent_array(int root) const {
    std::vector<int> parent(n_, -1);
    if (n_ == 0) return parent;
    std::vector<bool> seen(n_, false);
    std::queue<int> q;
    seen[root] = true;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                q.push(w);
            }
        }
    }
    return parent;
}

std::string SpanningTree::parent_line(int root) const {
    std::ostringstream out;
    out << n_ << ":";
    for (int p : parent_array(root)) out << " " << p;
    return out.str();
}

} // namespace stemforge
