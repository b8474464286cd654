#ifndef STEMFORGE_GRAPH_HPP
#define STEMFORGE_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stemforge {

// Unordered vertex pair, stored with a < b.
struct Edge {
    int a = -1;
    int b = -1;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// safe to share across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v &&
               mat_[static_cast<std::size_t>(u) * n_ + v];
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_; // sorted neighbor lists
    std::vector<bool> mat_;             // n*n adjacency matrix
    std::vector<Edge> edges_;           // sorted
};

// Input error with the 1-based line it was found on (0 when not applicable).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Edge-list text format: first significant line "n m", then m lines "u v".
// Blank lines and lines starting with '#' are ignored throughout.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);

// graph6 encoding (6-bit adjacency of the upper triangle).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

// Induced star K_{1,r}: a center adjacent to r pairwise non-adjacent vertices.
struct StarWitness {
    int center = -1;
    std::vector<int> leaves; // ascending

    std::string describe() const;
};

// Lexicographically smallest witness (center first, then leaf set), or
// nullopt when g is K_{1,r}-free.
std::optional<StarWitness> find_induced_star(const Graph& g, int r);
bool is_k1r_free(const Graph& g, int r);

// Exact independence number by branch and bound. Exponential; intended for
// n <= 20 (larger inputs get a stderr warning, not an error).
int independence_number(const Graph& g);

// Minimum degree sum over independent sets of a fixed size, or infinite when
// no independent set of that size exists.
struct SigmaValue {
    bool infinite = false;
    long long value = 0;

    bool at_least(long long bound) const { return infinite || value >= bound; }
    bool at_most(long long bound) const { return !infinite && value <= bound; }
    std::string to_string() const;

    friend bool operator==(const SigmaValue&, const SigmaValue&) = default;
};

SigmaValue sigma_p(const Graph& g, int p);

// Subgraph induced by a vertex set, reindexed to 0..|X|-1 in ascending order
// of the original labels; vertex_map[new] = old.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

InducedSubgraph induced(const Graph& g, const std::vector<int>& vertices);

} // namespace stemforge

#endif
