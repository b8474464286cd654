#include "stemforge/graph.hpp"

#include <algorithm>
#include <cctype>
#include <iostream>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace stemforge {

namespace {

constexpr int kSlowSearchWarnThreshold = 20;

void warn_if_large(const Graph& g, const char* what) {
    if (g.order() > kSlowSearchWarnThreshold) {
        std::cerr << "stemforge: warning: " << what << " on n=" << g.order()
                  << " is exponential; expect it to be slow\n";
    }
}

} // namespace

std::string to_string(const Edge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    adj_.resize(n);
    mat_.assign(static_cast<std::size_t>(n) * n, false);
    edges_ = edges;
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (e.a < 0 || e.b >= n)
            throw std::invalid_argument("edge " + to_string(e) + " out of range");
        if (e.a == e.b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.a));
        if (mat_[static_cast<std::size_t>(e.a) * n + e.b])
            throw std::invalid_argument("duplicate edge " + to_string(e));
        mat_[static_cast<std::size_t>(e.a) * n + e.b] = true;
        mat_[static_cast<std::size_t>(e.b) * n + e.a] = true;
        adj_[e.a].push_back(e.b);
        adj_[e.b].push_back(e.a);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

namespace {

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<Edge> edges;
    std::unordered_set<long long> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (!significant(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected \"n m\"");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing content after header");
            header_line = lineno;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "unexpected content after " +
                                         std::to_string(m) + " edges");
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge, expected \"u v\"");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing content after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex index out of range [0, " +
                                         std::to_string(n - 1) + "]");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        Edge e(static_cast<int>(u), static_cast<int>(v));
        long long key = static_cast<long long>(e.a) * n + e.b;
        if (!seen.insert(key).second)
            throw ParseError(lineno, "duplicate edge " + to_string(e));
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(0, "empty input, expected \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(header_line, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.a << " " << e.b << "\n";
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    // Strip the optional header and trailing whitespace.
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw ParseError(0, "empty graph6 string");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError(0, "graph6 string truncated");
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError(0, "invalid graph6 character");
        return c - 63;
    };

    long long n;
    if (byte(0) == 63) {
        // '~' prefix: 18-bit order in the next three bytes.
        n = (static_cast<long long>(byte(1)) << 12) |
            (static_cast<long long>(byte(2)) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != need)
        throw ParseError(0, "graph6 length mismatch for n=" + std::to_string(n));

    std::vector<Edge> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = byte(pos + static_cast<std::size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (long long pad = bit; pad < static_cast<long long>(need) * 6; ++pad) {
        int value = byte(pos + static_cast<std::size_t>(pad / 6));
        if ((value >> (5 - pad % 6)) & 1)
            throw ParseError(0, "invalid graph6 padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 writer");
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

std::string StarWitness::describe() const {
    std::string s = "center=" + std::to_string(center) + " leaves=";
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(leaves[i]);
    }
    return s;
}

namespace {

// Lexicographically first independent r-subset of `candidates` (ascending).
bool find_independent_subset(const Graph& g, const std::vector<int>& candidates,
                             int r, std::size_t start, std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == r) return true;
    for (std::size_t i = start; i < candidates.size(); ++i) {
        int v = candidates[i];
        bool compatible = true;
        for (int u : chosen) {
            if (g.has_edge(u, v)) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        chosen.push_back(v);
        if (find_independent_subset(g, candidates, r, i + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<StarWitness> find_induced_star(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("star order must be at least 1");
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < r) continue;
        std::vector<int> chosen;
        chosen.reserve(r);
        if (find_independent_subset(g, g.neighbors(v), r, 0, chosen))
            return StarWitness{v, chosen};
    }
    return std::nullopt;
}

bool is_k1r_free(const Graph& g, int r) { return !find_induced_star(g, r).has_value(); }

namespace {

// Branch and bound on the candidate list tail.
void mis_search(const Graph& g, const std::vector<int>& candidates, std::size_t idx,
                std::vector<int>& current, std::size_t& best) {
    if (current.size() + (candidates.size() - idx) <= best) return;
    if (idx == candidates.size()) {
        best = std::max(best, current.size());
        return;
    }
    int v = candidates[idx];
    bool can_take = true;
    for (int u : current) {
        if (g.has_edge(u, v)) {
            can_take = false;
            break;
        }
    }
    if (can_take) {
        current.push_back(v);
        mis_search(g, candidates, idx + 1, current, best);
        current.pop_back();
    }
    mis_search(g, candidates, idx + 1, current, best);
}

} // namespace

int independence_number(const Graph& g) {
    if (g.order() == 0) return 0;
    warn_if_large(g, "independence number");
    std::vector<int> order(g.order());
    for (int v = 0; v < g.order(); ++v) order[v] = v;
    // High-degree vertices first tightens the bound early.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> current;
    std::size_t best = 0;
    mis_search(g, order, 0, current, best);
    return static_cast<int>(best);
}

std::string SigmaValue::to_string() const {
    return infinite ? "inf" : std::to_string(value);
}

namespace {

void sigma_search(const Graph& g, int p, int start, std::vector<int>& chosen,
                  long long sum, long long& best) {
    if (static_cast<int>(chosen.size()) == p) {
        best = std::min(best, sum);
        return;
    }
    int missing = p - static_cast<int>(chosen.size());
    for (int v = start; v + missing <= g.order(); ++v) {
        if (sum + g.degree(v) >= best) continue; // degrees are non-negative
        bool compatible = true;
        for (int u : chosen) {
            if (g.has_edge(u, v)) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        chosen.push_back(v);
        sigma_search(g, p, v + 1, chosen, sum + g.degree(v), best);
        chosen.pop_back();
    }
}

} // namespace

SigmaValue sigma_p(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("sigma_p requires p >= 1");
    warn_if_large(g, "sigma_p");
    if (independence_number(g) < p) return SigmaValue{true, 0};
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> chosen;
    sigma_search(g, p, 0, chosen, 0, best);
    return SigmaValue{false, best};
}

InducedSubgraph induced(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> xs = vertices;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (int v : xs) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced: vertex " + std::to_string(v) +
                                        " out of range");
    }
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) index[xs[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (index[e.a] >= 0 && index[e.b] >= 0)
            edges.emplace_back(index[e.a], index[e.b]);
    }
    return InducedSubgraph{Graph(static_cast<int>(xs.size()), edges), xs};
}

} // namespace stemforge
