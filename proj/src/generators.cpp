#include "stemforge/generators.hpp"

#include <stdexcept>
#include <string>

#include "stemforge/rng.hpp"

namespace stemforge {

int sharpness_order(int k, int p) { return (k + 1) + (k + 3) * p; }

Graph sharpness_graph(int k, int p, bool allow_k0_extension) {
    if (p < 1) throw std::invalid_argument("sharpness_graph requires p >= 1");
    if (k < 0) throw std::invalid_argument("sharpness_graph requires k >= 0");
    if (k == 0 && !allow_k0_extension)
        throw std::invalid_argument(
            "sharpness_graph requires k >= 1 (pass the k=0 extension flag to "
            "build the degenerate one-hub family)");

    int path_len = k + 1;
    int blobs = k + 3;
    std::vector<Edge> edges;
    auto blob_vertex = [&](int blob, int i) { return path_len + blob * p + i; };

    for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
    for (int blob = 0; blob < blobs; ++blob)
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                edges.emplace_back(blob_vertex(blob, i), blob_vertex(blob, j));

    auto join = [&](int x, int blob) {
        for (int i = 0; i < p; ++i) edges.emplace_back(x, blob_vertex(blob, i));
    };
    for (int i = 1; i <= k + 1; ++i) join(i - 1, i); // x_i to D_i
    join(0, 0);                                      // x_1 to D_0
    join(k, k + 2);                                  // x_{k+1} to D_{k+2}

    return Graph(sharpness_order(k, p), edges);
}

Graph random_connected_k14_free(int n, double edge_prob, std::uint64_t seed,
                                int max_tries) {
    if (n < 1) throw std::invalid_argument("random graph order must be positive");
    if (!(edge_prob > 0.0 && edge_prob < 1.0))
        throw std::invalid_argument("edge probability must lie strictly in (0, 1)");
    if (max_tries < 1) throw std::invalid_argument("max_tries must be positive");

    Rng rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.unit() < edge_prob) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (is_connected(g) && is_k1r_free(g, 4)) return g;
    }
    throw std::runtime_error(
        "random_connected_k14_free: no connected K_{1,4}-free sample in " +
        std::to_string(max_tries) + " tries (n=" + std::to_string(n) +
        ", p=" + std::to_string(edge_prob) + "); denser graphs reject fewer samples");
}

} // namespace stemforge
