#ifndef STEMFORGE_GENERATORS_HPP
#define STEMFORGE_GENERATORS_HPP

#include <cstdint>

#include "stemforge/graph.hpp"

namespace stemforge {

// Tightness family for the degree-sum bound: a path x_1..x_{k+1} plus k+3
// complete blobs D_0..D_{k+2} of order p, where x_i is joined to all of D_i,
// x_1 additionally to D_0 and x_{k+1} to D_{k+2}. Path vertices come first,
// then blobs in index order; the order is n = (k+1) + (k+3)p.
//
// k = 0 degenerates to one hub with three blobs and is only produced behind
// the explicit extension flag; no tightness property is claimed for it.
Graph sharpness_graph(int k, int p, bool allow_k0_extension = false);

int sharpness_order(int k, int p);

// Rejection-sample Erdos-Renyi graphs until one is connected and
// K_{1,4}-free. Deterministic for a fixed seed; throws after max_tries.
Graph random_connected_k14_free(int n, double edge_prob, std::uint64_t seed,
                                int max_tries = 1000);

} // namespace stemforge

#endif
