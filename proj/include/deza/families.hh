#pragma once

#include "deza/graph.hh"

#include <span>
#include <string>
#include <vector>

namespace deza {

Graph complete_graph(int n);

/// n >= 3.
Graph cycle_graph(int n);

/// m copies of K_size; size >= 2.
Graph disjoint_cliques(int m, int size);

/// At least two non-empty parts, vertices numbered part by part.
Graph complete_multipartite(std::span<const int> parts);

/// k-subsets of {0..n-1} (in lexicographic order), adjacent when disjoint.
/// Requires 1 <= k and 2k <= n.
Graph kneser(int n, int k);

Graph petersen();

/// k-subsets of {0..n-1}, adjacent when they meet in k − 1 elements.
Graph johnson(int n, int k);

/// Words of length d over an alphabet of size q, adjacent when they differ
/// in exactly one coordinate.
Graph hamming(int d, int q);

/// Vertex 0 and 11 are opposite poles; 1..5 and 6..10 are the two
/// pentagons of the antiprism between them.
Graph icosahedron();

/// Paley graph on GF(q), q ≡ 1 (mod 4) a prime power.
Graph paley(int q);

/// Antipodal double cover of K_{n+1} over a graph with k = 2μ. Vertices are
/// ∞, ∞', then V, then V'.
Graph taylor_double_cover(const Graph& g);

/// Point-block incidence graph of the symmetric design developed from the
/// difference set D over Z_v. Points are 0..v-1, block D + i is vertex v + i.
Graph symmetric_design_incidence(int v, std::span<const int> difference_set);

/// Incidence graph of the Fano plane from {1, 2, 4} mod 7.
Graph heawood();

/// Catalog names accepted by bundled_graph.
std::vector<std::string> bundled_names();

/// Loads an embedded graph and asserts its recorded spectrum and
/// intersection array. Throws PreconditionError for unknown names.
Graph bundled_graph(const std::string& name);

} // namespace deza
