#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace deza {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, stored as packed bit rows of
/// the adjacency matrix. Instances are immutable once built.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(int n);

    /// Graph on n vertices with the given edges. Throws on loops or
    /// out-of-range endpoints; duplicate edges are merged.
    Graph(int n, std::span<const Edge> edges);

    /// Builds the graph whose edge set is {u,v : u < v, adjacent(u, v)}.
    template <typename Predicate>
    static Graph from_predicate(int n, Predicate&& adjacent)
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adjacent(u, v))
                    g.set_edge(u, v);
        return g;
    }

    int order() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::vector<Vertex> neighbours(Vertex v) const;
    std::size_t edge_count() const;

    /// Edges (u, v), u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Size of N(u) ∩ N(v) without argument checks; for u == v this is the
    /// degree of u.
    int common_count(Vertex u, Vertex v) const noexcept;

    std::span<const std::uint64_t> row(Vertex v) const noexcept
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }

    std::optional<int> regular_degree() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void set_edge(Vertex u, Vertex v);
    void check_vertex(Vertex v) const;

    int n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Pairwise BFS distances. Pairs in different components hold
/// `kUnreachable`; accessors translate that into an empty optional.
class DistanceData {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceData(const Graph& g);

    int order() const noexcept { return n_; }
    std::optional<int> distance(Vertex u, Vertex v) const;
    int raw(Vertex u, Vertex v) const noexcept { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

    /// Largest finite distance, or empty if the graph is disconnected.
    std::optional<int> diameter() const noexcept { return diameter_; }
    std::optional<int> eccentricity(Vertex v) const { return ecc_.at(v); }
    bool connected() const noexcept { return diameter_.has_value(); }

private:
    int n_;
    std::vector<int> dist_;
    std::vector<std::optional<int>> ecc_;
    std::optional<int> diameter_;
};

struct StructuralProfile {
    std::optional<int> regular_degree;
    bool connected = false;
    bool bipartite = false;
    std::uint64_t triangle_count = 0;
    int component_count = 0;
};

/// |N(u) ∩ N(v)| for distinct u, v.
int common_neighbours(const Graph& g, Vertex u, Vertex v);

Graph complement(const Graph& g);

/// Vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

DistanceData distance_data(const Graph& g);

/// Pairs at distance exactly i. Requires g connected and 1 <= i <= diameter.
Graph distance_i_graph(const Graph& g, int i);

/// Distance-2 graphs on the two colour classes of a connected bipartite
/// graph. The class containing vertex 0 comes first.
std::pair<Graph, Graph> halved_graphs(const Graph& g);

StructuralProfile structural_profile(const Graph& g);

/// Component index per vertex, numbered in order of smallest vertex.
std::vector<int> component_labels(const Graph& g);

/// Two-colouring of a bipartite graph (colour of the smallest vertex of each
/// component is 0), or empty if g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given
/// order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph disjoint_union(const Graph& g, const Graph& h);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

} // namespace deza
