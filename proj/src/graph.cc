#include "deza/graph.hh"

#include "deza/errors.hh"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace deza {

namespace {
    std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }
}

Graph::Graph(int n) : n_(n), words_(0)
{
    if (n < 1)
        throw PreconditionError("graph must have at least one vertex, got " + std::to_string(n));
    words_ = words_for(n);
    bits_.assign(words_ * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw PreconditionError("loop at vertex " + std::to_string(u));
        set_edge(u, v);
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::set_edge(Vertex u, Vertex v)
{
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out;
    auto r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
        auto w = r[i];
        while (w) {
            out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto w : bits_)
        twice += std::popcount(w);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbours(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

int Graph::common_count(Vertex u, Vertex v) const noexcept
{
    auto a = row(u), b = row(v);
    int c = 0;
    for (std::size_t i = 0; i < words_; ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

std::optional<int> Graph::regular_degree() const
{
    int d = degree(0);
    for (Vertex v = 1; v < n_; ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

DistanceData::DistanceData(const Graph& g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, kUnreachable), ecc_(n_)
{
    std::vector<std::vector<Vertex>> adj(n_);
    for (Vertex v = 0; v < n_; ++v)
        adj[v] = g.neighbours(v);

    bool connected = true;
    int diameter = 0;
    for (Vertex s = 0; s < n_; ++s) {
        int* d = dist_.data() + static_cast<std::size_t>(s) * n_;
        std::queue<Vertex> q;
        d[s] = 0;
        q.push(s);
        int reached = 1, far = 0;
        while (! q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u])
                if (d[w] == kUnreachable) {
                    d[w] = d[u] + 1;
                    far = std::max(far, d[w]);
                    ++reached;
                    q.push(w);
                }
        }
        if (reached == n_)
            ecc_[s] = far;
        else
            connected = false;
        diameter = std::max(diameter, far);
    }
    if (connected)
        diameter_ = diameter;
}

std::optional<int> DistanceData::distance(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionError("vertex out of range");
    int d = raw(u, v);
    if (d == kUnreachable)
        return std::nullopt;
    return d;
}

int common_neighbours(const Graph& g, Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw PreconditionError("vertex out of range");
    if (u == v)
        throw PreconditionError("common_neighbours needs two distinct vertices");
    return g.common_count(u, v);
}

Graph complement(const Graph& g)
{
    return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return ! g.adjacent(u, v); });
}

Graph line_graph(const Graph& g)
{
    auto e = g.edges();
    if (e.empty())
        throw PreconditionError("line graph of an edgeless graph");
    return Graph::from_predicate(static_cast<int>(e.size()), [&](int i, int j) {
        auto [a, b] = e[i];
        auto [c, d] = e[j];
        return a == c || a == d || b == c || b == d;
    });
}

DistanceData distance_data(const Graph& g) { return DistanceData(g); }

Graph distance_i_graph(const Graph& g, int i)
{
    DistanceData dd(g);
    if (! dd.connected())
        throw PreconditionError("distance-i graph requires a connected graph");
    if (i < 1 || i > *dd.diameter())
        throw PreconditionError("distance " + std::to_string(i) + " outside 1.." + std::to_string(*dd.diameter()));
    return Graph::from_predicate(g.order(), [&](Vertex u, Vertex v) { return dd.raw(u, v) == i; });
}

std::vector<int> component_labels(const Graph& g)
{
    std::vector<int> label(g.order(), -1);
    int next = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != -1)
            continue;
        std::vector<Vertex> stack{s};
        label[s] = next;
        while (! stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u))
                if (label[w] == -1) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

std::optional<std::vector<int>> bipartition(const Graph& g)
{
    std::vector<int> colour(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (! q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbours(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    q.push(w);
                }
                else if (colour[w] == colour[u])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

std::pair<Graph, Graph> halved_graphs(const Graph& g)
{
    DistanceData dd(g);
    if (! dd.connected())
        throw PreconditionError("halved graphs require a connected graph");
    auto colour = bipartition(g);
    if (! colour)
        throw PreconditionError("halved graphs require a bipartite graph");
    if (g.order() < 2)
        throw PreconditionError("halved graphs require at least two vertices");

    std::vector<Vertex> side[2];
    for (Vertex v = 0; v < g.order(); ++v)
        side[(*colour)[v]].push_back(v);

    auto halve = [&](const std::vector<Vertex>& s) {
        return Graph::from_predicate(static_cast<int>(s.size()),
            [&](int i, int j) { return dd.raw(s[i], s[j]) == 2; });
    };
    return {halve(side[0]), halve(side[1])};
}

StructuralProfile structural_profile(const Graph& g)
{
    StructuralProfile p;
    p.regular_degree = g.regular_degree();
    auto labels = component_labels(g);
    p.component_count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    p.connected = p.component_count == 1;
    p.bipartite = bipartition(g).has_value();

    // trace(M^3) = sum over ordered adjacent pairs (u, v) of (M^2)_{uv}.
    std::uint64_t closed_walks = 0;
    for (auto [u, v] : g.edges())
        closed_walks += 2 * static_cast<std::uint64_t>(g.common_count(u, v));
    p.triangle_count = closed_walks / 6;
    return p;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    return Graph::from_predicate(static_cast<int>(vertices.size()),
        [&](int i, int j) { return g.adjacent(vertices[i], vertices[j]); });
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    int n = g.order();
    return Graph::from_predicate(n + h.order(), [&](int u, int v) {
        if (v < n)
            return g.adjacent(u, v);
        if (u >= n)
            return h.adjacent(u - n, v - n);
        return false;
    });
}

bool is_complete(const Graph& g)
{
    auto n = static_cast<std::size_t>(g.order());
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

} // namespace deza
