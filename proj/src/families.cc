#include "deza/families.hh"

#include "deza/deza.hh"
#include "deza/errors.hh"
#include "deza/finite_field.hh"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

namespace deza {

namespace {
    // k-subsets of {0..n-1} as bit masks, lexicographic in their sorted
    // element lists.
    std::vector<std::uint32_t> subsets(int n, int k)
    {
        if (n > 31)
            throw PreconditionError("ground set too large");
        std::vector<std::uint32_t> out;
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        if (k == 0) {
            out.push_back(0);
            return out;
        }
        while (true) {
            std::uint32_t mask = 0;
            for (int x : pick)
                mask |= 1u << x;
            out.push_back(mask);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return out;
    }
}

Graph complete_graph(int n)
{
    return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw PreconditionError("a cycle needs at least 3 vertices");
    return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

Graph disjoint_cliques(int m, int size)
{
    if (m < 1)
        throw PreconditionError("need at least one clique");
    if (size < 2)
        throw PreconditionError("clique size must be at least 2");
    return Graph::from_predicate(m * size, [size](Vertex u, Vertex v) { return u / size == v / size; });
}

Graph complete_multipartite(std::span<const int> parts)
{
    if (parts.size() < 2)
        throw PreconditionError("need at least two parts");
    std::vector<int> part;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw PreconditionError("empty part");
        part.insert(part.end(), parts[i], static_cast<int>(i));
    }
    return Graph::from_predicate(static_cast<int>(part.size()), [&](Vertex u, Vertex v) { return part[u] != part[v]; });
}

Graph kneser(int n, int k)
{
    if (k < 1 || 2 * k > n)
        throw PreconditionError("kneser graph needs 1 <= k and 2k <= n");
    auto sets = subsets(n, k);
    return Graph::from_predicate(
        static_cast<int>(sets.size()), [&](Vertex u, Vertex v) { return (sets[u] & sets[v]) == 0; });
}

Graph petersen() { return kneser(5, 2); }

Graph johnson(int n, int k)
{
    if (k < 1 || k > n)
        throw PreconditionError("johnson graph needs 1 <= k <= n");
    auto sets = subsets(n, k);
    return Graph::from_predicate(static_cast<int>(sets.size()),
        [&](Vertex u, Vertex v) { return std::popcount(sets[u] & sets[v]) == k - 1; });
}

Graph hamming(int d, int q)
{
    if (d < 1 || q < 2)
        throw PreconditionError("hamming graph needs d >= 1 and q >= 2");
    long long size = 1;
    for (int i = 0; i < d; ++i)
        if ((size *= q) > 4096)
            throw PreconditionError("hamming graph too large");
    return Graph::from_predicate(static_cast<int>(size), [&](Vertex u, Vertex v) {
        int diff = 0;
        for (int i = 0; i < d; ++i, u /= q, v /= q)
            diff += u % q != v % q;
        return diff == 1;
    });
}

Graph icosahedron()
{
    static constexpr Edge kEdges[] = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
        {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
        {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
        {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
    };
    return Graph(12, kEdges);
}

Graph paley(int q)
{
    if (q % 4 != 1)
        throw PreconditionError("paley graph needs q = 1 mod 4, got " + std::to_string(q));
    FiniteField f(q);
    return Graph::from_predicate(q, [&](Vertex u, Vertex v) { return f.is_nonzero_square(f.sub(u, v)); });
}

Graph taylor_double_cover(const Graph& g)
{
    auto p = detect_srg(g);
    if (! p || p->k != 2 * p->mu)
        throw PreconditionError("taylor double cover needs a strongly regular graph with k = 2 mu");
    const int n = g.order();
    // 0 = ∞, 1 = ∞', 2..n+1 = V, n+2..2n+1 = V'.
    return Graph::from_predicate(2 * n + 2, [&](Vertex x, Vertex y) {
        if (x == 0)
            return y >= 2 && y < n + 2;
        if (x == 1)
            return y >= n + 2;
        const bool xp = x >= n + 2, yp = y >= n + 2;
        const Vertex v = xp ? x - n - 2 : x - 2, w = yp ? y - n - 2 : y - 2;
        if (xp == yp)
            return g.adjacent(v, w);
        return v != w && ! g.adjacent(v, w);
    });
}

Graph symmetric_design_incidence(int v, std::span<const int> difference_set)
{
    if (v < 2)
        throw PreconditionError("design needs at least two points");
    std::set<int> d;
    for (int x : difference_set)
        d.insert(((x % v) + v) % v);
    const long long k = static_cast<long long>(d.size());
    if (k != static_cast<long long>(difference_set.size()) || k == 0)
        throw PreconditionError("difference set has repeated residues or is empty");
    if ((k * (k - 1)) % (v - 1) != 0)
        throw PreconditionError("k(k-1) is not divisible by v-1");
    const long long lambda = k * (k - 1) / (v - 1);
    std::vector<long long> count(v, 0);
    for (int x : d)
        for (int y : d)
            if (x != y)
                ++count[((x - y) % v + v) % v];
    for (int r = 1; r < v; ++r)
        if (count[r] != lambda)
            throw PreconditionError("not a difference set: residue " + std::to_string(r) + " occurs "
                + std::to_string(count[r]) + " times, expected " + std::to_string(lambda));

    return Graph::from_predicate(2 * v, [&](Vertex x, Vertex y) {
        if (x >= v || y < v)
            return false;
        return d.count(((x - (y - v)) % v + v) % v) > 0;
    });
}

Graph heawood()
{
    static constexpr int kFano[] = {1, 2, 4};
    return symmetric_design_incidence(7, kFano);
}

} // namespace deza
