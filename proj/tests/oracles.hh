#pragma once

// Test-only reference computations. Each one is deliberately naive and
// shares no code with the library beyond reading adjacency.

#include "deza/graph.hh"
#include "deza/spectrum.hh"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const deza::Graph& g)
{
    const int n = g.order();
    Matrix a(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a[u][v] = g.adjacent(u, v) ? 1 : 0;
    return a;
}

inline Matrix square(const Matrix& a)
{
    const std::size_t n = a.size();
    Matrix out(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t)
                out[i][j] += a[i][t] * a[t][j];
    return out;
}

// Fraction-free Gaussian elimination with row pivoting.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// det(xI − A)
inline mpz_class char_poly_at(const deza::Graph& g, long x)
{
    const auto a = adjacency(g);
    const std::size_t n = a.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = (i == j ? x : 0) - a[i][j];
    return bareiss_det(std::move(m));
}

// Cyclic Jacobi rotations on a symmetric matrix; ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(const deza::Graph& g)
{
    const auto a = adjacency(g);
    const std::size_t n = a.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j];
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += m[i][j] * m[i][j];
        if (off < 1e-22)
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-300)
                    continue;
                const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = m[i][i];
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<double> flatten(const deza::Spectrum& s)
{
    std::vector<double> out;
    for (const auto& e : s.entries())
        for (int i = 0; i < e.multiplicity; ++i)
            out.push_back(static_cast<double>(e.value.approx()));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool numerically_equal(const std::vector<double>& x, const std::vector<double>& y, double tol = 1e-7)
{
    if (x.size() != y.size())
        return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > tol)
            return false;
    return true;
}

// Multiset of common-neighbour counts over unordered pairs of distinct
// vertices, read off A².
inline std::set<int> common_counts(const deza::Graph& g)
{
    const auto a2 = square(adjacency(g));
    std::set<int> out;
    for (std::size_t i = 0; i < a2.size(); ++i)
        for (std::size_t j = i + 1; j < a2.size(); ++j)
            out.insert(a2[i][j]);
    return out;
}

struct BruteDeza {
    int n, k, b, a;
};

inline std::optional<BruteDeza> brute_deza(const deza::Graph& g)
{
    const auto a = adjacency(g);
    const int n = g.order();
    int k = -1;
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            d += a[i][j];
        if (k >= 0 && d != k)
            return std::nullopt;
        k = d;
    }
    // Complete and edgeless graphs are excluded by definition.
    if (n < 2 || k == 0 || k == n - 1)
        return std::nullopt;
    const auto c = common_counts(g);
    if (c.size() > 2)
        return std::nullopt;
    return BruteDeza{n, k, *c.rbegin(), *c.begin()};
}

inline long long triangles(const deza::Graph& g)
{
    const auto a = adjacency(g);
    const auto a2 = square(a);
    long long tr = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            tr += static_cast<long long>(a2[i][j]) * a[j][i];
    return tr / 6;
}

inline std::vector<int> bfs(const deza::Graph& g, int source)
{
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (! queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) && dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

// Intersection array {b0..b_{d-1}; c1..c_d} from the distance partition of
// every vertex, or empty if the partitions disagree.
struct BruteArray {
    std::vector<int> b, c;
    friend bool operator==(const BruteArray&, const BruteArray&) = default;
};

inline std::optional<BruteArray> brute_intersection_array(const deza::Graph& g)
{
    std::optional<BruteArray> found;
    for (int x = 0; x < g.order(); ++x) {
        const auto dist = bfs(g, x);
        if (std::count(dist.begin(), dist.end(), -1))
            return std::nullopt;
        const int d = *std::max_element(dist.begin(), dist.end());
        std::vector<int> b(d + 1, -1), c(d + 1, -1);
        for (int y = 0; y < g.order(); ++y) {
            int up = 0, down = 0;
            for (int z = 0; z < g.order(); ++z) {
                if (! g.adjacent(y, z))
                    continue;
                up += dist[z] == dist[y] + 1;
                down += dist[z] == dist[y] - 1;
            }
            auto& bi = b[dist[y]];
            auto& ci = c[dist[y]];
            if ((bi >= 0 && bi != up) || (ci >= 0 && ci != down))
                return std::nullopt;
            bi = up;
            ci = down;
        }
        BruteArray arr{std::vector<int>(b.begin(), b.end() - 1), std::vector<int>(c.begin() + 1, c.end())};
        if (found && ! (*found == arr))
            return std::nullopt;
        found = arr;
    }
    return found;
}

inline deza::Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    return deza::Graph::from_predicate(n, [&](int, int) { return coin(rng); });
}

} // namespace oracle
