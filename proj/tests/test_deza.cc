#include "assets.hh"
#include "oracles.hh"

#include "deza/deza.hh"
#include "deza/errors.hh"
#include "deza/families.hh"

#include <doctest.h>

using namespace deza;

namespace {

Eigenvalue I(std::int64_t z) { return Eigenvalue::integer(z); }

Graph circulant(int n, const std::set<int>& jumps)
{
    return Graph::from_predicate(n, [&](int u, int v) {
        const int d = (v - u + n) % n;
        return jumps.count(d) || jumps.count(n - d);
    });
}

std::optional<SrgParams> brute_srg(const Graph& g)
{
    const auto a = oracle::adjacency(g);
    const auto a2 = oracle::square(a);
    const auto k = g.regular_degree();
    if (! k || *k == 0 || *k == g.order() - 1)
        return std::nullopt;
    std::set<int> lam, mu;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            (a[i][j] ? lam : mu).insert(a2[i][j]);
    if (lam.size() != 1 || mu.size() != 1)
        return std::nullopt;
    return SrgParams{g.order(), *k, *lam.begin(), *mu.begin()};
}

// Same-class relation of a divisible design graph: pairs with lambda1
// common neighbours, closed under reflexivity.
bool ddg_oracle(const Graph& g, const DdgParams& p)
{
    const auto a2 = oracle::square(oracle::adjacency(g));
    std::vector<int> cls(g.order(), -1);
    int classes = 0;
    for (int i = 0; i < g.order(); ++i) {
        if (cls[i] < 0)
            cls[i] = classes++;
        for (int j = i + 1; j < g.order(); ++j) {
            const int c = a2[i][j];
            if (c != p.lambda1 && c != p.lambda2)
                return false;
            if (c == p.lambda1) {
                if (cls[j] >= 0 && cls[j] != cls[i])
                    return false;
                cls[j] = cls[i];
            }
        }
    }
    std::vector<int> size(classes, 0);
    for (int c : cls)
        ++size[c];
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if ((cls[i] == cls[j]) != (a2[i][j] == p.lambda1))
                return false;
    return classes == p.m && std::all_of(size.begin(), size.end(), [&](int s) { return s == p.n; });
}

} // namespace

TEST_CASE("detect_deza agrees with the common-neighbour oracle on random circulants")
{
    std::mt19937_64 rng(5);
    int deza_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 20);
        std::set<int> jumps;
        for (int d = 1; d <= n / 2; ++d)
            if (rng() % 3 == 0)
                jumps.insert(d);
        if (jumps.empty())
            continue;
        const Graph g = circulant(n, jumps);
        const auto mine = detect_deza(g);
        const auto ref = oracle::brute_deza(g);
        REQUIRE(mine.has_value() == ref.has_value());
        if (mine) {
            ++deza_seen;
            CHECK(mine->n == ref->n);
            CHECK(mine->k == ref->k);
            CHECK(mine->b == ref->b);
            CHECK(mine->a == ref->a);
        }
    }
    CHECK(deza_seen > 20);
}

TEST_CASE("all graphs on four vertices")
{
    // C4 has common-neighbour counts {2, 0}; K_{1,3} is not regular.
    CHECK(detect_deza(cycle_graph(4)) == DezaParams{4, 2, 2, 0});
    const Edge star[] = {{0, 1}, {0, 2}, {0, 3}};
    CHECK_FALSE(detect_deza(Graph(4, star)).has_value());
    int matches = 0;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1)
                    edges.emplace_back(u, v);
        const Graph g(4, edges);
        CHECK(detect_deza(g).has_value() == oracle::brute_deza(g).has_value());
        matches += detect_deza(g).has_value();
    }
    // 3 perfect matchings and 3 four-cycles; K4 and the empty graph are
    // excluded.
    CHECK(matches == 6);
}

TEST_CASE("detect_srg agrees with the oracle")
{
    for (const auto& [name, g] : assets::corpus()) {
        CAPTURE(name);
        CHECK(detect_srg(g) == brute_srg(g));
    }
    CHECK(detect_srg(petersen()) == SrgParams{10, 3, 0, 1});
    CHECK_FALSE(detect_srg(complete_graph(5)).has_value());
    CHECK_FALSE(detect_srg(Graph(5)).has_value());
    CHECK(SrgParams{10, 3, 0, 1}.feasible_counting());
    CHECK_FALSE(SrgParams{10, 3, 1, 1}.feasible_counting());
}

TEST_CASE("children follow the common-neighbour counts")
{
    for (const auto& [name, g] : assets::corpus()) {
        const auto p = detect_deza(g);
        if (! p)
            continue;
        CAPTURE(name);
        const auto ch = children(g, *p);
        const auto a2 = oracle::square(oracle::adjacency(g));
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (p->b == p->a) {
                    CHECK(ch.a.adjacent(u, v));
                    CHECK_FALSE(ch.b.adjacent(u, v));
                } else {
                    CHECK(ch.a.adjacent(u, v) == (a2[u][v] == p->a));
                    CHECK(ch.b.adjacent(u, v) == (a2[u][v] == p->b));
                }
            }
    }
    const Graph p = petersen();
    CHECK_THROWS_AS(children(p, DezaParams{10, 3, 2, 0}), PreconditionError);
}

TEST_CASE("strongly Deza verdicts")
{
    const auto ico = is_strongly_deza(icosahedron());
    CHECK(ico.verdict);
    CHECK(ico.params == DezaParams{12, 5, 2, 0});
    CHECK(ico.child_a_srg == SrgParams{12, 1, 0, 0});
    CHECK(ico.child_b_srg == SrgParams{12, 10, 8, 10});

    CHECK(is_strongly_deza(petersen()).verdict);
    CHECK(is_strongly_deza(cycle_graph(6)).verdict);
    CHECK_FALSE(is_strongly_deza(complete_graph(4)).verdict);
    CHECK_FALSE(is_strongly_deza(hamming(3, 3)).verdict);
}

TEST_CASE("divisible design graphs")
{
    const auto h = is_divisible_design(heawood());
    REQUIRE(h);
    CHECK(*h == DdgParams{14, 3, 1, 0, 2, 7});
    CHECK(ddg_oracle(heawood(), *h));

    const auto o = is_divisible_design(assets::octahedron_line_graph());
    REQUIRE(o);
    CHECK(*o == DdgParams{12, 6, 2, 3, 3, 4});
    CHECK(ddg_oracle(assets::octahedron_line_graph(), *o));

    for (const auto& [name, g] : assets::corpus())
        if (auto p = is_divisible_design(g)) {
            CAPTURE(name);
            CHECK(ddg_oracle(g, *p));
        }
    CHECK_FALSE(is_divisible_design(petersen()).has_value());
}

TEST_CASE("child spectra from the parent equal the spectra of the children")
{
    int checked = 0;
    for (const auto& [name, g] : assets::corpus()) {
        const auto p = detect_deza(g);
        if (! p || p->b == p->a)
            continue;
        CAPTURE(name);
        const auto [fa, fb] = child_spectra_formula(exact_spectrum(g), *p);
        const auto ch = children(g, *p);
        CHECK(fa == exact_spectrum(ch.a));
        CHECK(fb == exact_spectrum(ch.b));
        CHECK(verify_child_formula(g).holds());
        ++checked;
    }
    CHECK(checked >= 8);
}

TEST_CASE("the -k eigenvalue of a bipartite parent keeps its own child eigenvalue")
{
    const auto [fa, fb] = child_spectra_formula(exact_spectrum(heawood()), DezaParams{14, 3, 1, 0});
    // Child A joins the two colour classes completely (K_{7,7}); child B is
    // two disjoint K7. The parent's -3 lands on -7 in A and on a second 6
    // in B.
    const auto ch = children(heawood(), DezaParams{14, 3, 1, 0});
    CHECK(fa == exact_spectrum(ch.a));
    CHECK(fb == exact_spectrum(ch.b));
    CHECK(fa == Spectrum{{I(7), 1}, {I(0), 12}, {I(-7), 1}});
    CHECK(fb == Spectrum{{I(6), 2}, {I(-1), 12}});
}

TEST_CASE("verify_child_formula demands integral children of non-SRG strongly Deza graphs")
{
    const auto v = verify_child_formula(icosahedron());
    CHECK(v.strongly_deza);
    CHECK(v.integrality_required);
    CHECK(v.children_integral);
    CHECK(v.holds());

    const auto c5 = verify_child_formula(cycle_graph(5));
    CHECK_FALSE(c5.integrality_required);
    CHECK(c5.holds());

    CHECK_THROWS_AS(verify_child_formula(complete_graph(4)), PreconditionError);
}
