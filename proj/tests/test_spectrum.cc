#include "assets.hh"
#include "oracles.hh"

#include "deza/eigenvalue.hh"
#include "deza/families.hh"
#include "deza/polynomial.hh"
#include "deza/spectrum.hh"

#include <doctest.h>

using namespace deza;

namespace {

Eigenvalue I(std::int64_t z) { return Eigenvalue::integer(z); }
Eigenvalue sq(std::int64_t n) { return Eigenvalue::sqrt_of(n); }

} // namespace

TEST_CASE("eigenvalues are kept in canonical form")
{
    const auto v = Eigenvalue::quadratic(2, 2, 8, 4);
    CHECK(v.p() == 1);
    CHECK(v.u() == 2);
    CHECK(v.d() == 2);
    CHECK(v.q() == 2);
    CHECK(Eigenvalue::quadratic(3, 0, 5, 3) == I(1));
    CHECK(sq(12) == Eigenvalue::quadratic(0, 2, 3, 1));
    CHECK(sq(9) == I(3));
    CHECK(Eigenvalue::rational(6, -4) == Eigenvalue::rational(-3, 2));
    CHECK(split_square(72) == std::pair<std::int64_t, std::int64_t>{6, 2});
    CHECK(is_perfect_square(49));
    CHECK_FALSE(is_perfect_square(50));
}

TEST_CASE("eigenvalue arithmetic is exact")
{
    const Eigenvalue r5 = sq(5);
    CHECK(r5 * r5 == I(5));
    CHECK((I(1) + r5) * (I(1) - r5) == I(-4));
    CHECK((I(1) + r5) / I(2) == Eigenvalue::quadratic(1, 1, 5, 2));
    CHECK((r5 + r5).squared() == I(20));
    CHECK(r5.conjugate() == -r5);
    CHECK((-r5).abs() == r5);
    CHECK_THROWS_AS(sq(2) * sq(3), std::domain_error);
    CHECK_THROWS_AS(I(1) / I(0), std::domain_error);
    CHECK_THROWS_AS(sq(-1), std::domain_error);
    CHECK(Eigenvalue::quadratic(1, 1, 5, 2).is_algebraic_integer());
    CHECK_FALSE(Eigenvalue::rational(1, 2).is_algebraic_integer());
}

TEST_CASE("eigenvalues order like their real values")
{
    std::vector<Eigenvalue> xs{I(2), sq(5), -sq(5), Eigenvalue::rational(1, 3), Eigenvalue::quadratic(1, 1, 5, 2),
        Eigenvalue::quadratic(1, -1, 5, 2), I(-3), sq(2)};
    for (const auto& x : xs)
        for (const auto& y : xs)
            CHECK(((x < y) == (x.approx() < y.approx())));
}

TEST_CASE("text form")
{
    CHECK(I(-2).to_string() == "-2");
    CHECK(Eigenvalue::rational(3, 2).to_string() == "3/2");
    CHECK(sq(5).to_string() == "(0+1√5)/1");
    CHECK(Eigenvalue::quadratic(1, -1, 5, 2).to_string() == "(1-1√5)/2");
}

TEST_CASE("quadratic roots")
{
    const auto [hi, lo] = Eigenvalue::roots_of_quadratic(1, -1);
    CHECK(hi == Eigenvalue::quadratic(1, 1, 5, 2));
    CHECK(lo == Eigenvalue::quadratic(1, -1, 5, 2));
    CHECK(Eigenvalue::roots_of_quadratic(4, 4).first == I(2));
    CHECK_THROWS_AS(Eigenvalue::roots_of_quadratic(0, 1), std::domain_error);
}

TEST_CASE("integer polynomials")
{
    const IntPoly p = IntPoly::linear(2) * IntPoly::quadratic(0, -5);
    CHECK(p.degree() == 3);
    CHECK(p.eval(2) == 0);
    CHECK(p.eval(0) == 10);
    const auto q = p.divide_exact(IntPoly::linear(2));
    REQUIRE(q);
    CHECK(*q == IntPoly::quadratic(0, -5));
    CHECK_FALSE(p.divide_exact(IntPoly::linear(1)).has_value());
    CHECK(IntPoly::linear(1).pow(3).eval(3) == 8);
    CHECK(IntPoly::quadratic(0, -2).to_string() == "x^2 - 2");
}

TEST_CASE("characteristic polynomial matches determinants at five points")
{
    for (const auto& [name, g] : assets::corpus()) {
        CAPTURE(name);
        const auto cp = char_poly(g);
        REQUIRE(cp.degree() == g.order());
        CHECK(cp.poly.is_monic());
        CHECK(cp.poly.coeff(g.order() - 1) == 0);
        CHECK(cp.poly.coeff(g.order() - 2) == -static_cast<long>(g.edge_count()));
        for (long x : {-3L, -1L, 0L, 2L, 5L})
            CHECK(cp.poly.eval(x) == oracle::char_poly_at(g, x));
    }
}

TEST_CASE("characteristic polynomial of random graphs matches determinants")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial, 0.5);
        const auto cp = char_poly(g);
        for (long x : {-2L, 1L, 3L, 7L, 11L})
            REQUIRE(cp.poly.eval(x) == oracle::char_poly_at(g, x));
    }
}

TEST_CASE("exact spectra agree with Jacobi iteration")
{
    for (const auto& [name, g] : assets::corpus()) {
        CAPTURE(name);
        const auto s = exact_spectrum(g);
        CHECK(s.order() == g.order());
        CHECK(oracle::numerically_equal(oracle::flatten(s), oracle::jacobi_eigenvalues(g)));
        CHECK(expand(s) == char_poly(g).poly);
    }
}

TEST_CASE("trace and norm identities on every asset")
{
    for (const auto& [name, g] : assets::corpus()) {
        CAPTURE(name);
        const auto s = exact_spectrum(g);
        CHECK(s.trace() == I(0));
        CHECK(s.trace_of_square() == I(2 * static_cast<std::int64_t>(g.edge_count())));
        CHECK(s.closed_under_conjugation());
    }
}

TEST_CASE("known spectra")
{
    CHECK(exact_spectrum(deza::petersen()) == Spectrum{{I(3), 1}, {I(1), 5}, {I(-2), 4}});
    CHECK(exact_spectrum(deza::heawood()) == Spectrum{{I(3), 1}, {sq(2), 6}, {-sq(2), 6}, {I(-3), 1}});
    CHECK(exact_spectrum(deza::cycle_graph(5))
        == Spectrum{{I(2), 1}, {Eigenvalue::quadratic(-1, 1, 5, 2), 2}, {Eigenvalue::quadratic(-1, -1, 5, 2), 2}});
    CHECK(exact_spectrum(Graph(3)) == Spectrum{{I(0), 3}});
}

TEST_CASE("a cubic factor raises NonQuadraticSpectrum")
{
    const Graph c7 = deza::cycle_graph(7);
    try {
        exact_spectrum(c7);
        FAIL("expected NonQuadraticSpectrum");
    } catch (const NonQuadraticSpectrum& e) {
        CHECK(e.residual().degree() == 6);
        CHECK(e.partial() == Spectrum{{I(2), 1}});
    }
}

TEST_CASE("spectrum containers")
{
    const Spectrum s{{I(1), 2}, {I(3), 1}, {I(1), 1}, {I(0), 0}};
    CHECK(s.distinct() == 2);
    CHECK(s.largest() == I(3));
    CHECK(s.multiplicity(I(1)) == 3);
    CHECK(s.to_string() == "{3^1, 1^3}");
    CHECK(distinct_abs_values(Spectrum{{I(2), 1}, {I(-2), 1}, {sq(2), 1}, {-sq(2), 1}}) == 2);
    CHECK(is_cospectral(exact_spectrum(deza::petersen()), exact_spectrum(deza::petersen())));
}

TEST_CASE("factoring from a polynomial")
{
    const Spectrum s{{I(5), 1}, {sq(5), 3}, {I(-1), 5}, {-sq(5), 3}};
    const CharPoly cp{expand(s)};
    CHECK(factor_char_poly(cp, 5) == s);
}
