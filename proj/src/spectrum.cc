#include "deza/spectrum.hh"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace deza {

namespace {
    using u64 = std::uint64_t;

    u64 pow_mod(u64 b, u64 e, u64 p)
    {
        u64 r = 1;
        b %= p;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

    bool is_prime(u64 v)
    {
        if (v < 2)
            return false;
        for (u64 f = 2; f * f <= v; ++f)
            if (v % f == 0)
                return false;
        return true;
    }

    // det(xI − M) mod p, lowest coefficient first, via reduction to upper
    // Hessenberg form and the Hessenberg characteristic-polynomial recurrence.
    std::vector<u64> char_poly_mod(const Graph& g, u64 p)
    {
        const int n = g.order();
        std::vector<u64> h(static_cast<std::size_t>(n) * n, 0);
        auto at = [&](int i, int j) -> u64& { return h[static_cast<std::size_t>(i) * n + j]; };
        for (int i = 0; i < n; ++i)
            for (int j : g.neighbours(i))
                at(i, j) = 1;

        for (int m = 1; m + 1 < n; ++m) {
            int piv = m;
            while (piv < n && at(piv, m - 1) == 0)
                ++piv;
            if (piv == n)
                continue;
            if (piv != m) {
                for (int j = 0; j < n; ++j)
                    std::swap(at(piv, j), at(m, j));
                for (int i = 0; i < n; ++i)
                    std::swap(at(i, piv), at(i, m));
            }
            u64 tinv = inv_mod(at(m, m - 1), p);
            for (int i = m + 1; i < n; ++i) {
                u64 u = at(i, m - 1) * tinv % p;
                if (u == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    at(i, j) = (at(i, j) + (p - u) * at(m, j)) % p;
                for (int j = 0; j < n; ++j)
                    at(j, m) = (at(j, m) + u * at(j, i)) % p;
            }
        }

        // polys[m] is the characteristic polynomial of the leading m×m block.
        std::vector<std::vector<u64>> polys(n + 1);
        polys[0] = {1};
        for (int m = 1; m <= n; ++m) {
            const auto& prev = polys[m - 1];
            std::vector<u64> cur(m + 1, 0);
            u64 diag = at(m - 1, m - 1);
            for (int i = 0; i < m; ++i) {
                cur[i + 1] = (cur[i + 1] + prev[i]) % p;
                cur[i] = (cur[i] + (p - diag) * prev[i]) % p;
            }
            u64 t = 1;
            for (int i = 1; i < m; ++i) {
                // t = h(m,m−1)·h(m−1,m−2)···h(m−i+1,m−i) in 1-based indices
                t = t * at(m - i, m - i - 1) % p;
                u64 coef = t * at(m - i - 1, m - 1) % p;
                if (coef == 0)
                    continue;
                const auto& lower = polys[m - i - 1];
                for (std::size_t j = 0; j < lower.size(); ++j)
                    cur[j] = (cur[j] + (p - coef) * lower[j]) % p;
            }
            polys[m] = std::move(cur);
        }
        return polys[n];
    }

    mpz_class coefficient_bound(int n, int max_degree)
    {
        // Each coefficient is a sum of C(n,i) principal minors of size i, each
        // at most (√Δ)^i in absolute value by Hadamard's inequality.
        mpz_class root = 1;
        while (root * root < max_degree)
            ++root;
        mpz_class best = 1;
        for (int i = 0; i <= n; ++i) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), n, i);
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), root.get_mpz_t(), i);
            best = std::max(best, mpz_class(binom * power));
        }
        return best;
    }

    struct NumericCluster {
        long double centre;
        int count;
    };

    std::vector<NumericCluster> cluster(std::vector<long double> values)
    {
        std::sort(values.begin(), values.end());
        std::vector<NumericCluster> out;
        for (long double v : values) {
            if (! out.empty() && std::fabs(v - out.back().centre) < 1e-6L) {
                auto& c = out.back();
                c.centre = (c.centre * c.count + v) / (c.count + 1);
                ++c.count;
            }
            else
                out.push_back({v, 1});
        }
        return out;
    }

    bool near_integer(long double v, long double tol, long long& rounded)
    {
        long double r = std::round(v);
        if (std::fabs(v - r) > tol)
            return false;
        rounded = static_cast<long long>(r);
        return true;
    }

    // Residue of poly modulo (x² − bx + c) and a prime, for cheap rejection.
    bool vanishes_mod(const IntPoly& poly, long long b, long long c, u64 p)
    {
        auto red = [&](const mpz_class& v) {
            mpz_class r = v % static_cast<unsigned long>(p);
            if (r < 0)
                r += static_cast<unsigned long>(p);
            return static_cast<u64>(r.get_ui());
        };
        u64 bm = red(mpz_class(static_cast<long>(b))), cm = red(mpz_class(static_cast<long>(c)));
        u64 lo = 0, hi = 0;
        const auto& co = poly.coeffs();
        for (auto it = co.rbegin(); it != co.rend(); ++it) {
            // (lo + hi·x)·x = −hi·c + (lo + hi·b)·x
            u64 nlo = (p - hi * cm % p) % p;
            u64 nhi = (lo + hi * bm) % p;
            lo = (nlo + red(*it)) % p;
            hi = nhi;
        }
        return lo == 0 && hi == 0;
    }
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries)
{
    for (auto& e : entries) {
        if (e.multiplicity < 0)
            throw std::invalid_argument("negative multiplicity");
        if (e.multiplicity == 0)
            continue;
        auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& x) { return x.value == e.value; });
        if (it != entries_.end())
            it->multiplicity += e.multiplicity;
        else
            entries_.push_back(e);
    }
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
}

int Spectrum::order() const
{
    int n = 0;
    for (const auto& e : entries_)
        n += e.multiplicity;
    return n;
}

int Spectrum::multiplicity(const Eigenvalue& v) const
{
    for (const auto& e : entries_)
        if (e.value == v)
            return e.multiplicity;
    return 0;
}

bool Spectrum::is_integral() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.value.is_integer(); });
}

namespace {
    template <typename F>
    Eigenvalue bucketed_sum(const std::vector<SpectrumEntry>& entries, F&& term)
    {
        std::map<std::int64_t, Eigenvalue> by_field;
        for (const auto& e : entries) {
            Eigenvalue t = term(e);
            auto& slot = by_field[t.d()];
            slot = slot + t;
        }
        Eigenvalue total = Eigenvalue::integer(0);
        for (const auto& [d, v] : by_field)
            total = total + v;
        return total;
    }
}

Eigenvalue Spectrum::trace() const
{
    return bucketed_sum(entries_, [](const SpectrumEntry& e) { return e.value * Eigenvalue::integer(e.multiplicity); });
}

Eigenvalue Spectrum::trace_of_square() const
{
    return bucketed_sum(entries_, [](const SpectrumEntry& e) {
        return e.value.squared() * Eigenvalue::integer(e.multiplicity);
    });
}

bool Spectrum::closed_under_conjugation() const
{
    return std::all_of(entries_.begin(), entries_.end(), [&](const auto& e) {
        return e.value.is_rational() || multiplicity(e.value.conjugate()) == e.multiplicity;
    });
}

std::string Spectrum::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ", ";
        out += entries_[i].value.to_string() + "^" + std::to_string(entries_[i].multiplicity);
    }
    return out + "}";
}

NonQuadraticSpectrum::NonQuadraticSpectrum(IntPoly residual, Spectrum partial)
    : Error("non-quadratic spectrum: residual factor " + residual.to_string()), residual_(std::move(residual)),
      partial_(std::move(partial))
{
}

CharPoly char_poly(const Graph& g)
{
    const int n = g.order();
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));

    mpz_class need = 2 * coefficient_bound(n, std::max(max_degree, 1)) + 1;
    mpz_class modulus = 1;
    std::vector<mpz_class> value(n + 1, 0);

    u64 p = 2147483647;
    while (modulus < need) {
        while (! is_prime(p))
            --p;
        auto res = char_poly_mod(g, p);
        mpz_class m_mod = modulus % static_cast<unsigned long>(p);
        u64 m_inv = inv_mod(m_mod.get_ui(), p);
        for (int i = 0; i <= n; ++i) {
            mpz_class cur = value[i] % static_cast<unsigned long>(p);
            u64 cur_u = cur.get_ui();
            u64 t = (res[i] + p - cur_u) % p * m_inv % p;
            value[i] += modulus * static_cast<unsigned long>(t);
        }
        modulus *= static_cast<unsigned long>(p);
        --p;
    }
    mpz_class half = modulus / 2;
    for (auto& c : value)
        if (c > half)
            c -= modulus;
    return CharPoly{IntPoly(std::move(value))};
}

Spectrum factor_char_poly(const CharPoly& cp, int max_degree, const std::vector<long double>& numeric_hint)
{
    IntPoly residual = cp.poly;
    std::vector<SpectrumEntry> found;

    for (long long z = -max_degree; z <= max_degree && residual.degree() > 0; ++z) {
        IntPoly factor = IntPoly::linear(mpz_class(static_cast<long>(z)));
        int mult = 0;
        while (residual.degree() > 0 && residual.eval(mpz_class(static_cast<long>(z))) == 0) {
            residual = *residual.divide_exact(factor);
            ++mult;
        }
        if (mult)
            found.push_back({Eigenvalue::integer(z), mult});
    }

    auto try_quadratic = [&](long long b, long long c) {
        long long disc = b * b - 4 * c;
        if (disc <= 0 || is_perfect_square(disc))
            return;
        IntPoly factor = IntPoly::quadratic(mpz_class(static_cast<long>(b)), mpz_class(static_cast<long>(c)));
        int mult = 0;
        while (residual.degree() >= 2) {
            auto q = residual.divide_exact(factor);
            if (! q)
                break;
            residual = std::move(*q);
            ++mult;
        }
        if (mult) {
            auto [hi, lo] = Eigenvalue::roots_of_quadratic(b, c);
            found.push_back({hi, mult});
            found.push_back({lo, mult});
        }
    };

    if (residual.degree() > 0 && ! numeric_hint.empty()) {
        std::vector<long double> rest;
        for (long double v : numeric_hint) {
            long long r;
            bool integer_root = near_integer(v, 1e-6L, r)
                && std::any_of(found.begin(), found.end(), [&](const auto& e) {
                       return e.value.is_integer() && e.value.as_integer() == r;
                   });
            if (! integer_root)
                rest.push_back(v);
        }
        auto clusters = cluster(rest);
        for (std::size_t i = 0; i < clusters.size() && residual.degree() > 0; ++i)
            for (std::size_t j = i + 1; j < clusters.size() && residual.degree() > 0; ++j) {
                long long b, c;
                long double sum = clusters[i].centre + clusters[j].centre;
                long double prod = clusters[i].centre * clusters[j].centre;
                if (near_integer(sum, 1e-5L, b) && near_integer(prod, 1e-5L * std::max(1.0L, std::fabs(prod)), c))
                    try_quadratic(b, c);
            }
    }

    if (residual.degree() > 0) {
        // Exhaustive search: a factor x² − bx + c has |b| ≤ 2Δ, |c| ≤ Δ², and
        // c divides the constant term of the residual.
        const mpz_class constant = residual.coeff(0);
        const long long cmax = static_cast<long long>(max_degree) * max_degree;
        for (long long c = -cmax; c <= cmax && residual.degree() > 0; ++c) {
            if (c == 0 || constant % mpz_class(static_cast<long>(c)) != 0)
                continue;
            for (long long b = -2LL * max_degree; b <= 2LL * max_degree && residual.degree() > 0; ++b) {
                long long disc = b * b - 4 * c;
                if (disc <= 0 || is_perfect_square(disc))
                    continue;
                if (vanishes_mod(residual, b, c, 2147483647))
                    try_quadratic(b, c);
            }
        }
    }

    if (residual.degree() > 0)
        throw NonQuadraticSpectrum(residual, Spectrum(found));
    if (residual != IntPoly({1}))
        throw std::logic_error("characteristic polynomial is not monic");

    return Spectrum(std::move(found));
}

Spectrum exact_spectrum(const Graph& g)
{
    const int n = g.order();
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));

    using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix m = Matrix::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbours(u))
            m(u, v) = 1;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    std::vector<long double> hint;
    if (solver.info() == Eigen::Success)
        for (int i = 0; i < n; ++i)
            hint.push_back(solver.eigenvalues()(i));

    Spectrum s = factor_char_poly(char_poly(g), max_degree, hint);
    if (s.order() != n)
        throw std::logic_error("multiplicities do not sum to the order");
    return s;
}

IntPoly expand(const Spectrum& s)
{
    IntPoly out({1});
    std::vector<bool> used(s.entries().size(), false);
    const auto& e = s.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (used[i])
            continue;
        const Eigenvalue& v = e[i].value;
        if (v.is_rational()) {
            if (! v.is_integer())
                throw std::domain_error("non-integer rational eigenvalue " + v.to_string());
            out = out * IntPoly::linear(mpz_class(static_cast<long>(v.as_integer()))).pow(e[i].multiplicity);
            continue;
        }
        auto conj = std::find_if(e.begin(), e.end(), [&](const auto& x) { return x.value == v.conjugate(); });
        if (conj == e.end() || conj->multiplicity != e[i].multiplicity || ! v.is_algebraic_integer())
            throw std::domain_error("spectrum not closed under conjugation at " + v.to_string());
        used[static_cast<std::size_t>(conj - e.begin())] = true;
        Eigenvalue sum = v + v.conjugate(), prod = v * v.conjugate();
        out = out
            * IntPoly::quadratic(mpz_class(static_cast<long>(sum.as_integer())),
                mpz_class(static_cast<long>(prod.as_integer())))
                  .pow(e[i].multiplicity);
    }
    return out;
}

std::size_t distinct_abs_values(const Spectrum& s)
{
    std::vector<Eigenvalue> abs;
    for (const auto& e : s.entries()) {
        auto a = e.value.abs();
        if (std::find(abs.begin(), abs.end(), a) == abs.end())
            abs.push_back(a);
    }
    return abs.size();
}

bool is_cospectral(const Spectrum& a, const Spectrum& b) { return a == b; }

} // namespace deza
