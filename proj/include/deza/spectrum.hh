#pragma once

#include "deza/eigenvalue.hh"
#include "deza/errors.hh"
#include "deza/graph.hh"
#include "deza/polynomial.hh"

#include <initializer_list>
#include <string>
#include <vector>

namespace deza {

/// det(xI − M) for the adjacency matrix M of a graph: monic, degree n,
/// vanishing x^{n−1} coefficient.
struct CharPoly {
    IntPoly poly;

    int degree() const noexcept { return poly.degree(); }
};

struct SpectrumEntry {
    Eigenvalue value;
    int multiplicity = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Eigenvalues with multiplicities, distinct values in strictly descending
/// order.
class Spectrum {
public:
    Spectrum() = default;

    /// Merges repeated values, drops zero multiplicities and sorts.
    explicit Spectrum(std::vector<SpectrumEntry> entries);
    Spectrum(std::initializer_list<SpectrumEntry> entries) : Spectrum(std::vector<SpectrumEntry>(entries)) {}

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    int order() const;
    std::size_t distinct() const noexcept { return entries_.size(); }
    int multiplicity(const Eigenvalue& v) const;
    bool contains(const Eigenvalue& v) const { return multiplicity(v) > 0; }
    bool is_integral() const;
    const Eigenvalue& largest() const { return entries_.front().value; }
    const Eigenvalue& smallest() const { return entries_.back().value; }

    /// Σ m·θ, exact. Zero for every adjacency spectrum.
    Eigenvalue trace() const;

    /// Σ m·θ², which is rational for spectra closed under conjugation.
    Eigenvalue trace_of_square() const;

    /// Every irrational value appears with its conjugate at equal
    /// multiplicity.
    bool closed_under_conjugation() const;

    /// "{6^1, 2^3, 0^2, -2^6}"
    std::string to_string() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<SpectrumEntry> entries_;
};

/// Raised when the characteristic polynomial has an irreducible factor of
/// degree three or more.
class NonQuadraticSpectrum : public Error {
public:
    NonQuadraticSpectrum(IntPoly residual, Spectrum partial);

    const IntPoly& residual() const noexcept { return residual_; }
    const Spectrum& partial() const noexcept { return partial_; }

private:
    IntPoly residual_;
    Spectrum partial_;
};

/// Exact characteristic polynomial. Computed modulo enough 31-bit primes to
/// exceed twice the Hadamard-type bound C(n,i)·Δ^{i/2} on every
/// coefficient, then lifted by CRT. Each prime costs one O(n³) Hessenberg
/// reduction, and O(n log Δ) primes are needed: O(n⁴)-ish overall.
CharPoly char_poly(const Graph& g);

/// Factors char_poly(g) into (x − z) and irreducible x² − Bx + C factors.
/// Numerical eigenvalues propose candidate factors; exact division decides.
/// Throws NonQuadraticSpectrum if anything of higher degree remains.
Spectrum exact_spectrum(const Graph& g);

/// Same, starting from a known characteristic polynomial. `max_degree`
/// bounds |θ| and the candidate search.
Spectrum factor_char_poly(const CharPoly& cp, int max_degree, const std::vector<long double>& numeric_hint = {});

/// Product of (x − θ)^m over the spectrum, as an integer polynomial.
IntPoly expand(const Spectrum& s);

std::size_t distinct_abs_values(const Spectrum& s);

bool is_cospectral(const Spectrum& a, const Spectrum& b);

} // namespace deza
