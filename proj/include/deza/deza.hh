#pragma once

#include "deza/graph.hh"
#include "deza/spectrum.hh"

#include <optional>
#include <string>

namespace deza {

/// (n, k, b, a): k-regular on n vertices, every pair of distinct vertices
/// has a or b common neighbours, b >= a.
struct DezaParams {
    int n = 0, k = 0, b = 0, a = 0;

    std::string to_string() const;
    friend bool operator==(const DezaParams&, const DezaParams&) = default;
};

struct SrgParams {
    int n = 0, k = 0, lambda = 0, mu = 0;

    /// k(k − λ − 1) = (n − k − 1)μ
    bool feasible_counting() const;
    std::string to_string() const;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// (v, k, λ1, λ2, m, n): m classes of size n; λ1 common neighbours inside a
/// class, λ2 across classes.
struct DdgParams {
    int v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;

    std::string to_string() const;
    friend bool operator==(const DdgParams&, const DdgParams&) = default;
};

/// Children G_A (pairs with a common neighbours) and G_B (pairs with b).
/// When b = a, G_A = K_n and G_B is edgeless.
struct ChildPair {
    Graph a;
    Graph b;
};

std::optional<DezaParams> detect_deza(const Graph& g);

/// Throws PreconditionError unless p is what detect_deza reports for g.
ChildPair children(const Graph& g, const DezaParams& p);

/// SRG parameters without any connectivity requirement; complete and
/// edgeless graphs are rejected.
std::optional<SrgParams> detect_srg(const Graph& g);

struct StronglyDezaVerdict {
    bool verdict = false;
    std::optional<DezaParams> params;
    std::optional<SrgParams> child_a_srg;
    std::optional<SrgParams> child_b_srg;
};

StronglyDezaVerdict is_strongly_deza(const Graph& g);

std::optional<DdgParams> is_divisible_design(const Graph& g);

/// Spectra of G_A and G_B from the spectrum of a Deza graph with b > a.
/// One copy of k is the principal eigenvalue and maps to the child degree;
/// every other θ maps to (k − b − θ²)/(b − a) and (k − a − θ²)/(a − b).
/// Values landing on the same number are merged, which sums the
/// multiplicities of ±θ; θ = −k of a bipartite graph maps to a value of its
/// own.
std::pair<Spectrum, Spectrum> child_spectra_formula(const Spectrum& spec, const DezaParams& p);

struct ChildFormulaCheck {
    DezaParams params;
    Spectrum formula_a, formula_b;
    Spectrum direct_a, direct_b;
    bool match = false;
    bool strongly_deza = false;
    /// Integrality of both children is demanded for strongly Deza graphs that
    /// are not themselves strongly regular.
    bool integrality_required = false;
    bool children_integral = false;

    bool holds() const { return match && (! integrality_required || children_integral); }
};

/// Requires a Deza graph with b > a.
ChildFormulaCheck verify_child_formula(const Graph& g);

} // namespace deza
