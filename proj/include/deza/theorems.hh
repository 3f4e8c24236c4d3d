#pragma once

#include "deza/deza.hh"
#include "deza/eigenvalue.hh"
#include "deza/graph.hh"
#include "deza/spectrum.hh"

#include <optional>
#include <string>
#include <vector>

namespace deza {

/// One checked equality: both sides as substituted, and whether they agree.
struct Witness {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a classifier: which case of which statement applies, with
/// every equality that was checked to establish it.
struct TheoremCase {
    std::string theorem;
    std::string label;
    std::vector<Witness> witnesses;

    bool verified() const;
    friend bool operator==(const TheoremCase&, const TheoremCase&) = default;
};

/// Restricted eigenvalues r > s of a strongly regular graph and their
/// multiplicities f (for r) and g (for s).
struct SrgEigen {
    Eigenvalue r, s;
    int f = 0, g = 0;
    bool conference = false;
};

/// Throws InfeasibleError when the parameters admit no spectrum.
SrgEigen srg_eigen(const SrgParams& p);

/// {k^1, r^f, s^g}
Spectrum srg_spectrum(const SrgParams& p);

/// Parameters of a strongly regular graph with this spectrum:
/// λ = k + r + s + rs, μ = k + rs. Empty if the spectrum has the wrong shape.
std::optional<SrgParams> srg_params_from_spectrum(const Spectrum& s);

/// Restricted spectrum (one copy of k removed) grouped into the opposite
/// pairs θ2 = −θ5 and θ3 = −θ4.
struct TraceIdentity {
    int k = 0;
    Eigenvalue theta2, theta3;
    int m2 = 0, m3 = 0, m4 = 0, m5 = 0;
    /// θ3 = θ4 = 0; its whole multiplicity is carried in m3.
    bool theta3_is_zero = false;
    bool theta2_is_zero = false;
    /// k + (m2 − m5)θ2 + (m3 − m4)θ3
    Eigenvalue lhs;
    /// At most one of m2..m5 vanishes and, if one does, its pair is integral.
    /// Strongly regular parents typically break this.
    bool zero_multiplicity_ok = false;
    /// lhs == 0
    bool holds = false;
};

/// θ2 is the integral pair when exactly one pair is integral; otherwise the
/// pair of larger absolute value. Throws ShapeError if the restricted
/// spectrum does not split into exactly two opposite pairs (either side may
/// have multiplicity zero).
TraceIdentity check_trace_identity(const Spectrum& spec);

/// Requires a strongly Deza graph. Labels: prop3-2eig, prop3-3eig-srg,
/// prop3-3eig-disconn, prop3-4eig, prop3-5eig.
TheoremCase classify_eigenvalue_count(const Graph& g);

struct HalvingWitness {
    /// non-bipartite-direct, bipartite-direct, bipartite-halved or degenerate
    std::string branch;
    bool bipartite = false;
    bool strongly_deza = false;
    std::optional<bool> halved_strongly_deza;
    /// A halved graph is complete or edgeless, so it cannot be Deza at all.
    bool halved_degenerate = false;
    std::optional<int> child_b_components;
};

/// Requires a connected Deza graph with b > a and at most three distinct
/// absolute eigenvalues.
HalvingWitness strongly_deza_witness(const Graph& g);

/// θ2² = k − b − s(b − a), θ3² = k − b − r(b − a) with r, s the restricted
/// eigenvalues of child A. Labels square-i, square-ii, square-iii. The
/// opposite pair whose square corresponds to s has total multiplicity g
/// (the multiplicity of s), and that is the count halved in square-ii;
/// symmetrically f in square-iii.
TheoremCase classify_square_case(const Spectrum& spec, const DezaParams& p, const SrgParams& child_a);

/// ±√((k(n − k) − (m2 + m5)θ2²)/(n − m2 − m5 − 1)) for an integral θ2.
std::pair<Eigenvalue, Eigenvalue> theta34_from_theta2(int n, int k, const Eigenvalue& theta2, int m2, int m5);

/// ±√(k(1 + (θ2 + 1)(m2 + 1)/(n − m2 − 1))) where m2·θ2 = −k, θ2 <= −1.
std::pair<Eigenvalue, Eigenvalue> four_eig_relation(int n, int k, const Eigenvalue& theta2, int m2);

struct Eq3Check {
    Eigenvalue theta2;
    int m2 = 0, m5 = 0;
    Eigenvalue predicted;
    Eigenvalue actual;
    bool holds = false;
};

/// Evaluates the θ3,4 relation for every integral opposite pair of the
/// spectrum (one entry per admissible choice of θ2).
std::vector<Eq3Check> check_eq3(const Spectrum& spec, int n, int k);

struct SingularVerdict {
    bool singular = false;
    bool integral = false;
    std::size_t distinct = 0;
};

/// If 0 is an eigenvalue, asserts an integral spectrum with exactly four
/// distinct values; throws ContradictionError otherwise.
SingularVerdict singular_check(const Spectrum& spec);

struct AffineFamily {
    int q = 0, t = 0;
    DdgParams params;
    Spectrum predicted;
    std::vector<Witness> identities;

    bool verified() const;
};

/// Divisible design parameters of the affine-group family for a prime
/// power q and t >= 2, with the spectrum {k, ±q^{t−1}, 0} whose
/// multiplicities follow from m(n − 1), m − 1 and the trace.
AffineFamily affine_family_params(int q, int t);

/// Labels last-i, last-ii, last-iii. Requires exactly four distinct
/// eigenvalues k, θ2, ±θ3 with equal multiplicities on ±θ3.
TheoremCase classify_last_case(const Spectrum& spec, const DezaParams& p);

/// Arithmetic check of the unitary nonisotropics family: parameters,
/// spectrum, child SRG parameters and their mutual consistency.
struct UnitaryNonisotropics {
    int q = 0;
    DezaParams params;
    Spectrum spectrum;
    SrgParams child_a;
    std::vector<Witness> identities;

    bool verified() const;
};

UnitaryNonisotropics unitary_nonisotropics(int q);

bool is_prime_power(long long q);

} // namespace deza
