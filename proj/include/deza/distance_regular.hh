#pragma once

#include "deza/deza.hh"
#include "deza/graph.hh"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deza {

/// {b0, ..., b_{d-1}; c1, ..., c_d}
struct IntersectionArray {
    std::vector<int> b;
    std::vector<int> c;

    int diameter() const noexcept { return static_cast<int>(c.size()); }
    int k() const { return b.empty() ? 0 : b.front(); }
    /// b_i for 0 <= i <= d, with b_d = 0.
    int b_at(int i) const;
    /// c_i for 0 <= i <= d, with c_0 = 0.
    int c_at(int i) const;
    /// a_i = k − b_i − c_i for 0 <= i <= d.
    int a(int i) const;
    /// Vertices at distance i from any vertex, k_0 = 1.
    std::vector<long long> sizes() const;
    /// "{3,2,2;1,1,3}"
    std::string to_string() const;

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Either the array, or an ordered pair (x, y) whose counts disagree with
/// an earlier pair at the same distance.
struct IntersectionCheck {
    std::optional<IntersectionArray> array;
    std::optional<std::pair<Vertex, Vertex>> witness;

    bool distance_regular() const noexcept { return array.has_value(); }
};

/// Brute force over all ordered pairs. Throws PreconditionError if g is
/// disconnected.
IntersectionCheck intersection_array(const Graph& g);

/// The distance-d graph is a disjoint union of cliques.
bool is_antipodal(const Graph& g, const IntersectionArray& ia);

struct DrgDezaCase {
    /// deza-a1-zero, deza-a1-eq-c2 or not-deza
    std::string label;
    std::optional<DezaParams> params;
};

/// Predicts Deza membership from a1 and c2 and confirms it against
/// detect_deza and the children (distance-2 graph, or the union of the
/// distance-1 and distance-2 graphs). Requires d >= 3; throws
/// ContradictionError if the prediction and the graph disagree.
DrgDezaCase drg_deza_classification(const Graph& g, const IntersectionArray& ia);

/// complete-multipartite, incidence-symmetric-design or
/// antipodal-d3-a1-eq-c2. Requires a distance-regular divisible design
/// graph.
std::string ddg_drg_classification(const Graph& g);

struct CorollaryVerdict {
    bool divisible = false;
    std::optional<int> a1_c2;
    std::optional<IntersectionArray> array;
};

/// For a divisible design graph with spectrum {k, √k^m, (−1)^k, (−√k)^m}:
/// when n | k² − 1, asserts distance-regularity with d = 3 and
/// a1 = c2 = (k² − 1)/n.
CorollaryVerdict corollary_ddg_drg(const Graph& g);

struct Distance3Counts {
    std::vector<int> counts;
    bool constant = false;
};

Distance3Counts distance3_counts(const Graph& g);

struct CospDezaCase {
    /// same-intersection-numbers or different-deza-parameters
    std::string label;
    DezaParams first, second;
};

/// g1 distance-regular strongly Deza with d = 3 and a1 = c2; g2 a Deza
/// graph cospectral with it.
CospDezaCase cosp_deza_check(const Graph& g1, const Graph& g2);

/// Intersection numbers (n, k, k2, c2) of a putative distance-regular graph
/// with d = 3 and a1 = 0, checked by arithmetic only.
struct FeasibleTuple {
    int n = 0, k = 0, k2 = 0, c2 = 0;
    long long k3 = 0;
    bool consistent = false;
};

std::vector<FeasibleTuple> unbuilt_feasible_tuples();

} // namespace deza
