#include "deza/distance_regular.hh"

#include "deza/errors.hh"
#include "deza/spectrum.hh"

#include <algorithm>
#include <array>
#include <cstdint>

namespace deza {

int IntersectionArray::b_at(int i) const { return i < diameter() ? b.at(i) : 0; }

int IntersectionArray::c_at(int i) const { return i == 0 ? 0 : c.at(i - 1); }

int IntersectionArray::a(int i) const { return k() - b_at(i) - c_at(i); }

std::vector<long long> IntersectionArray::sizes() const
{
    std::vector<long long> out{1};
    for (int i = 0; i < diameter(); ++i)
        out.push_back(out.back() * b[i] / c[i]);
    return out;
}

std::string IntersectionArray::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i)
        out += (i ? "," : "") + std::to_string(b[i]);
    out += ";";
    for (std::size_t i = 0; i < c.size(); ++i)
        out += (i ? "," : "") + std::to_string(c[i]);
    return out + "}";
}

IntersectionCheck intersection_array(const Graph& g)
{
    DistanceData dd(g);
    if (! dd.connected())
        throw PreconditionError("intersection numbers need a connected graph");
    const int n = g.order(), d = *dd.diameter();

    // Per distance i: (c_i, a_i, b_i) as first observed.
    std::vector<std::optional<std::array<int, 3>>> seen(d + 1);
    IntersectionCheck out;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            const int i = dd.raw(x, y);
            std::array<int, 3> counts{0, 0, 0};
            for (Vertex z : g.neighbours(y)) {
                int j = dd.raw(x, z);
                ++counts[j - i + 1];
            }
            if (! seen[i])
                seen[i] = counts;
            else if (*seen[i] != counts) {
                out.witness = std::pair{x, y};
                return out;
            }
        }

    IntersectionArray ia;
    for (int i = 0; i < d; ++i)
        ia.b.push_back((*seen[i])[2]);
    for (int i = 1; i <= d; ++i)
        ia.c.push_back((*seen[i])[0]);
    out.array = std::move(ia);
    return out;
}

namespace {
    bool clique_union(const Graph& h)
    {
        auto labels = component_labels(h);
        std::vector<int> size(h.order(), 0);
        for (int l : labels)
            ++size[l];
        for (Vertex v = 0; v < h.order(); ++v)
            if (h.degree(v) != size[labels[v]] - 1)
                return false;
        return true;
    }

    IntersectionArray require_drg(const Graph& g)
    {
        auto check = intersection_array(g);
        if (! check.array)
            throw PreconditionError("graph is not distance-regular");
        return *check.array;
    }
}

bool is_antipodal(const Graph& g, const IntersectionArray& ia)
{
    if (ia.diameter() == 0)
        return false;
    return clique_union(distance_i_graph(g, ia.diameter()));
}

DrgDezaCase drg_deza_classification(const Graph& g, const IntersectionArray& ia)
{
    const int d = ia.diameter();
    if (d < 3)
        throw PreconditionError("classification needs diameter at least 3, got " + std::to_string(d));
    const int a1 = ia.a(1), c2 = ia.c_at(2), n = g.order(), k = ia.k();

    DrgDezaCase out;
    if (a1 == 0)
        out.label = "deza-a1-zero";
    else if (a1 == c2)
        out.label = "deza-a1-eq-c2";
    else
        out.label = "not-deza";

    auto detected = detect_deza(g);
    if (out.label == "not-deza") {
        if (detected)
            throw ContradictionError("a1 = " + std::to_string(a1) + ", c2 = " + std::to_string(c2)
                + " but the graph is Deza " + detected->to_string());
        return out;
    }
    out.params = DezaParams{n, k, c2, 0};
    if (detected != out.params)
        throw ContradictionError("predicted " + out.params->to_string() + ", detected "
            + (detected ? detected->to_string() : std::string("not Deza")));

    DistanceData dd(g);
    auto expected_b = Graph::from_predicate(n, [&](Vertex u, Vertex v) {
        int dist = dd.raw(u, v);
        return a1 == 0 ? dist == 2 : dist <= 2;
    });
    if (children(g, *out.params).b != expected_b)
        throw ContradictionError("child B is not the predicted distance graph");
    return out;
}

std::string ddg_drg_classification(const Graph& g)
{
    if (! is_divisible_design(g))
        throw PreconditionError("graph is not a divisible design graph");
    auto ia = require_drg(g);
    const int d = ia.diameter();
    if (d == 2 && clique_union(complement(g)))
        return "complete-multipartite";
    if (d == 3 && bipartition(g))
        return "incidence-symmetric-design";
    if (d == 3 && is_antipodal(g, ia) && ia.a(1) == ia.c_at(2))
        return "antipodal-d3-a1-eq-c2";
    throw ContradictionError("distance-regular divisible design graph " + ia.to_string() + " fits no case");
}

CorollaryVerdict corollary_ddg_drg(const Graph& g)
{
    if (! is_divisible_design(g))
        throw PreconditionError("graph is not a divisible design graph");
    auto spec = exact_spectrum(g);
    const long long n = g.order();
    const int k = *g.regular_degree();
    const auto rk = Eigenvalue::sqrt_of(k);
    const int m = spec.multiplicity(rk);
    const bool shape = spec.distinct() == 4 && spec.multiplicity(Eigenvalue::integer(k)) == 1
        && spec.multiplicity(Eigenvalue::integer(-1)) == k && spec.multiplicity(-rk) == m && m > 0
        && n == 2LL * m + k + 1;
    if (! shape)
        throw PreconditionError("spectrum " + spec.to_string() + " is not {k, √k^m, (-1)^k, (-√k)^m}");

    CorollaryVerdict out;
    const long long num = static_cast<long long>(k) * k - 1;
    out.divisible = num % n == 0;
    if (! out.divisible)
        return out;
    out.a1_c2 = static_cast<int>(num / n);
    auto check = intersection_array(g);
    out.array = check.array;
    if (! out.array || out.array->diameter() != 3 || out.array->a(1) != *out.a1_c2
        || out.array->c_at(2) != *out.a1_c2 || ! is_antipodal(g, *out.array))
        throw ContradictionError("n divides k^2 - 1 but the graph is not antipodal distance-regular with a1 = c2 = "
            + std::to_string(*out.a1_c2));
    return out;
}

Distance3Counts distance3_counts(const Graph& g)
{
    DistanceData dd(g);
    if (! dd.connected())
        throw PreconditionError("distance counts need a connected graph");
    Distance3Counts out;
    for (Vertex u = 0; u < g.order(); ++u) {
        int c = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            c += dd.raw(u, v) == 3;
        out.counts.push_back(c);
    }
    out.constant = std::adjacent_find(out.counts.begin(), out.counts.end(), std::not_equal_to<>()) == out.counts.end();
    return out;
}

CospDezaCase cosp_deza_check(const Graph& g1, const Graph& g2)
{
    auto ia = require_drg(g1);
    if (ia.diameter() != 3 || ia.a(1) != ia.c_at(2))
        throw PreconditionError("first graph needs d = 3 and a1 = c2, got " + ia.to_string());
    auto sd = is_strongly_deza(g1);
    if (! sd.verdict)
        throw PreconditionError("first graph is not strongly Deza");
    if (! is_cospectral(exact_spectrum(g1), exact_spectrum(g2)))
        throw PreconditionError("graphs are not cospectral");
    auto p2 = detect_deza(g2);
    if (! p2)
        throw PreconditionError("second graph is not a Deza graph");

    CospDezaCase out{"", *sd.params, *p2};
    if (out.first != out.second) {
        out.label = "different-deza-parameters";
        return out;
    }
    // Equal triangle counts nkb/6 force every edge into b triangles, so the
    // pairs with a = 0 common neighbours are exactly those at distance 3.
    const auto t1 = structural_profile(g1).triangle_count, t2 = structural_profile(g2).triangle_count;
    const auto expected = static_cast<std::uint64_t>(out.first.n) * out.first.k * out.first.b / 6;
    auto counts = distance3_counts(g2);
    const long long k3 = ia.sizes().back();
    auto ia2 = intersection_array(g2).array;
    if (t1 != expected || t2 != expected || ! counts.constant || counts.counts.front() != k3 || ia2 != ia)
        throw ContradictionError("cospectral Deza graph with equal parameters is not distance-regular with "
            + ia.to_string());
    out.label = "same-intersection-numbers";
    return out;
}

std::vector<FeasibleTuple> unbuilt_feasible_tuples()
{
    std::vector<FeasibleTuple> out{{210, 11, 110, 1}, {320, 22, 231, 2}};
    for (auto& t : out) {
        t.k3 = static_cast<long long>(t.n) - 1 - t.k - t.k2;
        // a1 = 0 gives b1 = k − 1 and k2 = k·b1/c2.
        t.consistent = static_cast<long long>(t.k) * (t.k - 1) == static_cast<long long>(t.k2) * t.c2 && t.k3 > 0;
    }
    return out;
}

} // namespace deza
