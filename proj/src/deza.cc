#include "deza/deza.hh"

#include "deza/errors.hh"

#include <algorithm>
#include <vector>

namespace deza {

std::string DezaParams::to_string() const
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(b) + "," + std::to_string(a) + ")";
}

bool SrgParams::feasible_counting() const
{
    return static_cast<long long>(k) * (k - lambda - 1) == static_cast<long long>(n - k - 1) * mu;
}

std::string SrgParams::to_string() const
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," + std::to_string(mu)
        + ")";
}

std::string DdgParams::to_string() const
{
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda1) + ","
        + std::to_string(lambda2) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::optional<DezaParams> detect_deza(const Graph& g)
{
    auto k = g.regular_degree();
    const int n = g.order();
    if (! k || *k == 0 || *k == n - 1)
        return std::nullopt;

    std::vector<int> seen;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int c = g.common_count(u, v);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                seen.push_back(c);
                if (seen.size() > 2)
                    return std::nullopt;
            }
        }
    auto [lo, hi] = std::minmax_element(seen.begin(), seen.end());
    return DezaParams{n, *k, *hi, *lo};
}

ChildPair children(const Graph& g, const DezaParams& p)
{
    auto detected = detect_deza(g);
    if (! detected || *detected != p)
        throw PreconditionError("parameters " + p.to_string() + " do not match the graph");
    const int n = g.order();
    if (p.b == p.a)
        return {Graph::from_predicate(n, [](Vertex, Vertex) { return true; }), Graph(n)};
    return {Graph::from_predicate(n, [&](Vertex u, Vertex v) { return g.common_count(u, v) == p.a; }),
        Graph::from_predicate(n, [&](Vertex u, Vertex v) { return g.common_count(u, v) == p.b; })};
}

std::optional<SrgParams> detect_srg(const Graph& g)
{
    auto k = g.regular_degree();
    const int n = g.order();
    if (! k || *k == 0 || *k == n - 1)
        return std::nullopt;

    std::optional<int> lambda, mu;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            int c = g.common_count(u, v);
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (! slot)
                slot = c;
            else if (*slot != c)
                return std::nullopt;
        }
    return SrgParams{n, *k, *lambda, *mu};
}

StronglyDezaVerdict is_strongly_deza(const Graph& g)
{
    StronglyDezaVerdict out;
    out.params = detect_deza(g);
    if (! out.params || out.params->b == out.params->a)
        return out;
    auto ch = children(g, *out.params);
    out.child_a_srg = detect_srg(ch.a);
    out.child_b_srg = detect_srg(ch.b);
    out.verdict = out.child_a_srg.has_value() && out.child_b_srg.has_value();
    return out;
}

namespace {
    // Class size if g is a disjoint union of at least two cliques of one size.
    std::optional<int> equal_clique_union(const Graph& g)
    {
        auto labels = component_labels(g);
        int classes = *std::max_element(labels.begin(), labels.end()) + 1;
        if (classes < 2)
            return std::nullopt;
        std::vector<int> size(classes, 0);
        for (int l : labels)
            ++size[l];
        if (std::adjacent_find(size.begin(), size.end(), std::not_equal_to<>()) != size.end())
            return std::nullopt;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) != size[labels[v]] - 1)
                return std::nullopt;
        return size[0];
    }
}

std::optional<DdgParams> is_divisible_design(const Graph& g)
{
    auto p = detect_deza(g);
    if (! p || p->b == p->a)
        return std::nullopt;
    auto ch = children(g, *p);
    if (auto s = equal_clique_union(ch.a))
        return DdgParams{p->n, p->k, p->a, p->b, p->n / *s, *s};
    if (auto s = equal_clique_union(ch.b))
        return DdgParams{p->n, p->k, p->b, p->a, p->n / *s, *s};
    return std::nullopt;
}

std::pair<Spectrum, Spectrum> child_spectra_formula(const Spectrum& spec, const DezaParams& p)
{
    if (p.b <= p.a)
        throw PreconditionError("child spectrum formula needs b > a, got " + p.to_string());
    const auto k = Eigenvalue::integer(p.k);
    if (! spec.contains(k))
        throw PreconditionError("spectrum does not contain the degree " + std::to_string(p.k));
    if (spec.order() != p.n)
        throw PreconditionError("spectrum order differs from n");

    using E = Eigenvalue;
    const long long n = p.n, kk = p.k, a = p.a, b = p.b;
    std::vector<SpectrumEntry> sa, sb;
    sa.push_back({E::rational(b * (n - 1) - kk * (kk - 1), b - a), 1});
    sb.push_back({E::rational(a * (n - 1) - kk * (kk - 1), a - b), 1});
    for (const auto& e : spec.entries()) {
        int m = e.multiplicity - (e.value == k ? 1 : 0);
        if (m == 0)
            continue;
        E sq = e.value.squared();
        sa.push_back({(E::integer(kk - b) - sq) / E::integer(b - a), m});
        sb.push_back({(E::integer(kk - a) - sq) / E::integer(a - b), m});
    }
    return {Spectrum(std::move(sa)), Spectrum(std::move(sb))};
}

ChildFormulaCheck verify_child_formula(const Graph& g)
{
    auto p = detect_deza(g);
    if (! p)
        throw PreconditionError("graph is not a Deza graph");
    if (p->b == p->a)
        throw PreconditionError("child spectrum formula needs b > a, got " + p->to_string());

    ChildFormulaCheck out;
    out.params = *p;
    auto spec = exact_spectrum(g);
    std::tie(out.formula_a, out.formula_b) = child_spectra_formula(spec, *p);
    auto ch = children(g, *p);
    out.direct_a = exact_spectrum(ch.a);
    out.direct_b = exact_spectrum(ch.b);
    out.match = out.formula_a == out.direct_a && out.formula_b == out.direct_b;
    out.strongly_deza = is_strongly_deza(g).verdict;
    out.integrality_required = out.strongly_deza && ! detect_srg(g);
    out.children_integral = out.direct_a.is_integral() && out.direct_b.is_integral();
    return out;
}

} // namespace deza
