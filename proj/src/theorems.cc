#include "deza/theorems.hh"

#include "deza/errors.hh"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>

namespace deza {

namespace {
    using E = Eigenvalue;

    Witness check(std::string name, const E& lhs, const E& rhs)
    {
        return {std::move(name), lhs.to_string(), rhs.to_string(), lhs == rhs};
    }

    Witness check(std::string name, long long lhs, long long rhs)
    {
        return {std::move(name), std::to_string(lhs), std::to_string(rhs), lhs == rhs};
    }

    Witness check(std::string name, bool value)
    {
        return {std::move(name), value ? "true" : "false", "true", value};
    }

    bool all_hold(const std::vector<Witness>& ws)
    {
        return std::all_of(ws.begin(), ws.end(), [](const Witness& w) { return w.holds; });
    }

    std::string failures(const std::vector<Witness>& ws)
    {
        std::string out;
        for (const auto& w : ws)
            if (! w.holds)
                out += (out.empty() ? "" : "; ") + w.name + ": " + w.lhs + " != " + w.rhs;
        return out;
    }

    int principal(const Spectrum& spec)
    {
        if (spec.entries().empty() || ! spec.largest().is_integer())
            throw ShapeError("spectrum has no integral principal eigenvalue");
        return static_cast<int>(spec.largest().as_integer());
    }

    // Restricted multiplicity: one copy of the principal eigenvalue removed.
    int restricted(const Spectrum& spec, const E& v, int k)
    {
        return spec.multiplicity(v) - (v == E::integer(k) ? 1 : 0);
    }

    struct AbsClass {
        E t;
        int plus = 0;
        int minus = 0;
    };

    std::vector<AbsClass> abs_classes(const Spectrum& spec, int k)
    {
        std::vector<AbsClass> out;
        for (const auto& e : spec.entries()) {
            int m = restricted(spec, e.value, k);
            if (m == 0)
                continue;
            E t = e.value.abs();
            auto it = std::find_if(out.begin(), out.end(), [&](const AbsClass& c) { return c.t == t; });
            if (it == out.end()) {
                out.push_back({t, 0, 0});
                it = out.end() - 1;
            }
            (e.value < E() ? it->minus : it->plus) += m;
        }
        std::sort(out.begin(), out.end(), [](const AbsClass& x, const AbsClass& y) { return x.t > y.t; });
        return out;
    }

    bool has_vanishing(const AbsClass& c) { return ! c.t.is_zero() && (c.plus == 0 || c.minus == 0); }

    long long ipow(long long base, int e)
    {
        long long r = 1;
        for (int i = 0; i < e; ++i) {
            if (__builtin_mul_overflow(r, base, &r))
                throw PreconditionError("parameters too large");
        }
        return r;
    }

    int narrow(long long v)
    {
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
            throw PreconditionError("parameters too large");
        return static_cast<int>(v);
    }

    bool all_components(const Graph& g, auto&& pred)
    {
        auto labels = component_labels(g);
        int count = *std::max_element(labels.begin(), labels.end()) + 1;
        for (int c = 0; c < count; ++c) {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < g.order(); ++v)
                if (labels[v] == c)
                    vs.push_back(v);
            if (! pred(induced_subgraph(g, vs)))
                return false;
        }
        return true;
    }
}

bool TheoremCase::verified() const { return ! label.empty() && all_hold(witnesses); }

bool AffineFamily::verified() const { return all_hold(identities); }

bool UnitaryNonisotropics::verified() const { return all_hold(identities); }

bool is_prime_power(long long q)
{
    if (q < 2)
        return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            while (q % p == 0)
                q /= p;
            return q == 1;
        }
    return true;
}

SrgEigen srg_eigen(const SrgParams& p)
{
    const long long n = p.n, k = p.k, lam = p.lambda, mu = p.mu;
    const long long disc = (lam - mu) * (lam - mu) + 4 * (k - mu);
    if (disc <= 0)
        throw InfeasibleError("no restricted eigenvalues for " + p.to_string());

    SrgEigen out;
    if (is_perfect_square(disc)) {
        auto [r, s] = E::roots_of_quadratic(lam - mu, mu - k);
        long long ri = r.as_integer(), si = s.as_integer();
        long long num = (ri + si) * (n - 1) + 2 * k;
        if (num % (ri - si) != 0 || (n - 1 - num / (ri - si)) % 2 != 0)
            throw InfeasibleError("non-integral multiplicities for " + p.to_string());
        out.r = r;
        out.s = s;
        out.f = narrow((n - 1 - num / (ri - si)) / 2);
        out.g = narrow((n - 1 + num / (ri - si)) / 2);
    } else {
        if ((lam - mu) * (n - 1) + 2 * k != 0 || (n - 1) % 2 != 0)
            throw InfeasibleError("irrational eigenvalues with unequal multiplicities for " + p.to_string());
        std::tie(out.r, out.s) = E::roots_of_quadratic(lam - mu, mu - k);
        out.f = out.g = narrow((n - 1) / 2);
        out.conference = true;
    }
    if (out.f < 0 || out.g < 0)
        throw InfeasibleError("negative multiplicity for " + p.to_string());
    return out;
}

Spectrum srg_spectrum(const SrgParams& p)
{
    auto e = srg_eigen(p);
    return Spectrum({{E::integer(p.k), 1}, {e.r, e.f}, {e.s, e.g}});
}

std::optional<SrgParams> srg_params_from_spectrum(const Spectrum& s)
{
    if (s.distinct() < 2 || s.distinct() > 3 || ! s.largest().is_integer())
        return std::nullopt;
    const E k = s.largest();
    E r, t = s.smallest();
    if (s.distinct() == 3)
        r = s.entries()[1].value;
    else if (s.entries()[0].multiplicity > 1)
        r = k;
    else
        return std::nullopt;
    E lam = k + r + t + r * t;
    E mu = k + r * t;
    if (! lam.is_integer() || ! mu.is_integer())
        return std::nullopt;
    SrgParams p{s.order(), static_cast<int>(k.as_integer()), static_cast<int>(lam.as_integer()),
        static_cast<int>(mu.as_integer())};
    if (p.lambda < 0 || p.mu < 0 || ! p.feasible_counting())
        return std::nullopt;
    return p;
}

TraceIdentity check_trace_identity(const Spectrum& spec)
{
    if (spec.distinct() > 5 || distinct_abs_values(spec) > 3)
        throw ShapeError("needs at most five eigenvalues and three absolute values, got " + spec.to_string());
    const int k = principal(spec);
    auto classes = abs_classes(spec, k);
    if (classes.size() != 2)
        throw ShapeError("restricted spectrum does not split into two opposite pairs: " + spec.to_string());

    const bool int0 = classes[0].t.is_integer(), int1 = classes[1].t.is_integer();
    if (int1 && ! int0)
        std::swap(classes[0], classes[1]);

    TraceIdentity out;
    out.k = k;
    auto fill = [](const AbsClass& c, E& theta, int& mp, int& mm, bool& zero) {
        theta = c.t;
        mp = c.plus;
        mm = c.minus;
        zero = c.t.is_zero();
    };
    fill(classes[0], out.theta2, out.m2, out.m5, out.theta2_is_zero);
    fill(classes[1], out.theta3, out.m3, out.m4, out.theta3_is_zero);

    out.lhs = E::integer(k) + E::integer(out.m2 - out.m5) * out.theta2 + E::integer(out.m3 - out.m4) * out.theta3;
    out.zero_multiplicity_ok = std::count_if(classes.begin(), classes.end(), has_vanishing) <= 1
        && std::all_of(
            classes.begin(), classes.end(), [](const AbsClass& c) { return ! has_vanishing(c) || c.t.is_integer(); });
    out.holds = out.lhs.is_zero();
    return out;
}

TheoremCase classify_eigenvalue_count(const Graph& g)
{
    auto sd = is_strongly_deza(g);
    if (! sd.verdict)
        throw PreconditionError("graph is not strongly Deza");
    const auto& p = *sd.params;
    auto spec = exact_spectrum(g);

    TheoremCase out;
    out.theorem = "eigenvalue-count";
    auto& ws = out.witnesses;
    const std::size_t count = spec.distinct();
    ws.push_back(check("distinct eigenvalues <= 5", count <= 5));
    if (count > 5)
        throw ContradictionError("strongly Deza graph with " + std::to_string(count) + " distinct eigenvalues");

    if (count == 2) {
        out.label = "prop3-2eig";
        ws.push_back(check("a", p.a, 0));
        ws.push_back(check("b", p.b, p.k - 1));
        ws.push_back(check("components are cliques of order k+1",
            all_components(g, [&](const Graph& c) { return c.order() == p.k + 1 && is_complete(c); })));
    } else if (count == 3) {
        auto srg = detect_srg(g);
        const bool connected = distance_data(g).connected();
        if (srg && connected) {
            out.label = "prop3-3eig-srg";
            ws.push_back(check("{lambda, mu} = {a, b}",
                std::minmax(srg->lambda, srg->mu) == std::minmax(p.a, p.b)));
        } else {
            out.label = "prop3-3eig-disconn";
            ws.push_back(check("disconnected", ! connected));
            bool srg_bb = all_components(g, [&](const Graph& c) {
                auto cp = detect_srg(c);
                return cp && cp->k == p.k && cp->lambda == p.b && cp->mu == p.b;
            });
            bool kkk = all_components(g, [&](const Graph& c) {
                auto bp = bipartition(c);
                return c.order() == 2 * p.k && bp && c.edge_count() == static_cast<std::size_t>(p.k) * p.k;
            });
            ws.push_back(check("components SRG(v,k,b,b) or K_{k,k}", srg_bb || kkk));
        }
    } else {
        out.label = count == 4 ? "prop3-4eig" : "prop3-5eig";
    }
    if (! out.verified())
        throw ContradictionError(out.label + ": " + failures(ws));
    return out;
}

HalvingWitness strongly_deza_witness(const Graph& g)
{
    auto p = detect_deza(g);
    if (! p || p->b == p->a)
        throw PreconditionError("needs a Deza graph with b > a");
    if (! distance_data(g).connected())
        throw PreconditionError("needs a connected graph");
    if (distinct_abs_values(exact_spectrum(g)) > 3)
        throw PreconditionError("more than three distinct absolute eigenvalues");

    HalvingWitness out;
    out.strongly_deza = is_strongly_deza(g).verdict;
    out.bipartite = bipartition(g).has_value();
    auto ch = children(g, *p);
    out.child_b_components = structural_profile(ch.b).component_count;

    if (! out.bipartite) {
        if (! out.strongly_deza)
            throw ContradictionError("non-bipartite graph is not strongly Deza");
        out.branch = "non-bipartite-direct";
        return out;
    }
    auto [h1, h2] = halved_graphs(g);
    auto degenerate = [](const Graph& h) { return is_complete(h) || is_edgeless(h); };
    out.halved_degenerate = degenerate(h1) || degenerate(h2);
    if (! out.halved_degenerate)
        out.halved_strongly_deza = is_strongly_deza(h1).verdict && is_strongly_deza(h2).verdict;

    if (out.strongly_deza)
        out.branch = "bipartite-direct";
    else if (out.halved_strongly_deza.value_or(false))
        out.branch = "bipartite-halved";
    else if (out.halved_degenerate)
        out.branch = "degenerate";
    else
        throw ContradictionError("neither the graph nor its halved graphs are strongly Deza");
    return out;
}

TheoremCase classify_square_case(const Spectrum& spec, const DezaParams& p, const SrgParams& child_a)
{
    if (p.b <= p.a)
        throw PreconditionError("needs b > a");
    const auto ce = srg_eigen(child_a);
    if (ce.conference)
        throw PreconditionError("child A has irrational eigenvalues");
    const long long r = ce.r.as_integer(), s = ce.s.as_integer();
    const long long sq2 = p.k - p.b - s * (p.b - p.a);
    const long long sq3 = p.k - p.b - r * (p.b - p.a);
    if (sq2 < 0 || sq3 < 0)
        throw ContradictionError("negative square for an eigenvalue");

    const E t2 = E::sqrt_of(sq2), t3 = E::sqrt_of(sq3);
    const int k = p.k;
    auto pair_total = [&](const E& t) { return restricted(spec, t, k) + (t.is_zero() ? 0 : restricted(spec, -t, k)); };

    TheoremCase out;
    out.theorem = "square";
    auto& ws = out.witnesses;
    ws.push_back(check("theta2^2 = k-b-s(b-a)", E::integer(sq2), t2.squared()));
    ws.push_back(check("pair of theta2 carries mult(s)", pair_total(t2), ce.g));
    ws.push_back(check("pair of theta3 carries mult(r)", pair_total(t3), ce.f));

    const bool sq2_square = is_perfect_square(sq2), sq3_square = is_perfect_square(sq3);
    std::vector<Witness> case_i{check("graph integral", spec.is_integral())};
    std::vector<Witness> case_ii{check("theta3^2 nonzero square", sq3_square && sq3 != 0),
        check("m2", 2LL * restricted(spec, t2, k), ce.g), check("m5", 2LL * restricted(spec, -t2, k), ce.g)};
    std::vector<Witness> case_iii{check("theta2^2 nonzero square", sq2_square && sq2 != 0),
        check("m3", 2LL * restricted(spec, t3, k), ce.f), check("m4", 2LL * restricted(spec, -t3, k), ce.f)};

    struct Option {
        const char* label;
        bool premise;
        std::vector<Witness>& ws;
    };
    Option options[] = {{"square-i", sq2_square && sq3_square, case_i}, {"square-ii", ! sq2_square, case_ii},
        {"square-iii", ! sq3_square, case_iii}};
    int verifying = 0;
    for (auto& o : options)
        if (o.premise && all_hold(o.ws)) {
            ++verifying;
            out.label = o.label;
            for (const auto& w : o.ws)
                ws.push_back(w);
        }
    ws.push_back(check("cases verifying", verifying, 1));
    if (verifying != 1)
        throw ContradictionError(std::to_string(verifying) + " square cases verify for " + spec.to_string());
    if (! out.verified())
        throw ContradictionError(out.label + ": " + failures(ws));
    return out;
}

std::pair<E, E> theta34_from_theta2(int n, int k, const E& theta2, int m2, int m5)
{
    if (! theta2.is_integer())
        throw PreconditionError("theta2 must be an integer, got " + theta2.to_string());
    const long long den = static_cast<long long>(n) - m2 - m5 - 1;
    if (den <= 0)
        throw PreconditionError("n - m2 - m5 - 1 must be positive");
    const long long t = theta2.as_integer();
    const long long num = static_cast<long long>(k) * (n - k) - static_cast<long long>(m2 + m5) * t * t;
    if (num < 0)
        throw InfeasibleError("negative radicand " + std::to_string(num) + "/" + std::to_string(den));
    E root = E::sqrt_of(num, den);
    return {root, -root};
}

std::pair<E, E> four_eig_relation(int n, int k, const E& theta2, int m2)
{
    if (! theta2.is_integer())
        throw PreconditionError("theta2 must be an integer, got " + theta2.to_string());
    const long long t = theta2.as_integer();
    if (t * m2 != -k)
        throw PreconditionError("m2 * theta2 != -k");
    if (t > -1)
        throw PreconditionError("theta2 must be at most -1");
    const long long den = static_cast<long long>(n) - m2 - 1;
    if (den <= 0)
        throw PreconditionError("n - m2 - 1 must be positive");
    const long long num = static_cast<long long>(k) * (den + (t + 1) * (m2 + 1));
    if (num < 0)
        throw InfeasibleError("negative radicand " + std::to_string(num) + "/" + std::to_string(den));
    E root = E::sqrt_of(num, den);
    return {root, -root};
}

std::vector<Eq3Check> check_eq3(const Spectrum& spec, int n, int k)
{
    auto classes = abs_classes(spec, k);
    std::vector<Eq3Check> out;
    if (classes.size() != 2)
        return out;
    for (int i = 0; i < 2; ++i) {
        const auto& c = classes[i];
        const auto& other = classes[1 - i];
        if (! c.t.is_integer() || n - c.plus - c.minus - 1 <= 0)
            continue;
        Eq3Check r;
        r.theta2 = c.t;
        r.m2 = c.plus;
        r.m5 = c.minus;
        r.actual = other.t;
        r.predicted = theta34_from_theta2(n, k, c.t, c.plus, c.minus).first;
        r.holds = r.predicted == r.actual;
        out.push_back(r);
    }
    return out;
}

SingularVerdict singular_check(const Spectrum& spec)
{
    SingularVerdict out;
    out.singular = spec.contains(E());
    out.integral = spec.is_integral();
    out.distinct = spec.distinct();
    if (out.singular && (! out.integral || out.distinct != 4))
        throw ContradictionError("singular spectrum " + spec.to_string() + " is not integral with four values");
    return out;
}

AffineFamily affine_family_params(int q, int t)
{
    if (t < 2)
        throw PreconditionError("t must be at least 2");
    if (! is_prime_power(q))
        throw PreconditionError(std::to_string(q) + " is not a prime power");
    const long long qt = ipow(q, t), qt1 = ipow(q, t - 1);
    const long long v = qt * (qt - 1) / (q - 1);
    const long long k = qt1 * (qt - 1);
    const long long l1 = qt1 * (qt - qt1 - 1);
    const long long l2 = ipow(q, t - 2) * (q - 1) * (qt - 1);
    const long long m = (qt - 1) / (q - 1);
    const long long cls = qt;

    AffineFamily out;
    out.q = q;
    out.t = t;
    out.params = {narrow(v), narrow(k), narrow(l1), narrow(l2), narrow(m), narrow(cls)};

    const long long pm_total = m * (cls - 1);
    const long long m2 = (pm_total - (qt - 1)) / 2;
    const long long m5 = m2 + qt - 1;
    out.predicted = Spectrum({{E::integer(k), 1}, {E::integer(qt1), narrow(m2)}, {E::integer(0), narrow(m - 1)},
        {E::integer(-qt1), narrow(m5)}});

    auto& ids = out.identities;
    ids.push_back(check("v = m n", v, m * cls));
    ids.push_back(check("k - lambda1 = q^{2(t-1)}", k - l1, qt1 * qt1));
    ids.push_back(check("k^2 = lambda2 v", k * k, l2 * v));
    ids.push_back(check("theta2 = sqrt(k - lambda1)", E::sqrt_of(k - l1), E::integer(qt1)));
    ids.push_back(check("theta3 = sqrt(k^2 - lambda2 v)", E::sqrt_of(k * k - l2 * v), E()));
    ids.push_back(check("m2 + m5 parity", (pm_total - (qt - 1)) % 2, 0));
    ids.push_back(check("multiplicities sum to v", out.predicted.order(), v));
    ids.push_back(check("trace", out.predicted.trace(), E()));
    ids.push_back(check("trace of square = vk", out.predicted.trace_of_square(), E::integer(v * k)));
    return out;
}

TheoremCase classify_last_case(const Spectrum& spec, const DezaParams& p)
{
    if (spec.distinct() != 4)
        throw PreconditionError("needs exactly four distinct eigenvalues, got " + spec.to_string());
    const int k = principal(spec);
    if (k != p.k || spec.order() != p.n)
        throw PreconditionError("spectrum does not match " + p.to_string());

    std::vector<SpectrumEntry> rest;
    for (const auto& e : spec.entries())
        if (int m = restricted(spec, e.value, k); m > 0)
            rest.push_back({e.value, m});
    if (rest.size() != 3)
        throw PreconditionError("principal eigenvalue is repeated in " + spec.to_string());

    std::optional<std::size_t> lone;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& x = rest[i];
        bool paired = std::any_of(rest.begin(), rest.end(), [&](const SpectrumEntry& y) {
            return ! x.value.is_zero() && y.value == -x.value && y.multiplicity == x.multiplicity;
        });
        if (! paired) {
            if (lone)
                throw PreconditionError("no opposite pair with equal multiplicities in " + spec.to_string());
            lone = i;
        }
    }
    if (! lone)
        throw PreconditionError("no lone eigenvalue in " + spec.to_string());

    const E theta2 = rest[*lone].value;
    const int m2 = rest[*lone].multiplicity;
    const E theta3 = rest[*lone == 0 ? 1 : 0].value.abs();
    const int m3 = spec.multiplicity(theta3);
    if (! theta2.is_integer() || theta2.as_integer() * m2 != -k)
        throw PreconditionError("m2 * theta2 != -k in " + spec.to_string());
    const long long n = p.n, t2 = theta2.as_integer();

    TheoremCase out;
    out.theorem = "last";
    auto& ws = out.witnesses;
    ws.push_back(check("m2 theta2 = -k", t2 * m2, -k));
    ws.push_back(check("theta3 from m2, theta2", four_eig_relation(p.n, k, theta2, m2).first, theta3));

    if (m2 == 1) {
        out.label = "last-i";
        ws.push_back(check("theta2 = -k", t2, -k));
        ws.push_back(check("theta3 = sqrt(k(n-2k)/(n-2))", theta3, E::sqrt_of(k * (n - 2 * k), n - 2)));
        ws.push_back(check("2 m3 = n-2", 2LL * m3, n - 2));
        ws.push_back(check("bipartite spectrum", spec.contains(E::integer(-k))));
    } else if (m2 == k) {
        out.label = "last-ii";
        ws.push_back(check("theta2 = -1", t2, -1));
        ws.push_back(check("theta3 = sqrt(k)", theta3, E::sqrt_of(k)));
        ws.push_back(check("2 m3 = n-k-1", 2LL * m3, n - k - 1));
    } else {
        out.label = "last-iii";
        ws.push_back(check("1 < m2 < k", 1 < m2 && m2 < k));
        ws.push_back(check("theta2 < -1", t2 < -1));
    }
    if (! out.verified())
        throw ContradictionError(out.label + ": " + failures(ws));
    return out;
}

UnitaryNonisotropics unitary_nonisotropics(int q)
{
    if (q <= 2 || ! is_prime_power(q))
        throw PreconditionError("needs a prime power q > 2, got " + std::to_string(q));
    const long long Q = q;
    const long long n = Q * Q * (Q * Q - Q + 1);
    const long long k = Q * (Q - 1);
    const long long half = (Q * Q * Q * Q - Q) / 2;
    const long long mq = half - Q * Q * Q + Q * Q;
    const long long m1 = Q * Q * Q;
    const long long mnq = half - Q * Q * Q + Q - 1;

    UnitaryNonisotropics out;
    out.q = q;
    out.params = {narrow(n), narrow(k), 1, 0};
    out.spectrum = Spectrum({{E::integer(k), 1}, {E::integer(Q), narrow(mq)}, {E::integer(-1), narrow(m1)},
        {E::integer(-Q), narrow(mnq)}});
    out.child_a = {narrow(n), narrow((Q - 1) * (Q + 1) * (Q + 1)), narrow(2 * Q * Q - 2), narrow((Q + 1) * (Q + 1))};

    auto& ids = out.identities;
    ids.push_back(check("multiplicities sum to n", out.spectrum.order(), n));
    ids.push_back(check("trace", out.spectrum.trace(), E()));
    ids.push_back(check("trace of square = nk", out.spectrum.trace_of_square(), E::integer(n * k)));
    ids.push_back(check("child A counting identity", out.child_a.feasible_counting()));
    bool child_ok = false;
    try {
        child_ok = child_spectra_formula(out.spectrum, out.params).first == srg_spectrum(out.child_a);
    } catch (const Error&) {
    }
    ids.push_back(check("child A spectrum from parent", child_ok));
    ids.push_back(check("theta3 from the pair of -1",
        theta34_from_theta2(narrow(n), narrow(k), E::integer(-1), 0, narrow(m1)).first, E::integer(Q)));
    return out;
}

} // namespace deza
