#include "deza/report.hh"

#include "deza/errors.hh"
#include "deza/graph6.hh"

#include <sstream>

namespace deza {

using nlohmann::json;

namespace {
    template <typename T, typename F>
    json opt(const std::optional<T>& v, F&& f)
    {
        return v ? f(*v) : json(nullptr);
    }

    template <typename T, typename F>
    std::optional<T> opt_from(const json& j, const char* key, F&& f)
    {
        if (! j.contains(key) || j.at(key).is_null())
            return std::nullopt;
        return f(j.at(key));
    }

    json deza_json(const DezaParams& p) { return {{"n", p.n}, {"k", p.k}, {"b", p.b}, {"a", p.a}}; }
    DezaParams deza_from(const json& j) { return {j.at("n"), j.at("k"), j.at("b"), j.at("a")}; }

    json srg_json(const SrgParams& p) { return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}}; }
    SrgParams srg_from(const json& j) { return {j.at("n"), j.at("k"), j.at("lambda"), j.at("mu")}; }

    json ddg_json(const DdgParams& p)
    {
        return {{"v", p.v}, {"k", p.k}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2}, {"m", p.m}, {"n", p.n}};
    }
    DdgParams ddg_from(const json& j)
    {
        return {j.at("v"), j.at("k"), j.at("lambda1"), j.at("lambda2"), j.at("m"), j.at("n")};
    }

    json case_json(const TheoremCase& c)
    {
        json ws = json::array();
        for (const auto& w : c.witnesses)
            ws.push_back({{"name", w.name}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"holds", w.holds}});
        return {{"theorem", c.theorem}, {"label", c.label}, {"witnesses", ws}};
    }

    TheoremCase case_from(const json& j)
    {
        TheoremCase c{j.at("theorem"), j.at("label"), {}};
        for (const auto& w : j.at("witnesses"))
            c.witnesses.push_back({w.at("name"), w.at("lhs"), w.at("rhs"), w.at("holds")});
        return c;
    }

    TheoremCase trace_case(const TraceIdentity& t)
    {
        TheoremCase c{"trace-identity", "paired", {}};
        c.witnesses.push_back({"theta2 = -theta5", t.theta2.to_string(), "m2=" + std::to_string(t.m2) + " m5="
                + std::to_string(t.m5), true});
        c.witnesses.push_back({"theta3 = -theta4", t.theta3.to_string(), "m3=" + std::to_string(t.m3) + " m4="
                + std::to_string(t.m4), true});
        c.witnesses.push_back({"k + (m2-m5)theta2 + (m3-m4)theta3", t.lhs.to_string(), "0", t.lhs.is_zero()});
        c.witnesses.push_back({"vanishing multiplicity on an integral pair", t.zero_multiplicity_ok ? "true" : "false",
            "true", t.zero_multiplicity_ok});
        return c;
    }

    // Runs a classifier, dropping inapplicable cases and recording
    // contradictions.
    template <typename F>
    void classify(AnalysisReport& r, const char* what, F&& f)
    {
        try {
            r.cases.push_back(f());
        } catch (const ContradictionError& e) {
            r.inconsistencies.push_back(std::string(what) + ": " + e.what());
        } catch (const PreconditionError&) {
        } catch (const ShapeError&) {
        }
    }
}

json eigenvalue_to_json(const Eigenvalue& v, int mult)
{
    return {{"p", v.p()}, {"u", v.u()}, {"d", v.d()}, {"q", v.q()}, {"mult", mult}};
}

json spectrum_to_json(const Spectrum& s)
{
    json out = json::array();
    for (const auto& e : s.entries())
        out.push_back(eigenvalue_to_json(e.value, e.multiplicity));
    return out;
}

Spectrum spectrum_from_json(const json& j)
{
    std::vector<SpectrumEntry> entries;
    for (const auto& e : j) {
        const std::int64_t p = e.at("p"), u = e.at("u"), d = e.at("d"), q = e.at("q");
        auto v = u == 0 ? Eigenvalue::rational(p, q) : Eigenvalue::quadratic(p, u, d, q);
        entries.push_back({v, e.at("mult").get<int>()});
    }
    return Spectrum(std::move(entries));
}

AnalysisReport analyze(const Graph& g, std::string source)
{
    AnalysisReport r;
    r.source = std::move(source);
    r.graph6 = write_graph6(g);
    r.n = g.order();
    auto profile = structural_profile(g);
    r.degree = profile.regular_degree;
    r.connected = profile.connected;
    r.bipartite = profile.bipartite;
    r.triangles = profile.triangle_count;
    r.components = profile.component_count;

    try {
        r.spectrum = exact_spectrum(g);
        r.distinct_eigenvalues = static_cast<int>(r.spectrum->distinct());
        r.distinct_abs_values = static_cast<int>(distinct_abs_values(*r.spectrum));
    } catch (const NonQuadraticSpectrum& e) {
        r.spectrum_error = e.what();
    }

    r.deza = detect_deza(g);
    r.srg = detect_srg(g);
    if (r.deza && r.deza->b > r.deza->a) {
        auto sd = is_strongly_deza(g);
        r.strongly_deza = sd.verdict;
        r.child_a_srg = sd.child_a_srg;
        r.child_b_srg = sd.child_b_srg;
        if (r.spectrum) {
            auto ch = children(g, *r.deza);
            std::tie(r.child_a_formula, r.child_b_formula) = child_spectra_formula(*r.spectrum, *r.deza);
            r.child_a_direct = exact_spectrum(ch.a);
            r.child_b_direct = exact_spectrum(ch.b);
            r.child_spectra_match = r.child_a_formula == r.child_a_direct && r.child_b_formula == r.child_b_direct;
            if (! *r.child_spectra_match)
                r.inconsistencies.push_back("child spectra from the parent spectrum differ from the children");
        }
    }
    r.ddg = is_divisible_design(g);

    if (r.connected && r.n > 1) {
        auto check = intersection_array(g);
        r.intersection_array = check.array;
        if (check.array) {
            r.antipodal = is_antipodal(g, *check.array);
            try {
                if (check.array->diameter() >= 3)
                    r.drg_deza_case = drg_deza_classification(g, *check.array).label;
                if (r.ddg)
                    r.ddg_drg_case = ddg_drg_classification(g);
            } catch (const ContradictionError& e) {
                r.inconsistencies.push_back(e.what());
            }
        }
    }

    if (r.spectrum) {
        const auto& spec = *r.spectrum;
        const bool non_srg_strong = r.strongly_deza && ! r.srg;
        classify(r, "trace identity", [&] {
            auto c = trace_case(check_trace_identity(spec));
            if (non_srg_strong && ! c.verified())
                throw ContradictionError(c.witnesses[2].lhs + " != 0");
            return c;
        });
        if (r.strongly_deza)
            classify(r, "eigenvalue count", [&] { return classify_eigenvalue_count(g); });
        if (non_srg_strong) {
            if (r.child_a_srg)
                classify(r, "square case", [&] { return classify_square_case(spec, *r.deza, *r.child_a_srg); });
            classify(r, "last case", [&] { return classify_last_case(spec, *r.deza); });
            if (r.connected)
                classify(r, "singular check", [&] {
                auto v = singular_check(spec);
                return TheoremCase{"singular", v.singular ? "singular" : "nonsingular",
                    {{"integral", v.integral ? "true" : "false", v.singular ? "true" : "-", ! v.singular || v.integral},
                        {"distinct eigenvalues", std::to_string(v.distinct), v.singular ? "4" : "-",
                            ! v.singular || v.distinct == 4}}};
            });
        }
    }
    return r;
}

json to_json(const AnalysisReport& r)
{
    json j;
    j["schema"] = kReportSchema;
    j["source"] = r.source;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["degree"] = opt(r.degree, [](int d) { return json(d); });
    j["connected"] = r.connected;
    j["bipartite"] = r.bipartite;
    j["triangles"] = r.triangles;
    j["components"] = r.components;
    j["spectrum"] = opt(r.spectrum, spectrum_to_json);
    j["spectrum_text"] = opt(r.spectrum, [](const Spectrum& s) { return json(s.to_string()); });
    j["spectrum_error"] = opt(r.spectrum_error, [](const std::string& s) { return json(s); });
    j["distinct_eigenvalues"] = r.distinct_eigenvalues;
    j["distinct_abs_values"] = r.distinct_abs_values;
    j["deza"] = opt(r.deza, deza_json);
    j["srg"] = opt(r.srg, srg_json);
    j["strongly_deza"] = r.strongly_deza;
    j["children"] = nullptr;
    if (r.child_spectra_match || r.child_a_srg || r.child_b_srg) {
        auto child = [](const std::optional<SrgParams>& srg, const std::optional<Spectrum>& formula,
                         const std::optional<Spectrum>& direct) {
            return json{{"srg", opt(srg, srg_json)}, {"formula", opt(formula, spectrum_to_json)},
                {"direct", opt(direct, spectrum_to_json)}};
        };
        j["children"] = {{"a", child(r.child_a_srg, r.child_a_formula, r.child_a_direct)},
            {"b", child(r.child_b_srg, r.child_b_formula, r.child_b_direct)},
            {"match", opt(r.child_spectra_match, [](bool b) { return json(b); })}};
    }
    j["ddg"] = opt(r.ddg, ddg_json);
    j["drg"] = nullptr;
    if (r.intersection_array) {
        const auto& ia = *r.intersection_array;
        auto str = [](const std::string& s) { return json(s); };
        j["drg"] = {{"b", ia.b}, {"c", ia.c}, {"text", ia.to_string()}, {"diameter", ia.diameter()},
            {"antipodal", opt(r.antipodal, [](bool b) { return json(b); })},
            {"deza_case", opt(r.drg_deza_case, str)}, {"ddg_case", opt(r.ddg_drg_case, str)}};
    }
    j["cases"] = json::array();
    for (const auto& c : r.cases)
        j["cases"].push_back(case_json(c));
    j["inconsistencies"] = r.inconsistencies;
    return j;
}

AnalysisReport report_from_json(const json& j)
{
    if (j.value("schema", "") != kReportSchema)
        throw PreconditionError("unsupported report schema");
    AnalysisReport r;
    r.source = j.at("source");
    r.graph6 = j.at("graph6");
    r.n = j.at("n");
    r.degree = opt_from<int>(j, "degree", [](const json& v) { return v.get<int>(); });
    r.connected = j.at("connected");
    r.bipartite = j.at("bipartite");
    r.triangles = j.at("triangles");
    r.components = j.at("components");
    r.spectrum = opt_from<Spectrum>(j, "spectrum", spectrum_from_json);
    r.spectrum_error = opt_from<std::string>(j, "spectrum_error", [](const json& v) { return v.get<std::string>(); });
    r.distinct_eigenvalues = j.at("distinct_eigenvalues");
    r.distinct_abs_values = j.at("distinct_abs_values");
    r.deza = opt_from<DezaParams>(j, "deza", deza_from);
    r.srg = opt_from<SrgParams>(j, "srg", srg_from);
    r.strongly_deza = j.at("strongly_deza");
    if (const auto& ch = j.at("children"); ! ch.is_null()) {
        r.child_a_srg = opt_from<SrgParams>(ch.at("a"), "srg", srg_from);
        r.child_b_srg = opt_from<SrgParams>(ch.at("b"), "srg", srg_from);
        r.child_a_formula = opt_from<Spectrum>(ch.at("a"), "formula", spectrum_from_json);
        r.child_b_formula = opt_from<Spectrum>(ch.at("b"), "formula", spectrum_from_json);
        r.child_a_direct = opt_from<Spectrum>(ch.at("a"), "direct", spectrum_from_json);
        r.child_b_direct = opt_from<Spectrum>(ch.at("b"), "direct", spectrum_from_json);
        r.child_spectra_match = opt_from<bool>(ch, "match", [](const json& v) { return v.get<bool>(); });
    }
    r.ddg = opt_from<DdgParams>(j, "ddg", ddg_from);
    if (const auto& d = j.at("drg"); ! d.is_null()) {
        r.intersection_array = IntersectionArray{d.at("b"), d.at("c")};
        r.antipodal = opt_from<bool>(d, "antipodal", [](const json& v) { return v.get<bool>(); });
        auto str = [](const json& v) { return v.get<std::string>(); };
        r.drg_deza_case = opt_from<std::string>(d, "deza_case", str);
        r.ddg_drg_case = opt_from<std::string>(d, "ddg_case", str);
    }
    for (const auto& c : j.at("cases"))
        r.cases.push_back(case_from(c));
    r.inconsistencies = j.at("inconsistencies").get<std::vector<std::string>>();
    return r;
}

std::string render_text(const AnalysisReport& r)
{
    std::ostringstream out;
    auto line = [&](const std::string& key, const std::string& value) { out << "  " << key << ": " << value << "\n"; };
    out << (r.source.empty() ? r.graph6 : r.source) << "\n";
    line("graph6", r.graph6);
    line("order", std::to_string(r.n));
    line("degree", r.degree ? std::to_string(*r.degree) : "irregular");
    line("connected", r.connected ? "yes" : "no (" + std::to_string(r.components) + " components)");
    line("bipartite", r.bipartite ? "yes" : "no");
    line("triangles", std::to_string(r.triangles));
    if (r.spectrum) {
        line("spectrum", r.spectrum->to_string());
        line("distinct eigenvalues",
            std::to_string(r.distinct_eigenvalues) + " (" + std::to_string(r.distinct_abs_values) + " in absolute value)");
    } else if (r.spectrum_error) {
        line("spectrum", *r.spectrum_error);
    }
    line("deza", r.deza ? r.deza->to_string() : "no");
    if (r.srg)
        line("srg", r.srg->to_string());
    if (r.deza && r.deza->b > r.deza->a) {
        line("strongly deza", r.strongly_deza ? "yes" : "no");
        auto child = [&](const char* name, const std::optional<SrgParams>& srg, const std::optional<Spectrum>& direct) {
            line(name, (srg ? "srg " + srg->to_string() : std::string("not strongly regular"))
                    + (direct ? ", spectrum " + direct->to_string() : std::string()));
        };
        child("child A", r.child_a_srg, r.child_a_direct);
        child("child B", r.child_b_srg, r.child_b_direct);
        if (r.child_spectra_match)
            line("child spectra from parent", *r.child_spectra_match ? "match" : "MISMATCH");
    }
    if (r.ddg)
        line("divisible design", r.ddg->to_string());
    if (r.intersection_array) {
        line("intersection array", r.intersection_array->to_string());
        line("antipodal", r.antipodal.value_or(false) ? "yes" : "no");
        if (r.drg_deza_case)
            line("distance-regular deza case", *r.drg_deza_case);
        if (r.ddg_drg_case)
            line("distance-regular ddg case", *r.ddg_drg_case);
    } else if (r.connected) {
        line("distance-regular", "no");
    }
    for (const auto& c : r.cases) {
        line("case " + c.theorem, c.label + (c.verified() ? "" : " (FAILED)"));
        for (const auto& w : c.witnesses)
            out << "    " << w.name << ": " << w.lhs << " vs " << w.rhs << (w.holds ? "" : "  FAILED") << "\n";
    }
    for (const auto& i : r.inconsistencies)
        line("INCONSISTENT", i);
    return out.str();
}

bool json_subset_match(const json& expected, const json& actual, std::vector<std::string>& mismatches,
    const std::string& path)
{
    if (expected.is_object() && actual.is_object()) {
        bool ok = true;
        for (const auto& [key, value] : expected.items()) {
            const std::string sub = path + "/" + key;
            if (! actual.contains(key)) {
                mismatches.push_back(sub + ": missing");
                ok = false;
            } else if (! json_subset_match(value, actual.at(key), mismatches, sub)) {
                ok = false;
            }
        }
        return ok;
    }
    if (expected != actual) {
        mismatches.push_back((path.empty() ? "/" : path) + ": expected " + expected.dump() + ", got " + actual.dump());
        return false;
    }
    return true;
}

} // namespace deza
