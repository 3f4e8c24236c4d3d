#include "deza/reproduction.hh"

#include "deza/deza.hh"
#include "deza/distance_regular.hh"
#include "deza/errors.hh"
#include "deza/families.hh"
#include "deza/spectrum.hh"
#include "deza/theorems.hh"

#include <algorithm>
#include <functional>

namespace deza {

namespace {
    using E = Eigenvalue;

    struct Asset {
        std::string name;
        Graph graph;
    };

    class Runner {
    public:
        Reproduction out;

        void row(const std::string& group, const std::string& check, const std::string& expected,
            const std::function<std::string()>& actual)
        {
            std::string got;
            try {
                got = actual();
            } catch (const std::exception& e) {
                got = std::string("error: ") + e.what();
            }
            out.rows.push_back({group, check, expected, got, got == expected});
        }

        void use(std::initializer_list<const char*> ops) { out.operations.insert(ops.begin(), ops.end()); }
    };

    std::string yes(bool b) { return b ? "yes" : "no"; }

    std::string pair_string(const std::pair<E, E>& p) { return p.first.to_string() + ", " + p.second.to_string(); }

    std::vector<Asset> build_assets()
    {
        const int octa[] = {2, 2, 2};
        const int k444[] = {4, 4, 4};
        const int k33[] = {3, 3};
        const int biplane[] = {1, 3, 4, 5, 9};
        return {
            {"octahedron line graph", line_graph(complete_multipartite(octa))},
            {"heawood", heawood()},
            {"icosahedron", icosahedron()},
            {"petersen", petersen()},
            {"J(6,3)", johnson(6, 3)},
            {"L(petersen)", line_graph(petersen())},
            {"klein", bundled_graph("klein24")},
            {"taylor paley(13)", taylor_double_cover(paley(13))},
            {"C6", cycle_graph(6)},
            {"C5", cycle_graph(5)},
            {"paley(13)", paley(13)},
            {"paley(9)", paley(9)},
            {"K_{4,4,4}", complete_multipartite(k444)},
            {"3K4", disjoint_cliques(3, 4)},
            {"2K_{3,3}", disjoint_union(complete_multipartite(k33), complete_multipartite(k33))},
            {"biplane(11)", symmetric_design_incidence(11, biplane)},
            {"cube", hamming(3, 2)},
        };
    }

    const Graph& find(const std::vector<Asset>& assets, const std::string& name)
    {
        auto it = std::find_if(assets.begin(), assets.end(), [&](const Asset& a) { return a.name == name; });
        return it->graph;
    }

    bool non_srg_strongly_deza(const Graph& g) { return is_strongly_deza(g).verdict && ! detect_srg(g); }
}

bool Reproduction::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

Reproduction verify_paper()
{
    Runner run;
    const auto assets = build_assets();
    auto graph = [&](const std::string& name) -> const Graph& { return find(assets, name); };

    // Smallest singular strongly Deza graph.
    {
        const auto& g = graph("octahedron line graph");
        run.use({"detect_deza", "is_divisible_design", "children", "detect_srg"});
        run.row("octahedron-line-graph", "deza parameters", "(12,6,3,2)", [&] { return detect_deza(g)->to_string(); });
        run.row("octahedron-line-graph", "spectrum", "{6^1, 2^3, 0^2, -2^6}",
            [&] { return exact_spectrum(g).to_string(); });
        run.row("octahedron-line-graph", "divisible design", "(12,6,2,3,3,4)",
            [&] { return is_divisible_design(g)->to_string(); });
        run.row("octahedron-line-graph", "children", "(12,3,2,0) (12,8,4,8)", [&] {
            auto ch = children(g, *detect_deza(g));
            return detect_srg(ch.a)->to_string() + " " + detect_srg(ch.b)->to_string();
        });
    }

    // Distance-regular strongly Deza graphs with a1 = c2, d = 3, n <= 30.
    {
        struct TableRow {
            const char* name;
            Spectrum spectrum;
            int a1;
        };
        auto r = [](int x) { return E::sqrt_of(x); };
        const TableRow table[] = {
            {"icosahedron", {{E::integer(5), 1}, {r(5), 3}, {E::integer(-1), 5}, {-r(5), 3}}, 2},
            {"L(petersen)", {{E::integer(4), 1}, {E::integer(2), 5}, {E::integer(-1), 4}, {E::integer(-2), 5}}, 1},
            {"J(6,3)", {{E::integer(9), 1}, {E::integer(3), 5}, {E::integer(-1), 9}, {E::integer(-3), 5}}, 4},
            {"klein", {{E::integer(7), 1}, {r(7), 8}, {E::integer(-1), 7}, {-r(7), 8}}, 2},
            {"taylor paley(13)", {{E::integer(13), 1}, {r(13), 7}, {E::integer(-1), 13}, {-r(13), 7}}, 6},
        };
        run.use({"intersection_array", "is_strongly_deza"});
        for (const auto& t : table) {
            const auto& g = graph(t.name);
            const std::string group = std::string("table ") + t.name;
            run.row(group, "spectrum", t.spectrum.to_string(), [&] { return exact_spectrum(g).to_string(); });
            run.row(group, "distance-regular, d, a1, c2", "yes 3 " + std::to_string(t.a1) + " " + std::to_string(t.a1),
                [&] {
                    auto ia = intersection_array(g).array;
                    if (! ia)
                        return std::string("no");
                    return "yes " + std::to_string(ia->diameter()) + " " + std::to_string(ia->a(1)) + " "
                        + std::to_string(ia->c_at(2));
                });
            run.row(group, "strongly deza", "yes", [&] { return yes(is_strongly_deza(g).verdict); });
        }
    }

    // Child spectra from the parent spectrum, over every Deza asset with b > a.
    run.use({"verify_child_formula", "child_spectra_formula"});
    for (const auto& a : assets) {
        auto p = detect_deza(a.graph);
        if (! p || p->b == p->a)
            continue;
        run.row("child-spectra", a.name, "match", [&] {
            auto c = verify_child_formula(a.graph);
            return std::string(c.holds() ? "match" : "mismatch");
        });
    }
    run.row("child-spectra", "heawood child A keeps -7 apart", "{7^1, 0^12, -7^1}", [&] {
        const auto& g = graph("heawood");
        return child_spectra_formula(exact_spectrum(g), *detect_deza(g)).first.to_string();
    });

    // Strongly regular eigenvalues.
    run.use({"srg_eigen"});
    for (const char* name : {"petersen", "paley(13)", "paley(9)", "K_{4,4,4}", "C5"}) {
        const auto& g = graph(name);
        const bool conference = std::string(name) == "paley(13)" || std::string(name) == "C5";
        run.row("srg-eigenvalues", name, std::string("reproduced") + (conference ? " conference" : ""), [&] {
            auto p = *detect_srg(g);
            auto e = srg_eigen(p);
            std::string s = srg_spectrum(p) == exact_spectrum(g) ? "reproduced" : "differs";
            return s + (e.conference ? " conference" : "");
        });
    }

    // Trace identity on every strongly Deza asset; the vanishing-multiplicity
    // clause only outside the SRG case.
    run.use({"check_trace_identity"});
    for (const auto& a : assets) {
        if (! is_strongly_deza(a.graph).verdict)
            continue;
        const bool clause = non_srg_strongly_deza(a.graph);
        run.row("trace-identity", a.name, clause ? "0, one vanishing multiplicity at most" : "0", [&] {
            auto t = check_trace_identity(exact_spectrum(a.graph));
            if (! clause)
                return t.lhs.to_string();
            return t.lhs.to_string() + (t.zero_multiplicity_ok ? ", one vanishing multiplicity at most" : ", clause fails");
        });
    }

    // Remaining pair from an integral pair.
    {
        run.use({"theta34_from_theta2", "four_eig_relation"});
        struct Eq3 {
            const char* name;
            int theta2, m2, m5;
            E expected;
        };
        const Eq3 eq3[] = {
            {"heawood", 3, 0, 1, E::sqrt_of(2)},
            {"icosahedron", 1, 0, 5, E::sqrt_of(5)},
            {"J(6,3)", 3, 5, 5, E::integer(1)},
            {"J(6,3)", 1, 0, 9, E::integer(3)},
            {"taylor paley(13)", 1, 0, 13, E::sqrt_of(13)},
            {"octahedron line graph", 2, 3, 6, E::integer(0)},
        };
        for (const auto& t : eq3) {
            const auto& g = graph(t.name);
            run.row("theta34", std::string(t.name) + " theta2=" + std::to_string(t.theta2),
                pair_string({t.expected, -t.expected}), [&] {
                    return pair_string(theta34_from_theta2(g.order(), *g.regular_degree(), E::integer(t.theta2), t.m2,
                        t.m5));
                });
        }
        struct Eq4 {
            const char* name;
            int theta2, m2;
            E expected;
        };
        const Eq4 eq4[] = {
            {"heawood", -3, 1, E::sqrt_of(2)},
            {"icosahedron", -1, 5, E::sqrt_of(5)},
            {"J(6,3)", -1, 9, E::integer(3)},
            {"taylor paley(13)", -1, 13, E::sqrt_of(13)},
        };
        for (const auto& t : eq4) {
            const auto& g = graph(t.name);
            run.row("four-eigenvalues", t.name, pair_string({t.expected, -t.expected}) + " in spectrum", [&] {
                auto p = four_eig_relation(g.order(), *g.regular_degree(), E::integer(t.theta2), t.m2);
                auto spec = exact_spectrum(g);
                bool present = spec.multiplicity(p.first) > 0 && spec.multiplicity(p.first) == spec.multiplicity(p.second);
                return pair_string(p) + (present ? " in spectrum" : " missing");
            });
        }
    }

    // Square trichotomy.
    {
        run.use({"classify_square_case"});
        const std::pair<const char*, const char*> expected[] = {{"octahedron line graph", "square-i"},
            {"heawood", "square-iii"}, {"icosahedron", "square-ii"}, {"J(6,3)", "square-i"},
            {"L(petersen)", "square-i"}, {"klein", "square-ii"}, {"taylor paley(13)", "square-ii"},
            {"C6", "square-i"}, {"2K_{3,3}", "square-i"}, {"cube", "square-i"}, {"biplane(11)", "square-iii"}};
        for (auto [name, label] : expected) {
            const auto& g = graph(name);
            run.row("square-case", name, label, [&] {
                auto sd = is_strongly_deza(g);
                return classify_square_case(exact_spectrum(g), *sd.params, *sd.child_a_srg).label;
            });
        }
        run.row("square-case", "icosahedron m2 = m5 = mult(s)/2", "3 3 6", [&] {
            const auto& g = graph("icosahedron");
            auto sd = is_strongly_deza(g);
            auto spec = exact_spectrum(g);
            return std::to_string(spec.multiplicity(E::sqrt_of(5))) + " " + std::to_string(spec.multiplicity(-E::sqrt_of(5)))
                + " " + std::to_string(srg_eigen(*sd.child_a_srg).g);
        });
    }

    // Singular strongly Deza graphs.
    {
        run.use({"singular_check"});
        for (const auto& a : assets) {
            if (! non_srg_strongly_deza(a.graph) || ! distance_data(a.graph).connected())
                continue;
            run.row("singular", a.name, "consistent", [&] {
                singular_check(exact_spectrum(a.graph));
                return std::string("consistent");
            });
        }
        run.row("singular", "octahedron line graph", "singular integral 4", [&] {
            auto v = singular_check(exact_spectrum(graph("octahedron line graph")));
            return std::string(v.singular ? "singular" : "nonsingular") + (v.integral ? " integral " : " irrational ")
                + std::to_string(v.distinct);
        });
    }

    // Four distinct eigenvalues with one symmetric pair.
    {
        run.use({"classify_last_case"});
        const std::pair<const char*, const char*> expected[] = {{"heawood", "last-i"}, {"icosahedron", "last-ii"},
            {"J(6,3)", "last-ii"}, {"L(petersen)", "last-ii"}, {"klein", "last-ii"}, {"taylor paley(13)", "last-ii"},
            {"biplane(11)", "last-i"}};
        for (auto [name, label] : expected) {
            const auto& g = graph(name);
            run.row("last-case", name, label,
                [&] { return classify_last_case(exact_spectrum(g), *detect_deza(g)).label; });
        }
    }

    // Affine-group divisible design family, arithmetic only.
    {
        run.use({"affine_family_params"});
        const std::tuple<int, int, const char*> expected[] = {{2, 2, "(12,6,2,3,3,4)"}, {3, 2, "(36,24,15,16,4,9)"},
            {2, 3, "(56,28,12,14,7,8)"}, {4, 2, "(80,60,44,45,5,16)"}, {3, 3, "(351,234,153,156,13,27)"}};
        for (auto [q, t, params] : expected) {
            const std::string name = "q=" + std::to_string(q) + " t=" + std::to_string(t);
            run.row("affine-family", name, std::string(params) + " verified", [&, q = q, t = t] {
                auto f = affine_family_params(q, t);
                return f.params.to_string() + (f.verified() ? " verified" : " failed");
            });
        }
        run.row("affine-family", "q=2 t=2 spectrum is the octahedron line graph's", "{6^1, 2^3, 0^2, -2^6}",
            [&] { return affine_family_params(2, 2).predicted.to_string(); });
        run.row("affine-family", "q=2 t=2 parameters are the octahedron line graph's", "yes", [&] {
            return yes(affine_family_params(2, 2).params == *is_divisible_design(graph("octahedron line graph")));
        });
    }

    // Unitary nonisotropics graphs, arithmetic only.
    for (int q : {3, 4, 5}) {
        run.row("unitary-nonisotropics", "q=" + std::to_string(q), "verified", [&] {
            return std::string(unitary_nonisotropics(q).verified() ? "verified" : "failed");
        });
    }
    run.row("unitary-nonisotropics", "q=3 parent and child", "(63,6,1,0) {6^1, 3^21, -1^27, -3^14} (63,32,16,16)", [&] {
        auto u = unitary_nonisotropics(3);
        return u.params.to_string() + " " + u.spectrum.to_string() + " " + u.child_a.to_string();
    });

    // Divisible design graphs with spectrum {k, √k^m, (−1)^k, (−√k)^m}.
    run.use({"corollary_ddg_drg", "is_antipodal"});
    for (auto [name, value] : {std::pair{"icosahedron", 2}, {"klein", 2}, {"taylor paley(13)", 6}}) {
        const auto& g = graph(name);
        run.row("ddg-drg-corollary", name, "a1=c2=" + std::to_string(value), [&] {
            auto v = corollary_ddg_drg(g);
            return v.a1_c2 ? "a1=c2=" + std::to_string(v.array->a(1)) + (v.array->c_at(2) == v.array->a(1) ? "" : "!")
                           : std::string("not divisible");
        });
    }

    // Deza membership of distance-regular graphs from a1 and c2.
    {
        run.use({"drg_deza_classification"});
        std::vector<Asset> drgs{{"C7", cycle_graph(7)}, {"J(7,3)", johnson(7, 3)}, {"H(3,3)", hamming(3, 3)}};
        for (const char* name : {"heawood", "icosahedron", "J(6,3)", "L(petersen)", "klein", "taylor paley(13)", "C6",
                 "cube", "biplane(11)"})
            drgs.push_back({name, graph(name)});
        for (const auto& a : drgs) {
            run.row("drg-deza", a.name, "agrees", [&] {
                auto ia = *intersection_array(a.graph).array;
                auto c = drg_deza_classification(a.graph, ia);
                const bool predicted = ia.a(1) == 0 || ia.a(1) == ia.c_at(2);
                return std::string(predicted == detect_deza(a.graph).has_value() && (c.label != "not-deza") == predicted
                        ? "agrees"
                        : "disagrees");
            });
        }
    }

    // Distance-regular divisible design graphs.
    run.use({"ddg_drg_classification"});
    for (auto [name, label] : {std::pair{"K_{4,4,4}", "complete-multipartite"}, {"heawood", "incidence-symmetric-design"},
             {"icosahedron", "antipodal-d3-a1-eq-c2"}, {"J(6,3)", "antipodal-d3-a1-eq-c2"},
             {"biplane(11)", "incidence-symmetric-design"}}) {
        const auto& g = graph(name);
        run.row("ddg-drg", name, label, [&] { return ddg_drg_classification(g); });
    }

    // Strongly Deza directly, or through the halved graphs.
    run.use({"strongly_deza_witness"});
    for (auto [name, branch] : {std::pair{"octahedron line graph", "non-bipartite-direct"},
             {"heawood", "bipartite-direct"}, {"C6", "bipartite-direct"}, {"icosahedron", "non-bipartite-direct"}}) {
        const auto& g = graph(name);
        run.row("halved-graphs", name, branch, [&] { return strongly_deza_witness(g).branch; });
    }

    // Number of distinct eigenvalues.
    run.use({"classify_eigenvalue_count"});
    for (auto [name, label] : {std::pair{"3K4", "prop3-2eig"}, {"2K_{3,3}", "prop3-3eig-disconn"},
             {"petersen", "prop3-3eig-srg"}, {"icosahedron", "prop3-4eig"}}) {
        const auto& g = graph(name);
        run.row("eigenvalue-count", name, label, [&] { return classify_eigenvalue_count(g).label; });
    }

    // Cospectral mates available at desk scale.
    {
        run.use({"distance3_counts", "cosp_deza_check"});
        run.row("cospectral", "taylor(C5) and icosahedron", "cospectral", [&] {
            return std::string(is_cospectral(exact_spectrum(taylor_double_cover(cycle_graph(5))),
                                   exact_spectrum(graph("icosahedron")))
                    ? "cospectral"
                    : "different");
        });
        run.row("cospectral", "taylor(paley(9)) and J(6,3)", "cospectral", [&] {
            return std::string(
                is_cospectral(exact_spectrum(taylor_double_cover(paley(9))), exact_spectrum(graph("J(6,3)")))
                    ? "cospectral"
                    : "different");
        });
        run.row("cospectral", "icosahedron with itself", "same-intersection-numbers",
            [&] { return cosp_deza_check(graph("icosahedron"), graph("icosahedron")).label; });
        run.row("cospectral", "J(6,3) with taylor(paley(9))", "same-intersection-numbers",
            [&] { return cosp_deza_check(graph("J(6,3)"), taylor_double_cover(paley(9))).label; });
        run.row("cospectral", "vertices at distance 3 in the icosahedron", "constant 1", [&] {
            auto c = distance3_counts(graph("icosahedron"));
            return (c.constant ? "constant " : "varying ") + std::to_string(c.counts.front());
        });
    }

    // Feasible intersection numbers with no known graph.
    for (const auto& t : unbuilt_feasible_tuples()) {
        const std::string name = "(" + std::to_string(t.n) + "," + std::to_string(t.k) + "," + std::to_string(t.k2) + ","
            + std::to_string(t.c2) + ")";
        run.row("unbuilt-tuples", name, "consistent",
            [&] { return std::string(t.consistent ? "consistent" : "inconsistent"); });
    }
    return std::move(run.out);
}

} // namespace deza
