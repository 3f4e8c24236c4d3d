#include "deza/families.hh"
#include "deza/graph6.hh"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("deza-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content)
{
    const auto p = scratch() / name;
    std::ofstream(p) << content;
    return p;
}

Run run(const std::string& args)
{
    const auto out = scratch() / "stdout", err = scratch() / "stderr";
    const std::string cmd = std::string(DEZA_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

// One graph6 line per isomorphism class of graphs on four vertices.
std::vector<std::string> four_vertex_graphs()
{
    std::set<std::string> seen;
    std::vector<std::string> out;
    for (int mask = 0; mask < 64; ++mask) {
        auto adjacent = [&](int u, int v) {
            if (u > v)
                std::swap(u, v);
            static const int bit[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
            return (mask >> bit[u][v] & 1) != 0;
        };
        std::array<int, 4> perm{0, 1, 2, 3};
        std::string canon;
        do {
            const auto g = deza::Graph::from_predicate(4, [&](int u, int v) { return adjacent(perm[u], perm[v]); });
            const auto s = deza::write_graph6(g);
            if (canon.empty() || s < canon)
                canon = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second)
            out.push_back(canon);
    }
    return out;
}

} // namespace

TEST_CASE("construct writes deterministic graph6")
{
    const auto a = run("construct johnson 6 3");
    CHECK(a.code == 0);
    CHECK(deza::parse_graph6(lines(a.out).at(0)).order() == 20);
    CHECK(run("construct johnson 6 3").out == a.out);

    const auto t = run("construct taylor-paley 13");
    CHECK(t.code == 0);
    CHECK(deza::parse_graph6(lines(t.out).at(0)).order() == 28);

    CHECK(run("construct bundled klein24").code == 0);
    CHECK(run("construct design 7 1 2 4").out == deza::write_graph6(deza::heawood()) + "\n");

    const auto o = scratch() / "ico.g6";
    CHECK(run("construct icosahedron -o " + o.string()).code == 0);
    CHECK(slurp(o) == deza::write_graph6(deza::icosahedron()) + "\n");
}

TEST_CASE("usage errors exit 64")
{
    const auto p = run("construct paley 8");
    CHECK(p.code == 64);
    CHECK(p.err.find("1 mod 4") != std::string::npos);
    CHECK(run("construct dodecahedron").code == 64);
    CHECK(run("construct johnson six 3").code == 64);
    CHECK(run("construct johnson 6").code == 64);
    CHECK(run("construct bundled nope").code == 64);
    CHECK(run("").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("filter - wobbly < /dev/null").code == 64);
}

TEST_CASE("analyze reports and exit codes")
{
    const auto f = write_file("olg.g6", run("construct octahedron-line-graph").out);
    const auto r = run("analyze " + f.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("deza: (12,6,3,2)") != std::string::npos);
    CHECK(r.out.find("spectrum: {6^1, 2^3, 0^2, -2^6}") != std::string::npos);
    CHECK(r.out.find("case singular: singular") != std::string::npos);

    const auto h = write_file("heawood.g6", run("construct heawood").out);
    const auto j = run("analyze " + h.string() + " --json");
    CHECK(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.is_array());
    CHECK(doc[0].at("schema") == "deza-report/1");
    CHECK(doc[0].at("ddg").at("m") == 2);
    CHECK(doc[0].at("ddg").at("n") == 7);
}

TEST_CASE("analyze reports malformed lines by number")
{
    const auto f = write_file("corrupt.g6", deza::write_graph6(deza::petersen()) + "\nC~~\n");
    const auto r = run("analyze " + f.string());
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.out.find("deza: (10,3,1,0)") != std::string::npos);
    CHECK(run("analyze " + (scratch() / "absent.g6").string()).code == 2);
}

TEST_CASE("analyze --expect")
{
    const auto f = write_file("pet.g6", ">>graph6<<" + deza::write_graph6(deza::petersen()) + "\n");
    const auto good = write_file("good.json", R"({"n": 10, "srg": {"n": 10, "k": 3, "lambda": 0, "mu": 1}})");
    const auto bad = write_file("bad.json", R"([{"n": 11}])");
    CHECK(run("analyze " + f.string() + " --expect " + good.string()).code == 0);
    const auto r = run("analyze " + f.string() + " --expect " + bad.string());
    CHECK(r.code == 1);
    CHECK(r.err.find("/n") != std::string::npos);
}

TEST_CASE("analyze is byte-identical across runs and keeps input order")
{
    std::string content;
    std::vector<std::string> expected;
    for (int n = 3; n < 40; ++n) {
        expected.push_back(deza::write_graph6(deza::cycle_graph(n)));
        content += expected.back() + "\n";
        expected.push_back(deza::write_graph6(deza::complete_graph(n)));
        content += expected.back() + "\n";
    }
    const auto f = write_file("many.g6", content);
    const auto a = run("analyze " + f.string() + " --json");
    const auto b = run("analyze " + f.string() + " --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const json doc = json::parse(a.out);
    REQUIRE(doc.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(doc[i].at("graph6") == expected[i]);
}

TEST_CASE("filter over all graphs on four vertices")
{
    const auto all = four_vertex_graphs();
    REQUIRE(all.size() == 11);
    std::string content;
    for (const auto& s : all)
        content += s + "\n";
    const auto f = write_file("four.g6", content);
    const auto r = run("filter " + f.string() + " deza");
    CHECK(r.code == 0);
    const auto out = lines(r.out);
    // 2K2 and C4; K4 and the empty graph are excluded, K_{1,3} is irregular.
    CHECK(out.size() == 2);
    std::multiset<int> degrees;
    for (const auto& l : out)
        degrees.insert(deza::parse_graph6(l).regular_degree().value_or(-1));
    CHECK(degrees == std::multiset<int>{1, 2});
    const deza::Edge star[] = {{0, 1}, {0, 2}, {0, 3}};
    const auto star6 = deza::write_graph6(deza::Graph(4, star));
    for (const auto& l : out)
        CHECK(deza::parse_graph6(l).regular_degree().has_value());
    CHECK(r.err.find("11 graphs read, 2 matched") != std::string::npos);
    CHECK(r.err.find("(4,2,2,0): 1") != std::string::npos);
    CHECK(std::count(out.begin(), out.end(), star6) == 0);
}

TEST_CASE("filter predicates and malformed input")
{
    const std::string ico = deza::write_graph6(deza::icosahedron());
    const auto f = write_file("mixed.g6", deza::write_graph6(deza::petersen()) + "\n" + ico + "\nxx\n"
            + deza::write_graph6(deza::hamming(3, 3)) + "\n");
    const auto r = run("filter " + f.string() + " ddg");
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{ico});
    CHECK(r.err.find("warning: line 3") != std::string::npos);

    const auto s = run("filter " + f.string() + " strongly-deza --strict");
    CHECK(s.code == 2);
    CHECK(s.err.find("error: line 3") != std::string::npos);

    const auto d = run("filter " + f.string() + " drg");
    CHECK(lines(d.out).size() == 3);
    CHECK(d.err.find("{5,2,1;1,2,5}: 1") != std::string::npos);

    const auto icof = write_file("ico-only.g6", ico + "\n");
    CHECK(lines(run("filter " + icof.string() + " strongly-deza").out).size() == 1);

    const auto empty = write_file("empty.g6", "");
    const auto e = run("filter " + empty.string() + " deza");
    CHECK(e.code == 0);
    CHECK(e.out.empty());
    CHECK(e.err.find("0 graphs read, 0 matched") != std::string::npos);
}

TEST_CASE("verify-paper passes")
{
    const auto r = run("verify-paper");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("checks passed") != std::string::npos);
    const auto j = run("verify-paper --json");
    CHECK(json::parse(j.out).at("pass") == true);
}

TEST_CASE("spectrum, children and cospectral verbs")
{
    const auto ico = write_file("ico2.g6", deza::write_graph6(deza::icosahedron()) + "\n");
    const auto s = run("spectrum " + ico.string());
    CHECK(s.code == 0);
    CHECK(s.out.find("{5^1, (0+1√5)/1^3, -1^5, (0-1√5)/1^3}") != std::string::npos);

    const auto c7 = write_file("c7.g6", deza::write_graph6(deza::cycle_graph(7)) + "\n");
    CHECK(run("spectrum " + c7.string()).code == 1);

    const auto c = run("children " + ico.string() + " --json");
    CHECK(c.code == 0);
    const json kids = json::parse(c.out);
    CHECK(kids[0].at("a_srg") == "(12,1,0,0)");
    CHECK(kids[0].at("b_srg") == "(12,10,8,10)");

    const auto t5 = write_file("t5.g6", deza::write_graph6(deza::taylor_double_cover(deza::cycle_graph(5))) + "\n");
    const auto cs = run("cospectral " + ico.string() + " " + t5.string() + " --json");
    CHECK(cs.code == 0);
    CHECK(json::parse(cs.out).at("deza_case") == "same-intersection-numbers");

    const auto pet = write_file("pet2.g6", deza::write_graph6(deza::petersen()) + "\n");
    CHECK(run("cospectral " + ico.string() + " " + pet.string()).code == 1);
    CHECK(run("cospectral " + ico.string()).code == 64);
}
