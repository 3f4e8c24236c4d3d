// Command-line front end: analyze, construct, verify-paper, filter,
// spectrum, children, cospectral.

#include "deza/deza.hh"
#include "deza/distance_regular.hh"
#include "deza/errors.hh"
#include "deza/families.hh"
#include "deza/graph6.hh"
#include "deza/report.hh"
#include "deza/reproduction.hh"
#include "deza/spectrum.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <thread>
#include <variant>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    bool strict = false;
    std::string expect;
    std::string output;
};

struct Line {
    std::size_t number = 0;
    std::string text;
};

// Output goes to -o PATH when given, standard output otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (! path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (! *file_)
                throw InputError("cannot open " + path + " for writing");
        }
    }

    std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

class LineReader {
public:
    explicit LineReader(const std::string& path)
    {
        if (path == "-") {
            in_ = &std::cin;
        } else {
            file_ = std::make_unique<std::ifstream>(path);
            if (! *file_)
                throw InputError("cannot open " + path);
            in_ = file_.get();
        }
    }

    // Next non-blank line; graph6 headers are left to the parser.
    std::optional<Line> next()
    {
        std::string s;
        while (std::getline(*in_, s)) {
            ++number_;
            if (! s.empty() && s.back() == '\r')
                s.pop_back();
            if (s.find_first_not_of(" \t") != std::string::npos)
                return Line{number_, s};
        }
        return std::nullopt;
    }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* in_ = nullptr;
    std::size_t number_ = 0;
};

// Applies `work` to batches of lines on all cores and hands results to
// `emit` in input order.
template <typename Result>
void process_ordered(LineReader& reader, const std::function<Result(const Line&)>& work,
    const std::function<void(const Line&, Result&)>& emit)
{
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t batch_size = 64 * workers;
    while (true) {
        std::vector<Line> batch;
        while (batch.size() < batch_size) {
            auto line = reader.next();
            if (! line)
                break;
            batch.push_back(std::move(*line));
        }
        if (batch.empty())
            return;
        std::vector<std::optional<Result>> results(batch.size());
        std::atomic<std::size_t> cursor{0};
        auto run = [&] {
            for (std::size_t i; (i = cursor++) < batch.size();)
                results[i] = work(batch[i]);
        };
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < std::min(workers, batch.size()); ++t)
            pool.emplace_back(run);
        run();
        pool.clear();
        for (std::size_t i = 0; i < batch.size(); ++i)
            emit(batch[i], *results[i]);
    }
}

using Parsed = std::variant<deza::Graph, std::string>;

Parsed parse_line(const Line& line)
{
    try {
        return deza::parse_graph6(line.text);
    } catch (const deza::ParseError& e) {
        return "line " + std::to_string(line.number) + ": " + e.what();
    }
}

std::vector<deza::Graph> read_all(const std::vector<std::string>& paths)
{
    std::vector<deza::Graph> out;
    for (const auto& path : paths) {
        LineReader reader(path);
        while (auto line = reader.next()) {
            auto parsed = parse_line(*line);
            if (auto* err = std::get_if<std::string>(&parsed))
                throw InputError(path + ": " + *err);
            out.push_back(std::get<deza::Graph>(std::move(parsed)));
        }
    }
    return out;
}

std::string source_name(const std::string& path, const Line& line)
{
    return (path == "-" ? std::string("stdin") : path) + ":" + std::to_string(line.number);
}

int cmd_analyze(const std::string& path, const Options& opt)
{
    std::optional<json> expected;
    if (! opt.expect.empty()) {
        std::ifstream in(opt.expect);
        if (! in)
            throw InputError("cannot open " + opt.expect);
        try {
            expected = json::parse(in);
        } catch (const json::exception& e) {
            throw InputError(opt.expect + ": " + e.what());
        }
    }

    Sink sink(opt.output);
    LineReader reader(path);
    bool input_error = false, verification_failure = false;
    std::size_t index = 0;
    json all = json::array();

    using Result = std::variant<deza::AnalysisReport, std::string>;
    process_ordered<Result>(
        reader,
        [&](const Line& line) -> Result {
            auto parsed = parse_line(line);
            if (auto* err = std::get_if<std::string>(&parsed))
                return *err;
            try {
                return deza::analyze(std::get<deza::Graph>(parsed), source_name(path, line));
            } catch (const std::exception& e) {
                return "line " + std::to_string(line.number) + ": " + e.what();
            }
        },
        [&](const Line&, Result& result) {
            if (auto* err = std::get_if<std::string>(&result)) {
                std::cerr << "error: " << *err << "\n";
                input_error = true;
                return;
            }
            const auto& report = std::get<deza::AnalysisReport>(result);
            json j = deza::to_json(report);
            if (! report.inconsistencies.empty())
                verification_failure = true;
            if (expected) {
                const json* want = nullptr;
                if (expected->is_array()) {
                    if (index < expected->size())
                        want = &(*expected)[index];
                } else {
                    want = &*expected;
                }
                std::vector<std::string> mismatches;
                if (! want)
                    mismatches.push_back("no expectation record");
                else
                    deza::json_subset_match(*want, j, mismatches);
                for (const auto& m : mismatches)
                    std::cerr << report.source << ": expectation mismatch " << m << "\n";
                if (! mismatches.empty())
                    verification_failure = true;
            }
            ++index;
            if (opt.json)
                all.push_back(std::move(j));
            else
                sink.out() << deza::render_text(report);
        });

    if (opt.json)
        sink.out() << all.dump(2) << "\n";
    if (input_error)
        return kExitInput;
    return verification_failure ? kExitVerification : kExitOk;
}

deza::Graph construct(const std::string& family, const std::vector<int>& args)
{
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw UsageError(family + " takes " + std::to_string(n) + " integer argument" + (n == 1 ? "" : "s"));
    };
    if (family == "complete") {
        need(1);
        return deza::complete_graph(args[0]);
    }
    if (family == "cycle") {
        need(1);
        return deza::cycle_graph(args[0]);
    }
    if (family == "cliques") {
        need(2);
        return deza::disjoint_cliques(args[0], args[1]);
    }
    if (family == "multipartite")
        return deza::complete_multipartite(args);
    if (family == "kneser") {
        need(2);
        return deza::kneser(args[0], args[1]);
    }
    if (family == "petersen") {
        need(0);
        return deza::petersen();
    }
    if (family == "johnson") {
        need(2);
        return deza::johnson(args[0], args[1]);
    }
    if (family == "hamming") {
        need(2);
        return deza::hamming(args[0], args[1]);
    }
    if (family == "icosahedron") {
        need(0);
        return deza::icosahedron();
    }
    if (family == "paley") {
        need(1);
        return deza::paley(args[0]);
    }
    if (family == "taylor-paley") {
        need(1);
        return deza::taylor_double_cover(deza::paley(args[0]));
    }
    if (family == "heawood") {
        need(0);
        return deza::heawood();
    }
    if (family == "design") {
        if (args.size() < 2)
            throw UsageError("design takes v followed by the difference set");
        return deza::symmetric_design_incidence(args[0], std::span(args).subspan(1));
    }
    if (family == "octahedron-line-graph") {
        need(0);
        const int parts[] = {2, 2, 2};
        return deza::line_graph(deza::complete_multipartite(parts));
    }
    if (family == "petersen-line-graph") {
        need(0);
        return deza::line_graph(deza::petersen());
    }
    throw UsageError("unknown family '" + family + "'");
}

int cmd_construct(const std::string& family, const std::vector<std::string>& raw, const Options& opt)
{
    if (family == "bundled") {
        if (raw.size() != 1)
            throw UsageError("bundled takes a catalog name");
        deza::Graph g = [&] {
            try {
                return deza::bundled_graph(raw[0]);
            } catch (const deza::PreconditionError& e) {
                throw UsageError(e.what());
            }
        }();
        Sink(opt.output).out() << deza::write_graph6(g) << "\n";
        return kExitOk;
    }
    std::vector<int> args;
    for (const auto& s : raw) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty())
            throw UsageError("'" + s + "' is not an integer");
        args.push_back(v);
    }
    deza::Graph g = [&] {
        try {
            return construct(family, args);
        } catch (const deza::Error& e) {
            throw UsageError(e.what());
        }
    }();
    Sink(opt.output).out() << deza::write_graph6(g) << "\n";
    return kExitOk;
}

int cmd_verify_paper(const Options& opt)
{
    auto result = deza::verify_paper();
    Sink sink(opt.output);
    if (opt.json) {
        json rows = json::array();
        for (const auto& r : result.rows)
            rows.push_back({{"group", r.group}, {"check", r.check}, {"expected", r.expected}, {"actual", r.actual},
                {"pass", r.pass}});
        sink.out() << json{{"rows", rows}, {"operations", result.operations}, {"pass", result.all_pass()}}.dump(2)
                   << "\n";
    } else {
        std::size_t failed = 0;
        for (const auto& r : result.rows) {
            sink.out() << (r.pass ? "PASS" : "FAIL") << "  " << r.group << " | " << r.check << " | expected "
                       << r.expected << " | actual " << r.actual << "\n";
            failed += ! r.pass;
        }
        sink.out() << result.rows.size() - failed << "/" << result.rows.size() << " checks passed\n";
    }
    return result.all_pass() ? kExitOk : kExitVerification;
}

int cmd_filter(const std::string& path, const std::string& predicate, const Options& opt)
{
    static const std::set<std::string> predicates{"deza", "strongly-deza", "ddg", "drg"};
    if (! predicates.count(predicate))
        throw UsageError("unknown predicate '" + predicate + "'");

    Sink sink(opt.output);
    LineReader reader(path);
    std::map<std::string, std::size_t> tally;
    std::size_t read = 0, matched = 0, skipped = 0;
    bool aborted = false;

    // Empty key: no match. Otherwise the parameter tuple to tally.
    using Result = std::variant<std::string, deza::ParseError>;
    process_ordered<Result>(
        reader,
        [&](const Line& line) -> Result {
            deza::Graph g(1);
            try {
                g = deza::parse_graph6(line.text);
            } catch (const deza::ParseError& e) {
                return e;
            }
            if (predicate == "deza") {
                auto p = deza::detect_deza(g);
                return p ? p->to_string() : "";
            }
            if (predicate == "strongly-deza") {
                auto v = deza::is_strongly_deza(g);
                return v.verdict ? v.params->to_string() : "";
            }
            if (predicate == "ddg") {
                auto p = deza::is_divisible_design(g);
                return p ? p->to_string() : "";
            }
            if (! deza::distance_data(g).connected())
                return std::string();
            auto ia = deza::intersection_array(g).array;
            return ia ? ia->to_string() : "";
        },
        [&](const Line& line, Result& result) {
            if (aborted)
                return;
            if (auto* err = std::get_if<deza::ParseError>(&result)) {
                std::cerr << (opt.strict ? "error" : "warning") << ": line " << line.number << ": " << err->what()
                          << "\n";
                ++skipped;
                aborted = opt.strict;
                return;
            }
            ++read;
            const auto& key = std::get<std::string>(result);
            if (key.empty())
                return;
            ++matched;
            ++tally[key];
            sink.out() << line.text << "\n";
        });

    std::cerr << read << " graphs read, " << matched << " matched " << predicate;
    if (skipped)
        std::cerr << ", " << skipped << " skipped";
    std::cerr << "\n";
    for (const auto& [key, count] : tally)
        std::cerr << "  " << key << ": " << count << "\n";
    return aborted ? kExitInput : kExitOk;
}

int cmd_spectrum(const std::string& path, const Options& opt)
{
    Sink sink(opt.output);
    json all = json::array();
    bool failed = false;
    for (const auto& g : read_all({path})) {
        auto cp = deza::char_poly(g);
        json j{{"graph6", deza::write_graph6(g)}, {"char_poly", cp.poly.to_string()}};
        try {
            auto s = deza::exact_spectrum(g);
            j["spectrum"] = deza::spectrum_to_json(s);
            j["spectrum_text"] = s.to_string();
        } catch (const deza::NonQuadraticSpectrum& e) {
            j["error"] = e.what();
            failed = true;
        }
        if (opt.json)
            all.push_back(j);
        else
            sink.out() << j["graph6"].get<std::string>() << "  "
                       << (j.contains("error") ? j["error"] : j["spectrum_text"]).get<std::string>() << "\n";
    }
    if (opt.json)
        sink.out() << all.dump(2) << "\n";
    return failed ? kExitVerification : kExitOk;
}

int cmd_children(const std::string& path, const Options& opt)
{
    Sink sink(opt.output);
    json all = json::array();
    bool failed = false;
    for (const auto& g : read_all({path})) {
        auto p = deza::detect_deza(g);
        if (! p) {
            std::cerr << deza::write_graph6(g) << ": not a Deza graph\n";
            failed = true;
            continue;
        }
        auto ch = deza::children(g, *p);
        auto srg = [](const deza::Graph& h) {
            auto s = deza::detect_srg(h);
            return s ? s->to_string() : std::string("-");
        };
        if (opt.json) {
            all.push_back({{"graph6", deza::write_graph6(g)}, {"params", p->to_string()},
                {"a", deza::write_graph6(ch.a)}, {"b", deza::write_graph6(ch.b)}, {"a_srg", srg(ch.a)},
                {"b_srg", srg(ch.b)}});
        } else {
            sink.out() << "# " << deza::write_graph6(g) << " " << p->to_string() << "\n"
                       << deza::write_graph6(ch.a) << "  A " << srg(ch.a) << "\n"
                       << deza::write_graph6(ch.b) << "  B " << srg(ch.b) << "\n";
        }
    }
    if (opt.json)
        sink.out() << all.dump(2) << "\n";
    return failed ? kExitVerification : kExitOk;
}

int cmd_cospectral(const std::vector<std::string>& paths, const Options& opt)
{
    auto graphs = read_all(paths);
    if (graphs.size() != 2)
        throw UsageError("cospectral needs exactly two graphs, got " + std::to_string(graphs.size()));
    const auto s1 = deza::exact_spectrum(graphs[0]), s2 = deza::exact_spectrum(graphs[1]);
    const bool same = deza::is_cospectral(s1, s2);
    json j{{"cospectral", same}, {"first", s1.to_string()}, {"second", s2.to_string()}};
    if (same) {
        try {
            auto c = deza::cosp_deza_check(graphs[0], graphs[1]);
            j["deza_case"] = c.label;
            j["first_params"] = c.first.to_string();
            j["second_params"] = c.second.to_string();
        } catch (const deza::PreconditionError& e) {
            j["deza_case"] = std::string("not applicable: ") + e.what();
        }
    }
    Sink sink(opt.output);
    if (opt.json) {
        sink.out() << j.dump(2) << "\n";
    } else {
        sink.out() << (same ? "cospectral" : "not cospectral") << "\n  " << s1.to_string() << "\n  " << s2.to_string()
                   << "\n";
        if (j.contains("deza_case"))
            sink.out() << "  " << j["deza_case"].get<std::string>() << "\n";
    }
    return same ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact spectral analysis of Deza graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON");
    app.add_flag("--strict", opt.strict, "Stop at the first malformed line");
    app.add_option("--expect", opt.expect, "Expectation record for analyze");
    app.add_option("-o,--output", opt.output, "Write output to PATH");

    std::string path, family, predicate;
    std::vector<std::string> rest, paths;

    auto* analyze = app.add_subcommand("analyze", "Report on every graph6 line of a file");
    analyze->add_option("file", path, "graph6 file, - for standard input")->required();

    auto* construct = app.add_subcommand("construct", "Write a named graph as graph6");
    construct->add_option("family", family, "Family name")->required();
    construct->add_option("args", rest, "Family arguments");

    auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks");

    auto* filter = app.add_subcommand("filter", "Pass through graphs satisfying a predicate");
    filter->add_option("file", path, "graph6 file, - for standard input")->required();
    filter->add_option("predicate", predicate, "deza, strongly-deza, ddg or drg")->required();

    auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum of every graph in a file");
    spectrum->add_option("file", path, "graph6 file")->required();

    auto* kids = app.add_subcommand("children", "Children of every Deza graph in a file");
    kids->add_option("file", path, "graph6 file")->required();

    auto* cosp = app.add_subcommand("cospectral", "Compare the spectra of two graphs");
    cosp->add_option("files", paths, "One file with two graphs, or two files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze)
            return cmd_analyze(path, opt);
        if (*construct)
            return cmd_construct(family, rest, opt);
        if (*verify)
            return cmd_verify_paper(opt);
        if (*filter)
            return cmd_filter(path, predicate, opt);
        if (*spectrum)
            return cmd_spectrum(path, opt);
        if (*kids)
            return cmd_children(path, opt);
        if (*cosp)
            return cmd_cospectral(paths, opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const deza::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
