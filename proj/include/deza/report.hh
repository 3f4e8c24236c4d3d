#pragma once

#include "deza/deza.hh"
#include "deza/distance_regular.hh"
#include "deza/spectrum.hh"
#include "deza/theorems.hh"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace deza {

inline constexpr const char* kReportSchema = "deza-report/1";

/// Everything the toolkit can say about one graph. Optional members are
/// absent when the corresponding notion does not apply.
struct AnalysisReport {
    std::string source;
    std::string graph6;
    int n = 0;
    std::optional<int> degree;
    bool connected = false;
    bool bipartite = false;
    std::uint64_t triangles = 0;
    int components = 0;

    std::optional<Spectrum> spectrum;
    std::optional<std::string> spectrum_error;
    int distinct_eigenvalues = 0;
    int distinct_abs_values = 0;

    std::optional<DezaParams> deza;
    std::optional<SrgParams> srg;
    bool strongly_deza = false;
    std::optional<SrgParams> child_a_srg, child_b_srg;
    std::optional<Spectrum> child_a_formula, child_a_direct;
    std::optional<Spectrum> child_b_formula, child_b_direct;
    std::optional<bool> child_spectra_match;
    std::optional<DdgParams> ddg;

    std::optional<IntersectionArray> intersection_array;
    std::optional<bool> antipodal;
    std::optional<std::string> drg_deza_case;
    std::optional<std::string> ddg_drg_case;

    /// Classifier outcomes in a fixed order: trace identity, eigenvalue
    /// count, square case, last case, singular check.
    std::vector<TheoremCase> cases;

    /// Failed identities. A consistent toolkit leaves this empty.
    std::vector<std::string> inconsistencies;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const Graph& g, std::string source = {});

nlohmann::json eigenvalue_to_json(const Eigenvalue& v, int mult);
nlohmann::json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisReport& r);

/// Every key of `expected` is present in `actual` with a matching value;
/// objects are compared recursively, everything else exactly. Mismatching
/// paths are appended to `mismatches`.
bool json_subset_match(const nlohmann::json& expected, const nlohmann::json& actual, std::vector<std::string>& mismatches,
    const std::string& path = "");

} // namespace deza
