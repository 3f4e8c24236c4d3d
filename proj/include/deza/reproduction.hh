#pragma once

#include <set>
#include <string>
#include <vector>

namespace deza {

struct CheckRow {
    std::string group;
    std::string check;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct Reproduction {
    std::vector<CheckRow> rows;
    /// Library operations invoked while producing the rows.
    std::set<std::string> operations;

    bool all_pass() const;
};

/// Rebuilds the named graphs and families, runs every verifier on them and
/// compares against the published values.
Reproduction verify_paper();

} // namespace deza
