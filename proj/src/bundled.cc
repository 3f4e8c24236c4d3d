#include "deza/distance_regular.hh"
#include "deza/errors.hh"
#include "deza/families.hh"
#include "deza/graph6.hh"
#include "deza/report.hh"
#include "deza/spectrum.hh"

#include <json.hpp>

namespace deza {

namespace {
    // Klein graph: the distance-regular antipodal 3-cover of K_8 on the 24
    // cosets of a subgroup of order 7 in PSL(2,7).
    constexpr const char* kCatalog = R"json({
  "klein24": {
    "graph6": "WCeKKE@cIEJ?OWRAGFaKKSCocaPcG`PHGaWaIQOPGaXEGPQ",
    "spectrum": [
      {"p": 7, "u": 0, "d": 1, "q": 1, "mult": 1},
      {"p": 0, "u": 1, "d": 7, "q": 1, "mult": 8},
      {"p": -1, "u": 0, "d": 1, "q": 1, "mult": 7},
      {"p": 0, "u": -1, "d": 7, "q": 1, "mult": 8}
    ],
    "intersection_array": "{7,4,1;1,2,7}"
  }
})json";

    const nlohmann::json& catalog()
    {
        static const nlohmann::json c = nlohmann::json::parse(kCatalog);
        return c;
    }
}

std::vector<std::string> bundled_names()
{
    std::vector<std::string> out;
    for (const auto& [name, _] : catalog().items())
        out.push_back(name);
    return out;
}

Graph bundled_graph(const std::string& name)
{
    const auto& c = catalog();
    if (! c.contains(name))
        throw PreconditionError("unknown bundled graph '" + name + "'");
    const auto& entry = c.at(name);
    Graph g = parse_graph6(entry.at("graph6").get<std::string>());

    auto expected = spectrum_from_json(entry.at("spectrum"));
    auto actual = exact_spectrum(g);
    if (actual != expected)
        throw ContradictionError(name + ": spectrum " + actual.to_string() + ", recorded " + expected.to_string());
    auto ia = intersection_array(g).array;
    auto recorded = entry.at("intersection_array").get<std::string>();
    if (! ia || ia->to_string() != recorded)
        throw ContradictionError(name + ": intersection array differs from recorded " + recorded);
    return g;
}

} // namespace deza
