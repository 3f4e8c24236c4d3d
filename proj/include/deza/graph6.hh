#pragma once

#include "deza/graph.hh"

#include <string>
#include <string_view>

namespace deza {

/// Largest order accepted by the graph6 reader and writer.
inline constexpr int kGraph6MaxOrder = 258;

/// Parses one graph6 line. A leading ">>graph6<<" header and a trailing
/// "\n" or "\r\n" are tolerated; padding bits in the last byte are ignored.
/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, without header or newline.
std::string write_graph6(const Graph& g);

} // namespace deza
