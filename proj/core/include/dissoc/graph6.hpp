#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dissoc/graph.hpp"

namespace dissoc {

/// graph6 text for g, without a trailing newline.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line. A trailing '\n' or '\r\n' is accepted; an optional
/// ">>graph6<<" prefix is skipped. Throws MalformedInput on bad bytes or a
/// length that does not match the header.
Graph from_graph6(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace dissoc
