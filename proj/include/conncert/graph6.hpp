#pragma once

#include <string>
#include <string_view>

#include "conncert/graph.hpp"

namespace conncert {

// McKay's graph6 encoding. A leading ">>graph6<<" header is accepted on input
// and trailing whitespace (including a newline) is ignored.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace conncert
