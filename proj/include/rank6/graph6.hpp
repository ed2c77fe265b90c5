#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rank6/graph.hpp"

namespace rank6 {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated. Orders up to 64 are accepted.
Graph parse_graph6(std::string_view text);

/// Encodes g (order <= 62) under its current labeling.
std::string write_graph6(const Graph& g);

}  // namespace rank6
