#pragma once

#include <cstdint>
#include <cstdio>
#include <span>
#include <string>
#include <string_view>

#include "rank6/graph.hpp"
#include "rank6/graph6.hpp"

namespace rank6 {

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits. Platform independent.
inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Content hash of an ordered list of graphs (their graph6 lines).
inline std::string graph_list_hash(std::span<const Graph> graphs) {
  std::string text;
  for (const Graph& g : graphs) {
    text += write_graph6(g);
    text += '\n';
  }
  return fnv1a_hex(text);
}

}  // namespace rank6
