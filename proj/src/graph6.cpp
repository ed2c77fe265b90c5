#include "rank6/graph6.hpp"

#include <string>
#include <vector>

namespace rank6 {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < kBias || value > kBias + 63) {
    throw Graph6Error("graph6 byte " + std::to_string(value) + " outside [63,126]");
  }
  return value - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("empty graph6 record");

  std::size_t pos = 0;
  int n = decode_byte(text[pos++]);
  if (n == 63) {
    if (text.size() < 4) throw Graph6Error("truncated graph6 order prefix");
    if (static_cast<unsigned char>(text[1]) == 126) throw Graph6Error("graph6 orders above 258047 unsupported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | decode_byte(text[pos++]);
    if (n > kMaxOrder) throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 64");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                      std::to_string(expected));
  }

  std::vector<int> body;
  body.reserve(expected);
  for (std::size_t i = pos; i < text.size(); ++i) body.push_back(decode_byte(text[i]));
  if (bits % 6 != 0 && (body.back() & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw Graph6Error("nonzero graph6 padding");
  }

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if ((body[k / 6] >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Graph6Error("graph6 writer supports order <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(kBias + n));
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

}  // namespace rank6
