#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rank6/atlas.hpp"
#include "rank6/exact_rank.hpp"
#include "rank6/graph6.hpp"
#include "rank6/transform.hpp"

namespace rank6 {

namespace {

constexpr std::string_view kFormat = "rank6-atlas/1";

[[noreturn]] void fail(int line, const std::string& what) {
  throw AtlasFormatError(line > 0 ? "atlas line " + std::to_string(line) + ": " + what : "atlas: " + what);
}

bool parse_flag(const std::string& field, int line, std::string_view name) {
  if (field == "0") return false;
  if (field == "1") return true;
  fail(line, std::string(name) + " field must be 0 or 1, got '" + field + "'");
}

int parse_int(const std::string& field, int line, std::string_view name) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) fail(line, std::string(name) + " field is not an integer: '" + field + "'");
  return value;
}

bool is_hex16(const std::string& s) {
  return s.size() == 16 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

void validate(const Atlas& atlas) {
  const std::vector<Graph> members = atlas.reduced_connected();
  const std::vector<Graph> flagged = atlas.hosts();
  for (std::size_t i = 0; i < flagged.size(); ++i) {
    for (std::size_t j = 0; j < flagged.size(); ++j) {
      if (i != j && find_induced_embedding(flagged[i], flagged[j])) {
        fail(0, "host " + write_graph6(flagged[i]) + " embeds in host " + write_graph6(flagged[j]));
      }
    }
  }
  for (const Graph& m : members) {
    const bool covered = std::any_of(flagged.begin(), flagged.end(),
                                     [&](const Graph& h) { return find_induced_embedding(m, h).has_value(); });
    if (!covered) fail(0, "reduced connected member " + write_graph6(m) + " embeds in no host");
  }
  if (maximal_elements(members) != flagged) fail(0, "host flags differ from the maximal reduced connected members");
}

}  // namespace

void save_atlas(const Atlas& atlas, std::ostream& out) {
  out << "#format " << kFormat << '\n';
  out << "#max_order " << atlas.provenance.max_order << '\n';
  out << "#seed_catalog_hash " << atlas.provenance.seed_catalog_hash << '\n';
  for (const AtlasEntry& e : atlas.entries) {
    out << e.key.str() << '\t' << e.order() << '\t' << e.rank << '\t' << (e.reduced ? 1 : 0) << '\t'
        << (e.connected ? 1 : 0) << '\t' << (e.host ? 1 : 0) << '\n';
  }
}

void save_atlas(const Atlas& atlas, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  save_atlas(atlas, out);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Atlas load_atlas(std::istream& in) {
  Atlas atlas;
  bool saw_format = false, saw_max = false, saw_hash = false;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    if (text[0] == '#') {
      std::istringstream hdr(text.substr(1));
      std::string key, value;
      hdr >> key >> value;
      if (key == "format") {
        if (value != kFormat) fail(line, "unsupported format '" + value + "'");
        saw_format = true;
      } else if (key == "max_order") {
        atlas.provenance.max_order = parse_int(value, line, "max_order");
        saw_max = true;
      } else if (key == "seed_catalog_hash") {
        if (!is_hex16(value)) fail(line, "seed_catalog_hash must be 16 hex digits");
        atlas.provenance.seed_catalog_hash = value;
        saw_hash = true;
      } else {
        fail(line, "unknown header '" + key + "'");
      }
      continue;
    }

    std::vector<std::string> fields;
    std::istringstream row(text);
    for (std::string f; std::getline(row, f, '\t');) fields.push_back(f);
    if (fields.size() != 6) fail(line, "expected 6 tab-separated fields, got " + std::to_string(fields.size()));

    AtlasEntry e;
    try {
      e.graph = parse_graph6(fields[0]);
    } catch (const Graph6Error& err) {
      fail(line, err.what());
    }
    if (e.graph.order() > kMaxCanonicalOrder) fail(line, "order above 14");
    e.key = CanonicalKey(fields[0]);
    if (parse_int(fields[1], line, "order") != e.graph.order()) fail(line, "order field disagrees with graph6");
    e.rank = parse_int(fields[2], line, "rank");
    e.reduced = parse_flag(fields[3], line, "reduced");
    e.connected = parse_flag(fields[4], line, "connected");
    e.host = parse_flag(fields[5], line, "host");

    if (canonical_key(e.graph) != e.key) fail(line, "graph is not in canonical labeling");
    if (!is_triangle_free(e.graph)) fail(line, "graph has a triangle");
    const int rank = rank_of(e.graph);
    if (rank != e.rank) fail(line, "rank field " + std::to_string(e.rank) + " but elimination gives " + std::to_string(rank));
    if (rank != 6) fail(line, "member has rank " + std::to_string(rank) + ", not 6");
    if (is_reduced(e.graph) != e.reduced) fail(line, "reduced flag is wrong");
    if (e.graph.order() == 0 || is_connected(e.graph) != e.connected) fail(line, "connected flag is wrong");
    if (e.host && !(e.reduced && e.connected)) fail(line, "host must be reduced and connected");
    if (!atlas.entries.empty()) {
      const AtlasEntry& prev = atlas.entries.back();
      const bool ordered = prev.order() < e.order() || (prev.order() == e.order() && prev.key < e.key);
      if (!ordered) fail(line, "records not strictly sorted by (order, key)");
    }
    atlas.entries.push_back(std::move(e));
  }
  if (!saw_format || !saw_max || !saw_hash) fail(0, "missing provenance header");
  validate(atlas);
  return atlas;
}

Atlas load_atlas(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_atlas(in);
}

}  // namespace rank6
