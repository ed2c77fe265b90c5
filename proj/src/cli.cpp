#include "rank6/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "rank6/atlas.hpp"
#include "rank6/classifier.hpp"
#include "rank6/enumerate.hpp"
#include "rank6/exact_rank.hpp"
#include "rank6/graph6.hpp"
#include "rank6/transform.hpp"
#include "rank6/verify.hpp"

namespace rank6::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kSchema = "rank6.report/1";

// Bad input or usage discovered after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string label;  // graph6 text, or file name for edge lists
  Graph graph;
};

Graph read_edge_list(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open edge list " + path);
  long long n = 0;
  if (!(file >> n) || n < 0 || n > kMaxOrder) throw UsageError(path + ": first token must be an order in [0, 64]");
  Graph g(static_cast<int>(n));
  long long u = 0, v = 0;
  while (file >> u) {
    if (!(file >> v)) throw UsageError(path + ": odd number of endpoints");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw UsageError(path + ": bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!file.eof()) throw UsageError(path + ": non-numeric token");
  return g;
}

Graph parse_input(const std::string& text) {
  try {
    return parse_graph6(text);
  } catch (const Graph6Error& e) {
    throw UsageError("bad graph6 '" + text + "': " + e.what());
  }
}

std::vector<Input> collect_inputs(const std::vector<std::string>& graphs, const std::vector<std::string>& edge_files,
                                  std::istream& in) {
  std::vector<Input> out;
  for (const std::string& arg : graphs) {
    if (arg != "-") {
      out.push_back({arg, parse_input(arg)});
      continue;
    }
    for (std::string line; std::getline(in, line);) {
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      if (line.empty()) continue;
      out.push_back({line, parse_input(line)});
    }
  }
  for (const std::string& path : edge_files) out.push_back({path, read_edge_list(path)});
  if (out.empty()) throw UsageError("no input graphs");
  return out;
}

std::string label_of(const Graph& g) { return g.order() <= 62 ? write_graph6(g) : "(order " + std::to_string(g.order()) + ")"; }

std::string join(const std::vector<int>& xs, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

Json report(std::string_view command, const std::vector<Input>& inputs) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["inputs"] = Json::array();
  for (const Input& i : inputs) j["inputs"].push_back(i.label);
  return j;
}

Json report(std::string_view command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["inputs"] = Json::array();
  return j;
}

int emit(Json& j, int code, std::ostream& out) {
  j["exit_code"] = code;
  out << j.dump(2) << '\n';
  return code;
}

SeedCatalog checked_catalog(const Atlas& atlas) {
  SeedCatalog seeds = derive_seed_catalog();
  if (atlas.provenance.seed_catalog_hash != seeds.content_hash()) {
    throw UsageError("atlas was built from a different seed catalog (hash " + atlas.provenance.seed_catalog_hash + ")");
  }
  return seeds;
}

// ---- rank ---------------------------------------------------------------

int cmd_rank(const std::vector<Input>& inputs, bool trace, bool json, std::ostream& out) {
  Json j = report("rank", inputs);
  j["results"] = Json::array();
  int code = kExitOk;
  for (const Input& in : inputs) {
    const RankReport direct = adjacency_rank(in.graph);
    const RankReport peeled = pendant_reduced_rank(in.graph);
    const bool agree = direct.rank == peeled.rank;
    if (!agree) code = kExitRejected;
    Json r;
    r["graph"] = in.label;
    r["order"] = direct.order;
    r["rank"] = direct.rank;
    r["nullity"] = direct.nullity;
    if (trace) {
      r["method"] = to_string(peeled.method);
      r["trace"] = peeled.trace;
    }
    if (!agree) r["pendant_rank"] = peeled.rank;
    j["results"].push_back(r);
    if (json) continue;
    out << in.label << "\trank " << direct.rank << "\tnullity " << direct.nullity << '\n';
    if (trace) {
      out << "  method " << to_string(peeled.method) << '\n';
      for (const std::string& step : peeled.trace) out << "  " << step << '\n';
    }
    if (!agree) out << "  MISMATCH: pendant reduction gives rank " << peeled.rank << '\n';
  }
  if (json) return emit(j, code, out);
  return code;
}

// ---- reduce -------------------------------------------------------------

int cmd_reduce(const std::vector<Input>& inputs, bool json, std::ostream& out) {
  Json j = report("reduce", inputs);
  j["results"] = Json::array();
  for (const Input& in : inputs) {
    const ReductionResult r = reduced_form(in.graph);
    Json e;
    e["graph"] = in.label;
    e["reduced"] = label_of(r.reduced);
    e["multiplicities"] = r.multiplicities.values();
    e["class_of"] = r.class_of;
    j["results"].push_back(e);
    if (!json) out << in.label << "\t" << label_of(r.reduced) << "\t" << join(r.multiplicities.values()) << '\n';
  }
  if (json) return emit(j, kExitOk, out);
  return kExitOk;
}

// ---- classify -----------------------------------------------------------

struct Classified {
  std::optional<Classification> result;
  std::optional<CertificateCheck> check;
  std::string error;  // input-specific failure (empty graph, falsification)
};

Json rejection_json(const Rejection& r) {
  Json j;
  j["status"] = "rejected";
  j["reason"] = to_string(r.reason);
  switch (r.reason) {
    case RejectReason::not_connected: {
      Json comps = Json::array();
      for (VertexSet c : r.components) comps.push_back(c.to_vector());
      j["components"] = comps;
      break;
    }
    case RejectReason::has_triangle: j["triangle"] = r.triangle; break;
    default: j["rank"] = r.rank; break;
  }
  return j;
}

std::string rejection_text(const Rejection& r) {
  std::string s = "rejected " + std::string(to_string(r.reason));
  switch (r.reason) {
    case RejectReason::not_connected: {
      s += " components";
      for (VertexSet c : r.components) s += " {" + join(c.to_vector()) + "}";
      return s;
    }
    case RejectReason::has_triangle:
      return s + " triangle " + join({r.triangle.begin(), r.triangle.end()});
    default:
      return s + " rank " + std::to_string(r.rank);
  }
}

int cmd_classify(const std::vector<Input>& inputs, const std::string& atlas_path, int threads, bool json,
                 std::ostream& out, std::ostream& err) {
  const Atlas atlas = load_atlas(std::filesystem::path(atlas_path));
  const SeedCatalog seeds = checked_catalog(atlas);
  const std::vector<Graph> hosts = atlas.hosts();

  std::vector<Classified> results(inputs.size());
  auto work = [&](std::size_t t, std::size_t stride) {
    for (std::size_t i = t; i < inputs.size(); i += stride) {
      try {
        results[i].result = classify(inputs[i].graph, seeds, hosts);
        if (const auto* c = std::get_if<ClassificationCertificate>(&*results[i].result)) {
          results[i].check = validate_certificate(inputs[i].graph, *c, seeds, hosts);
        }
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, inputs.size()));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  Json j = report("classify", inputs);
  j["results"] = Json::array();
  int code = kExitOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Classified& c = results[i];
    Json e;
    e["graph"] = inputs[i].label;
    if (!c.error.empty()) {
      code = kExitRejected;
      e["status"] = "error";
      e["error"] = c.error;
      if (!json) err << inputs[i].label << ": " << c.error << '\n';
    } else if (const auto* r = std::get_if<Rejection>(&*c.result)) {
      code = kExitRejected;
      e.update(rejection_json(*r));
      if (!json) out << inputs[i].label << "\t" << rejection_text(*r) << '\n';
    } else {
      const auto& cert = std::get<ClassificationCertificate>(*c.result);
      if (!c.check->valid) code = kExitRejected;
      e["status"] = "certified";
      e["reduced"] = write_graph6(cert.reduced_graph);
      e["multiplicities"] = cert.multiplicities.values();
      e["seed"] = {{"index", cert.seed_index}, {"label", seeds.labels[cert.seed_index]}, {"embedding", cert.seed_embedding.map}};
      e["host"] = {{"index", cert.host_index}, {"graph6", write_graph6(hosts[cert.host_index])}, {"embedding", cert.host_embedding.map}};
      e["catalog_hash"] = cert.catalog_hash;
      e["hosts_hash"] = cert.hosts_hash;
      e["valid"] = c.check->valid;
      e["invalid_reasons"] = c.check->reasons;
      if (!json) {
        out << inputs[i].label << "\trank 6\treduced " << write_graph6(cert.reduced_graph) << "\tmult "
            << join(cert.multiplicities.values()) << "\tseed " << seeds.labels[cert.seed_index] << " ["
            << join(cert.seed_embedding.map) << "]\thost " << cert.host_index << " ["
            << join(cert.host_embedding.map) << "]" << (c.check->valid ? "" : "\tINVALID") << '\n';
        for (const std::string& why : c.check->reasons) out << "  " << why << '\n';
      }
    }
    j["results"].push_back(e);
  }
  if (json) return emit(j, code, out);
  return code;
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(int n, const std::string& family, bool json, std::ostream& out) {
  std::vector<Graph> graphs;
  try {
    if (family == "trees") graphs = enumerate_trees(n);
    else if (family == "triangle-free") graphs = enumerate_triangle_free(n);
    else if (family == "bipartite") graphs = enumerate_bipartite(n);
    else if (family == "all") graphs = enumerate_all_graphs(n);
    else throw UsageError("unknown family '" + family + "'");
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    Json j = report("enumerate");
    j["results"] = {{"order", n}, {"family", family}, {"count", graphs.size()}, {"graphs", Json::array()}};
    for (const Graph& g : graphs) j["results"]["graphs"].push_back(write_graph6(g));
    return emit(j, kExitOk, out);
  }
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
  return kExitOk;
}

// ---- atlas --------------------------------------------------------------

Json atlas_summary(const Atlas& atlas) {
  std::map<int, int> per_order;
  for (const AtlasEntry& e : atlas.entries) ++per_order[e.order()];
  Json counts = Json::object();
  for (auto [order, count] : per_order) counts[std::to_string(order)] = count;
  Json hosts = Json::array();
  for (const Graph& h : atlas.hosts()) hosts.push_back(write_graph6(h));
  return {{"max_order", atlas.provenance.max_order},
          {"seed_catalog_hash", atlas.provenance.seed_catalog_hash},
          {"members", atlas.entries.size()},
          {"reduced_connected", atlas.reduced_connected().size()},
          {"members_by_order", counts},
          {"host_count", hosts.size()},
          {"hosts", hosts}};
}

void print_summary(const Json& s, std::ostream& out) {
  out << "members " << s["members"].get<std::size_t>() << " (reduced connected "
      << s["reduced_connected"].get<std::size_t>() << ")\n";
  out << "by order";
  for (const auto& [order, count] : s["members_by_order"].items()) out << ' ' << order << ':' << count.get<int>();
  out << '\n';
  out << "hosts " << s["host_count"].get<std::size_t>() << '\n';
  for (const auto& h : s["hosts"]) out << "  " << h.get<std::string>() << '\n';
}

int cmd_atlas_build(int max_order, const std::string& path, int threads, bool json, std::ostream& out,
                    std::ostream& err) {
  const SeedCatalog seeds = derive_seed_catalog();
  Atlas atlas;
  try {
    atlas = build_rank6_atlas(seeds, {max_order, threads});
  } catch (const SearchNotClosed& e) {
    err << "rank6: " << e.what() << '\n';
    Json j = report("atlas build");
    j["results"] = {{"error", e.what()}};
    if (json) return emit(j, kExitRejected, out);
    return kExitRejected;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!path.empty()) save_atlas(atlas, std::filesystem::path(path));
  const Json summary = atlas_summary(atlas);
  if (json) {
    Json j = report("atlas build");
    j["results"] = summary;
    return emit(j, kExitOk, out);
  }
  if (path.empty()) save_atlas(atlas, out);
  else print_summary(summary, out);
  return kExitOk;
}

int cmd_atlas_show(const std::string& path, bool json, std::ostream& out) {
  const Atlas atlas = load_atlas(std::filesystem::path(path));
  const Json summary = atlas_summary(atlas);
  if (json) {
    Json j = report("atlas show");
    j["results"] = summary;
    return emit(j, kExitOk, out);
  }
  print_summary(summary, out);
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& ids, bool all, const std::string& atlas_path, int cross_order,
               int threads, bool timings, bool json, std::ostream& out) {
  if (all == !ids.empty()) throw UsageError("give check ids or --all, not both or neither");
  if (cross_order < 1 || cross_order > 9) throw UsageError("--cross-check-order must lie in [1, 9]");
  const SeedCatalog seeds = derive_seed_catalog();
  const Atlas atlas = atlas_path.empty() ? build_rank6_atlas(seeds, {kMaxCanonicalOrder, threads})
                                         : load_atlas(std::filesystem::path(atlas_path));
  if (!atlas_path.empty()) checked_catalog(atlas);
  const VerifyContext ctx{seeds, atlas, cross_order};
  VerificationReport rep;
  try {
    rep = run_checks(ctx, ids);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int code = rep.passed() ? kExitOk : kExitRejected;

  if (json) {
    Json j = report("verify");
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
      Json e = {{"id", c.id},
                {"statement", c.statement},
                {"instances", c.instances},
                {"passed", c.passed},
                {"counterexamples", c.counterexamples},
                {"note", c.note}};
      if (timings) e["wall_ms"] = c.wall_ms;
      checks.push_back(e);
    }
    j["results"] = {{"passed", rep.passed()}, {"checks", checks}};
    return emit(j, code, out);
  }
  std::size_t passed = 0;
  for (const CheckResult& c : rep.checks) {
    passed += c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.id << "  instances " << c.instances;
    if (timings) {
      std::ostringstream ms;
      ms.precision(1);
      ms << std::fixed << c.wall_ms;
      out << "  " << ms.str() << " ms";
    }
    out << "\n  " << c.statement << '\n';
    if (!c.note.empty()) out << "  note: " << c.note << '\n';
    for (const std::string& ce : c.counterexamples) out << "  counterexample " << ce << '\n';
  }
  out << passed << "/" << rep.checks.size() << " checks passed\n";
  return code;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rank, reduction and rank-6 classification of triangle-free graphs", "rank6"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report on stdout");

  std::vector<std::string> graphs, edge_files;
  auto add_graph_inputs = [&](CLI::App* sub) {
    sub->add_option("graphs", graphs, "graph6 strings, or - to read one per line from stdin");
    sub->add_option("--edges", edge_files, "Edge-list file: order on the first line, then u v pairs");
  };

  bool trace = false;
  auto* rank = app.add_subcommand("rank", "Rank and nullity of the adjacency matrix");
  add_graph_inputs(rank);
  rank->add_flag("--trace", trace, "Show the pendant-peeling steps");

  auto* reduce = app.add_subcommand("reduce", "Quotient by equal neighborhoods");
  add_graph_inputs(reduce);

  std::string atlas_path;
  int threads = 1;
  auto* classify_cmd = app.add_subcommand("classify", "Certify or reject rank 6");
  add_graph_inputs(classify_cmd);
  classify_cmd->add_option("--atlas", atlas_path, "Atlas file")->required();
  classify_cmd->add_option("--threads", threads, "Worker count")->check(CLI::Range(1, 256));

  int n = 0;
  std::string family = "triangle-free";
  auto* enumerate = app.add_subcommand("enumerate", "List graphs of order n up to isomorphism");
  enumerate->add_option("n", n, "Order")->required();
  enumerate->add_option("--family", family, "triangle-free | bipartite | trees | all");

  auto* atlas_cmd = app.add_subcommand("atlas", "Build or inspect the rank-6 atlas");
  atlas_cmd->require_subcommand(1);
  int max_order = kMaxCanonicalOrder;
  std::string output;
  auto* build = atlas_cmd->add_subcommand("build", "Closure search from the seed catalog");
  build->add_option("--max-order", max_order, "Largest order searched");
  build->add_option("-o,--output", output, "Atlas file to write (stdout when omitted)");
  build->add_option("--threads", threads, "Worker count")->check(CLI::Range(1, 256));
  std::string show_path;
  auto* show = atlas_cmd->add_subcommand("show", "Summarise an atlas file");
  show->add_option("file", show_path, "Atlas file")->required();

  std::vector<std::string> ids;
  bool all = false, timings = false;
  int cross_order = 9;
  auto* verify = app.add_subcommand("verify", "Run lemma and theorem checks");
  verify->add_option("ids", ids, "Check ids");
  verify->add_flag("--all", all, "Run every check");
  verify->add_option("--atlas", atlas_path, "Use this atlas instead of building one");
  verify->add_option("--cross-check-order", cross_order, "Order bound for the independent enumeration");
  verify->add_option("--threads", threads, "Worker count for the atlas build")->check(CLI::Range(1, 256));
  verify->add_flag("--timings", timings, "Report wall time per check");

  for (auto* sub : {rank, reduce, classify_cmd, enumerate, verify, build, show}) sub->add_flag("--json", json, "Machine-readable report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rank) return cmd_rank(collect_inputs(graphs, edge_files, in), trace, json, out);
    if (*reduce) return cmd_reduce(collect_inputs(graphs, edge_files, in), json, out);
    if (*classify_cmd) return cmd_classify(collect_inputs(graphs, edge_files, in), atlas_path, threads, json, out, err);
    if (*enumerate) return cmd_enumerate(n, family, json, out);
    if (*build) return cmd_atlas_build(max_order, output, threads, json, out, err);
    if (*show) return cmd_atlas_show(show_path, json, out);
    if (*verify) return cmd_verify(ids, all, atlas_path, cross_order, threads, timings, json, out);
  } catch (const UsageError& e) {
    err << "rank6: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AtlasFormatError& e) {
    err << "rank6: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TheoremFalsified& e) {
    err << "rank6: theorem falsified: " << e.what() << '\n';
    return kExitRejected;
  } catch (const std::runtime_error& e) {
    err << "rank6: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rank6::cli
