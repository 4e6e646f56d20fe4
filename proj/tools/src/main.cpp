#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avoid/bounds.hpp"
#include "avoid/census.hpp"
#include "avoid/constructions.hpp"
#include "avoid/families.hpp"
#include "avoid/graph6.hpp"
#include "avoid/search.hpp"
#include "inputs.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace avoid::cli {
namespace {

struct Knobs {
  std::string graph;
  std::string family;
  std::uint64_t budget = 0;
  bool budget_set = false;
  int threads = 0;
};

void add_graph_options(CLI::App* cmd, Knobs& k) {
  cmd->add_option("-g,--graph", k.graph, "g6:<graph6>, file:<path>, fig:<key> or a family spec");
  cmd->add_option("-f,--family", k.family, "family spec, e.g. circulant(13;1,3)");
}

void add_search_options(CLI::App* cmd, Knobs& k) {
  cmd->add_option_function<std::uint64_t>(
      "--budget",
      [&k](std::uint64_t b) {
        k.budget = b;
        k.budget_set = true;
      },
      "node budget per search (0 = unlimited; default from AVOID_NODE_BUDGET)");
  cmd->add_option("--threads", k.threads, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

Graph input_graph(const Knobs& k) {
  if (!k.graph.empty() && !k.family.empty()) throw InputError("give either --graph or --family, not both");
  if (!k.family.empty()) return load_graph("family:" + k.family);
  if (k.graph.empty()) throw InputError("no input graph (use --graph or --family)");
  return load_graph(k.graph);
}

SearchOptions search_options(const Knobs& k) {
  SearchOptions o;
  o.node_budget = k.budget_set ? k.budget : default_budget();
  o.threads = k.threads;
  return o;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_outputs(const std::string& dir, const Graph& g, const std::vector<AvoidanceCertificate>& certs,
                   const std::string& report) {
  fs::create_directories(dir);
  write_file((fs::path(dir) / "graph.g6").string(), graph6_encode(g) + "\n");
  for (const AvoidanceCertificate& c : certs) {
    write_file((fs::path(dir) / ("circuits_" + std::to_string(c.start) + ".txt")).string(),
               serialize_circuits(c.circuits));
  }
  write_file((fs::path(dir) / "report.json").string(), report);
}

// Prints the report and returns 2 when any certificate fails the validator.
int emit_certificates(const std::string& name, const Graph& g, const std::vector<AvoidanceCertificate>& certs,
                      const std::string& out_dir, double seconds) {
  json list = json::array();
  bool all_ok = true;
  for (const AvoidanceCertificate& c : certs) {
    json entry = certificate_json(g, c);
    all_ok = all_ok && entry["mutually_avoiding"].get<bool>();
    list.push_back(std::move(entry));
  }
  const std::string report =
      render({{"name", name}, {"graph", graph_json(g)}, {"certificates", list}, {"verified", all_ok}},
             {{"seconds", seconds}});
  std::cout << report;
  if (!out_dir.empty()) write_outputs(out_dir, g, certs, report);
  return all_ok ? ok : verification_failed;
}

// ---------------------------------------------------------------------------

int run_index(const Knobs& k, int vertex, const std::string& emit_dir) {
  const Graph g = input_graph(k);
  const SearchOptions o = search_options(k);
  const auto t0 = std::chrono::steady_clock::now();
  if (vertex >= 0) {
    if (vertex >= g.order()) throw InputError("--vertex out of range");
    const VertexResult r = av_vertex(g, vertex, o);
    const std::string report = render({{"graph", graph_json(g)},
                                       {"vertex", r.v},
                                       {"av", r.av},
                                       {"resolved", r.resolved},
                                       {"certificate", certificate_json(g, r.certificate)}},
                                      {{"seconds", since(t0)}, {"nodes", r.nodes}});
    std::cout << report;
    if (!emit_dir.empty()) write_outputs(emit_dir, g, {r.certificate}, report);
    return r.resolved ? ok : unresolved;
  }
  const SearchReport r = av_graph(g, o);
  json per = json::array();
  json nodes = json::array();
  std::vector<AvoidanceCertificate> certs;
  for (const VertexResult& v : r.per_vertex) {
    per.push_back({{"vertex", v.v}, {"av", v.av}, {"resolved", v.resolved}});
    nodes.push_back(v.nodes);
    certs.push_back(v.certificate);
  }
  const std::string report = render({{"graph", graph_json(g)},
                                     {"av", r.av},
                                     {"resolved", r.resolved},
                                     {"mean", {{"num", r.mean.num}, {"den", r.mean.den}}},
                                     {"ceiling", r.bounds.ceiling},
                                     {"per_vertex", per}},
                                    {{"seconds", since(t0)}, {"nodes", r.nodes}, {"nodes_per_vertex", nodes}});
  std::cout << report;
  if (!emit_dir.empty()) write_outputs(emit_dir, g, certs, report);
  return r.resolved ? ok : unresolved;
}

int run_bounds(const Knobs& k) {
  const Graph g = input_graph(k);
  const auto t0 = std::chrono::steady_clock::now();
  const BoundReport b = bounds(g);
  std::cout << render({{"graph", graph_json(g)}, {"bounds", bounds_json(b)}}, {{"seconds", since(t0)}});
  return ok;
}

AvoidanceCertificate base_pair(const Graph& g, const SearchOptions& o) {
  const ExistsResult r = exists_k(g, 0, 2, o);
  if (r.status == SearchStatus::unresolved) throw InputError("no base pair found within the budget");
  if (r.status != SearchStatus::found) throw InputError("the base graph has no pair of avoiding circuits from 0");
  return *r.certificate;
}

std::vector<Vertex> starts_or_all(const Call& call, std::size_t fixed, const Graph& g) {
  if (call.args.size() == fixed + 1) return {call.args.back()};
  if (call.args.size() != fixed) throw InputError(call.name + ": wrong number of arguments");
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return all;
}

int run_construct(const std::string& text, const std::string& out_dir, const Knobs& k) {
  const Call call = parse_call(text);
  const auto& a = call.args;
  auto need = [&](std::size_t count) {
    if (a.size() != count) {
      throw InputError(call.name + ": expected " + std::to_string(count) + " argument(s)");
    }
  };
  const auto t0 = std::chrono::steady_clock::now();
  const std::string& n = call.name;
  Construction c;
  if (n == "3mod6") {
    need(1);
    c = construct_3mod6(a[0]);
  } else if (n == "odd_max") {
    need(1);
    c = construct_odd_max(a[0]);
  } else if (n == "0mod4") {
    need(1);
    c = construct_0mod4_max(a[0]);
  } else if (n == "2mod4") {
    need(1);
    c = construct_2mod4_max(a[0]);
  } else if (n == "square") {
    need(1);
    c = construct_square_family(a[0]);
  } else if (n == "rectangle") {
    need(2);
    c = construct_rectangle_family(a[0], a[1]);
  } else if (n == "gamma_a0") {
    if (a.size() < 3) throw InputError("gamma_a0: expected b,c,d[,start]");
    c.name = text;
    c.graph = gamma_graph(0, a[0], a[1], a[2]);
    for (Vertex s : starts_or_all(call, 3, c.graph)) c.certificates.push_back(construct_gamma_a0(a[0], a[1], a[2], s));
  } else if (n == "gamma_14cc") {
    if (a.empty()) throw InputError("gamma_14cc: expected c[,start]");
    c.name = text;
    c.graph = gamma_graph(1, 4, a[0], a[0]);
    for (Vertex s : starts_or_all(call, 1, c.graph)) c.certificates.push_back(construct_gamma_14cc(a[0], s));
  } else if (n == "double_kn") {
    need(1);
    if (a[0] < 2) throw InputError("double_kn: m must be at least 2");
    const AvoidanceCertificate pair =
        a[0] == 4 ? archive_entry("doubling_base_n9").certificates.front()
                  : base_pair(kn_minus_ham_cycle(2 * a[0] + 1), search_options(k));
    c = double_complete_minus_cycle(a[0], pair).result;
  } else if (n == "double") {
    if (a.size() < 2) throw InputError("double: expected n;g1,g2,...");
    const std::vector<int> gens(a.begin() + 1, a.end());
    const Graph base = circulant(a[0], gens);
    c = double_circulant(a[0], gens, base_pair(base, search_options(k))).result;
  } else if (n == "non_doubly") {
    need(1);
    c.name = text;
    c.graph = construct_4reg_non_doubly(a[0]);
  } else {
    throw InputError("unknown construction '" + n + "'");
  }
  return emit_certificates(c.name, c.graph, c.certificates, out_dir, since(t0));
}

int run_verify(const Knobs& k, const std::string& circuits_path, int start) {
  const Graph g = input_graph(k);
  const std::vector<Circuit> circuits = parse_circuits(read_file(circuits_path));
  if (circuits.empty()) throw InputError("no circuits in '" + circuits_path + "'");
  const Vertex s = start >= 0 ? start : circuits.front().start();
  const auto t0 = std::chrono::steady_clock::now();
  const AvoidanceCertificate cert = certify(g, s, circuits);
  const json verdict = certificate_json(g, cert);
  std::cout << render({{"graph", graph_json(g)}, {"certificate", verdict}}, {{"seconds", since(t0)}});
  std::cerr << "mutually avoiding: " << (cert.verified ? "true" : "false") << "\n";
  return cert.verified ? ok : verification_failed;
}

int run_census(int order, int regular, const std::string& resume, bool open_problem, int columns, const Knobs& k) {
  if (regular != 0 && regular != 4) throw InputError("--regular: only 4 is supported");
  const CensusClass family = regular == 4 ? CensusClass::four_regular : CensusClass::eulerian;
  if (family == CensusClass::eulerian && order >= 10 && !open_problem) {
    throw InputError("order 10 has no reference split; pass --open-problem to run it anyway");
  }
  CensusOptions o;
  o.search = search_options(k);
  o.checkpoint = resume;
  o.columns = columns;
  CensusRow row;
  try {
    row = census(order, family, o);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
  std::cout << census_csv_header(static_cast<int>(row.histogram.size())) << "\n" << census_csv_line(row) << "\n";
  std::cerr << "census: " << row.total << " graphs in " << row.seconds << " s\n";
  return row.unresolved == 0 ? ok : unresolved;
}

int run_family(const std::string& spec, const std::string& format) {
  const Graph g = load_graph("family:" + spec);
  if (format == "g6") {
    std::cout << graph6_encode(g) << "\n";
  } else if (format == "edges") {
    std::cout << format_edge_list(g);
  } else {
    json degrees = json::array();
    for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
    std::cout << render({{"spec", parse_family(spec).to_string()},
                         {"graph", graph_json(g)},
                         {"edge_excess", edge_excess(g)},
                         {"degrees", degrees}},
                        json::object());
  }
  return ok;
}

int run_archive(const std::string& key, const std::string& out_dir) {
  if (key.empty()) {
    for (const std::string& name : archive_keys()) std::cout << name << "\n";
    return ok;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Construction c = archive_entry(key);
  return emit_certificates(c.name, c.graph, c.certificates, out_dir, since(t0));
}

int run_saturated(const std::vector<int>& generators, int from, int to, const Knobs& k) {
  if (from > to) throw InputError("--from must not exceed --to");
  const auto verdicts = saturated_scan(generators, from, to, search_options(k));
  std::cout << "n,degree,saturated,resolved\n";
  bool all_resolved = true;
  for (const SaturationVerdict& v : verdicts) {
    std::cout << v.n << "," << v.degree << "," << (v.saturated ? 1 : 0) << "," << (v.resolved ? 1 : 0) << "\n";
    all_resolved = all_resolved && v.resolved;
  }
  return all_resolved ? ok : unresolved;
}

}  // namespace
}  // namespace avoid::cli

int main(int argc, char** argv) {
  using namespace avoid::cli;
  CLI::App app{"Mutually avoiding Eulerian circuits: search, constructions, census."};
  app.require_subcommand(1);

  Knobs k;
  int vertex = -1;
  std::string emit_dir;
  auto* index = app.add_subcommand("index", "avoidance index of a graph or of one vertex");
  add_graph_options(index, k);
  add_search_options(index, k);
  index->add_option("--vertex", vertex, "only this start vertex");
  index->add_option("--emit-certificates", emit_dir, "write graph.g6 and circuits_<v>.txt here");

  auto* bounds_cmd = app.add_subcommand("bounds", "upper bounds on the index");
  add_graph_options(bounds_cmd, k);

  std::string construction;
  std::string out_dir;
  auto* construct = app.add_subcommand("construct", "build and verify an explicit construction");
  construct->add_option("name", construction,
                        "3mod6(n) odd_max(n) 0mod4(n) 2mod4(n) square(s) rectangle(r,s) gamma_a0(b,c,d[,v]) "
                        "gamma_14cc(c[,v]) double_kn(m) double(n;g1,...) non_doubly(n)")
      ->required();
  construct->add_option("--out", out_dir, "write graph.g6, circuits_<v>.txt and report.json here");
  add_search_options(construct, k);

  std::string circuits;
  int start = -1;
  auto* verify = app.add_subcommand("verify", "check circuits against a graph");
  add_graph_options(verify, k);
  verify->add_option("--circuits", circuits, "circuit file, one circuit per line")->required();
  verify->add_option("--start", start, "common start (default: first vertex of the first circuit)");

  int order = 0;
  int regular = 0;
  std::string resume;
  bool open_problem = false;
  int columns = 4;
  auto* census_cmd = app.add_subcommand("census", "index histogram over all graphs of one order");
  census_cmd->add_option("--order", order, "number of vertices")->required();
  census_cmd->add_option("--regular", regular, "restrict to 4-regular graphs");
  census_cmd->add_option("--resume", resume, "append-only checkpoint log");
  census_cmd->add_flag("--open-problem", open_problem, "allow orders without reference values");
  census_cmd->add_option("--columns", columns, "index columns in the CSV")->check(CLI::PositiveNumber);
  add_search_options(census_cmd, k);

  std::string spec;
  std::string format = "json";
  auto* family = app.add_subcommand("family", "generate a family member");
  family->add_option("spec", spec, "e.g. kstar(5), gamma(0,2,2,4)")->required();
  family->add_option("--format", format, "json, g6 or edges")->check(CLI::IsMember({"json", "g6", "edges"}));

  std::string key;
  auto* archive = app.add_subcommand("archive", "list or verify stored circuits");
  archive->add_option("key", key, "entry to load; lists the keys when omitted");
  archive->add_option("--out", out_dir, "write graph.g6, circuits_<v>.txt and report.json here");

  std::vector<int> generators;
  int from = 0;
  int to = 0;
  auto* saturated = app.add_subcommand("saturated", "circulants whose index equals the degree");
  saturated->add_option("--generators", generators, "generator set, e.g. 1,3")->delimiter(',')->required();
  saturated->add_option("--from", from, "smallest order")->required();
  saturated->add_option("--to", to, "largest order")->required();
  add_search_options(saturated, k);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*index) return run_index(k, vertex, emit_dir);
    if (*bounds_cmd) return run_bounds(k);
    if (*construct) return run_construct(construction, out_dir, k);
    if (*verify) return run_verify(k, circuits, start);
    if (*census_cmd) return run_census(order, regular, resume, open_problem, columns, k);
    if (*family) return run_family(spec, format);
    if (*archive) return run_archive(key, out_dir);
    if (*saturated) return run_saturated(generators, from, to, k);
  } catch (const avoid::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return verification_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  }
  return bad_input;
}
