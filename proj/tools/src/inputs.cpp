#include "inputs.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "avoid/bounds.hpp"
#include "avoid/families.hpp"
#include "avoid/graph6.hpp"

namespace avoid::cli {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// A file holding a single token is graph6, anything else an edge list.
Graph graph_from_file(const std::string& path) {
  const std::string text = trim(read_file(path));
  if (text.find_first_of(" \t\n") == std::string::npos && !text.empty()) return graph6_decode(text);
  return parse_edge_list(text);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Graph load_graph(std::string_view source) {
  try {
    if (starts_with(source, "g6:")) return graph6_decode(trim(source.substr(3)));
    if (starts_with(source, "file:")) return graph_from_file(std::string(source.substr(5)));
    if (starts_with(source, "fig:")) return figure_graph(source.substr(4));
    if (starts_with(source, "family:")) return generate(parse_family(source.substr(7)));
    return generate(parse_family(source));
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

std::uint64_t default_budget() {
  const char* text = std::getenv("AVOID_NODE_BUDGET");
  if (text == nullptr || *text == '\0') return 0;
  std::uint64_t value = 0;
  const std::string_view s(text);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("AVOID_NODE_BUDGET: not a number: '" + std::string(s) + "'");
  }
  return value;
}

Call parse_call(std::string_view text) {
  const std::string whole = trim(text);
  Call call;
  const auto open = whole.find('(');
  if (open == std::string::npos) {
    call.name = whole;
    return call;
  }
  if (whole.back() != ')') throw InputError("'" + whole + "': expected name(arguments)");
  call.name = whole.substr(0, open);
  std::string inner = whole.substr(open + 1, whole.size() - open - 2);
  for (char& ch : inner) {
    if (ch == ',' || ch == ';') ch = ' ';
  }
  std::istringstream tokens(inner);
  std::string token;
  while (tokens >> token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InputError("'" + whole + "': bad argument '" + token + "'");
    }
    call.args.push_back(value);
  }
  return call;
}

nlohmann::json graph_json(const Graph& g) {
  return {{"graph6", graph6_encode(g)},
          {"order", g.order()},
          {"size", g.size()},
          {"eulerian", is_eulerian(g)},
          {"bipartite", bipartition(g).has_value()}};
}

nlohmann::json certificate_json(const Graph& g, const AvoidanceCertificate& cert) {
  const auto problem = certificate_problem(g, cert);
  nlohmann::json out = {{"start", cert.start}, {"k", cert.k()}, {"mutually_avoiding", !problem.has_value()}};
  if (problem) out["problem"] = *problem;
  return out;
}

nlohmann::json bounds_json(const BoundReport& b) {
  nlohmann::json per = nlohmann::json::array();
  for (const VertexBound& v : b.per_vertex) {
    per.push_back({{"vertex", v.v},
                   {"degree", v.degree},
                   {"alpha", v.alpha},
                   {"s", v.s},
                   {"excess_bound", v.excess_bound},
                   {"start_ceiling", v.start_ceiling}});
  }
  return {{"min_degree", b.min_degree},   {"max_degree", b.max_degree}, {"min_alpha", b.min_alpha},
          {"excess_bound", b.excess_bound}, {"ceiling", b.ceiling},       {"per_vertex", per}};
}

std::string render(const nlohmann::json& result, const nlohmann::json& timing) {
  const nlohmann::json report = {{"result", result}, {"timing", timing}};
  return report.dump(2) + "\n";
}

}  // namespace avoid::cli
