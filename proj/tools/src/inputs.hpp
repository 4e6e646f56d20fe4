#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "avoid/circuit.hpp"
#include "avoid/graph.hpp"
#include "avoid/search.hpp"

namespace avoid::cli {

enum Exit : int {
  ok = 0,
  bad_input = 1,
  verification_failed = 2,
  unresolved = 3,
};

/// Bad arguments or unreadable input; reported with exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph source: "g6:<string>", "file:<path>" (graph6 or edge list),
/// "fig:<key>", "family:<spec>", or a bare family spec.
Graph load_graph(std::string_view source);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Default node budget from AVOID_NODE_BUDGET, or 0 (unlimited).
std::uint64_t default_budget();

/// "name(a,b,...)" split into the name and its integer arguments.
struct Call {
  std::string name;
  std::vector<int> args;
};
Call parse_call(std::string_view text);

nlohmann::json graph_json(const Graph& g);
nlohmann::json certificate_json(const Graph& g, const AvoidanceCertificate& cert);
nlohmann::json bounds_json(const BoundReport& b);

/// Report with the deterministic part under "result" and wall times under
/// "timing"; keys are sorted, so equal inputs print equal bytes.
std::string render(const nlohmann::json& result, const nlohmann::json& timing);

}  // namespace avoid::cli
