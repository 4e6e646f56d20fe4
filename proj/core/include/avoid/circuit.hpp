#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoid/graph.hpp"

namespace avoid {

/// Closed trail stored as its vertex sequence; seq.front() == seq.back().
struct Circuit {
  std::vector<Vertex> seq;

  /// Vertex reached after i steps.
  Vertex at(std::size_t i) const { return seq.at(i); }
  Vertex start() const { return seq.front(); }
  std::size_t steps() const { return seq.empty() ? 0 : seq.size() - 1; }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class CircuitFault {
  none,
  wrong_length,
  wrong_start,
  vertex_out_of_range,
  not_an_edge,
  repeated_edge,
};

std::string to_string(CircuitFault fault);

struct CircuitVerdict {
  CircuitFault fault = CircuitFault::none;
  /// Index into seq of the first offending entry (0 for length faults).
  std::size_t index = 0;

  bool valid() const { return fault == CircuitFault::none; }
  explicit operator bool() const { return valid(); }
  std::string describe() const;
};

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_circuits; `line` and `token` are 1-based.
class CircuitParseError : public CircuitError {
 public:
  CircuitParseError(const std::string& what, std::size_t line, std::size_t token)
      : CircuitError(what), line(line), token(token) {}
  std::size_t line;
  std::size_t token;
};

/// k circuits from a common start; `verified` is set only by certify().
struct AvoidanceCertificate {
  Vertex start = 0;
  std::vector<Circuit> circuits;
  bool verified = false;

  int k() const { return static_cast<int>(circuits.size()); }
};

/// Eulerian circuit by Hierholzer's algorithm, always taking the lowest unused
/// neighbour. Throws GraphError when g is not Eulerian.
Circuit hierholzer(const Graph& g, Vertex start);

/// Eulerian trail from `from` to `to` (odd-degree endpoints, or from == to),
/// lowest neighbour first. Vertices of degree zero are ignored.
Circuit euler_trail(const Graph& g, Vertex from, Vertex to);

/// Checks length m+1, both endpoints equal to start, every step an edge and no
/// edge used twice.
CircuitVerdict validate_circuit(const Graph& g, const Circuit& c, Vertex start);

/// First interior step at which the two circuits are equal or adjacent.
/// Throws CircuitError when lengths or starts differ.
std::optional<std::size_t> first_conflict(const Graph& g, const Circuit& c1, const Circuit& c2);

bool avoiding(const Graph& g, const Circuit& c1, const Circuit& c2);
bool mutually_avoiding(const Graph& g, std::span<const Circuit> cs);

/// Position-only test, equivalent to avoiding() on a bipartite host since
/// same-parity steps of two circuits from one start are never adjacent.
/// Throws GraphError when g is not bipartite.
bool bipartite_avoiding_shortcut(const Graph& g, const Circuit& c1, const Circuit& c2);

/// Validates every circuit and every pair; sets `verified` accordingly.
AvoidanceCertificate certify(const Graph& g, Vertex start, std::vector<Circuit> circuits);

/// Detailed failure for a certificate, or nullopt when it verifies.
std::optional<std::string> certificate_problem(const Graph& g, const AvoidanceCertificate& cert);

/// One circuit per line, decimal vertices separated by whitespace. Lines
/// starting with '#' are comments; blank lines may only surround the block.
std::vector<Circuit> parse_circuits(const std::string& text);
std::string serialize_circuits(std::span<const Circuit> cs);

}  // namespace avoid
