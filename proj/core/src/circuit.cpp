#include "avoid/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace avoid {

std::string to_string(CircuitFault fault) {
  switch (fault) {
    case CircuitFault::none:
      return "none";
    case CircuitFault::wrong_length:
      return "wrong length";
    case CircuitFault::wrong_start:
      return "wrong start or end";
    case CircuitFault::vertex_out_of_range:
      return "vertex out of range";
    case CircuitFault::not_an_edge:
      return "step is not an edge";
    case CircuitFault::repeated_edge:
      return "edge repeated";
  }
  return "unknown";
}

std::string CircuitVerdict::describe() const {
  if (valid()) return "valid";
  return to_string(fault) + " at index " + std::to_string(index);
}

namespace {

// Walks from `from` using the lowest unused neighbour, splicing sub-circuits.
Circuit walk(Graph residual, Vertex from) {
  std::vector<Vertex> stack{from};
  std::vector<Vertex> out;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const VertexMask free = residual.neighbours(v);
    if (free != 0) {
      const Vertex w = std::countr_zero(free);
      residual.remove_edge(v, w);
      stack.push_back(w);
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(out.begin(), out.end());
  return Circuit{std::move(out)};
}

bool edges_connected(const Graph& g) {
  VertexMask touched = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) touched |= bit(v);
  }
  if (touched == 0) return true;
  return reachable_within(g, std::countr_zero(touched), touched) == touched;
}

}  // namespace

Circuit hierholzer(const Graph& g, Vertex start) {
  if (!is_eulerian(g)) throw GraphError("hierholzer: graph is not Eulerian");
  if (start < 0 || start >= g.order()) throw GraphError("hierholzer: start out of range");
  return walk(g, start);
}

Circuit euler_trail(const Graph& g, Vertex from, Vertex to) {
  if (from < 0 || from >= g.order() || to < 0 || to >= g.order()) {
    throw GraphError("euler_trail: endpoint out of range");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool odd = g.degree(v) % 2 != 0;
    const bool endpoint = from != to && (v == from || v == to);
    if (odd != endpoint) throw GraphError("euler_trail: degree parity does not allow the trail");
  }
  if (!edges_connected(g) || (g.size() > 0 && g.degree(from) == 0)) {
    throw GraphError("euler_trail: edges are not connected to the start");
  }
  Circuit trail = walk(g, from);
  if (trail.seq.back() != to) throw GraphError("euler_trail: trail ended at the wrong vertex");
  return trail;
}

CircuitVerdict validate_circuit(const Graph& g, const Circuit& c, Vertex start) {
  const std::size_t m = static_cast<std::size_t>(g.size());
  if (c.seq.size() != m + 1) return {CircuitFault::wrong_length, 0};
  for (std::size_t i = 0; i < c.seq.size(); ++i) {
    if (c.seq[i] < 0 || c.seq[i] >= g.order()) return {CircuitFault::vertex_out_of_range, i};
  }
  if (c.seq.front() != start) return {CircuitFault::wrong_start, 0};
  if (c.seq.back() != start) return {CircuitFault::wrong_start, m};
  std::vector<VertexMask> used(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 1; i <= m; ++i) {
    const Vertex a = c.seq[i - 1];
    const Vertex b = c.seq[i];
    if (a == b || !g.adjacent(a, b)) return {CircuitFault::not_an_edge, i};
    if ((used[a] >> b) & 1U) return {CircuitFault::repeated_edge, i};
    used[a] |= bit(b);
    used[b] |= bit(a);
  }
  return {};
}

std::optional<std::size_t> first_conflict(const Graph& g, const Circuit& c1, const Circuit& c2) {
  if (c1.seq.size() != c2.seq.size()) throw CircuitError("circuits have different lengths");
  if (c1.seq.empty() || c1.start() != c2.start()) throw CircuitError("circuits have different starts");
  for (std::size_t i = 1; i + 1 < c1.seq.size(); ++i) {
    const Vertex a = c1.seq[i];
    const Vertex b = c2.seq[i];
    if (a == b || g.adjacent(a, b)) return i;
  }
  return std::nullopt;
}

bool avoiding(const Graph& g, const Circuit& c1, const Circuit& c2) {
  return !first_conflict(g, c1, c2).has_value();
}

bool mutually_avoiding(const Graph& g, std::span<const Circuit> cs) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!avoiding(g, cs[i], cs[j])) return false;
    }
  }
  return true;
}

bool bipartite_avoiding_shortcut(const Graph& g, const Circuit& c1, const Circuit& c2) {
  if (!bipartition(g)) throw GraphError("bipartite_avoiding_shortcut: graph is not bipartite");
  if (c1.seq.size() != c2.seq.size()) throw CircuitError("circuits have different lengths");
  if (c1.seq.empty() || c1.start() != c2.start()) throw CircuitError("circuits have different starts");
  for (std::size_t i = 1; i + 1 < c1.seq.size(); ++i) {
    if (c1.seq[i] == c2.seq[i]) return false;
  }
  return true;
}

std::optional<std::string> certificate_problem(const Graph& g, const AvoidanceCertificate& cert) {
  if (cert.circuits.empty()) return "certificate holds no circuits";
  for (std::size_t j = 0; j < cert.circuits.size(); ++j) {
    const CircuitVerdict verdict = validate_circuit(g, cert.circuits[j], cert.start);
    if (!verdict) return "circuit " + std::to_string(j + 1) + ": " + verdict.describe();
  }
  for (std::size_t i = 0; i < cert.circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.circuits.size(); ++j) {
      if (const auto step = first_conflict(g, cert.circuits[i], cert.circuits[j])) {
        return "circuits " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
               " meet at step " + std::to_string(*step);
      }
    }
  }
  return std::nullopt;
}

AvoidanceCertificate certify(const Graph& g, Vertex start, std::vector<Circuit> circuits) {
  AvoidanceCertificate cert{start, std::move(circuits), false};
  cert.verified = !certificate_problem(g, cert).has_value();
  return cert;
}

std::vector<Circuit> parse_circuits(const std::string& text) {
  std::vector<Circuit> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t pending_blank = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (!out.empty()) pending_blank = line_no;
      continue;
    }
    if (line[first] == '#') continue;
    if (pending_blank != 0) {
      throw CircuitParseError("circuits: empty line inside block at line " +
                                  std::to_string(pending_blank),
                              pending_blank, 0);
    }
    std::istringstream tokens(line);
    std::string token;
    Circuit c;
    std::size_t token_no = 0;
    while (tokens >> token) {
      ++token_no;
      Vertex value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw CircuitParseError("circuits: bad token '" + token + "' at line " +
                                    std::to_string(line_no) + ", token " + std::to_string(token_no),
                                line_no, token_no);
      }
      c.seq.push_back(value);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string serialize_circuits(std::span<const Circuit> cs) {
  std::string out;
  for (const Circuit& c : cs) {
    for (std::size_t i = 0; i < c.seq.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(c.seq[i]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace avoid
