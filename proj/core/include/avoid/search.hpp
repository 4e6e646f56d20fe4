#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "avoid/bounds.hpp"
#include "avoid/canonical.hpp"
#include "avoid/circuit.hpp"
#include "avoid/graph.hpp"

namespace avoid {

struct SearchOptions {
  /// Nodes allowed per exists_k call; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Node allowance of the first run; each restart doubles it and shuffles
  /// the successor order with a fixed seed. 0 runs a single ordered search.
  std::uint64_t restart_nodes = 1U << 14;
  /// Check that each circuit's unused edges stay connected every this many
  /// steps; 0 disables the check.
  int connectivity_interval = 1;
  /// Pairwise arrival-count prune at every step boundary.
  bool counting_prune = true;
  /// Use automorphisms fixing the start vertex and circuit reversal to
  /// restrict the first and last moves.
  bool symmetry = true;
  /// Near the end, each circuit must still be able to finish along this many
  /// unused edges into the start, pairwise apart; 0 disables the check (max 4).
  int endgame_depth = 3;
  /// av_vertex tries k from the ceiling downwards (true) or from 2 upwards.
  bool descending = true;
  /// Worker threads for av_graph; 0 means hardware concurrency.
  int threads = 1;
};

enum class SearchStatus { found, none, unresolved, rejected };

const char* to_string(SearchStatus status);

struct ExistsResult {
  SearchStatus status = SearchStatus::none;
  std::optional<AvoidanceCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Decides whether k mutually avoiding Eulerian circuits start and end at
/// `start`. k above start_ceiling() is rejected without search. A found
/// certificate has been checked by certify().
ExistsResult exists_k(const Graph& g, Vertex start, int k, const SearchOptions& options = {});

struct VertexResult {
  Vertex v = 0;
  /// Largest k proved; when `resolved` is false the true value may be larger.
  int av = 1;
  bool resolved = true;
  AvoidanceCertificate certificate;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Returns av(v) together with a certificate at the achieved k.
VertexResult av_vertex(const Graph& g, Vertex v, const SearchOptions& options = {});

struct Rational {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);

struct SearchReport {
  BoundReport bounds;
  std::vector<VertexResult> per_vertex;
  int av = 1;
  Rational mean;
  bool resolved = true;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Searches one start vertex per automorphism orbit and copies the result to
/// the rest of the orbit (certificates are mapped by the automorphism).
SearchReport av_graph(const Graph& g, const SearchOptions& options = {});

Rational mean_av(const Graph& g, const SearchOptions& options = {});

struct IndexResult {
  int av = 1;
  bool resolved = true;
  std::uint64_t nodes = 0;
};

/// av(G) only: raises k from 2 over orbit representatives (lowest ceiling
/// first) and stops at the first start that cannot reach k.
IndexResult graph_index(const Graph& g, const SearchOptions& options = {});

/// Independent reference for av(v): enumerates every pair of avoiding
/// circuits from v with no pruning besides the avoiding rule, then takes a
/// maximum clique of the pair graph. Throws GraphError when the number of
/// avoiding pairs exceeds `pair_limit`.
int oracle_av_vertex(const Graph& g, Vertex v, std::size_t pair_limit = 2'000'000);

}  // namespace avoid
