#pragma once

#include <span>
#include <string>
#include <vector>

#include "avoid/graph.hpp"

namespace avoid {

/// Canonical labelling of a (vertex-coloured) graph plus its automorphism orbits.
struct CanonicalForm {
  /// Equal for two graphs exactly when they are isomorphic (colour-preserving).
  std::string bytes;
  /// orbit[v] is the smallest vertex in the automorphism orbit of v.
  std::vector<Vertex> orbit;
  /// labeling[v] is the position of v in the canonical order.
  std::vector<Vertex> labeling;
  /// Automorphisms discovered during the search; they generate the group.
  std::vector<std::vector<Vertex>> generators;

  /// The canonically relabelled graph.
  Graph relabelled(const Graph& g) const { return relabel(g, labeling); }
  int orbit_count() const;
};

/// Refinement to an equitable partition followed by individualisation of the
/// first smallest non-singleton cell; the certificate is the largest relabelled
/// adjacency matrix over the leaves. Automorphisms found by equal leaves prune
/// sibling branches. Vertices with different `colours` are never mapped to
/// each other; an empty span means a single colour.
CanonicalForm canonical(const Graph& g, std::span<const int> colours = {});

/// Orbit representatives (smallest vertex of each orbit), ascending.
std::vector<Vertex> orbit_representatives(const CanonicalForm& form);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace avoid
