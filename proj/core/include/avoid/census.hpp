#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "avoid/graph.hpp"
#include "avoid/search.hpp"

namespace avoid {

enum class CensusClass { eulerian, four_regular };

/// Connected graphs with every degree even, one per isomorphism class, in
/// canonical labelling. Vertex-by-vertex canonical augmentation; the last
/// vertex is forced onto the odd-degree vertices. Supported for 3 <= n <= 10.
void enumerate_eulerian(int n, const std::function<void(const Graph&)>& emit);

/// Connected 4-regular graphs, one per isomorphism class. Supported for
/// 5 <= n <= 13.
void enumerate_4regular(int n, const std::function<void(const Graph&)>& emit);

std::vector<Graph> eulerian_graphs(int n);
std::vector<Graph> four_regular_graphs(int n);

struct CensusRow {
  int order = 0;
  int total = 0;
  /// histogram[i] counts graphs of avoidance index i + 1.
  std::vector<int> histogram;
  int unresolved = 0;
  double seconds = 0.0;
};

struct CensusOptions {
  SearchOptions search;
  /// Append-only log of "graph6 index" lines ("graph6 unresolved" when the
  /// budget ran out). Lines already present are reused, so an interrupted
  /// run resumes where it stopped. Empty disables the log.
  std::string checkpoint;
  /// Index columns always present in the histogram.
  int columns = 4;
};

CensusRow census(int n, CensusClass family, const CensusOptions& options = {});

/// "order,total,1,2,...,unresolved" and the matching data line.
std::string census_csv_header(int columns);
std::string census_csv_line(const CensusRow& row);

struct SaturationVerdict {
  int n = 0;
  int degree = 0;
  bool saturated = false;
  bool resolved = true;
  std::uint64_t nodes = 0;
};

/// For each n in [n_min, n_max], whether the circulant Z_n{generators} has
/// avoidance index equal to its degree. Orders where some generator exceeds
/// n/2 are skipped.
std::vector<SaturationVerdict> saturated_scan(std::span<const int> generators, int n_min, int n_max,
                                              const SearchOptions& options = {});

}  // namespace avoid
