#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/circuit.hpp"
#include "avoid/graph.hpp"

namespace avoid {

/// A builder rejected its parameters.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A builder produced circuits that failed verification, or stored data did
/// not match its checksum. The message names the first violation.
class VerificationError : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// Host graph plus certificates from one or more starts. Every certificate
/// has been through certify(); builders throw instead of returning an
/// unverified one.
struct Construction {
  std::string name;
  Graph graph;
  std::vector<AvoidanceCertificate> certificates;

  const AvoidanceCertificate& from(Vertex start) const;
};

/// K_n minus the triangles i, i+n/3, i+2n/3; a pair from vertex 0 built by
/// splicing two trails and shifting the second circuit by 2n/3.
/// n = 3 (mod 6), n >= 9.
Construction construct_3mod6(int n);

/// Signed generator block for the odd-order circulant Z_n{1..f}, f = (n-3)/2.
struct BlockScheme {
  int n = 0;
  int f = 0;
  std::vector<int> c;  // c_1..c_f
  std::vector<int> b;  // signed c_i; sums to 1 mod n
};

/// n odd, n >= 23.
BlockScheme block_scheme(int n);

/// The n blocks of each circuit, one row of f signed steps per block.
std::array<std::vector<std::vector<int>>, 2> odd_max_blocks(const BlockScheme& scheme);

/// Pair from 0 on the (n-3)-regular circulant of odd order n >= 9. Orders up
/// to 21 use the stored circuits; larger orders use the block scheme.
Construction construct_odd_max(int n);

/// (C2 - C1) mod n after every step, and the pattern it must follow: f+1
/// almost everywhere, f+2 at fixed positions of blocks f+7..2f+3, and 0 at
/// the end. Both have length n*f.
std::vector<int> odd_max_trace(const Construction& c);
std::vector<int> odd_max_expected_trace(int n);

/// K_{4,...,4} on n vertices, part p holding 4p..4p+3; a pair from vertex 0.
/// n = 0 (mod 4), n >= 8.
Construction construct_0mod4_max(int n);

/// Adds one more part of size `part` to the complete multipartite host of a
/// verified certificate, keeping the circuit count. The new part takes the
/// highest labels.
Construction extend_multipartite(const Construction& base, int part);

/// n = 2 (mod 4), n >= 10: K_{4,...,4,6} plus a 6-cycle on the last part,
/// with pairs from vertex 0 and from the first vertex of the 6-part. Order 10
/// uses the stored circuits.
Construction construct_2mod4_max(int n);

/// Circulant doubling of a certificate from vertex 0 on Z_n{S}: vertex x' is
/// n+x, the new edges are x-(x+s)' and x'-(x+s)' for s in S. Every circuit is
/// opened at the step where the first one returns to 0 and a copy of one
/// Eulerian circuit of the new edges, shifted by the position z of that
/// circuit, is inserted. Throws when the certificate is not verified or does
/// not start at 0.
struct Doubling {
  Construction result;
  /// Offsets of circuits 2..k at the splice step.
  std::vector<int> offsets;
};
Doubling double_circulant(int n, const std::vector<int>& generators, const AvoidanceCertificate& cert);

/// Doubling of a pair on K_{2m+1} minus the cycle i,i+1: the new edges are
/// all x-y' with x != y plus the second copy, and the inserted circuit
/// replaces every step x y of the first circuit by x y' x' y and then walks
/// 0 1' 2 3' ... (2m)' 0.
Doubling double_complete_minus_cycle(int m, const AvoidanceCertificate& pair);

/// Pair from v on a bipartite Eulerian graph using a K_{3,2} through v (v on
/// the side of three) whose edges can be removed without disconnecting g.
Construction construct_bipartite_pair(const Graph& g, Vertex v);

/// Numbering of the edges of K_{rows,cols} as a grid: entry (i, j) is the
/// step at which the edge row i - column j is used.
using EdgeGrid = std::vector<std::vector<int>>;

/// The zig-zag numbering starting at (0, 0); rows and cols even, >= 2.
EdgeGrid zigzag_grid(int rows, int cols);

/// The grids E_1 = Q, E_2, ..., E_count derived by the shift and row swap.
std::vector<EdgeGrid> derived_grids(const EdgeGrid& q, int count);

/// Circuit read off a grid: rows map to row_base+i, columns to col_base+j,
/// starting at row 0.
Circuit grid_circuit(const EdgeGrid& grid, Vertex row_base, Vertex col_base);

/// 2s-1 circuits from vertex 0 of K_{2s,2s}; s >= 2.
Construction construct_square_family(int s);

/// K_{2r,2s}, 1 <= r < s: 2r-1 circuits from vertex 0 and 2r circuits from
/// vertex 2r.
Construction construct_rectangle_family(int r, int s);

/// Pair on gamma(0,b,c,d) from `start`; b, c, d even, 2 <= b <= c <= d < b+c+3.
AvoidanceCertificate construct_gamma_a0(int b, int c, int d, Vertex start);

/// Pair on gamma(1,4,c,c) from `start`; c >= 4.
AvoidanceCertificate construct_gamma_14cc(int c, Vertex start);

/// 4-regular graph of order n >= 11 with a cut vertex that blocks every pair
/// of circuits from it.
Graph construct_4reg_non_doubly(int n);

/// Circuits stored as text and verified on their host graphs at load.
/// Throws ConstructionError for an unknown key or a checksum or
/// verification failure.
Construction archive_entry(std::string_view key);
std::vector<std::string> archive_keys();

}  // namespace avoid
