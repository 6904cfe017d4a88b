#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "toricsplit/budget.hpp"
#include "toricsplit/splitting.hpp"
#include "toricsplit/toric.hpp"

namespace toricsplit {

/// Connected simple bipartite graph. Left vertices are x_1..x_m, right
/// vertices y_1..y_n; edges are stored 0-based as (i, j) and their order fixes
/// the column order of the incidence configuration.
class BipartiteGraph {
 public:
  /// Throws std::invalid_argument on out-of-range or duplicate edges, and on
  /// disconnected graphs (isolated vertices included).
  BipartiteGraph(std::size_t left, std::size_t right, std::vector<std::pair<std::size_t, std::size_t>> edges);

  static BipartiteGraph complete(std::size_t m, std::size_t n);

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  std::size_t vertex_count() const { return left_ + right_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  /// Vertex numbering used by cycles: left i -> i, right j -> m + j.
  std::size_t left_vertex(std::size_t i) const { return i; }
  std::size_t right_vertex(std::size_t j) const { return left_ + j; }
  /// Index of the edge joining two vertices (either order), or -1.
  std::ptrdiff_t edge_index(std::size_t u, std::size_t v) const;

 private:
  std::size_t left_;
  std::size_t right_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::ptrdiff_t> index_;  // left_ * right_ lookup
};

/// Vertex sequence x, y, x, y, ... of an even cycle, starting at its smallest
/// vertex and continuing to the smaller of its two neighbours.
struct EvenCycle {
  std::vector<std::size_t> vertices;

  /// Edge indices at positions 1, 3, 5, ... and 2, 4, 6, ... of the walk.
  std::vector<std::size_t> odd_edges(const BipartiteGraph& g) const;
  std::vector<std::size_t> even_edges(const BipartiteGraph& g) const;
  /// +1 on odd-position edges, -1 on even-position edges.
  LatticeVector vector(const BipartiteGraph& g) const;
};

/// The (m+n) x |E| vertex-edge incidence matrix.
Configuration incidence_configuration(const BipartiteGraph& g);

/// All cycles without chords, each once, sorted by vertex sequence.
std::vector<EvenCycle> chordless_even_cycles(const BipartiteGraph& g);
GeneratorSet cycle_generators(const BipartiteGraph& g);

/// The three-part splitting of I_{K_{m,n}}: subgraphs induced on
/// V1 \ {first}, V1 \ {last} and {first, last} of the larger side V1, each
/// together with the whole other side.
struct KmnSplit {
  std::size_t m = 0;
  std::size_t n = 0;
  /// True when V1 is the right side.
  bool swapped = false;
  /// Induced subgraphs as vertex subsets (0-based, left vertices then right
  /// vertices shifted by m).
  std::array<std::vector<std::size_t>, 3> vertex_sets;
  std::array<std::size_t, 3> counts{};
  /// Part index (0, 1, 2) for every generator of cycle_generators(K_{m,n}).
  std::vector<std::size_t> assignment;
  /// Each generator's edges lie in the subgraph it was assigned to.
  bool verified = false;
};

/// Throws std::invalid_argument unless m, n >= 2 and (m, n) != (2, 2).
KmnSplit kmn_split(std::size_t m, std::size_t n);

struct GraphSplitReport {
  std::size_t generator_count = 0;
  Bound split;
  Bound split_rad;
  std::optional<SplitCertificate> certificate;
};

GraphSplitReport graph_split_numbers(const BipartiteGraph& g, Budget& budget);

}  // namespace toricsplit
