#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricsplit/budget.hpp"
#include "toricsplit/lattice.hpp"
#include "toricsplit/toric.hpp"

namespace toricsplit {

/// A primitive kernel vector with inclusion-minimal support.
class Circuit {
 public:
  explicit Circuit(LatticeVector v) : vector_(v.primitive().canonical_sign()) {}
  const LatticeVector& vector() const { return vector_; }
  SupportSet support() const { return vector_.support(); }
  auto operator<=>(const Circuit&) const = default;

 private:
  LatticeVector vector_;
};

/// All circuits, via Cramer vectors of the (rank+1)-column subsets.
/// Canonical sign, sorted.
std::vector<Circuit> circuits(const Configuration& a);

/// Inclusion-minimal members of {supp(u+), supp(u-) : u a circuit}.
std::vector<SupportSet> cmin(std::span<const Circuit> circuits);
std::vector<SupportSet> cmin(const Configuration& a);

struct SupportEdge {
  std::size_t first;
  std::size_t second;
  /// supp(witness+) = vertices[first], supp(witness-) = vertices[second].
  LatticeVector witness;
};

/// Γ_A: vertices are C_min, edges join E, E' when some kernel vector has
/// exactly E as positive and E' as negative support.
struct SupportGraph {
  std::vector<SupportSet> vertices;
  std::vector<SupportEdge> edges;

  bool has_edge(std::size_t a, std::size_t b) const;
};

SupportGraph gamma_graph(const Configuration& a);
SupportGraph gamma_graph(const Configuration& a, std::span<const SupportSet> vertices);

/// One part of a {0,1}-matching: an edge, or a single vertex when `second` is empty.
struct MatchingPart {
  std::size_t first;
  std::optional<std::size_t> second;
};

struct Matching01 {
  std::vector<MatchingPart> parts;

  std::size_t card() const { return parts.size(); }
  std::size_t support_size() const;
  bool disjoint() const;
};

struct Delta01 {
  std::size_t value = 0;
  std::size_t max_matching = 0;
  Matching01 witness;
};

/// δ_{0,1} of a simple graph: every vertex is coverable (singletons are
/// allowed), so the minimum card of a maximal {0,1}-matching is
/// |V| - ν(G) with ν the maximum matching size.
Delta01 delta01(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges);
Delta01 delta01(const SupportGraph& g);

struct BarOptions {
  /// Licenses hi <= #circuits (circuits generate I_A up to radical).
  bool assume_circuit_radical = false;
  /// Size of a generating set known to generate I_A up to radical.
  std::optional<std::size_t> known_radical_generators;
};

struct BarBounds {
  std::size_t lo = 0;
  std::optional<std::size_t> hi;
  std::string lo_rule;
  std::string hi_rule;
  std::size_t height = 0;
  std::size_t delta = 0;
  std::size_t circuit_count = 0;
  std::optional<std::size_t> mu;
  /// Set when μ could not be computed inside the budget.
  std::optional<std::string> degraded;

  bool exact() const { return hi && *hi == lo; }
};

/// lo = max(ht, δ(Γ_A)), hi = μ (tightened by #circuits or a known radical
/// generating set when the options license it).
BarBounds bar_bounds(const Configuration& a, Budget& budget, BarOptions options = {});

}  // namespace toricsplit
