#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toricsplit/graphs.hpp"
#include "toricsplit/splitting.hpp"
#include "toricsplit/supports.hpp"
#include "toricsplit/toric.hpp"

namespace properties {

using namespace toricsplit;

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(const std::string& what, const IntMatrix& m) {
    std::ostringstream os;
    os << what << " for " << m;
    failures.push_back(os.str());
  }
};

inline bool contains_class(const std::vector<LatticeVector>& sorted_classes, const LatticeVector& v) {
  return std::binary_search(sorted_classes.begin(), sorted_classes.end(), v.canonical_sign());
}

// Random pointed configurations of height 1..3 checked against the oracles:
// Graver vs the box oracle, circuits and minimal generators inside Graver,
// rank-nullity, and 2-part covers vs exhaustive bipartitions.
inline Tally random_configurations(std::size_t count, std::uint64_t seed, std::int64_t box = 20) {
  Tally t;
  std::mt19937_64 rng(seed);
  while (t.cases < count) {
    const std::size_t rows = 1 + rng() % 2;
    const std::size_t cols = rows + 1 + rng() % 3;
    const auto m = oracle::random_config(rng, rows, cols, 4);
    const Configuration a(m);
    if (a.height() == 0 || a.height() > 3) continue;
    ++t.cases;
    Budget budget(50'000'000);

    if (rank(m) + rational_kernel_basis(m).size() != cols) t.fail("rank + kernel dimension != n", m);
    if (rank(m) != oracle::rank_q(m)) t.fail("rank differs from elimination oracle", m);

    const auto graver = canonical_classes(graver_basis(a, budget));
    std::vector<LatticeVector> small;
    for (const auto& g : graver)
      if (g.max_abs() <= box) small.push_back(g);
    if (small != oracle::graver_in_box(m, box)) t.fail("Graver differs from box oracle", m);

    for (const auto& c : circuits(a))
      if (!contains_class(graver, c.vector())) t.fail("circuit outside Graver", m);

    const auto markov = minimal_markov(a, budget);
    for (const auto& v : markov.generators.vectors())
      if (!contains_class(graver, v)) t.fail("minimal generator outside Graver", m);

    const auto& gens = markov.generators;
    if (gens.size() >= 2 && gens.size() <= 16) {
      const bool found = find_cover(a, gens, 2, budget).has_value();
      if (found != oracle::two_cover_exists(gens.vectors(), a.height())) t.fail("find_cover(2) differs from bipartitions", m);
    }
  }
  return t;
}

// Every connected bipartite graph with at most max_edges edges, up to
// isomorphism: chordless even cycles and minimal generators agree up to sign,
// and both agree with the induced-subgraph oracle.
inline Tally bipartite_graphs(std::size_t max_edges) {
  Tally t;
  for (std::size_t m = 1; m <= max_edges; ++m)
    for (std::size_t n = m; m + n <= max_edges + 1; ++n)
      for (const auto& edges : oracle::connected_bipartite(m, n, max_edges)) {
        ++t.cases;
        const BipartiteGraph g(m, n, edges);
        const auto a = incidence_configuration(g);
        std::vector<LatticeVector> cycles;
        for (const auto& c : chordless_even_cycles(g)) cycles.push_back(c.vector(g));
        Budget budget(50'000'000);
        const auto markov = minimal_markov(a, budget);
        const auto got = canonical_classes(cycles);
        if (got != canonical_classes(markov.generators.vectors())) t.fail("chordless cycles != minimal generators", a.matrix());
        if (got != oracle::induced_cycles(m, n, edges)) t.fail("chordless cycles != induced-cycle oracle", a.matrix());
      }
  return t;
}

}  // namespace properties
