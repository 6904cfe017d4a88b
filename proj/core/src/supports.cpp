#include "toricsplit/supports.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <numeric>
#include <stdexcept>

namespace toricsplit {

namespace {

Integer determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<std::size_t> independent_rows(const IntMatrix& m, std::size_t r) {
  std::vector<std::size_t> rows;
  std::vector<std::vector<Integer>> chosen;
  for (std::size_t i = 0; i < m.rows() && rows.size() < r; ++i) {
    auto trial = chosen;
    trial.emplace_back(m.row(i).begin(), m.row(i).end());
    if (rank(IntMatrix::from_rows(trial)) == trial.size()) {
      chosen = std::move(trial);
      rows.push_back(i);
    }
  }
  return rows;
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Circuit> circuits(const Configuration& a) {
  std::vector<Circuit> out;
  if (a.height() == 0) return out;
  const std::size_t r = a.rank();
  const auto rows = independent_rows(a.matrix(), r);

  std::vector<SupportSet> seen;
  for_each_subset(a.cols(), r + 1, [&](const std::vector<std::size_t>& cols) {
    std::vector<Integer> coords(a.cols(), Integer(0));
    bool nonzero = false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<std::vector<Integer>> minor(r, std::vector<Integer>());
      for (std::size_t i = 0; i < r; ++i) {
        minor[i].reserve(r);
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (k != j) minor[i].push_back(a.matrix()(rows[i], cols[k]));
      }
      Integer d = determinant(std::move(minor));
      if (j % 2 == 1) d = -d;
      if (sgn(d) != 0) nonzero = true;
      coords[cols[j]] = d;
    }
    if (!nonzero) return;
    Integer g = 0;
    for (const auto& x : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    std::vector<std::int64_t> v(a.cols());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_int64(Integer(coords[i] / g));
    Circuit c{LatticeVector(std::move(v))};
    auto support = c.support();
    if (std::find(seen.begin(), seen.end(), support) != seen.end()) return;
    seen.push_back(std::move(support));
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SupportSet> cmin(std::span<const Circuit> circuits) {
  std::vector<SupportSet> all;
  for (const auto& c : circuits) {
    all.push_back(c.vector().plus_support());
    all.push_back(c.vector().minus_support());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<SupportSet> minimal;
  for (const auto& s : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](const SupportSet& t) {
      return t != s && t.is_subset_of(s);
    });
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

std::vector<SupportSet> cmin(const Configuration& a) {
  const auto cs = circuits(a);
  return cmin(cs);
}

bool SupportGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::any_of(edges.begin(), edges.end(), [&](const SupportEdge& e) {
    return (e.first == a && e.second == b) || (e.first == b && e.second == a);
  });
}

SupportGraph gamma_graph(const Configuration& a, std::span<const SupportSet> vertices) {
  SupportGraph g;
  g.vertices.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (g.vertices[i].intersects(g.vertices[j])) continue;
      if (auto w = signed_kernel_vector(a.matrix(), g.vertices[i], g.vertices[j])) {
        g.edges.push_back({i, j, std::move(*w)});
      }
    }
  }
  return g;
}

SupportGraph gamma_graph(const Configuration& a) {
  const auto vertices = cmin(a);
  return gamma_graph(a, vertices);
}

std::size_t Matching01::support_size() const {
  std::size_t s = 0;
  for (const auto& p : parts) s += p.second ? 2 : 1;
  return s;
}

bool Matching01::disjoint() const {
  std::vector<std::size_t> used;
  for (const auto& p : parts) {
    used.push_back(p.first);
    if (p.second) used.push_back(*p.second);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

Delta01 delta01(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
  Graph graph(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u == v || u >= vertex_count || v >= vertex_count) throw std::invalid_argument("invalid edge in delta01");
    boost::add_edge(u, v, graph);
  }
  std::vector<Vertex> mate(vertex_count);
  boost::edmonds_maximum_cardinality_matching(graph, &mate[0]);

  Delta01 result;
  const Vertex none = boost::graph_traits<Graph>::null_vertex();
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (mate[v] == none) {
      result.witness.parts.push_back({v, std::nullopt});
    } else if (v < mate[v]) {
      result.witness.parts.push_back({v, static_cast<std::size_t>(mate[v])});
      ++result.max_matching;
    }
  }
  result.value = vertex_count - result.max_matching;
  return result;
}

Delta01 delta01(const SupportGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges) edges.emplace_back(e.first, e.second);
  return delta01(g.vertices.size(), edges);
}

BarBounds bar_bounds(const Configuration& a, Budget& budget, BarOptions options) {
  BarBounds b;
  b.height = a.height();
  const auto cs = circuits(a);
  b.circuit_count = cs.size();
  const auto vertices = cmin(cs);
  b.delta = delta01(gamma_graph(a, vertices)).value;

  if (b.delta > b.height) {
    b.lo = b.delta;
    b.lo_rule = "bar >= delta01(Gamma_A)";
  } else {
    b.lo = b.height;
    b.lo_rule = "bar >= ht(I_A)";
  }

  try {
    b.mu = mu(a, budget);
    b.hi = b.mu;
    b.hi_rule = "bar <= mu(I_A)";
  } catch (const BudgetExceeded& e) {
    b.degraded = std::string("mu unavailable: ") + e.what();
  }
  if (options.assume_circuit_radical && (!b.hi || b.circuit_count < *b.hi)) {
    b.hi = b.circuit_count;
    b.hi_rule = "bar <= #circuits (circuits generate up to radical)";
  }
  if (options.known_radical_generators && (!b.hi || *options.known_radical_generators < *b.hi)) {
    b.hi = options.known_radical_generators;
    b.hi_rule = "bar <= size of a known radical generating set";
  }
  return b;
}

}  // namespace toricsplit
