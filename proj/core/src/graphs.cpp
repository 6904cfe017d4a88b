#include "toricsplit/graphs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricsplit {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right,
                               std::vector<std::pair<std::size_t, std::size_t>> edges)
    : left_(left), right_(right), edges_(std::move(edges)), index_(left * right, -1) {
  if (left == 0 || right == 0) throw std::invalid_argument("bipartite graph needs vertices on both sides");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [i, j] = edges_[e];
    if (i >= left_ || j >= right_)
      throw std::invalid_argument("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") out of range");
    auto& slot = index_[i * right_ + j];
    if (slot >= 0)
      throw std::invalid_argument("duplicate edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    slot = static_cast<std::ptrdiff_t>(e);
  }

  std::vector<std::size_t> parent(vertex_count());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [i, j] : edges_) parent[find(i)] = find(left_ + j);
  for (std::size_t v = 1; v < parent.size(); ++v)
    if (find(v) != find(0)) throw std::invalid_argument("bipartite graph is not connected");
}

BipartiteGraph BipartiteGraph::complete(std::size_t m, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) edges.emplace_back(i, j);
  return BipartiteGraph(m, n, std::move(edges));
}

std::ptrdiff_t BipartiteGraph::edge_index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  if (u >= left_ || v < left_ || v >= vertex_count()) return -1;
  return index_[u * right_ + (v - left_)];
}

namespace {

std::vector<std::size_t> walk_edges(const EvenCycle& c, const BipartiteGraph& g, std::size_t parity) {
  std::vector<std::size_t> out;
  const auto& vs = c.vertices;
  for (std::size_t k = parity; k < vs.size(); k += 2) {
    const auto e = g.edge_index(vs[k], vs[(k + 1) % vs.size()]);
    if (e < 0) throw std::invalid_argument("cycle uses a non-edge");
    out.push_back(static_cast<std::size_t>(e));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> EvenCycle::odd_edges(const BipartiteGraph& g) const { return walk_edges(*this, g, 0); }

std::vector<std::size_t> EvenCycle::even_edges(const BipartiteGraph& g) const { return walk_edges(*this, g, 1); }

LatticeVector EvenCycle::vector(const BipartiteGraph& g) const {
  std::vector<std::int64_t> v(g.edges().size(), 0);
  for (auto e : odd_edges(g)) v[e] = 1;
  for (auto e : even_edges(g)) v[e] = -1;
  return LatticeVector(std::move(v));
}

Configuration incidence_configuration(const BipartiteGraph& g) {
  IntMatrix m(g.vertex_count(), g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    m(g.left_vertex(g.edges()[e].first), e) = 1;
    m(g.right_vertex(g.edges()[e].second), e) = 1;
  }
  return Configuration(std::move(m));
}

std::vector<EvenCycle> chordless_even_cycles(const BipartiteGraph& g) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& [i, j] : g.edges()) {
    adj[g.left_vertex(i)].push_back(g.right_vertex(j));
    adj[g.right_vertex(j)].push_back(g.left_vertex(i));
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto adjacent = [&](std::size_t u, std::size_t v) { return g.edge_index(u, v) >= 0; };

  std::vector<EvenCycle> out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(nv, false);

  // Grows induced paths from the cycle's smallest vertex s; a path closes into
  // a chordless cycle when its new end is adjacent to s and nothing else on it.
  auto extend = [&](auto&& self) -> void {
    const std::size_t s = path.front();
    for (auto w : adj[path.back()]) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k) chord = adjacent(w, path[k]);
      if (chord) continue;
      if (path.size() >= 2 && adjacent(w, s)) {
        if (path.size() >= 3 && path[1] < w) {
          EvenCycle c;
          c.vertices = path;
          c.vertices.push_back(w);
          out.push_back(std::move(c));
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = true;
      self(self);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < nv; ++s) {
    path = {s};
    on_path[s] = true;
    extend(extend);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end(), [](const EvenCycle& a, const EvenCycle& b) { return a.vertices < b.vertices; });
  return out;
}

GeneratorSet cycle_generators(const BipartiteGraph& g) {
  std::vector<LatticeVector> vs;
  for (const auto& c : chordless_even_cycles(g)) vs.push_back(c.vector(g));
  return GeneratorSet(std::move(vs), GeneratorMode::minimal_generators, "chordless even cycles");
}

KmnSplit kmn_split(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("kmn_split needs m, n >= 2");
  if (m == 2 && n == 2) throw std::invalid_argument("kmn_split: I_{K_{2,2}} is principal");

  KmnSplit s;
  s.m = m;
  s.n = n;
  s.swapped = n > m;
  const std::size_t p = s.swapped ? n : m;
  auto v1 = [&](std::size_t k) { return s.swapped ? m + k : k; };
  auto in_v1 = [&](std::size_t v) { return s.swapped ? v >= m : v < m; };

  for (std::size_t v = 0; v < m + n; ++v) {
    const bool side = in_v1(v);
    if (!side || v != v1(0)) s.vertex_sets[0].push_back(v);
    if (!side || v != v1(p - 1)) s.vertex_sets[1].push_back(v);
    if (!side || v == v1(0) || v == v1(p - 1)) s.vertex_sets[2].push_back(v);
  }

  const auto g = BipartiteGraph::complete(m, n);
  const auto cycles = chordless_even_cycles(g);
  s.verified = true;
  for (const auto& c : cycles) {
    std::vector<std::size_t> ends;
    for (auto v : c.vertices)
      if (in_v1(v)) ends.push_back(v);
    std::sort(ends.begin(), ends.end());
    std::size_t part;
    if (ends.front() != v1(0)) part = 0;
    else if (ends.back() != v1(p - 1)) part = 1;
    else part = 2;
    s.assignment.push_back(part);
    ++s.counts[part];
    const auto& set = s.vertex_sets[part];
    for (auto v : c.vertices)
      if (!std::binary_search(set.begin(), set.end(), v)) s.verified = false;
  }
  return s;
}

GraphSplitReport graph_split_numbers(const BipartiteGraph& g, Budget& budget) {
  GraphSplitReport report;
  const auto gens = cycle_generators(g);
  report.generator_count = gens.size();
  if (gens.size() <= 1) {
    const std::string why = gens.empty() ? "not applicable (zero ideal)" : "not applicable (principal)";
    report.split = {false, 0, std::nullopt, why};
    report.split_rad = report.split;
    return report;
  }
  const auto a = incidence_configuration(g);
  report.certificate = minimal_cover(a, gens, budget);
  if (!report.certificate) throw std::logic_error("no proper-span cover of the chordless cycles");
  const std::size_t r = report.certificate->parts.size();
  report.split = {true, r, r, "unique minimal generating set (chordless even cycles): least r with a proper-span cover"};
  report.split_rad = {true, r, r, "bipartite graph: Split_rad = Split"};
  return report;
}

}  // namespace toricsplit
