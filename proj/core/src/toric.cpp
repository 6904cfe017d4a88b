#include "toricsplit/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toricsplit {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::int64_t checked_narrow(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw OverflowError("fiber arithmetic left the 64-bit range");
  return static_cast<std::int64_t>(x);
}

// Enumerates fibers by branching on the coordinates outside a column basis
// and solving for the basis coordinates.
class FiberEnumerator {
 public:
  explicit FiberEnumerator(const Configuration& a) : a_(a), m_(a.rows()), n_(a.cols()) {
    const auto grading = positive_grading(a);
    weight_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Integer w = 0;
      for (std::size_t r = 0; r < m_; ++r) w += grading[r] * a.matrix()(r, j);
      weight_[j] = to_int64(w);
    }
    grading_.reserve(m_);
    for (const auto& g : grading) grading_.push_back(to_int64(g));

    entries_.assign(m_, std::vector<std::int64_t>(n_));
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t j = 0; j < n_; ++j) entries_[r][j] = to_int64(a.matrix()(r, j));

    choose_basis();
  }

  std::vector<std::vector<std::int64_t>> enumerate(const ADegree& b, Budget& budget) const {
    std::vector<std::int64_t> target(m_);
    __int128 total = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      target[r] = to_int64(b.value()[r]);
      total += static_cast<__int128>(grading_[r]) * target[r];
    }
    std::vector<std::vector<std::int64_t>> out;
    if (total < 0) return out;
    std::vector<std::int64_t> v(n_, 0);
    search(0, checked_narrow(total), target, v, out, budget);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void choose_basis() {
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return weight_[x] < weight_[y]; });

    const std::size_t r = a_.rank();
    std::vector<std::vector<Integer>> chosen_cols;
    for (std::size_t j : order) {
      if (basis_.size() == r) break;
      auto trial = chosen_cols;
      trial.push_back(a_.matrix().column(j));
      if (rank(IntMatrix::from_rows(trial)) == trial.size()) {
        chosen_cols = std::move(trial);
        basis_.push_back(j);
      }
    }
    std::vector<bool> in_basis(n_, false);
    for (auto j : basis_) in_basis[j] = true;
    for (std::size_t j : order)
      if (!in_basis[j]) free_.push_back(j);
    // Wide ranges last, so the deepest levels branch least.
    std::reverse(free_.begin(), free_.end());

    if (r == 0) return;
    std::vector<std::vector<Integer>> rows_so_far;
    for (std::size_t row = 0; row < m_ && solve_rows_.size() < r; ++row) {
      std::vector<Integer> restricted;
      for (auto j : basis_) restricted.push_back(a_.matrix()(row, j));
      auto trial = rows_so_far;
      trial.push_back(restricted);
      if (rank(IntMatrix::from_rows(trial)) == trial.size()) {
        rows_so_far = std::move(trial);
        solve_rows_.push_back(row);
      }
    }

    // Inverse of the square block by Gauss-Jordan; adj = det * inverse.
    std::vector<RatVector> aug(r, RatVector(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) aug[i][k] = rows_so_far[i][k];
      aug[i][r + i] = 1;
    }
    Rational det = 1;
    for (std::size_t c = 0; c < r; ++c) {
      std::size_t p = c;
      while (sgn(aug[p][c]) == 0) ++p;
      if (p != c) {
        std::swap(aug[p], aug[c]);
        det = -det;
      }
      det *= aug[c][c];
      const Rational inv = 1 / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t i = 0; i < r; ++i) {
        if (i == c || sgn(aug[i][c]) == 0) continue;
        const Rational f = aug[i][c];
        for (std::size_t k = 0; k < 2 * r; ++k) aug[i][k] -= f * aug[c][k];
      }
    }
    det_ = to_int64(det.get_num());
    adj_.assign(r, std::vector<std::int64_t>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        Rational e = det * aug[i][r + k];
        adj_[i][k] = to_int64(e.get_num());
      }
  }

  void search(std::size_t level, std::int64_t remaining, std::vector<std::int64_t>& rhs, std::vector<std::int64_t>& v,
              std::vector<std::vector<std::int64_t>>& out, Budget& budget) const {
    budget.charge(1, "fiber enumeration");
    if (level == free_.size()) {
      solve_leaf(rhs, v, out);
      return;
    }
    const std::size_t j = free_[level];
    const std::int64_t bound = remaining / weight_[j];
    for (std::int64_t k = 0; k <= bound; ++k) {
      v[j] = k;
      search(level + 1, remaining - k * weight_[j], rhs, v, out, budget);
      for (std::size_t r = 0; r < m_; ++r) rhs[r] = checked_sub(rhs[r], entries_[r][j]);
    }
    for (std::size_t r = 0; r < m_; ++r)
      rhs[r] = checked_narrow(static_cast<__int128>(rhs[r]) + static_cast<__int128>(bound + 1) * entries_[r][j]);
    v[j] = 0;
  }

  void solve_leaf(const std::vector<std::int64_t>& rhs, std::vector<std::int64_t>& v,
                  std::vector<std::vector<std::int64_t>>& out) const {
    const std::size_t r = basis_.size();
    for (std::size_t i = 0; i < r; ++i) {
      __int128 s = 0;
      for (std::size_t k = 0; k < r; ++k) s += static_cast<__int128>(adj_[i][k]) * rhs[solve_rows_[k]];
      if (s % det_ != 0) return;
      const __int128 x = s / det_;
      if (x < 0) return;
      v[basis_[i]] = checked_narrow(x);
    }
    for (std::size_t row = 0; row < m_; ++row) {
      __int128 s = 0;
      for (std::size_t i = 0; i < r; ++i) s += static_cast<__int128>(entries_[row][basis_[i]]) * v[basis_[i]];
      if (s != rhs[row]) {
        for (auto j : basis_) v[j] = 0;
        return;
      }
    }
    out.push_back(v);
    for (auto j : basis_) v[j] = 0;
  }

  const Configuration& a_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::int64_t> weight_;
  std::vector<std::int64_t> grading_;
  std::vector<std::vector<std::int64_t>> entries_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> solve_rows_;
  std::vector<std::vector<std::int64_t>> adj_;
  std::int64_t det_ = 1;
};

// Sign masks used as a cheap pre-filter for the conformal order.
struct Masked {
  LatticeVector v;
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

Masked masked(LatticeVector v) {
  Masked m{std::move(v)};
  const std::size_t n = m.v.size();
  if (n > 64) {
    m.pos = m.neg = ~std::uint64_t{0};
    return m;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m.v[i] > 0) m.pos |= std::uint64_t{1} << i;
    if (m.v[i] < 0) m.neg |= std::uint64_t{1} << i;
  }
  return m;
}

bool mask_allows(const Masked& reducer, const Masked& target) {
  return (reducer.pos & ~target.pos) == 0 && (reducer.neg & ~target.neg) == 0;
}

// Subtracts conformal reducers until none applies.
LatticeVector normal_form(LatticeVector s, const std::vector<Masked>& set) {
  for (;;) {
    if (s.is_zero()) return s;
    const Masked ms = masked(s);
    bool reduced = false;
    for (const auto& g : set) {
      if (!mask_allows(g, ms) || !g.v.conformal_le(s)) continue;
      std::int64_t times = INT64_MAX;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (g.v[i] != 0) times = std::min(times, s[i] / g.v[i]);
      s = s - g.v.scaled(times);
      reduced = true;
      break;
    }
    if (!reduced) return s;
  }
}

}  // namespace

bool check_pointed(const IntMatrix& a) {
  std::vector<RatVector> rows(a.rows() + 1, RatVector(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[r][j] = a(r, j);
  for (std::size_t j = 0; j < a.cols(); ++j) rows[a.rows()][j] = 1;
  RatVector rhs(a.rows() + 1);
  rhs[a.rows()] = 1;
  return !nonnegative_solution(rows, rhs).has_value();
}

Configuration::Configuration(IntMatrix matrix, std::string name)
    : matrix_(std::move(matrix)), name_(std::move(name)), rank_(toricsplit::rank(matrix_)) {
  if (!check_pointed(matrix_)) throw NotPointedError("configuration is not pointed: ker_Z(A) meets N^n outside 0");
}

ADegree ADegree::of(const Configuration& a, std::span<const std::int64_t> v) {
  for (auto x : v)
    if (x < 0) throw std::invalid_argument("an A-degree needs a nonnegative exponent vector");
  return ADegree(a.matrix().apply(v));
}

std::vector<Integer> positive_grading(const IntMatrix& a) {
  // c = c+ - c-, s >= 0 slack: sum_r a_rj (c+_r - c-_r) - s_j = 1.
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<RatVector> rows(n, RatVector(2 * m + n));
  RatVector rhs(n, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < m; ++r) {
      rows[j][r] = a(r, j);
      rows[j][m + r] = -a(r, j);
    }
    rows[j][2 * m + j] = -1;
  }
  const auto sol = nonnegative_solution(rows, rhs);
  if (!sol) throw NotPointedError("no positive grading exists: configuration is not pointed");
  RatVector c(m);
  for (std::size_t r = 0; r < m; ++r) c[r] = (*sol)[r] - (*sol)[m + r];
  return clear_denominators(c);
}

Integer graded_value(std::span<const Integer> grading, const ADegree& b) {
  Integer s = 0;
  for (std::size_t r = 0; r < grading.size(); ++r) s += grading[r] * b.value()[r];
  return s;
}

std::vector<std::vector<std::int64_t>> fiber(const Configuration& a, const ADegree& b, Budget& budget) {
  return FiberEnumerator(a).enumerate(b, budget);
}

std::vector<LatticeVector> graver_completion(std::span<const LatticeVector> lattice_generators, Budget& budget,
                                             GraverOptions options) {
  std::vector<Masked> g;
  auto add = [&](LatticeVector v) {
    if (v.is_zero()) return;
    for (const auto& e : g)
      if (e.v == v) return;
    g.push_back(masked(std::move(v)));
    if (g.size() > options.element_cap)
      throw BudgetExceeded("Graver completion exceeded the element cap of " + std::to_string(options.element_cap));
  };
  for (const auto& v : lattice_generators) {
    add(v);
    add(-v);
  }

  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      budget.charge(1, "Graver completion");
      if (g[i].v.sign_compatible(g[j].v)) continue;
      auto s = normal_form(g[i].v + g[j].v, g);
      if (!s.is_zero()) add(std::move(s));
    }
  }

  std::vector<LatticeVector> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool is_minimal = true;
    for (std::size_t k = 0; k < g.size() && is_minimal; ++k) {
      if (k == i || !mask_allows(g[k], g[i])) continue;
      if (g[k].v.conformal_le(g[i].v) && g[k].v != g[i].v) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(g[i].v);
  }
  return canonical_classes(minimal);
}

std::vector<LatticeVector> graver_basis(const Configuration& a, Budget& budget, GraverOptions options) {
  const auto basis = integer_kernel_basis(a.matrix());
  return graver_completion(basis, budget, options);
}

std::string to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::minimal_generators: return "minimal_generators";
    case GeneratorMode::radical_generators: return "radical_generators";
    case GeneratorMode::user_supplied: return "user_supplied";
  }
  return "unknown";
}

GeneratorSet::GeneratorSet(std::vector<LatticeVector> vectors, GeneratorMode mode, std::string provenance)
    : vectors_(std::move(vectors)), mode_(mode), provenance_(std::move(provenance)) {
  std::vector<LatticeVector> seen;
  for (const auto& v : vectors_) {
    if (v.size() != vectors_.front().size()) throw std::invalid_argument("generator vectors differ in length");
    if (v.is_zero()) throw std::invalid_argument("zero vector in generator set");
    seen.push_back(v.canonical_sign());
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("generator set contains a vector twice up to sign");
}

void GeneratorSet::validate(const Configuration& a) const {
  for (const auto& v : vectors_)
    if (!a.contains(v)) throw std::invalid_argument("generator " + to_string(v) + " is not in ker_Z(A)");
}

bool MarkovResult::unique() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComponents& d) {
    return d.chosen.empty() || d.indispensable;
  });
}

MarkovResult minimal_markov(const Configuration& a, Budget& budget, GraverOptions options) {
  const auto graver = graver_basis(a, budget, options);
  const auto grading = positive_grading(a);
  const FiberEnumerator enumerator(a);

  // Graver elements grouped by degree A·g+ (= A·g-).
  std::map<ADegree, std::vector<LatticeVector>> by_degree;
  for (const auto& g : graver) {
    const auto plus = g.positive_part();
    by_degree[ADegree::of(a, plus)].push_back(g);
  }

  std::vector<std::pair<Integer, ADegree>> order;
  for (const auto& [degree, members] : by_degree) order.emplace_back(graded_value(grading, degree), degree);
  std::sort(order.begin(), order.end());

  MarkovResult result;
  std::vector<LatticeVector> generators;
  for (const auto& [value, degree] : order) {
    const auto points = enumerator.enumerate(degree, budget);
    auto index_of = [&](const std::vector<std::int64_t>& v) {
      return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), v) - points.begin());
    };

    // Two monomials of this degree are congruent modulo lower-degree moves
    // iff they are linked by a chain of pairs with a common variable.
    UnionFind uf(points.size());
    for (std::size_t i = 0; i < a.cols(); ++i) {
      std::size_t first = points.size();
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (points[p][i] == 0) continue;
        if (first == points.size()) first = p;
        else uf.unite(first, p);
      }
    }
    std::map<std::size_t, std::vector<std::vector<std::int64_t>>> comps;
    for (std::size_t p = 0; p < points.size(); ++p) comps[uf.find(p)].push_back(points[p]);

    DegreeComponents data{degree, value, points.size(), {}, {}, false};
    for (auto& [root, members] : comps) data.components.push_back(std::move(members));

    if (data.components.size() > 1) {
      for (const auto& g : by_degree.at(degree)) {
        const std::size_t plus = index_of(g.positive_part());
        const std::size_t minus = index_of(g.negative_part());
        if (uf.unite(plus, minus)) data.chosen.push_back(g);
      }
      if (data.chosen.size() + 1 != data.components.size())
        throw std::logic_error("Graver elements failed to connect the fiber components");
      data.indispensable = data.components.size() == 2 && data.components[0].size() == 1 &&
                           data.components[1].size() == 1;
      generators.insert(generators.end(), data.chosen.begin(), data.chosen.end());
    }
    result.degrees.push_back(std::move(data));
  }
  result.generators = GeneratorSet(std::move(generators), GeneratorMode::minimal_generators,
                                   "fiber connectivity over Graver degrees");
  return result;
}

std::size_t mu(const Configuration& a, Budget& budget) { return minimal_markov(a, budget).generators.size(); }

}  // namespace toricsplit
