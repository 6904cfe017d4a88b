#include "toricsplit/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace toricsplit {

namespace {

using RatMatrix = std::vector<RatVector>;

// Gauss-Jordan over Q. Returns the pivot columns; `a` is left in RREF.
std::vector<std::size_t> rref_in_place(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

RatMatrix to_rational(std::span<const LatticeVector> vs) {
  RatMatrix a;
  a.reserve(vs.size());
  for (const auto& v : vs) {
    RatVector row(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) row[j] = Rational(static_cast<long>(v[j]));
    a.push_back(std::move(row));
  }
  return a;
}

// Kernel of a rational matrix in canonical form (RREF of the kernel, rows
// made primitive integer).
std::vector<std::vector<Integer>> canonical_kernel(RatMatrix a, std::size_t cols) {
  const auto pivots = rref_in_place(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  RatMatrix kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    kernel.push_back(std::move(v));
  }
  rref_in_place(kernel, cols);

  std::vector<std::vector<Integer>> out;
  out.reserve(kernel.size());
  for (const auto& row : kernel) out.push_back(clear_denominators(row));
  return out;
}

// Row Hermite normal form of a full-row-rank integer matrix.
void hermite_rows(std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  const std::size_t k = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < k; ++c) {
    for (;;) {
      std::size_t best = k;
      for (std::size_t i = r; i < k; ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == k || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == k) break;
      std::swap(rows[best], rows[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < k; ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
}

LatticeVector to_lattice(const std::vector<Integer>& v) {
  std::vector<std::int64_t> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = to_int64(v[i]);
  return LatticeVector(std::move(c));
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix needs at least one row and one column");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long x : row) (*this)(i, j++) = x;
    ++i;
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

std::vector<Integer> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) s += (*this)(r, c) * static_cast<long>(v[c]);
    }
    out[r] = s;
  }
  return out;
}

bool IntMatrix::annihilates(const LatticeVector& v) const {
  const auto image = apply(v);
  return std::all_of(image.begin(), image.end(), [](const Integer& x) { return sgn(x) == 0; });
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(a[p][c]) == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::vector<RatVector> rational_kernel_basis(const IntMatrix& m) {
  std::vector<RatVector> out;
  for (auto& row : canonical_kernel(to_rational(m), m.cols())) {
    RatVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) v[j] = row[j];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  // Columns of `work` are kept in step with columns of `unimodular`; column
  // operations clear the rows of `work` one at a time.
  std::vector<std::vector<Integer>> work(n, std::vector<Integer>(rows));
  std::vector<std::vector<Integer>> unimodular(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < rows; ++i) work[j][i] = m(i, j);
    unimodular[j][j] = 1;
  }

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = pivot; j < n; ++j) {
        if (sgn(work[j][r]) == 0) continue;
        if (best == n || abs(work[j][r]) < abs(work[best][r])) best = j;
      }
      if (best == n) break;
      std::swap(work[best], work[pivot]);
      std::swap(unimodular[best], unimodular[pivot]);
      bool done = true;
      for (std::size_t j = pivot + 1; j < n; ++j) {
        if (sgn(work[j][r]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), work[j][r].get_mpz_t(), work[pivot][r].get_mpz_t());
        for (std::size_t i = r; i < rows; ++i) work[j][i] -= q * work[pivot][i];
        for (std::size_t i = 0; i < n; ++i) unimodular[j][i] -= q * unimodular[pivot][i];
        if (sgn(work[j][r]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(work[pivot][r]) != 0) ++pivot;
  }

  std::vector<std::vector<Integer>> basis(unimodular.begin() + static_cast<std::ptrdiff_t>(pivot), unimodular.end());
  hermite_rows(basis, n);

  std::vector<LatticeVector> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(to_lattice(b));
  return out;
}

std::size_t span_dimension(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  auto a = to_rational(vectors);
  return rref_in_place(a, vectors.front().size()).size();
}

std::size_t span_dimension(std::span<const RatVector> vectors) {
  if (vectors.empty()) return 0;
  RatMatrix a(vectors.begin(), vectors.end());
  return rref_in_place(a, vectors.front().size()).size();
}

Complement orthogonal_complement(std::span<const LatticeVector> vectors, std::size_t n) {
  for (const auto& v : vectors)
    if (v.size() != n) throw std::invalid_argument("vector length differs from ambient dimension");
  if (vectors.empty()) return IntMatrix::identity(n);
  const auto rows = canonical_kernel(to_rational(vectors), n);
  if (rows.empty()) return FullSpan{};
  return IntMatrix::from_rows(rows);
}

bool kernel_equals_span(const IntMatrix& m, std::span<const LatticeVector> vectors) {
  for (const auto& v : vectors)
    if (v.size() != m.cols() || !m.annihilates(v)) return false;
  return m.cols() - rank(m) == span_dimension(vectors);
}

std::optional<LatticeVector> signed_kernel_vector(const IntMatrix& m, const SupportSet& plus,
                                                  const SupportSet& minus) {
  if (plus.empty() || minus.empty()) throw std::invalid_argument("signed supports must be nonempty");
  if (plus.intersects(minus)) throw std::invalid_argument("signed supports must be disjoint");
  if (plus.indices().back() >= m.cols() || minus.indices().back() >= m.cols())
    throw std::invalid_argument("support index out of range");

  // u_i = 1 + y_i on plus, u_i = -1 - y_i on minus, y >= 0.
  std::vector<std::size_t> vars = plus.indices();
  vars.insert(vars.end(), minus.indices().begin(), minus.indices().end());
  std::vector<RatVector> a(m.rows(), RatVector(vars.size()));
  RatVector b(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const bool is_plus = k < plus.size();
      a[r][k] = is_plus ? Rational(m(r, vars[k])) : Rational(-m(r, vars[k]));
      b[r] -= a[r][k];
    }
  }
  const auto y = nonnegative_solution(a, b);
  if (!y) return std::nullopt;

  RatVector u(m.cols());
  for (std::size_t k = 0; k < vars.size(); ++k)
    u[vars[k]] = k < plus.size() ? Rational(1 + (*y)[k]) : Rational(-1 - (*y)[k]);
  return to_lattice(clear_denominators(u));
}

std::optional<RatVector> nonnegative_solution(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t p = a.size();
  const std::size_t q = p ? a.front().size() : 0;
  if (p == 0) return RatVector(q);

  // Tableau [A | I | b] with artificial basis; the last row holds reduced
  // costs of the phase-one objective (sum of artificials).
  const std::size_t width = q + p + 1;
  const std::size_t rhs = q + p;
  RatMatrix t(p + 1, RatVector(width));
  std::vector<std::size_t> basis(p);
  for (std::size_t i = 0; i < p; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < q; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][q + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = q + i;
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) t[p][j] -= t[i][j];
    t[p][rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (sgn(t[p][j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = p;
    Rational best_ratio;
    for (std::size_t i = 0; i < p; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == p || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == p) break;  // unbounded direction; cannot occur for phase one

    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i <= p; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (sgn(t[p][rhs]) != 0) return std::nullopt;
  RatVector x(q);
  for (std::size_t i = 0; i < p; ++i)
    if (basis[i] < q) x[basis[i]] = t[i][rhs];
  return x;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer does not fit in 64 bits: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

std::vector<Integer> clear_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (sgn(g) != 0 && g != 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace toricsplit
