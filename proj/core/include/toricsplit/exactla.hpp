#pragma once

// Exact linear algebra over Z and Q. Nothing in here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <variant>
#include <vector>

#include "toricsplit/lattice.hpp"

namespace toricsplit {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Dense row-major integer matrix with at least one row and one column.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::vector<Integer> column(std::size_t c) const;

  /// M * v, exact.
  std::vector<Integer> apply(std::span<const std::int64_t> v) const;
  std::vector<Integer> apply(const LatticeVector& v) const { return apply(v.coords()); }
  bool annihilates(const LatticeVector& v) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Rank over Q, by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

/// Basis of ker_Q(M), canonicalized: the reduced row echelon form of the
/// kernel, each row scaled to a primitive integer vector with positive leading
/// entry. Returned as rationals with unit denominators.
std::vector<RatVector> rational_kernel_basis(const IntMatrix& m);

/// Lattice basis of ker_Z(M) in row Hermite normal form (unique for the
/// lattice, hence independent of elimination order).
std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& m);

/// dim_Q span(vectors); 0 for the empty set.
std::size_t span_dimension(std::span<const LatticeVector> vectors);
std::size_t span_dimension(std::span<const RatVector> vectors);

/// Marker for orthogonal_complement when the vectors already span Q^n.
struct FullSpan {
  bool operator==(const FullSpan&) const = default;
};

using Complement = std::variant<IntMatrix, FullSpan>;

/// Integer matrix whose rows span span_Q(vectors)^⊥, so that its rational
/// kernel is span_Q(vectors). Rows are primitive with positive leading entry.
Complement orthogonal_complement(std::span<const LatticeVector> vectors, std::size_t n);

/// ker_Q(m) == span_Q(vectors), checked as inclusion plus equal dimension.
bool kernel_equals_span(const IntMatrix& m, std::span<const LatticeVector> vectors);

/// An integer u with M u = 0, u_i > 0 on plus, u_i < 0 on minus and zero
/// elsewhere, if one exists. Decided exactly by rational feasibility; the
/// returned vector is primitive. Throws std::invalid_argument when the
/// supports are empty, overlap or are out of range.
std::optional<LatticeVector> signed_kernel_vector(const IntMatrix& m, const SupportSet& plus,
                                                  const SupportSet& minus);

/// Nonnegative solution of A x = b over Q (phase-one simplex, Bland's rule),
/// or nullopt when none exists. A is given by rows.
std::optional<RatVector> nonnegative_solution(const std::vector<RatVector>& a, const RatVector& b);

/// Converts an exact integer to int64, throwing OverflowError when it does not fit.
std::int64_t to_int64(const Integer& z);

/// Scales a rational vector by the lcm of its denominators and divides out
/// the content, keeping the direction.
std::vector<Integer> clear_denominators(const RatVector& v);

}  // namespace toricsplit
