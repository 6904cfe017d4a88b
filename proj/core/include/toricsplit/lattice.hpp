#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsplit {

/// Raised when a lattice computation leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// A sorted, duplicate-free set of 0-based coordinate indices.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> indices);
  SupportSet(std::initializer_list<std::size_t> indices)
      : SupportSet(std::vector<std::size_t>(indices)) {}

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t i) const;
  bool is_subset_of(const SupportSet& other) const;
  bool intersects(const SupportSet& other) const;

  auto operator<=>(const SupportSet&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

std::ostream& operator<<(std::ostream& os, const SupportSet& s);

/// An integer vector u = u+ - u-; as an element of ker_Z(A) it stands for the
/// binomial x^{u+} - x^{u-}.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  static LatticeVector zero(std::size_t n) { return LatticeVector(std::vector<std::int64_t>(n, 0)); }

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const;
  SupportSet support() const;
  SupportSet plus_support() const;
  SupportSet minus_support() const;
  std::vector<std::int64_t> positive_part() const;
  std::vector<std::int64_t> negative_part() const;
  std::int64_t max_abs() const;
  std::int64_t l1_norm() const;

  /// Divides out the gcd of the coordinates.
  LatticeVector primitive() const;
  /// Representative of {u, -u} whose first nonzero coordinate is positive.
  LatticeVector canonical_sign() const;

  /// Conformal order: this ⊑ other iff this+ <= other+ and this- <= other-.
  bool conformal_le(const LatticeVector& other) const;
  /// True when no coordinate has strictly opposite signs in the two vectors.
  bool sign_compatible(const LatticeVector& other) const;

  LatticeVector operator-() const;
  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector scaled(std::int64_t k) const;

  auto operator<=>(const LatticeVector&) const = default;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::string to_string(const LatticeVector& v);

/// Canonical ±-class form of a list: sign-normalized, sorted, deduplicated.
std::vector<LatticeVector> canonical_classes(std::span<const LatticeVector> vectors);

}  // namespace toricsplit
