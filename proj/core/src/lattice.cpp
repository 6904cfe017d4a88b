#include "toricsplit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toricsplit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("lattice coordinate overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("lattice coordinate overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("lattice coordinate overflow in multiplication");
  return r;
}

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool SupportSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool SupportSet::is_subset_of(const SupportSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

bool SupportSet::intersects(const SupportSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const SupportSet& s) {
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << s.indices()[k] + 1;
  return os << '}';
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

SupportSet LatticeVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) s.push_back(i);
  return SupportSet(std::move(s));
}

SupportSet LatticeVector::plus_support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > 0) s.push_back(i);
  return SupportSet(std::move(s));
}

SupportSet LatticeVector::minus_support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] < 0) s.push_back(i);
  return SupportSet(std::move(s));
}

std::vector<std::int64_t> LatticeVector::positive_part() const {
  std::vector<std::int64_t> p(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) p[i] = coords_[i] > 0 ? coords_[i] : 0;
  return p;
}

std::vector<std::int64_t> LatticeVector::negative_part() const {
  std::vector<std::int64_t> p(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) p[i] = coords_[i] < 0 ? -coords_[i] : 0;
  return p;
}

std::int64_t LatticeVector::max_abs() const {
  std::int64_t m = 0;
  for (auto x : coords_) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::int64_t LatticeVector::l1_norm() const {
  std::int64_t s = 0;
  for (auto x : coords_) s = checked_add(s, x < 0 ? -x : x);
  return s;
}

LatticeVector LatticeVector::primitive() const {
  std::int64_t g = 0;
  for (auto x : coords_) g = std::gcd(g, x);
  if (g <= 1) return *this;
  std::vector<std::int64_t> c(coords_);
  for (auto& x : c) x /= g;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::canonical_sign() const {
  for (auto x : coords_) {
    if (x > 0) return *this;
    if (x < 0) return -*this;
  }
  return *this;
}

bool LatticeVector::conformal_le(const LatticeVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const std::int64_t a = coords_[i];
    const std::int64_t b = other.coords_[i];
    if (a > 0 ? (b < a) : a < 0 ? (b > a) : false) return false;
  }
  return true;
}

bool LatticeVector::sign_compatible(const LatticeVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if ((coords_[i] > 0 && other.coords_[i] < 0) || (coords_[i] < 0 && other.coords_[i] > 0)) return false;
  }
  return true;
}

LatticeVector LatticeVector::operator-() const {
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(0, coords_[i]);
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(coords_[i], other.coords_[i]);
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(coords_[i], other.coords_[i]);
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::scaled(std::int64_t k) const {
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(coords_[i], k);
  return LatticeVector(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<LatticeVector> canonical_classes(std::span<const LatticeVector> vectors) {
  std::vector<LatticeVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(v.canonical_sign());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toricsplit
