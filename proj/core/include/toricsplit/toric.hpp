#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricsplit/budget.hpp"
#include "toricsplit/exactla.hpp"
#include "toricsplit/lattice.hpp"

namespace toricsplit {

class NotPointedError : public std::invalid_argument {
 public:
  explicit NotPointedError(const std::string& what) : std::invalid_argument(what) {}
};

/// True iff ker_Z(A) ∩ N^n = {0}, i.e. {A u = 0, u >= 0, sum u = 1} is infeasible.
bool check_pointed(const IntMatrix& a);

/// A pointed vector configuration; column j of the matrix is a_j.
class Configuration {
 public:
  /// Throws NotPointedError when the columns do not span a pointed semigroup.
  explicit Configuration(IntMatrix matrix, std::string name = {});

  const IntMatrix& matrix() const { return matrix_; }
  const std::string& name() const { return name_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  std::size_t rank() const { return rank_; }
  /// ht(I_A) = dim ker_Q(A).
  std::size_t height() const { return cols() - rank_; }

  bool contains(const LatticeVector& u) const { return u.size() == cols() && matrix_.annihilates(u); }

 private:
  IntMatrix matrix_;
  std::string name_;
  std::size_t rank_;
};

/// A multidegree A·v with v ∈ N^n.
class ADegree {
 public:
  static ADegree of(const Configuration& a, std::span<const std::int64_t> v);

  const std::vector<Integer>& value() const { return value_; }
  auto operator<=>(const ADegree& other) const { return value_ <=> other.value_; }
  bool operator==(const ADegree&) const = default;

 private:
  explicit ADegree(std::vector<Integer> v) : value_(std::move(v)) {}
  std::vector<Integer> value_;
};

/// Integer functional c with c·a_j >= 1 for every column (primitive).
/// Throws NotPointedError when none exists.
std::vector<Integer> positive_grading(const IntMatrix& a);
inline std::vector<Integer> positive_grading(const Configuration& a) { return positive_grading(a.matrix()); }

/// c·b for a grading c.
Integer graded_value(std::span<const Integer> grading, const ADegree& b);

/// All v ∈ N^n with A v = b, sorted lexicographically.
std::vector<std::vector<std::int64_t>> fiber(const Configuration& a, const ADegree& b, Budget& budget);

struct GraverOptions {
  std::size_t element_cap = 100000;
};

/// Graver basis by completion, one representative per ±pair (first nonzero
/// coordinate positive), sorted.
std::vector<LatticeVector> graver_basis(const Configuration& a, Budget& budget, GraverOptions options = {});

/// Completion from an arbitrary generating set of the lattice; exposed so
/// callers can check independence from the starting basis.
std::vector<LatticeVector> graver_completion(std::span<const LatticeVector> lattice_generators, Budget& budget,
                                             GraverOptions options = {});

enum class GeneratorMode { minimal_generators, radical_generators, user_supplied };

std::string to_string(GeneratorMode mode);

/// Lattice vectors standing for binomials that generate I_A (or generate it
/// up to radical). Duplicate-free up to sign.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  /// Throws std::invalid_argument on zero vectors, mixed lengths or ±duplicates.
  GeneratorSet(std::vector<LatticeVector> vectors, GeneratorMode mode, std::string provenance);

  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const LatticeVector& operator[](std::size_t i) const { return vectors_[i]; }
  GeneratorMode mode() const { return mode_; }
  const std::string& provenance() const { return provenance_; }

  /// Throws std::invalid_argument if some vector is not in ker_Z(A).
  void validate(const Configuration& a) const;

 private:
  std::vector<LatticeVector> vectors_;
  GeneratorMode mode_ = GeneratorMode::user_supplied;
  std::string provenance_;
};

/// Per-degree data of the minimal generator computation.
struct DegreeComponents {
  ADegree degree;
  Integer graded_value;
  std::size_t fiber_size = 0;
  /// Connected components of the fiber under moves of strictly lower degree.
  std::vector<std::vector<std::vector<std::int64_t>>> components;
  std::vector<LatticeVector> chosen;
  /// Exactly two components, each a single point.
  bool indispensable = false;
};

struct MarkovResult {
  GeneratorSet generators;
  std::vector<DegreeComponents> degrees;

  /// Every minimal generator is indispensable, so the minimal generating set is unique.
  bool unique() const;
};

/// A minimal binomial generating set of I_A, computed from the fibers of the
/// Graver degrees. In each such degree the number of minimal generators is
/// (#components of the fiber under lower-degree moves) - 1; bridges are
/// chosen as the lexicographically least Graver elements joining components.
MarkovResult minimal_markov(const Configuration& a, Budget& budget, GraverOptions options = {});

/// μ(I_A).
std::size_t mu(const Configuration& a, Budget& budget);

}  // namespace toricsplit
