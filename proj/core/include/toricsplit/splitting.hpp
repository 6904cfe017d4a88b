#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricsplit/budget.hpp"
#include "toricsplit/exactla.hpp"
#include "toricsplit/supports.hpp"
#include "toricsplit/toric.hpp"

namespace toricsplit {

enum class SplitKind { splitting, radical_splitting };

std::string to_string(SplitKind kind);

/// A partition C = C_1 ∪ ... ∪ C_r of a generator set with every span_Q(C_i)
/// a proper subspace of ker_Q(A), plus matrices A_i with ker_Q(A_i) = span_Q(C_i).
struct SplitCertificate {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> span_dims;
  std::size_t kernel_dim = 0;
  std::vector<IntMatrix> witness_configs;
  SplitKind kind = SplitKind::splitting;
};

/// Searches for a partition of `generators` into exactly r parts with proper
/// spans. Exhaustive: nullopt means no such partition exists. Parts are
/// labelled in order of their smallest member. Throws std::invalid_argument
/// for r < 2, r > |C| or an empty set; BudgetExceeded when the search runs
/// out of budget.
std::optional<SplitCertificate> find_cover(const Configuration& a, const GeneratorSet& generators, std::size_t r,
                                           Budget& budget);

struct SubconfigurationReport {
  std::vector<IntMatrix> matrices;
  std::vector<std::size_t> span_dims;
  /// ker_Q(A_i) = span_Q(C_i), checked by inclusion and dimension.
  std::vector<bool> kernel_matches;
  std::size_t kernel_dim = 0;
};

/// A_i := orthogonal complement of span_Q(C_i). Throws std::invalid_argument
/// if a part is empty or spans all of ker_Q(A) (then I_{A_i} = I_A).
SubconfigurationReport build_subconfigurations(const Configuration& a, const GeneratorSet& generators,
                                               const std::vector<std::vector<std::size_t>>& parts);

struct CertificateCheck {
  bool covers = false;
  bool proper_spans = false;
  bool kernels_match = false;
  bool ok() const { return covers && proper_spans && kernels_match; }
};

/// Recomputes everything a certificate claims from scratch.
CertificateCheck verify_certificate(const Configuration& a, const GeneratorSet& generators,
                                    const SplitCertificate& certificate);

/// A value-or-interval with the rule that licenses it.
struct Bound {
  bool applicable = true;
  std::size_t lo = 0;
  std::optional<std::size_t> hi;
  std::string method;

  bool exact() const { return applicable && hi && *hi == lo; }
};

struct SplitOptions {
  bool assume_circuit_radical = false;
  /// A generating set of I_A up to radical, from the catalogue or the user.
  std::optional<GeneratorSet> radical_generators;
};

struct SplitReport {
  std::size_t height = 0;
  Bound split;
  Bound split_rad;
  std::optional<std::size_t> mu;
  std::optional<bool> unique_minimal_generators;
  std::optional<BarBounds> bar;
  std::optional<SplitCertificate> split_certificate;
  std::optional<SplitCertificate> radical_certificate;
  /// The sets the certificates index into.
  std::optional<GeneratorSet> minimal_generators;
  std::optional<GeneratorSet> radical_generators;
  std::vector<std::string> notes;
  bool degraded = false;
};

SplitReport split_numbers(const Configuration& a, Budget& budget, const SplitOptions& options = {});

/// Smallest r for which find_cover succeeds, with its certificate; nullopt
/// when no r works (e.g. the generators span a space of dimension <= 1).
std::optional<SplitCertificate> minimal_cover(const Configuration& a, const GeneratorSet& generators, Budget& budget);

struct SimplicialShape {
  bool simplicial = false;
  bool full_parametrization = false;
  /// Column index of the d_k e_k column for each row k.
  std::vector<std::size_t> diagonal_columns;
};

/// Up to column order, the matrix is [diag(d_1..d_m) | T] with d_k > 0 and
/// T nonnegative with no zero column; full parametrization when T has no zero entry.
SimplicialShape simplicial_shape(const IntMatrix& a);

struct RuleHit {
  std::string rule;
  std::string conclusion;
  /// "any", "0" or "p".
  std::string characteristic;
};

std::vector<RuleHit> classify_sufficient_conditions(const Configuration& a, std::optional<std::size_t> known_bar,
                                                    Budget& budget);

}  // namespace toricsplit
