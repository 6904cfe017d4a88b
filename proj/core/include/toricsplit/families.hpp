#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricsplit/exactla.hpp"
#include "toricsplit/lattice.hpp"
#include "toricsplit/toric.hpp"

namespace toricsplit {

/// A recorded quantity. The characteristic tag is "0", "p" or "any"; the
/// note narrows it further when needed (e.g. a single prime).
struct CatalogueValue {
  std::string quantity;
  std::int64_t value = 0;
  std::string characteristic = "any";
  std::string note;
};

struct NamedGeneratorSet {
  std::string name;
  std::string characteristic = "any";
  std::string note;
  GeneratorSet set;
};

/// A recorded cover of one of the entry's generator sets (0-based indices).
struct CatalogueCover {
  std::string generator_set;
  std::string characteristic = "any";
  std::vector<std::vector<std::size_t>> parts;
};

struct CatalogueEntry {
  std::string id;
  std::string description;
  IntMatrix matrix{1, 1};
  /// Set when the configuration is the incidence matrix of K_{m,n}.
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;
  std::vector<NamedGeneratorSet> generator_sets;
  std::vector<CatalogueCover> covers;
  std::vector<IntMatrix> witness_matrices;
  std::vector<LatticeVector> extra_vectors;
  std::vector<SupportSet> cmin;
  std::vector<CatalogueValue> values;
  /// The circuits are known to generate I_A up to radical.
  bool circuits_generate_radical = false;

  const NamedGeneratorSet* generator_set(const std::string& name) const;
  std::vector<const CatalogueValue*> find(const std::string& quantity) const;
};

class Catalogue {
 public:
  /// The catalogue compiled into the library.
  static const Catalogue& builtin();
  /// Throws std::invalid_argument on malformed documents.
  static Catalogue parse(const std::string& json);
  static Catalogue load(const std::filesystem::path& path);

  int version() const { return version_; }
  const std::vector<CatalogueEntry>& entries() const { return entries_; }
  /// Throws std::invalid_argument for unknown ids.
  const CatalogueEntry& entry(const std::string& id) const;
  const CatalogueEntry* find_by_matrix(const IntMatrix& m) const;

 private:
  int version_ = 0;
  std::vector<CatalogueEntry> entries_;
};

struct FamilyInstance {
  std::string family;
  std::string label;
  Configuration config;
  std::vector<CatalogueValue> expected;
  /// Expected minimal generators, when the family describes them.
  std::optional<GeneratorSet> generators;
  /// Expected Graver basis up to sign, when the family describes it.
  std::optional<std::vector<LatticeVector>> graver;
  bool circuits_generate_radical = false;
  std::vector<std::string> warnings;
};

/// [[1,1,1,1],[0,a,b,a+b]]. Throws std::invalid_argument unless 0 < a < b;
/// warns when gcd(a, b) != 1.
FamilyInstance symmetric_curve(std::int64_t a, std::int64_t b);

/// [[A, 0], [I_n, I_n]].
Configuration lawrence_lifting(const Configuration& a);

/// Lawrence lifting of the symmetric curve (a, b) with its expected values.
FamilyInstance lawrence_of_symmetric_curve(std::int64_t a, std::int64_t b);

/// Vandermonde columns (1, t, ..., t^{2d-2}) for t_1 < ... < t_{2d+1}; empty
/// t means 0, 1, ..., 2d.
FamilyInstance cyclic_configuration(std::size_t d, std::vector<std::int64_t> t = {});

FamilyInstance catalogued_example(const std::string& id, const Catalogue& catalogue = Catalogue::builtin());

}  // namespace toricsplit
