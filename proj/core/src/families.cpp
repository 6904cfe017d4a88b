#include "toricsplit/families.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "catalogue_data.hpp"
#include "toricsplit/graphs.hpp"

namespace toricsplit {

namespace {

using nlohmann::json;

IntMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("catalogue: matrix must be a nonempty array");
  std::vector<std::vector<Integer>> out;
  for (const auto& row : rows) {
    std::vector<Integer> r;
    for (const auto& x : row) r.emplace_back(x.get<long>());
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out);
}

LatticeVector vector_from_json(const json& v) { return LatticeVector(v.get<std::vector<std::int64_t>>()); }

GeneratorMode mode_from_string(const std::string& s) {
  if (s == "minimal_generators") return GeneratorMode::minimal_generators;
  if (s == "radical_generators") return GeneratorMode::radical_generators;
  if (s == "user_supplied") return GeneratorMode::user_supplied;
  throw std::invalid_argument("catalogue: unknown generator mode '" + s + "'");
}

void check_tag(const std::string& tag) {
  if (tag != "0" && tag != "p" && tag != "any")
    throw std::invalid_argument("catalogue: characteristic tag must be 0, p or any, got '" + tag + "'");
}

CatalogueEntry entry_from_json(const json& j) {
  CatalogueEntry e;
  e.id = j.at("id").get<std::string>();
  e.description = j.value("description", "");
  if (j.contains("complete_bipartite")) {
    const auto mn = j.at("complete_bipartite").get<std::vector<std::size_t>>();
    if (mn.size() != 2) throw std::invalid_argument("catalogue: complete_bipartite needs two sizes");
    e.complete_bipartite = std::pair{mn[0], mn[1]};
    e.matrix = incidence_configuration(BipartiteGraph::complete(mn[0], mn[1])).matrix();
  } else {
    e.matrix = matrix_from_json(j.at("matrix"));
  }
  for (const auto& g : j.value("generator_sets", json::array())) {
    std::vector<LatticeVector> vs;
    for (const auto& v : g.at("vectors")) vs.push_back(vector_from_json(v));
    NamedGeneratorSet named;
    named.name = g.at("name").get<std::string>();
    named.characteristic = g.value("characteristic", "any");
    check_tag(named.characteristic);
    named.note = g.value("note", "");
    std::string provenance = "catalogue " + e.id + "/" + named.name;
    if (!named.note.empty()) provenance += " (" + named.note + ")";
    named.set = GeneratorSet(std::move(vs), mode_from_string(g.at("mode").get<std::string>()), provenance);
    e.generator_sets.push_back(std::move(named));
  }
  for (const auto& c : j.value("covers", json::array())) {
    CatalogueCover cover;
    cover.generator_set = c.at("generator_set").get<std::string>();
    cover.characteristic = c.value("characteristic", "any");
    check_tag(cover.characteristic);
    for (const auto& part : c.at("parts")) {
      std::vector<std::size_t> p;
      for (const auto& i : part) {
        const auto k = i.get<std::size_t>();
        if (k == 0) throw std::invalid_argument("catalogue: cover indices are 1-based");
        p.push_back(k - 1);
      }
      cover.parts.push_back(std::move(p));
    }
    e.covers.push_back(std::move(cover));
  }
  for (const auto& m : j.value("witness_matrices", json::array())) e.witness_matrices.push_back(matrix_from_json(m));
  for (const auto& v : j.value("extra_vectors", json::array())) e.extra_vectors.push_back(vector_from_json(v));
  for (const auto& s : j.value("cmin", json::array())) {
    std::vector<std::size_t> idx;
    for (const auto& i : s) idx.push_back(i.get<std::size_t>() - 1);
    e.cmin.emplace_back(std::move(idx));
  }
  for (const auto& v : j.value("values", json::array())) {
    CatalogueValue cv;
    cv.quantity = v.at("quantity").get<std::string>();
    cv.value = v.at("value").get<std::int64_t>();
    cv.characteristic = v.value("characteristic", "any");
    check_tag(cv.characteristic);
    cv.note = v.value("note", "");
    e.values.push_back(std::move(cv));
  }
  e.circuits_generate_radical = j.value("circuits_generate_radical", false);
  return e;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace

const NamedGeneratorSet* CatalogueEntry::generator_set(const std::string& name) const {
  for (const auto& g : generator_sets)
    if (g.name == name) return &g;
  return nullptr;
}

std::vector<const CatalogueValue*> CatalogueEntry::find(const std::string& quantity) const {
  std::vector<const CatalogueValue*> out;
  for (const auto& v : values)
    if (v.quantity == quantity) out.push_back(&v);
  return out;
}

Catalogue Catalogue::parse(const std::string& text) {
  Catalogue c;
  try {
    const auto doc = json::parse(text);
    c.version_ = doc.at("version").get<int>();
    for (const auto& e : doc.at("entries")) c.entries_.push_back(entry_from_json(e));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("catalogue: ") + e.what());
  }
  return c;
}

Catalogue Catalogue::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalogue " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Catalogue& Catalogue::builtin() {
  static const Catalogue c = parse(kCatalogueJson);
  return c;
}

const CatalogueEntry& Catalogue::entry(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown catalogued example '" + id + "'");
}

const CatalogueEntry* Catalogue::find_by_matrix(const IntMatrix& m) const {
  for (const auto& e : entries_)
    if (e.matrix == m) return &e;
  return nullptr;
}

FamilyInstance symmetric_curve(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= a) throw std::invalid_argument("symmetric_curve needs 0 < a < b");
  const std::int64_t d = a + b;
  IntMatrix m{{1, 1, 1, 1}, {0, static_cast<long>(a), static_cast<long>(b), static_cast<long>(d)}};
  FamilyInstance f{"symmetric_curve",
                   "symmetric_curve(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   Configuration(std::move(m)),
                   {},
                   std::nullopt,
                   std::nullopt,
                   false,
                   {}};
  if (gcd3(a, b, d) != 1) f.warnings.push_back("gcd(a, b, a+b) != 1");

  std::vector<LatticeVector> gens{LatticeVector{1, -1, -1, 1}};
  for (std::int64_t i = 0; i <= b - a; ++i) gens.push_back(LatticeVector{b - a - i, -(b - i), a + i, -i});
  f.generators = GeneratorSet(std::move(gens), GeneratorMode::minimal_generators, "symmetric curve family");

  std::vector<LatticeVector> graver{LatticeVector{1, -1, -1, 1}};
  for (std::int64_t i = 0; i <= d; ++i) graver.push_back(LatticeVector{b - i, i - a - b, i, a - i});
  f.graver = std::move(graver);

  const auto mu = static_cast<std::int64_t>(b - a + 2);
  f.expected = {{"height", 2, "any", ""},
                {"mu", mu, "any", ""},
                {"graver_size", d + 2, "any", ""},
                {"circuits", 4, "any", ""},
                {"split", mu, "any", "height 2: Split = mu"},
                {"split_rad", 2, "p", ""},
                {"split_rad", 3, "0", ""}};
  return f;
}

Configuration lawrence_lifting(const Configuration& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix out(m + n, 2 * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a.matrix()(i, j);
  for (std::size_t j = 0; j < n; ++j) {
    out(m + j, j) = 1;
    out(m + j, n + j) = 1;
  }
  return Configuration(std::move(out), a.name().empty() ? std::string{} : "lawrence(" + a.name() + ")");
}

FamilyInstance lawrence_of_symmetric_curve(std::int64_t a, std::int64_t b) {
  const auto curve = symmetric_curve(a, b);
  FamilyInstance f{"lawrence_of_symmetric_curve",
                   "lawrence_of_symmetric_curve(" + std::to_string(a) + "," + std::to_string(b) + ")",
                   lawrence_lifting(curve.config),
                   {},
                   std::nullopt,
                   std::nullopt,
                   true,
                   curve.warnings};
  std::vector<LatticeVector> gens;
  for (const auto& u : *curve.graver) {
    std::vector<std::int64_t> v(u.coords().begin(), u.coords().end());
    for (auto x : u.coords()) v.push_back(-x);
    gens.emplace_back(std::move(v));
  }
  f.generators = GeneratorSet(std::move(gens), GeneratorMode::minimal_generators, "lifted Graver basis");
  const std::int64_t mu = a + b + 2;
  f.expected = {{"height", 2, "any", ""},          {"mu", mu, "any", ""},
                {"circuits", 4, "any", ""},        {"gamma_vertices", 8, "any", ""},
                {"gamma_edges", 4, "any", ""},     {"delta01", 4, "any", ""},
                {"bar", 4, "any", ""},             {"split", mu, "any", "height 2: Split = mu"},
                {"split_rad", 4, "any", "circuits generate up to radical"}};
  return f;
}

FamilyInstance cyclic_configuration(std::size_t d, std::vector<std::int64_t> t) {
  if (d < 2) throw std::invalid_argument("cyclic configuration needs d >= 2");
  if (t.empty()) {
    t.resize(2 * d + 1);
    std::iota(t.begin(), t.end(), std::int64_t{0});
  }
  if (t.size() != 2 * d + 1) throw std::invalid_argument("cyclic configuration needs 2d+1 values of t");
  if (std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) != t.end())
    throw std::invalid_argument("cyclic configuration needs strictly increasing t");

  IntMatrix m(2 * d - 1, 2 * d + 1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    Integer p = 1;
    for (std::size_t i = 0; i < 2 * d - 1; ++i) {
      m(i, j) = p;
      p *= static_cast<long>(t[j]);
    }
  }
  std::string label = "cyclic(" + std::to_string(d) + ";";
  for (std::size_t j = 0; j < t.size(); ++j) label += (j ? "," : "") + std::to_string(t[j]);
  label += ")";
  FamilyInstance f{"cyclic", label, Configuration(std::move(m)), {}, std::nullopt, std::nullopt, true, {}};
  const auto dd = static_cast<std::int64_t>(d);
  f.expected = {{"height", 2, "any", ""},
                {"circuits", 2 * dd + 1, "any", ""},
                {"gamma_vertices", 2 * dd + 1, "any", ""},
                {"gamma_edges", 2 * dd + 1, "any", ""},
                {"delta01", dd + 1, "any", ""},
                {"split_rad_min", dd + 1, "any", ""},
                {"split_rad_max", 2 * dd + 1, "any", ""}};
  return f;
}

FamilyInstance catalogued_example(const std::string& id, const Catalogue& catalogue) {
  const auto& e = catalogue.entry(id);
  FamilyInstance f{"catalogued_example", id, Configuration(e.matrix, id), e.values, std::nullopt, std::nullopt,
                   e.circuits_generate_radical, {}};
  for (const auto& g : e.generator_sets) {
    if (g.set.mode() == GeneratorMode::minimal_generators) {
      f.generators = g.set;
      break;
    }
  }
  if (e.complete_bipartite) f.generators = cycle_generators(BipartiteGraph::complete(e.complete_bipartite->first,
                                                                                      e.complete_bipartite->second));
  return f;
}

}  // namespace toricsplit
