#include <algorithm>
#include <functional>
#include <numeric>

#include "encode.hpp"
#include "toricsplit/families.hpp"
#include "toricsplit/graphs.hpp"

namespace toricsplit::cli {

namespace {

// A computed quantity: an exact value or an interval [lo, hi].
struct Computed {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;

  bool exact() const { return hi && *hi == lo; }
  std::string text() const {
    if (exact()) return std::to_string(lo);
    return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("?")) + "]";
  }
};

Computed exactly(std::size_t v) { return {static_cast<std::int64_t>(v), static_cast<std::int64_t>(v)}; }

bool same_classes(std::span<const LatticeVector> a, std::span<const LatticeVector> b) {
  return canonical_classes(a) == canonical_classes(b);
}

// Lazily computed quantities of one configuration.
class Subject {
 public:
  Subject(std::string example, Configuration a, std::uint64_t budget_limit)
      : example_(std::move(example)), a_(std::move(a)), budget_(budget_limit) {}

  const std::string& example() const { return example_; }
  const Configuration& config() const { return a_; }
  Budget& budget() { return budget_; }

  std::optional<BipartiteGraph> graph;
  const CatalogueEntry* entry = nullptr;
  bool circuits_radical = false;

  const MarkovResult& markov() {
    if (!markov_) markov_ = minimal_markov(a_, budget_);
    return *markov_;
  }
  const std::vector<Circuit>& circuit_list() {
    if (!circuits_) circuits_ = circuits(a_);
    return *circuits_;
  }
  const SupportGraph& gamma() {
    if (!gamma_) gamma_ = gamma_graph(a_, cmin(circuit_list()));
    return *gamma_;
  }

  // Radical generating set recorded for a characteristic tag and note.
  const GeneratorSet* radical_set(const std::string& characteristic, const std::string& note) const {
    if (!entry) return nullptr;
    const GeneratorSet* loose = nullptr;
    for (const auto& g : entry->generator_sets) {
      if (g.set.mode() != GeneratorMode::radical_generators) continue;
      if (g.characteristic == characteristic && g.note == note) return &g.set;
      if (!loose && characteristic_matches(g.characteristic, characteristic)) loose = &g.set;
    }
    return loose;
  }

  Computed quantity(const std::string& name, const std::string& characteristic, const std::string& note) {
    if (name == "height") return exactly(a_.height());
    if (name == "mu") return exactly(markov().generators.size());
    if (name == "circuits") return exactly(circuit_list().size());
    if (name == "gamma_vertices") return exactly(gamma().vertices.size());
    if (name == "gamma_edges") return exactly(gamma().edges.size());
    if (name == "delta01") return exactly(delta01(gamma()).value);
    if (name == "graver_size") return exactly(graver_basis(a_, budget_).size());
    if (name == "bar") {
      const auto delta = delta01(gamma()).value;
      return {static_cast<std::int64_t>(std::max(a_.height(), delta)), std::nullopt};
    }
    if (name == "chordless_cycles") return exactly(chordless_even_cycles(*graph).size());
    if (name == "g1_generators" || name == "g2_generators" || name == "g3_generators") {
      const auto s = kmn_split(graph->left(), graph->right());
      return exactly(s.counts[static_cast<std::size_t>(name[1] - '1')]);
    }
    if (name == "radical_generators") {
      const auto* g = radical_set(characteristic, note);
      if (!g) throw std::invalid_argument("no radical generating set recorded for '" + note + "'");
      return exactly(g->size());
    }
    if (name == "split") {
      if (graph) return bound(graph_split_numbers(*graph, budget_).split);
      return bound(split_numbers(a_, budget_, options(characteristic, note)).split);
    }
    if (name == "split_rad" || name == "split_rad_min" || name == "split_rad_max") {
      if (graph) return bound(graph_split_numbers(*graph, budget_).split_rad);
      if (a_.height() >= 3) {
        // Height >= 3: bounded above by a proper-span cover of a recorded radical set.
        Computed c{2, std::nullopt};
        if (const auto* g = radical_set(characteristic, note))
          if (auto cert = minimal_cover(a_, *g, budget_)) c.hi = static_cast<std::int64_t>(cert->parts.size());
        return c;
      }
      return bound(split_numbers(a_, budget_, options(characteristic, note)).split_rad);
    }
    throw std::invalid_argument("unknown catalogue quantity '" + name + "'");
  }

 private:
  static Computed bound(const Bound& b) {
    Computed c{static_cast<std::int64_t>(b.lo), std::nullopt};
    if (b.hi) c.hi = static_cast<std::int64_t>(*b.hi);
    return c;
  }

  SplitOptions options(const std::string& characteristic, const std::string& note) const {
    SplitOptions o;
    o.assume_circuit_radical = circuits_radical;
    if (const auto* g = radical_set(characteristic, note)) o.radical_generators = *g;
    return o;
  }

  std::string example_;
  Configuration a_;
  Budget budget_;
  std::optional<MarkovResult> markov_;
  std::optional<std::vector<Circuit>> circuits_;
  std::optional<SupportGraph> gamma_;
};

class Verifier {
 public:
  explicit Verifier(VerifyResult& out) : out_(out) {}

  void check(Subject& s, const std::string& quantity, const std::string& computed, const std::string& expected,
             bool ok, const std::string& characteristic = "any") {
    out_.checks.push_back({s.example(), quantity, computed, expected, characteristic, ok});
  }

  void flag(Subject& s, const std::string& quantity, bool ok, const std::string& characteristic = "any") {
    check(s, quantity, ok ? "holds" : "fails", "holds", ok, characteristic);
  }

  // Compares a recorded value with the artifact's own computation. Exact
  // quantities must agree; interval quantities must contain the value.
  void value(Subject& s, const CatalogueValue& v) {
    const auto c = s.quantity(v.quantity, v.characteristic, v.note);
    bool ok;
    if (v.quantity == "split_rad_min") ok = c.lo >= v.value;
    else if (v.quantity == "split_rad_max") ok = c.hi && *c.hi <= v.value;
    else if (v.quantity == "bar" || v.quantity == "split_rad" || !c.exact())
      ok = c.lo <= v.value && (!c.hi || v.value <= *c.hi);
    else ok = c.lo == v.value;
    std::string tag = v.characteristic;
    if (!v.note.empty()) tag += " (" + v.note + ")";
    check(s, v.quantity, c.text(), std::to_string(v.value), ok, tag);
  }

  void guarded(const std::string& example, const std::function<void()>& body) {
    try {
      body();
    } catch (const BudgetExceeded& e) {
      out_.budget_exhausted = true;
      out_.notes.push_back(example + ": " + e.what());
    }
  }

 private:
  VerifyResult& out_;
};

void verify_entry(Verifier& v, const CatalogueEntry& e, std::uint64_t limit) {
  Subject s(e.id, Configuration(e.matrix, e.id), limit);
  s.entry = &e;
  s.circuits_radical = e.circuits_generate_radical;
  if (e.complete_bipartite) s.graph = BipartiteGraph::complete(e.complete_bipartite->first, e.complete_bipartite->second);
  const auto& a = s.config();

  for (const auto& g : e.generator_sets) {
    const bool in_kernel = std::all_of(g.set.vectors().begin(), g.set.vectors().end(),
                                       [&](const LatticeVector& u) { return a.contains(u); });
    v.flag(s, g.name + " in ker_Z(A)", in_kernel, g.characteristic);
    if (g.set.mode() == GeneratorMode::minimal_generators)
      v.flag(s, g.name + " = computed minimal generators (up to sign)",
             same_classes(g.set.vectors(), s.markov().generators.vectors()));
    if (g.set.mode() == GeneratorMode::radical_generators)
      v.flag(s, g.name + " spans of size < height", span_dimension(g.set.vectors()) <= a.height(), g.characteristic);
  }
  if (s.graph) {
    const auto gens = cycle_generators(*s.graph);
    v.flag(s, "chordless cycles = computed minimal generators (up to sign)",
           same_classes(gens.vectors(), s.markov().generators.vectors()));
    Budget b(s.budget().limit());
    const bool r2 = find_cover(a, gens, 2, b).has_value();
    const bool r3 = find_cover(a, gens, 3, b).has_value();
    v.check(s, "cover exists for r = 2, 3", std::string(r2 ? "yes" : "no") + ", " + (r3 ? "yes" : "no"), "no, yes",
            !r2 && r3);
    v.flag(s, "kmn_split assignment verified", kmn_split(s.graph->left(), s.graph->right()).verified);
  }
  if (!e.cmin.empty()) {
    std::vector<SupportSet> want = e.cmin;
    std::sort(want.begin(), want.end());
    auto got = s.gamma().vertices;
    std::sort(got.begin(), got.end());
    v.flag(s, "cmin", got == want);
  }
  for (std::size_t k = 0; k < e.covers.size(); ++k) {
    const auto& c = e.covers[k];
    const auto* g = e.generator_set(c.generator_set);
    if (!g) throw std::invalid_argument(e.id + ": cover refers to unknown set " + c.generator_set);
    std::vector<std::size_t> dims;
    bool kernels = false;
    bool proper = true;
    try {
      const auto rep = build_subconfigurations(a, g->set, c.parts);
      dims = rep.span_dims;
      kernels = std::all_of(rep.kernel_matches.begin(), rep.kernel_matches.end(), [](bool b) { return b; });
    } catch (const std::invalid_argument&) {
      proper = false;
    }
    std::string text = "span dims";
    for (auto d : dims) text += " " + std::to_string(d);
    v.check(s, "cover " + std::to_string(k + 1) + " proper spans", proper ? text : "a part spans the kernel",
            "all < " + std::to_string(a.height()), proper, c.characteristic);
    v.flag(s, "cover " + std::to_string(k + 1) + " subconfiguration kernels", kernels, c.characteristic);
    if (k == 0) {
      for (std::size_t i = 0; i < e.witness_matrices.size() && i < c.parts.size(); ++i) {
        std::vector<LatticeVector> part;
        for (auto j : c.parts[i]) part.push_back(g->set[j]);
        v.flag(s, "recorded witness matrix " + std::to_string(i + 1) + " kernel = span of part",
               kernel_equals_span(e.witness_matrices[i], part), c.characteristic);
      }
    }
  }
  for (std::size_t k = 0; k < e.extra_vectors.size(); ++k)
    v.flag(s, "recorded vector " + to_string(e.extra_vectors[k]) + " in ker_Z(A)", a.contains(e.extra_vectors[k]));
  for (const auto& val : e.values) v.value(s, val);
}

void verify_family(Verifier& v, const FamilyInstance& f, std::uint64_t limit) {
  Subject s(f.label, f.config, limit);
  s.circuits_radical = f.circuits_generate_radical;
  if (f.generators) {
    v.flag(s, "listed generators = computed minimal generators (up to sign)",
           same_classes(f.generators->vectors(), s.markov().generators.vectors()));
  }
  if (f.graver) {
    const auto g = graver_basis(s.config(), s.budget());
    v.flag(s, "listed Graver basis = computed Graver basis (up to sign)", same_classes(*f.graver, g));
  }
  if (f.family == "cyclic") {
    const bool alternating = std::all_of(s.circuit_list().begin(), s.circuit_list().end(), [](const Circuit& c) {
      std::int64_t last = 0;
      for (auto x : c.vector().coords()) {
        if (x == 0) continue;
        if ((x > 0) == (last > 0) && last != 0) return false;
        last = x;
      }
      return true;
    });
    v.flag(s, "circuit signs alternate", alternating);
    const auto& g = s.gamma();
    std::vector<std::size_t> degree(g.vertices.size(), 0);
    for (const auto& e : g.edges) ++degree[e.first], ++degree[e.second];
    const bool two_regular = std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d == 2; });
    // A 2-regular graph is a single cycle iff it is connected.
    std::vector<std::size_t> comp(g.vertices.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (const auto& e : g.edges) comp[find(e.first)] = find(e.second);
    bool connected = true;
    for (std::size_t i = 0; i < comp.size(); ++i) connected = connected && find(i) == find(0);
    v.flag(s, "Gamma_A is a single cycle", two_regular && connected);
  }
  for (const auto& val : f.expected) v.value(s, val);
}

}  // namespace

bool VerifyResult::ok() const {
  return !budget_exhausted && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<const Check*> VerifyResult::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(&c);
  return out;
}

std::string describe(const Check& c) {
  return c.example + " " + c.quantity + ": computed " + c.computed + ", catalogue " + c.catalogue +
         " [char " + c.characteristic + "]";
}

VerifyResult verify_paper(const Catalogue& catalogue, std::uint64_t budget_limit) {
  VerifyResult result;
  Verifier v(result);
  for (const auto& e : catalogue.entries()) v.guarded(e.id, [&] { verify_entry(v, e, budget_limit); });
  for (std::int64_t b = 2; b <= 6; ++b)
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto f = symmetric_curve(a, b);
      v.guarded(f.label, [&] { verify_family(v, f, budget_limit); });
    }
  const auto lawrence = lawrence_of_symmetric_curve(2, 3);
  v.guarded(lawrence.label, [&] { verify_family(v, lawrence, budget_limit); });
  for (const auto& f : {cyclic_configuration(2), cyclic_configuration(3, {1, 2, 3, 4, 5, 6, 7})})
    v.guarded(f.label, [&] { verify_family(v, f, budget_limit); });
  return result;
}

}  // namespace toricsplit::cli
