#include <chrono>
#include <filesystem>

#include "encode.hpp"
#include "toricsplit/families.hpp"
#include "toricsplit/graphs.hpp"

namespace toricsplit::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (i >= o.args.size()) throw UsageError(o.command + ": missing argument <" + what + ">");
  return o.args[i];
}

std::int64_t int_arg(const Options& o, std::size_t i, const char* what) {
  const auto& s = arg(o, i, what);
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(o.command + ": <" + what + "> must be an integer, got '" + s + "'");
  }
}

IntMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path), path); }

Configuration load_configuration(const std::string& path) {
  return Configuration(load_matrix(path), std::filesystem::path(path).stem().string());
}

const Catalogue& catalogue_for(const Options& o) {
  static std::optional<Catalogue> loaded;
  if (!o.catalogue) return Catalogue::builtin();
  if (!loaded) loaded = Catalogue::load(*o.catalogue);
  return *loaded;
}

Report encode_input(const Configuration& a) {
  return Report{{"name", a.name()}, {"rows", a.rows()}, {"cols", a.cols()}, {"matrix", encode(a.matrix())}};
}

// A radical generating set compatible with the requested characteristic.
// A recorded set is used only when it is valid in the requested characteristic.
bool valid_in(const std::string& tag, const std::string& characteristic) {
  return tag == "any" || tag == characteristic;
}

const NamedGeneratorSet* catalogue_radical_set(const CatalogueEntry& e, const std::string& characteristic) {
  for (const auto& g : e.generator_sets)
    if (g.set.mode() == GeneratorMode::radical_generators && valid_in(g.characteristic, characteristic))
      return &g;
  return nullptr;
}

// The catalogued bar value, if exactly one applies to the requested characteristic.
std::optional<std::size_t> catalogue_bar(const CatalogueEntry& e, const std::string& characteristic) {
  std::optional<std::size_t> out;
  std::size_t hits = 0;
  for (const auto* v : e.find("bar"))
    if (valid_in(v->characteristic, characteristic)) {
      out = static_cast<std::size_t>(v->value);
      ++hits;
    }
  return hits == 1 ? out : std::nullopt;
}

Report encode_rules(const std::vector<RuleHit>& hits) {
  Report out = Report::array();
  for (const auto& h : hits)
    out.push_back({{"rule", h.rule}, {"conclusion", h.conclusion}, {"characteristic", h.characteristic}});
  return out;
}

void cmd_kernel(const Options& o, Report& r) {
  const auto m = load_matrix(arg(o, 0, "matrix file"));
  r["input"] = Report{{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", encode(m)}};
  const auto rk = rank(m);
  r["rank"] = rk;
  r["kernel_dim"] = m.cols() - rk;
  Report rational = Report::array();
  for (const auto& v : rational_kernel_basis(m)) {
    Report row = Report::array();
    for (const auto& x : v) row.push_back(encode(Integer(x.get_num())));
    rational.push_back(std::move(row));
  }
  r["rational_kernel_basis"] = std::move(rational);
  Report lattice = Report::array();
  for (const auto& v : integer_kernel_basis(m)) lattice.push_back(encode(v));
  r["lattice_basis"] = std::move(lattice);
}

void cmd_circuits(const Options& o, Report& r) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto cs = circuits(a);
  r["count"] = cs.size();
  Report items = Report::array();
  for (const auto& c : cs)
    items.push_back({{"vector", encode(c.vector())}, {"binomial", binomial(c.vector())}, {"support", encode(c.support())}});
  r["circuits"] = std::move(items);
  Report mins = Report::array();
  for (const auto& s : cmin(cs)) mins.push_back(encode(s));
  r["cmin"] = std::move(mins);
}

void cmd_graver(const Options& o, Report& r, Budget& budget) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto g = graver_basis(a, budget);
  r["size"] = g.size();
  Report items = Report::array();
  for (const auto& v : g) items.push_back({{"vector", encode(v)}, {"binomial", binomial(v)}});
  r["graver"] = std::move(items);
}

void cmd_markov(const Options& o, Report& r, Budget& budget) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto m = minimal_markov(a, budget);
  r["mu"] = m.generators.size();
  r["unique"] = m.unique();
  r["minimal_generators"] = encode_generators(m.generators);
  Report degrees = Report::array();
  for (const auto& d : m.degrees) {
    if (d.chosen.empty()) continue;
    Report deg = Report::array();
    for (const auto& x : d.degree.value()) deg.push_back(encode(x));
    degrees.push_back({{"degree", std::move(deg)},
                       {"fiber_size", d.fiber_size},
                       {"components", d.components.size()},
                       {"generators", d.chosen.size()},
                       {"indispensable", d.indispensable}});
  }
  r["degrees"] = std::move(degrees);
}

void cmd_gamma(const Options& o, Report& r) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto g = gamma_graph(a);
  Report vs = Report::array();
  for (const auto& v : g.vertices) vs.push_back(encode(v));
  r["vertices"] = std::move(vs);
  Report es = Report::array();
  for (const auto& e : g.edges)
    es.push_back({{"first", encode(g.vertices[e.first])},
                  {"second", encode(g.vertices[e.second])},
                  {"witness", encode(e.witness)},
                  {"binomial", binomial(e.witness)}});
  r["edges"] = std::move(es);
}

void cmd_delta(const Options& o, Report& r) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto g = gamma_graph(a);
  const auto d = delta01(g);
  r["vertices"] = g.vertices.size();
  r["edges"] = g.edges.size();
  r["delta01"] = d.value;
  r["max_matching"] = d.max_matching;
  Report parts = Report::array();
  for (const auto& p : d.witness.parts) {
    Report part = Report::array();
    part.push_back(encode(g.vertices[p.first]));
    if (p.second) part.push_back(encode(g.vertices[*p.second]));
    parts.push_back(std::move(part));
  }
  r["witness_matching"] = std::move(parts);
  r["method"] = "|V| - maximum matching";
}

std::optional<GeneratorSet> user_radical_set(const Options& o, const Configuration& a) {
  if (!o.radical_generators) return std::nullopt;
  GeneratorSet g(rows_as_vectors(load_matrix(*o.radical_generators)), GeneratorMode::radical_generators,
                 "user file " + *o.radical_generators);
  g.validate(a);
  return g;
}

void cmd_bar_bounds(const Options& o, Report& r, Budget& budget, int& exit_code) {
  const auto a = load_configuration(arg(o, 0, "matrix file"));
  r["input"] = encode_input(a);
  const auto* entry = catalogue_for(o).find_by_matrix(a.matrix());
  BarOptions bo;
  bo.assume_circuit_radical = o.assume_circuit_radical || (entry && entry->circuits_generate_radical);
  if (auto user = user_radical_set(o, a)) bo.known_radical_generators = user->size();
  else if (entry)
    if (const auto* g = catalogue_radical_set(*entry, o.characteristic)) bo.known_radical_generators = g->set.size();
  const auto b = bar_bounds(a, budget, bo);
  r["bar"] = encode(b);
  r["characteristic"] = o.characteristic;
  if (entry) {
    r["catalogue"] = Report{{"id", entry->id}, {"values", encode_values(entry->values, o.characteristic)}};
  }
  std::optional<std::size_t> known = entry ? catalogue_bar(*entry, o.characteristic) : std::nullopt;
  r["sufficient_conditions"] = encode_rules(classify_sufficient_conditions(a, known, budget));
  if (b.degraded) {
    r["degraded"] = Report::array({*b.degraded});
    exit_code = ExitCode::budget_exhausted;
  }
}

void cmd_split_graph(const BipartiteGraph& g, Report& r, Budget& budget) {
  r["input"] = Report{{"left", g.left()}, {"right", g.right()}, {"edges", g.edges().size()}};
  const auto rep = graph_split_numbers(g, budget);
  r["generators"] = rep.generator_count;
  r["split"] = encode(rep.split);
  r["split_rad"] = encode(rep.split_rad);
  if (rep.certificate) {
    const auto a = incidence_configuration(g);
    r["certificate"] = encode(*rep.certificate, a, cycle_generators(g));
  }
}

void cmd_split(const Options& o, Report& r, Budget& budget, int& exit_code) {
  const auto& path = arg(o, 0, "matrix or graph file");
  const auto text = read_file(path);
  if (file_kind(text) == "bipartite") {
    cmd_split_graph(parse_graph(text, path), r, budget);
    return;
  }
  const Configuration a(parse_matrix(text, path), std::filesystem::path(path).stem().string());
  r["input"] = encode_input(a);
  r["characteristic"] = o.characteristic;
  const auto* entry = catalogue_for(o).find_by_matrix(a.matrix());

  SplitOptions so;
  so.assume_circuit_radical = o.assume_circuit_radical || (entry && entry->circuits_generate_radical);
  so.radical_generators = user_radical_set(o, a);
  if (!so.radical_generators && entry)
    if (const auto* g = catalogue_radical_set(*entry, o.characteristic)) so.radical_generators = g->set;

  const auto rep = split_numbers(a, budget, so);
  r["height"] = rep.height;
  r["split"] = encode(rep.split);
  r["split_rad"] = encode(rep.split_rad);
  r["mu"] = rep.mu ? Report(*rep.mu) : Report(nullptr);
  if (rep.unique_minimal_generators) r["unique_minimal_generators"] = *rep.unique_minimal_generators;
  if (rep.bar) r["bar"] = encode(*rep.bar);
  if (rep.minimal_generators) r["minimal_generators"] = encode_generators(*rep.minimal_generators);
  if (rep.split_certificate) r["split_certificate"] = encode(*rep.split_certificate, a, *rep.minimal_generators);
  if (rep.radical_certificate)
    r["radical_certificate"] = encode(*rep.radical_certificate, a, *rep.radical_generators);
  if (entry) {
    Report cat{{"id", entry->id}, {"values", encode_values(entry->values, o.characteristic)}};
    Report covers = Report::array();
    for (const auto& c : entry->covers) {
      if (!characteristic_matches(c.characteristic, o.characteristic)) continue;
      const auto* g = entry->generator_set(c.generator_set);
      if (!g) continue;
      SplitCertificate cert;
      const auto sub = build_subconfigurations(a, g->set, c.parts);
      cert.parts = c.parts;
      cert.span_dims = sub.span_dims;
      cert.kernel_dim = sub.kernel_dim;
      cert.witness_configs = sub.matrices;
      cert.kind = g->set.mode() == GeneratorMode::radical_generators ? SplitKind::radical_splitting
                                                                     : SplitKind::splitting;
      Report item = encode(cert, a, g->set);
      item["characteristic"] = c.characteristic;
      item["source"] = "catalogue";
      covers.push_back(std::move(item));
    }
    if (!covers.empty()) cat["covers"] = std::move(covers);
    r["catalogue"] = std::move(cat);
  }
  std::optional<std::size_t> known = entry ? catalogue_bar(*entry, o.characteristic) : std::nullopt;
  r["sufficient_conditions"] = encode_rules(classify_sufficient_conditions(a, known, budget));
  if (!rep.notes.empty()) r["notes"] = rep.notes;
  if (rep.degraded) {
    r["degraded"] = rep.notes;
    exit_code = ExitCode::budget_exhausted;
  }
}

std::string vertex_name(const BipartiteGraph& g, std::size_t v) {
  return v < g.left() ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - g.left() + 1);
}

std::string edge_binomial(const BipartiteGraph& g, const std::vector<std::size_t>& plus,
                          const std::vector<std::size_t>& minus) {
  auto mono = [&](const std::vector<std::size_t>& es) {
    std::string s;
    for (auto e : es) s += "b" + std::to_string(g.edges()[e].first + 1) + std::to_string(g.edges()[e].second + 1);
    return s;
  };
  return mono(plus) + " - " + mono(minus);
}

void cmd_graph_gens(const Options& o, Report& r) {
  const auto& path = arg(o, 0, "graph file");
  const auto g = parse_graph(read_file(path), path);
  r["input"] = Report{{"left", g.left()}, {"right", g.right()}, {"edges", g.edges().size()}};
  const auto cycles = chordless_even_cycles(g);
  r["count"] = cycles.size();
  r["mode"] = to_string(GeneratorMode::minimal_generators);
  Report items = Report::array();
  for (const auto& c : cycles) {
    Report walk = Report::array();
    for (auto v : c.vertices) walk.push_back(vertex_name(g, v));
    items.push_back({{"cycle", std::move(walk)},
                     {"vector", encode(c.vector(g))},
                     {"binomial", edge_binomial(g, c.odd_edges(g), c.even_edges(g))}});
  }
  r["generators"] = std::move(items);
}

void cmd_kmn_split(const Options& o, Report& r) {
  const auto m = int_arg(o, 0, "m");
  const auto n = int_arg(o, 1, "n");
  if (m < 1 || n < 1) throw UsageError("kmn-split: sizes must be positive");
  const auto s = kmn_split(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  const auto g = BipartiteGraph::complete(s.m, s.n);
  const auto cycles = chordless_even_cycles(g);
  r["m"] = s.m;
  r["n"] = s.n;
  r["v1"] = s.swapped ? "right" : "left";
  Report parts = Report::array();
  for (std::size_t k = 0; k < 3; ++k) {
    Report vs = Report::array();
    for (auto v : s.vertex_sets[k]) vs.push_back(vertex_name(g, v));
    Report gens = Report::array();
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (s.assignment[i] == k) gens.push_back(edge_binomial(g, cycles[i].odd_edges(g), cycles[i].even_edges(g)));
    parts.push_back({{"subgraph", "G" + std::to_string(k + 1)},
                     {"vertices", std::move(vs)},
                     {"count", s.counts[k]},
                     {"generators", std::move(gens)}});
  }
  r["parts"] = std::move(parts);
  r["verified"] = s.verified;
}

FamilyInstance family_from_args(const Options& o) {
  const auto& name = arg(o, 0, "family");
  if (name == "symmetric-curve") return symmetric_curve(int_arg(o, 1, "a"), int_arg(o, 2, "b"));
  if (name == "lawrence") return lawrence_of_symmetric_curve(int_arg(o, 1, "a"), int_arg(o, 2, "b"));
  if (name == "cyclic") {
    const auto d = int_arg(o, 1, "d");
    if (d < 2) throw UsageError("family cyclic: d must be at least 2");
    std::vector<std::int64_t> t;
    for (std::size_t i = 2; i < o.args.size(); ++i) t.push_back(int_arg(o, i, "t"));
    return cyclic_configuration(static_cast<std::size_t>(d), std::move(t));
  }
  return catalogued_example(name, catalogue_for(o));
}

void cmd_family(const Options& o, Report& r, Budget& budget) {
  const auto f = family_from_args(o);
  r["family"] = f.family;
  r["label"] = f.label;
  r["matrix"] = encode(f.config.matrix());
  if (!f.warnings.empty()) r["warnings"] = f.warnings;
  Report expected = encode_values(f.expected, o.characteristic);
  for (auto& e : expected) e["source"] = f.family == "catalogued_example" ? "catalogue" : "family formula";
  r["expected"] = std::move(expected);
  if (f.generators) r["expected_generators"] = encode_generators(*f.generators);

  Report computed;
  computed["height"] = f.config.height();
  const auto cs = circuits(f.config);
  computed["circuits"] = cs.size();
  const auto g = gamma_graph(f.config);
  computed["gamma_vertices"] = g.vertices.size();
  computed["gamma_edges"] = g.edges.size();
  computed["delta01"] = delta01(g).value;
  r["computed"] = computed;
  computed["mu"] = mu(f.config, budget);
  r["computed"] = std::move(computed);
}

void cmd_verify(const Options& o, Report& r, int& exit_code) {
  const auto result = verify_paper(catalogue_for(o), o.budget);
  Report checks = Report::array();
  for (const auto& c : result.checks)
    checks.push_back({{"example", c.example},
                      {"quantity", c.quantity},
                      {"computed", c.computed},
                      {"catalogue", c.catalogue},
                      {"characteristic", c.characteristic},
                      {"ok", c.ok}});
  r["checks"] = std::move(checks);
  Report failures = Report::array();
  for (const auto* c : result.failures()) failures.push_back(describe(*c));
  r["mismatches"] = std::move(failures);
  if (!result.notes.empty()) r["notes"] = result.notes;
  if (result.budget_exhausted) {
    r["degraded"] = result.notes;
    exit_code = ExitCode::budget_exhausted;
  } else if (!result.ok()) {
    exit_code = ExitCode::mismatch;
  }
}

}  // namespace

Outcome run(const Options& o) {
  Outcome out;
  Report& r = out.report;
  r["command"] = o.command;
  const auto start = std::chrono::steady_clock::now();
  Budget budget(o.budget);
  try {
    if (o.characteristic != "0" && o.characteristic != "p" && o.characteristic != "any")
      throw UsageError("--char must be 0, p or any");
    if (o.command == "kernel") cmd_kernel(o, r);
    else if (o.command == "circuits") cmd_circuits(o, r);
    else if (o.command == "graver") cmd_graver(o, r, budget);
    else if (o.command == "markov") cmd_markov(o, r, budget);
    else if (o.command == "gamma") cmd_gamma(o, r);
    else if (o.command == "delta") cmd_delta(o, r);
    else if (o.command == "bar-bounds") cmd_bar_bounds(o, r, budget, out.exit_code);
    else if (o.command == "split") cmd_split(o, r, budget, out.exit_code);
    else if (o.command == "graph-gens") cmd_graph_gens(o, r);
    else if (o.command == "kmn-split") cmd_kmn_split(o, r);
    else if (o.command == "family") cmd_family(o, r, budget);
    else if (o.command == "verify-paper") cmd_verify(o, r, out.exit_code);
    else throw UsageError("unknown command '" + o.command + "'");
  } catch (const BudgetExceeded& e) {
    r["degraded"] = Report::array({e.what()});
    out.exit_code = ExitCode::budget_exhausted;
  } catch (const std::invalid_argument& e) {
    r["error"] = e.what();
    out.exit_code = ExitCode::input_error;
  } catch (const std::overflow_error& e) {
    r["error"] = std::string("value out of range: ") + e.what();
    out.exit_code = ExitCode::input_error;
  }
  if (o.timing) {
    r["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  r["budget_used"] = budget.used();
  return out;
}

}  // namespace toricsplit::cli
