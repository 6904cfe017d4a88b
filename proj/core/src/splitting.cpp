#include "toricsplit/splitting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricsplit {

namespace {

// Row echelon basis of a subspace of Q^n, grown one vector at a time.
class EchelonSpan {
 public:
  std::size_t dim() const { return rows_.size(); }

  RatVector reduce(RatVector v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
    }
    return v;
  }

  bool contains(const RatVector& v) const {
    const auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  void add(const RatVector& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < r.size() && sgn(r[p]) == 0) ++p;
    if (p == r.size()) return;
    const Rational lead = r[p];
    for (auto& x : r) x /= lead;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = rows_[k][p];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) rows_[k][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
  }

 private:
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

RatVector to_rational(const LatticeVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v.coords()) out.emplace_back(static_cast<long>(x));
  return out;
}

std::vector<LatticeVector> pick(const GeneratorSet& c, const std::vector<std::size_t>& part) {
  std::vector<LatticeVector> out;
  out.reserve(part.size());
  for (auto i : part) out.push_back(c[i]);
  return out;
}

class CoverSearch {
 public:
  CoverSearch(const GeneratorSet& c, std::size_t kernel_dim, std::size_t r, Budget& budget)
      : kernel_dim_(kernel_dim), r_(r), budget_(budget), assignment_(c.size(), kUnassigned) {
    for (const auto& v : c.vectors()) vectors_.push_back(to_rational(v));
  }

  std::optional<std::vector<std::size_t>> run() {
    std::vector<EchelonSpan> parts;
    if (search(parts)) return assignment_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  bool search(std::vector<EchelonSpan>& parts) {
    budget_.charge(1, "partition search");
    std::vector<std::size_t> forced;
    auto undo = [&] {
      for (auto i : forced) assignment_[i] = kUnassigned;
    };

    // A vector already inside some part's span can join that part for free:
    // the span does not change and every other part can only shrink.
    std::size_t best = kUnassigned;
    std::vector<std::size_t> best_options;
    bool progress = true;
    while (progress) {
      progress = false;
      best = kUnassigned;
      best_options.clear();
      for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (assignment_[i] != kUnassigned) continue;
        std::vector<std::size_t> options;
        std::size_t absorbing = kUnassigned;
        for (std::size_t p = 0; p < parts.size(); ++p) {
          if (parts[p].contains(vectors_[i])) {
            absorbing = p;
            break;
          }
          if (parts[p].dim() + 1 < kernel_dim_) options.push_back(p);
        }
        if (absorbing != kUnassigned) {
          assignment_[i] = absorbing;
          forced.push_back(i);
          progress = true;
          break;
        }
        if (parts.size() < r_ && kernel_dim_ >= 2) options.push_back(parts.size());
        if (options.empty()) {
          undo();
          return false;
        }
        if (best == kUnassigned || options.size() < best_options.size()) {
          best = i;
          best_options = std::move(options);
        }
      }
    }
    if (best == kUnassigned) return true;

    for (auto p : best_options) {
      std::vector<EchelonSpan> next = parts;
      if (p == next.size()) next.emplace_back();
      next[p].add(vectors_[best]);
      assignment_[best] = p;
      if (search(next)) return true;
      assignment_[best] = kUnassigned;
    }
    undo();
    return false;
  }

  std::size_t kernel_dim_;
  std::size_t r_;
  Budget& budget_;
  std::vector<RatVector> vectors_;
  std::vector<std::size_t> assignment_;
};

// Relabels parts by smallest member and splits parts until there are exactly
// r of them (possible as long as r <= |C|; subsets keep proper spans).
std::vector<std::vector<std::size_t>> normalize(const std::vector<std::size_t>& assignment, std::size_t r) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> label(assignment.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    auto& l = label[assignment[i]];
    if (l == static_cast<std::size_t>(-1)) {
      l = parts.size();
      parts.emplace_back();
    }
    parts[l].push_back(i);
  }
  while (parts.size() < r) {
    auto it = std::find_if(parts.begin(), parts.end(), [](const auto& p) { return p.size() >= 2; });
    const std::size_t moved = it->back();
    it->pop_back();
    parts.push_back({moved});
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return parts;
}

}  // namespace

std::string to_string(SplitKind kind) {
  return kind == SplitKind::splitting ? "splitting" : "radical_splitting";
}

std::optional<SplitCertificate> find_cover(const Configuration& a, const GeneratorSet& generators, std::size_t r,
                                           Budget& budget) {
  if (generators.empty()) throw std::invalid_argument("find_cover: empty generator set");
  if (r < 2) throw std::invalid_argument("find_cover: r must be at least 2");
  if (r > generators.size()) throw std::invalid_argument("find_cover: r exceeds the number of generators");
  generators.validate(a);

  CoverSearch search(generators, a.height(), r, budget);
  auto assignment = search.run();
  if (!assignment) return std::nullopt;

  SplitCertificate cert;
  cert.parts = normalize(*assignment, r);
  cert.kernel_dim = a.height();
  cert.kind = generators.mode() == GeneratorMode::radical_generators ? SplitKind::radical_splitting
                                                                     : SplitKind::splitting;
  auto report = build_subconfigurations(a, generators, cert.parts);
  cert.span_dims = std::move(report.span_dims);
  cert.witness_configs = std::move(report.matrices);
  return cert;
}

std::optional<SplitCertificate> minimal_cover(const Configuration& a, const GeneratorSet& generators, Budget& budget) {
  for (std::size_t r = 2; r <= generators.size(); ++r) {
    if (auto cert = find_cover(a, generators, r, budget)) return cert;
  }
  return std::nullopt;
}

SubconfigurationReport build_subconfigurations(const Configuration& a, const GeneratorSet& generators,
                                               const std::vector<std::vector<std::size_t>>& parts) {
  SubconfigurationReport report;
  report.kernel_dim = a.height();
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("build_subconfigurations: empty part");
    for (auto i : part)
      if (i >= generators.size()) throw std::invalid_argument("build_subconfigurations: index out of range");
    const auto vs = pick(generators, part);
    const std::size_t dim = span_dimension(vs);
    if (dim >= report.kernel_dim)
      throw std::invalid_argument("build_subconfigurations: a part spans the whole kernel");
    auto complement = orthogonal_complement(vs, a.cols());
    auto& m = std::get<IntMatrix>(complement);
    report.kernel_matches.push_back(kernel_equals_span(m, vs));
    report.span_dims.push_back(dim);
    report.matrices.push_back(std::move(m));
  }
  return report;
}

CertificateCheck verify_certificate(const Configuration& a, const GeneratorSet& generators,
                                    const SplitCertificate& certificate) {
  CertificateCheck check;
  std::vector<std::size_t> seen;
  for (const auto& part : certificate.parts) seen.insert(seen.end(), part.begin(), part.end());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  check.covers = seen.size() == generators.size() && (seen.empty() || seen.back() < generators.size());
  if (!check.covers) return check;

  const std::size_t kdim = a.height();
  check.proper_spans = !certificate.parts.empty();
  check.kernels_match = certificate.witness_configs.size() == certificate.parts.size();
  for (std::size_t i = 0; i < certificate.parts.size(); ++i) {
    const auto vs = pick(generators, certificate.parts[i]);
    if (vs.empty() || span_dimension(vs) >= kdim) check.proper_spans = false;
    if (!check.kernels_match) continue;
    const auto& m = certificate.witness_configs[i];
    if (m.cols() != a.cols() || !kernel_equals_span(m, vs)) check.kernels_match = false;
  }
  return check;
}

SplitReport split_numbers(const Configuration& a, Budget& budget, const SplitOptions& options) {
  SplitReport report;
  report.height = a.height();
  if (report.height <= 1) {
    const char* why = report.height == 0 ? "I_A = 0" : "I_A is principal";
    report.split = {false, 0, std::nullopt, std::string("not applicable: ") + why};
    report.split_rad = report.split;
    return report;
  }
  if (options.radical_generators) options.radical_generators->validate(a);

  report.split = {true, 2, std::nullopt, "lower bound 2 (non-principal)"};
  report.split_rad = {true, 2, std::nullopt, "lower bound 2 (non-principal)"};

  std::optional<MarkovResult> markov;
  try {
    markov = minimal_markov(a, budget);
    report.mu = markov->generators.size();
    report.minimal_generators = markov->generators;
    report.unique_minimal_generators = markov->unique();
  } catch (const BudgetExceeded& e) {
    report.degraded = true;
    report.notes.push_back(std::string("minimal generators unavailable: ") + e.what());
  }

  std::optional<SplitCertificate> radical_cover;
  std::optional<GeneratorSet> radical = options.radical_generators;
  if (!radical && options.assume_circuit_radical) {
    std::vector<LatticeVector> vs;
    for (const auto& c : circuits(a)) vs.push_back(c.vector());
    radical = GeneratorSet(std::move(vs), GeneratorMode::radical_generators, "circuits (assumed radical)");
  }
  report.radical_generators = radical;
  if (radical) {
    try {
      radical_cover = minimal_cover(a, *radical, budget);
    } catch (const BudgetExceeded& e) {
      report.degraded = true;
      report.notes.push_back(std::string("radical cover search incomplete: ") + e.what());
    }
  }

  if (report.height == 2) {
    if (report.mu) {
      report.split = {true, *report.mu, *report.mu, "height 2: Split = mu"};
      try {
        report.split_certificate = find_cover(a, markov->generators, *report.mu, budget);
      } catch (const BudgetExceeded& e) {
        report.degraded = true;
        report.notes.push_back(std::string("certificate search incomplete: ") + e.what());
      }
    }
    BarOptions bo;
    bo.assume_circuit_radical = options.assume_circuit_radical;
    if (options.radical_generators) bo.known_radical_generators = options.radical_generators->size();
    try {
      report.bar = bar_bounds(a, budget, bo);
    } catch (const BudgetExceeded& e) {
      report.degraded = true;
      report.notes.push_back(std::string("bar bounds unavailable: ") + e.what());
    }
    if (report.bar) {
      if (report.bar->degraded) report.degraded = true;
      report.split_rad = {true, report.bar->lo, report.bar->hi, "height 2: Split_rad = bar; " + report.bar->lo_rule};
      if (report.bar->hi) report.split_rad.method += "; " + report.bar->hi_rule;
    }
    if (simplicial_shape(a.matrix()).simplicial &&
        (!report.split_rad.hi || *report.split_rad.hi > 3)) {
      report.split_rad.hi = std::max<std::size_t>(3, report.split_rad.lo);
      report.split_rad.method += "; simplicial height 2: Split_rad <= 3";
    }
    if (radical_cover && (!report.split_rad.hi || radical_cover->parts.size() < *report.split_rad.hi)) {
      report.split_rad.hi = radical_cover->parts.size();
      report.split_rad.method += "; cover of a radical generating set";
    }
    report.radical_certificate = std::move(radical_cover);
    return report;
  }

  if (markov) {
    std::optional<SplitCertificate> cover;
    try {
      cover = minimal_cover(a, markov->generators, budget);
    } catch (const BudgetExceeded& e) {
      report.degraded = true;
      report.notes.push_back(std::string("cover search incomplete: ") + e.what());
    }
    if (cover) {
      const std::size_t r = cover->parts.size();
      if (markov->unique()) {
        report.split = {true, r, r, "unique minimal generating set: least r with a proper-span cover"};
      } else {
        report.split.hi = r;
        report.split.method = "upper bound from one minimal generating set";
      }
      report.split_certificate = std::move(cover);
    } else if (!report.degraded) {
      report.notes.push_back("no proper-span cover of the minimal generators exists");
    }
  }
  // Split_rad <= Split.
  if (report.split.hi) {
    report.split_rad.hi = report.split.hi;
    report.split_rad.method = "lower bound 2; Split_rad <= Split";
  }
  if (radical_cover) {
    const std::size_t r = radical_cover->parts.size();
    if (!report.split_rad.hi || r < *report.split_rad.hi) {
      report.split_rad.hi = r;
      report.split_rad.method = "lower bound 2; cover of a radical generating set";
    }
  }
  report.radical_certificate = std::move(radical_cover);
  return report;
}

SimplicialShape simplicial_shape(const IntMatrix& a) {
  SimplicialShape shape;
  std::vector<bool> used(a.cols(), false);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    bool found = false;
    for (std::size_t j = 0; j < a.cols() && !found; ++j) {
      if (used[j] || sgn(a(k, j)) <= 0) continue;
      bool unit = true;
      for (std::size_t i = 0; i < a.rows() && unit; ++i)
        if (i != k && sgn(a(i, j)) != 0) unit = false;
      if (unit) {
        used[j] = true;
        shape.diagonal_columns.push_back(j);
        found = true;
      }
    }
    if (!found) {
      shape.diagonal_columns.clear();
      return shape;
    }
  }
  if (a.cols() == a.rows()) return shape;
  bool nonnegative = true;
  bool no_zero_column = true;
  bool all_nonzero = true;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (used[j]) continue;
    bool column_nonzero = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const int s = sgn(a(i, j));
      if (s < 0) nonnegative = false;
      if (s == 0) all_nonzero = false;
      if (s != 0) column_nonzero = true;
    }
    if (!column_nonzero) no_zero_column = false;
  }
  shape.simplicial = nonnegative && no_zero_column;
  shape.full_parametrization = shape.simplicial && all_nonzero;
  return shape;
}

std::vector<RuleHit> classify_sufficient_conditions(const Configuration& a, std::optional<std::size_t> known_bar,
                                                    Budget& budget) {
  std::vector<RuleHit> hits;
  const std::size_t h = a.height();
  if (h <= 1) {
    hits.push_back({"principal or zero ideal", "splitting numbers not defined", "any"});
    return hits;
  }
  const auto shape = simplicial_shape(a.matrix());
  hits.push_back({"non-principal", "2 <= Split_rad <= bar <= mu", "any"});

  // Bar estimate for the comparisons: the known value, else the bar_bounds upper end.
  std::optional<std::size_t> bar = known_bar;
  std::optional<std::size_t> mu_value;
  if (!bar || h == 2) {
    try {
      const auto b = bar_bounds(a, budget);
      mu_value = b.mu;
      if (!bar && b.exact()) bar = b.lo;
      else if (!bar && b.hi && *b.hi <= 2 * h - 2 && h >= 3) bar = b.hi;
    } catch (const BudgetExceeded&) {
    }
  }

  if (h == 2) {
    hits.push_back({"height 2", "Split = mu and Split_rad = bar", "any"});
    if (shape.simplicial) {
      const std::string what = shape.full_parametrization ? "simplicial, full parametrization, height 2"
                                                          : "simplicial, height 2";
      hits.push_back({what, "2 <= Split_rad <= 3", "any"});
    }
    if (known_bar && *known_bar == 2)
      hits.push_back({"height 2, bar = 2", "set-theoretic CI <=> radical splittable: I_A is radical splittable", "any"});
    if (mu_value && *mu_value > 2)
      hits.push_back({"height 2, not a complete intersection", "Split_rad >= 3", "0"});
  }
  if (bar && *bar == h)
    hits.push_back({"bar = ht (set-theoretic CI on binomials)", "radical splittable", "any"});
  if (h >= 3) {
    if (bar && *bar <= 2 * h - 2) hits.push_back({"bar <= 2r-2", "radical splittable", "any"});
    if (bar && *bar == h + 1) hits.push_back({"bar = r+1", "radical splittable", "any"});
    if (shape.full_parametrization)
      hits.push_back({"simplicial, full parametrization, height >= 3", "radical splittable", "any"});
  }
  if (shape.full_parametrization)
    hits.push_back({"simplicial, full parametrization", "set-theoretic CI on binomials, radical splittable", "p"});
  return hits;
}

}  // namespace toricsplit
