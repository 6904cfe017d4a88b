#include <sstream>

#include "encode.hpp"

namespace toricsplit::cli {

Report encode(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Report encode(const LatticeVector& v) { return Report(v.coords()); }

Report encode(const SupportSet& s) {
  Report out = Report::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

Report encode(const IntMatrix& m) {
  Report out = Report::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Report row = Report::array();
    for (const auto& x : m.row(r)) row.push_back(encode(x));
    out.push_back(std::move(row));
  }
  return out;
}

Report encode(const Bound& b) {
  Report out;
  if (!b.applicable) {
    out["applicable"] = false;
    out["method"] = b.method;
    return out;
  }
  if (b.exact()) {
    out["value"] = b.lo;
  } else {
    out["lo"] = b.lo;
    out["hi"] = b.hi ? Report(*b.hi) : Report(nullptr);
  }
  out["exact"] = b.exact();
  out["method"] = b.method;
  return out;
}

Report encode(const BarBounds& b) {
  Report out;
  out["lo"] = b.lo;
  out["lo_rule"] = b.lo_rule;
  out["hi"] = b.hi ? Report(*b.hi) : Report(nullptr);
  out["hi_rule"] = b.hi ? Report(b.hi_rule) : Report(nullptr);
  out["exact"] = b.exact();
  out["height"] = b.height;
  out["delta01"] = b.delta;
  out["circuits"] = b.circuit_count;
  out["mu"] = b.mu ? Report(*b.mu) : Report(nullptr);
  if (b.degraded) out["degraded"] = *b.degraded;
  return out;
}

Report encode(const SplitCertificate& c, const Configuration& a, const GeneratorSet& generators) {
  Report out;
  out["kind"] = to_string(c.kind);
  out["generator_set"] = generators.provenance();
  out["kernel_dim"] = c.kernel_dim;
  Report parts = Report::array();
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    Report p;
    Report members = Report::array();
    for (auto k : c.parts[i]) members.push_back(k + 1);
    p["members"] = std::move(members);
    p["span_dim"] = c.span_dims[i];
    p["witness_config"] = encode(c.witness_configs[i]);
    parts.push_back(std::move(p));
  }
  out["parts"] = std::move(parts);
  out["verified"] = verify_certificate(a, generators, c).ok();
  return out;
}

Report encode_generators(const GeneratorSet& g) {
  Report out;
  out["mode"] = to_string(g.mode());
  out["provenance"] = g.provenance();
  out["count"] = g.size();
  Report items = Report::array();
  for (const auto& v : g.vectors()) items.push_back({{"vector", encode(v)}, {"binomial", binomial(v)}});
  out["generators"] = std::move(items);
  return out;
}

bool characteristic_matches(const std::string& tag, const std::string& wanted) {
  return tag == "any" || wanted == "any" || tag == wanted;
}

Report encode_values(const std::vector<CatalogueValue>& values, const std::string& characteristic) {
  Report out = Report::array();
  for (const auto& v : values) {
    if (!characteristic_matches(v.characteristic, characteristic)) continue;
    Report item{{"quantity", v.quantity}, {"value", v.value}, {"characteristic", v.characteristic},
                {"source", "catalogue"}};
    if (!v.note.empty()) item["note"] = v.note;
    out.push_back(std::move(item));
  }
  return out;
}

namespace {

bool scalar(const Report& r) { return !r.is_object() && !r.is_array(); }

bool flat(const Report& r) {
  if (!r.is_array()) return false;
  for (const auto& x : r)
    if (!scalar(x) && !flat(x)) return false;
  return true;
}

std::string inline_value(const Report& r) {
  if (r.is_string()) return r.get<std::string>();
  if (r.is_null()) return "-";
  if (r.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + inline_value(r[i]);
    return s + "]";
  }
  return r.dump();
}

void render(const Report& r, std::size_t indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (r.is_object()) {
    for (const auto& [key, value] : r.items()) {
      if (scalar(value) || flat(value)) {
        out << pad << key << ": " << inline_value(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (r.is_array()) {
    for (const auto& item : r) {
      if (scalar(item) || flat(item)) {
        out << pad << "- " << inline_value(item) << "\n";
      } else {
        out << pad << "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out << pad << inline_value(r) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace toricsplit::cli
