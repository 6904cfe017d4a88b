#include <cctype>
#include <fstream>
#include <sstream>

#include "toricsplit/cli.hpp"

namespace toricsplit::cli {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits into non-blank, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      if (raw[i] == '#') break;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#') ++i;
      line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Integer parse_integer(const Token& t, const std::string& source, std::size_t line) {
  std::size_t i = (t.text[0] == '-' || t.text[0] == '+') ? 1 : 0;
  if (i == t.text.size()) throw ParseError(source, line, t.column, "expected an integer, got '" + t.text + "'");
  for (std::size_t k = i; k < t.text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
      throw ParseError(source, line, t.column + k, "expected an integer, got '" + t.text + "'");
  return Integer(t.text[0] == '+' ? t.text.substr(1) : t.text, 10);
}

std::size_t parse_count(const Token& t, const std::string& source, std::size_t line) {
  const Integer z = parse_integer(t, source, line);
  if (sgn(z) <= 0 || !z.fits_ulong_p() || z > 1000000)
    throw ParseError(source, line, t.column, "expected a positive size, got '" + t.text + "'");
  return z.get_ui();
}

std::pair<std::size_t, std::size_t> header(const std::vector<Line>& lines, const std::string& keyword,
                                           const std::string& source) {
  if (lines.empty()) throw ParseError(source, 1, 1, "empty input, expected '" + keyword + " m n'");
  const auto& h = lines.front();
  if (h.tokens[0].text != keyword)
    throw ParseError(source, h.number, h.tokens[0].column, "expected header '" + keyword + " m n'");
  if (h.tokens.size() != 3)
    throw ParseError(source, h.number, h.tokens.back().column, "header must be '" + keyword + " m n'");
  return {parse_count(h.tokens[1], source, h.number), parse_count(h.tokens[2], source, h.number)};
}

}  // namespace

std::string file_kind(const std::string& text) {
  const auto lines = tokenize(text);
  return lines.empty() ? std::string{} : lines.front().tokens[0].text;
}

IntMatrix parse_matrix(const std::string& text, const std::string& source) {
  const auto lines = tokenize(text);
  const auto [m, n] = header(lines, "matrix", source);
  if (lines.size() - 1 < m) {
    const std::size_t at = lines.empty() ? 1 : lines.back().number + 1;
    throw ParseError(source, at, 1,
                     "expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > m)
    throw ParseError(source, lines[m + 1].number, 1, "more than the " + std::to_string(m) + " declared rows");
  IntMatrix out(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& line = lines[r + 1];
    if (line.tokens.size() != n) {
      const std::size_t col = line.tokens.size() > n ? line.tokens[n].column : line.tokens.back().column;
      throw ParseError(source, line.number, col,
                       "expected " + std::to_string(n) + " entries, found " + std::to_string(line.tokens.size()));
    }
    for (std::size_t c = 0; c < n; ++c) out(r, c) = parse_integer(line.tokens[c], source, line.number);
  }
  return out;
}

BipartiteGraph parse_graph(const std::string& text, const std::string& source) {
  const auto lines = tokenize(text);
  const auto [m, n] = header(lines, "bipartite", source);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> seen(m * n, false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.size() != 2)
      throw ParseError(source, line.number, line.tokens.front().column, "expected an edge 'i j'");
    const std::size_t i = parse_count(line.tokens[0], source, line.number);
    const std::size_t j = parse_count(line.tokens[1], source, line.number);
    if (i > m) throw ParseError(source, line.number, line.tokens[0].column, "left vertex out of range");
    if (j > n) throw ParseError(source, line.number, line.tokens[1].column, "right vertex out of range");
    if (seen[(i - 1) * n + (j - 1)]) throw ParseError(source, line.number, line.tokens[0].column, "duplicate edge");
    seen[(i - 1) * n + (j - 1)] = true;
    edges.emplace_back(i - 1, j - 1);
  }
  try {
    return BipartiteGraph(m, n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lines.front().number, 1, e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<LatticeVector> rows_as_vectors(const IntMatrix& m) {
  std::vector<LatticeVector> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::int64_t> v;
    for (const auto& x : m.row(r)) v.push_back(to_int64(x));
    out.emplace_back(std::move(v));
  }
  return out;
}

std::string binomial(const LatticeVector& u, const std::string& var) {
  auto monomial = [&](int sign) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto e = u[i] * sign;
      if (e <= 0) continue;
      s += var + std::to_string(i + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? std::string("1") : s;
  };
  return monomial(1) + " - " + monomial(-1);
}

}  // namespace toricsplit::cli
