#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toricsplit/budget.hpp"
#include "toricsplit/exactla.hpp"
#include "toricsplit/families.hpp"
#include "toricsplit/graphs.hpp"

namespace toricsplit::cli {

enum ExitCode : int { ok = 0, mismatch = 1, input_error = 2, budget_exhausted = 3 };

/// Malformed input with a 1-based position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

IntMatrix parse_matrix(const std::string& text, const std::string& source = "<input>");
BipartiteGraph parse_graph(const std::string& text, const std::string& source = "<input>");
/// The header keyword of a matrix or graph file ("matrix" or "bipartite").
std::string file_kind(const std::string& text);
std::string read_file(const std::filesystem::path& path);

/// Rows of a matrix file read as lattice vectors.
std::vector<LatticeVector> rows_as_vectors(const IntMatrix& m);

/// x^{u+} - x^{u-} with 1-based variable names.
std::string binomial(const LatticeVector& u, const std::string& var = "x");

using Report = nlohmann::ordered_json;

std::string render_text(const Report& report);

struct Options {
  std::string command;
  std::vector<std::string> args;
  std::string format = "text";
  std::uint64_t budget = Budget::kDefaultLimit;
  bool assume_circuit_radical = false;
  std::string characteristic = "any";
  std::optional<std::string> out;
  std::optional<std::string> catalogue;
  std::optional<std::string> radical_generators;
  bool timing = false;
};

struct Outcome {
  Report report;
  int exit_code = ExitCode::ok;
};

/// Runs one command. Input errors become exit code 2 with a diagnostic in
/// the report; budget exhaustion becomes exit code 3 with degradation notes.
Outcome run(const Options& options);

struct Check {
  std::string example;
  std::string quantity;
  std::string computed;
  std::string catalogue;
  std::string characteristic = "any";
  bool ok = false;
};

struct VerifyResult {
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool budget_exhausted = false;

  bool ok() const;
  std::vector<const Check*> failures() const;
};

/// Recomputes every catalogued quantity and family prediction and compares.
/// Each example gets its own budget of `budget_limit` units.
VerifyResult verify_paper(const Catalogue& catalogue, std::uint64_t budget_limit);

std::string describe(const Check& c);

}  // namespace toricsplit::cli
