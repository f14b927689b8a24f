#pragma once

// Text formats for algebras and metrics.
//
// Algebra file, one directive per line, '#' starts a comment:
//   name so3
//   dim 3
//   basis e1 e2 e3
//   bracket 1 2 3 1        [e1, e2] has coefficient 1 on e3 (1-based, i < j)
// Metric file:
//   dim 3
//   row 1 0 0
//   row 0 1 0
//   row 0 0 1/2

#include "liegeo/curvature.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegeo {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  /// 1-based, 0 when the problem is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed but not yet checked for antisymmetry or Jacobi.
struct AlgebraFile {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;  ///< 0-based
};

AlgebraFile parse_algebra_file(const std::string& text);
/// Throws ParseError, or InvalidAlgebra for a table that is not a Lie bracket.
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra load_algebra(const std::filesystem::path& path);
std::string write_algebra(const LieAlgebra& L);
void save_algebra(const LieAlgebra& L, const std::filesystem::path& path);

Matrix parse_metric_matrix(const std::string& text);
/// Throws ParseError, or std::invalid_argument when not symmetric or degenerate.
Metric parse_metric(const std::string& text);
Metric load_metric(const std::filesystem::path& path);
std::string write_metric(const Metric& g);

/// "1,0,-1/2" -> (1, 0, -1/2). Throws ParseError.
Vector parse_csv_vector(const std::string& text);

std::string read_file(const std::filesystem::path& path);

}  // namespace liegeo
