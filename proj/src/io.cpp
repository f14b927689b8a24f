#include "liegeo/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace liegeo {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::size_t parse_count(const std::string& word, std::size_t line, const std::string& field) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    if (word.empty() || word[0] == '-' || word[0] == '+') throw std::invalid_argument(word);
    value = std::stoul(word, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, field + ": expected a non-negative integer, got '" + word + "'");
  }
  if (pos != word.size()) throw ParseError(line, field + ": expected a non-negative integer, got '" + word + "'");
  return value;
}

Rational parse_value(const std::string& word, std::size_t line, const std::string& field) {
  try {
    return parse_rational(word);
  } catch (const std::exception&) {
    throw ParseError(line, field + ": expected a rational, got '" + word + "'");
  }
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile file;
  bool have_dim = false;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  std::vector<std::size_t> bracket_lines;
  std::size_t basis_line = 0;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto words = split_words(strip_comment(raw));
    if (words.empty()) continue;
    const std::string& key = words[0];
    if (key == "name") {
      if (words.size() != 2) throw ParseError(lineno, "name: expected one word");
      file.name = words[1];
    } else if (key == "dim") {
      if (have_dim) throw ParseError(lineno, "dim given twice");
      if (words.size() != 2) throw ParseError(lineno, "dim: expected one value");
      file.dim = parse_count(words[1], lineno, "dim");
      have_dim = true;
    } else if (key == "basis") {
      file.basis.assign(words.begin() + 1, words.end());
      basis_line = lineno;
    } else if (key == "bracket") {
      if (words.size() != 5) throw ParseError(lineno, "bracket: expected 'bracket i j k c'");
      const std::size_t i = parse_count(words[1], lineno, "bracket i");
      const std::size_t j = parse_count(words[2], lineno, "bracket j");
      const std::size_t k = parse_count(words[3], lineno, "bracket k");
      const Rational c = parse_value(words[4], lineno, "bracket c");
      if (i == 0 || j == 0 || k == 0) throw ParseError(lineno, "bracket: indices are 1-based");
      if (i >= j) throw ParseError(lineno, "bracket: need i < j");
      if (!seen.insert({i, j, k}).second)
        throw ParseError(lineno, "bracket: duplicate entry for (" + words[1] + ", " + words[2] + ", " + words[3] + ")");
      file.brackets.push_back({i - 1, j - 1, k - 1, c});
      bracket_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_dim) throw ParseError(0, "missing 'dim' line");
  if (file.basis.empty()) {
    for (std::size_t i = 1; i <= file.dim; ++i) file.basis.push_back("e" + std::to_string(i));
  } else if (file.basis.size() != file.dim) {
    throw ParseError(basis_line, "basis: " + std::to_string(file.basis.size()) + " names for dim " +
                                     std::to_string(file.dim));
  }
  for (std::size_t b = 0; b < file.brackets.size(); ++b) {
    const auto& e = file.brackets[b];
    if (e.j >= file.dim || e.k >= file.dim)
      throw ParseError(bracket_lines[b], "bracket: index out of range for dim " + std::to_string(file.dim));
  }
  return file;
}

LieAlgebra parse_algebra(const std::string& text) {
  AlgebraFile file = parse_algebra_file(text);
  return LieAlgebra::from_brackets(std::move(file.name), std::move(file.basis), file.brackets);
}

LieAlgebra load_algebra(const std::filesystem::path& path) { return parse_algebra(read_file(path)); }

std::string write_algebra(const LieAlgebra& L) {
  std::ostringstream out;
  if (!L.name().empty()) out << "name " << L.name() << '\n';
  out << "dim " << L.dim() << '\n';
  out << "basis";
  for (const auto& b : L.basis_names()) out << ' ' << b;
  out << '\n';
  for (const auto& e : L.entries())
    out << "bracket " << e.i + 1 << ' ' << e.j + 1 << ' ' << e.k + 1 << ' ' << to_string(e.coeff) << '\n';
  return out.str();
}

void save_algebra(const LieAlgebra& L, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_algebra(L);
}

Matrix parse_metric_matrix(const std::string& text) {
  std::size_t dim = 0;
  bool have_dim = false;
  std::vector<Vector> rows;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto words = split_words(strip_comment(raw));
    if (words.empty()) continue;
    if (words[0] == "dim") {
      if (have_dim) throw ParseError(lineno, "dim given twice");
      if (words.size() != 2) throw ParseError(lineno, "dim: expected one value");
      dim = parse_count(words[1], lineno, "dim");
      have_dim = true;
    } else if (words[0] == "row") {
      if (!have_dim) throw ParseError(lineno, "row before dim");
      if (words.size() != dim + 1)
        throw ParseError(lineno, "row: expected " + std::to_string(dim) + " entries");
      if (rows.size() == dim) throw ParseError(lineno, "row: more than " + std::to_string(dim) + " rows");
      Vector row;
      for (std::size_t c = 1; c < words.size(); ++c) row.push_back(parse_value(words[c], lineno, "row entry"));
      rows.push_back(std::move(row));
    } else {
      throw ParseError(lineno, "unknown directive '" + words[0] + "'");
    }
  }
  if (!have_dim) throw ParseError(0, "missing 'dim' line");
  if (rows.size() != dim) throw ParseError(0, "expected " + std::to_string(dim) + " rows, got " + std::to_string(rows.size()));
  return dim == 0 ? Matrix(0, 0) : Matrix::from_rows(rows);
}

Metric parse_metric(const std::string& text) { return Metric(parse_metric_matrix(text)); }

Metric load_metric(const std::filesystem::path& path) { return parse_metric(read_file(path)); }

std::string write_metric(const Metric& g) {
  std::ostringstream out;
  out << "dim " << g.dim() << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i) {
    out << "row";
    for (std::size_t j = 0; j < g.dim(); ++j) out << ' ' << to_string(g.matrix()(i, j));
    out << '\n';
  }
  return out.str();
}

Vector parse_csv_vector(const std::string& text) {
  Vector v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string field = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto words = split_words(field);
    if (words.size() != 1) throw ParseError(0, "form: empty or malformed entry " + std::to_string(v.size() + 1));
    v.push_back(parse_value(words[0], 0, "form entry " + std::to_string(v.size() + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace liegeo
