#pragma once

#include "cka/term.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cka {

/// Linear system over terms: an ordered index set, a dense matrix and a
/// vector. Entries default to 0.
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<std::string> index);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& index() const { return names_; }
  [[nodiscard]] std::optional<std::size_t> position(const std::string& name) const;
  /// Position of `name`, appending it (with zero row and column) if new.
  std::size_t add_index(const std::string& name);

  [[nodiscard]] Term matrix(std::size_t i, std::size_t j) const { return matrix_[i][j]; }
  [[nodiscard]] Term vector(std::size_t i) const { return vector_[i]; }
  void set_matrix(std::size_t i, std::size_t j, Term t) { matrix_[i][j] = t; }
  void set_vector(std::size_t i, Term t) { vector_[i] = t; }
  /// Adds `t` as a further summand of the entry.
  void add_to_matrix(std::size_t i, std::size_t j, Term t);

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> positions_;
  std::vector<std::vector<Term>> matrix_;
  std::vector<Term> vector_;
};

using Assignment = std::map<std::string, Term>;

/// Least solution by Gaussian-style elimination with Kleene star on the
/// diagonal. Pivots are eliminated in `pivot_order` (default: the index in
/// reverse); only BKA simplification is applied to intermediate terms.
Assignment solve_least(const LinearSystem& system, const std::vector<std::string>& pivot_order = {});

/// M·v + p, simplified.
Assignment apply(const LinearSystem& system, const Assignment& v);

class SystemFormatError : public std::runtime_error {
 public:
  SystemFormatError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the tableau format: the first line lists the index names, every
/// further non-blank line reads `row | e1 e2 ... en ; v`, where entries are
/// expressions without whitespace and `_` stands for 0. Rows may be omitted.
LinearSystem load_system(std::istream& in);
LinearSystem load_system_file(const std::string& path);
/// Writes the tableau format read by `load_system`.
std::string dump_system(const LinearSystem& system);

}  // namespace cka
