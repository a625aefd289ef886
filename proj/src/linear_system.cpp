#include "cka/linear_system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cka {

LinearSystem::LinearSystem(std::vector<std::string> index) {
  for (auto& name : index) add_index(name);
}

std::optional<std::size_t> LinearSystem::position(const std::string& name) const {
  if (auto it = positions_.find(name); it != positions_.end()) return it->second;
  return std::nullopt;
}

std::size_t LinearSystem::add_index(const std::string& name) {
  if (auto p = position(name)) return *p;
  const std::size_t n = names_.size();
  names_.push_back(name);
  positions_.emplace(name, n);
  for (auto& row : matrix_) row.push_back(Term::zero());
  matrix_.emplace_back(n + 1, Term::zero());
  vector_.push_back(Term::zero());
  return n;
}

void LinearSystem::add_to_matrix(std::size_t i, std::size_t j, Term t) {
  matrix_[i][j] = matrix_[i][j].is_zero() ? t : matrix_[i][j] + t;
}

namespace {

// M(i,k)·M(k,k)*·t, or 0 when M(i,k) is 0.
Term through(Term to_pivot, Term loop, Term t) {
  if (to_pivot.is_zero() || t.is_zero()) return Term::zero();
  return ka_simplify(Term::seq({to_pivot, loop, t}));
}

}  // namespace

Assignment solve_least(const LinearSystem& system, const std::vector<std::string>& pivot_order) {
  const std::size_t n = system.size();
  std::vector<std::size_t> order;
  if (pivot_order.empty()) {
    for (std::size_t i = n; i-- > 0;) order.push_back(i);
  } else {
    for (const auto& name : pivot_order) {
      auto p = system.position(name);
      if (!p) throw std::invalid_argument("unknown pivot '" + name + "'");
      order.push_back(*p);
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != n || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("pivot order must list every index exactly once");
    }
  }

  std::vector<std::vector<Term>> m(n, std::vector<Term>(n));
  std::vector<Term> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = ka_simplify(system.vector(i));
    for (std::size_t j = 0; j < n; ++j) m[i][j] = ka_simplify(system.matrix(i, j));
  }

  // Eliminate pivot k from the rows still active:
  //   M'(i,j) = M(i,k)·M(k,k)*·M(k,j) + M(i,j)
  //   p'(i)   = p(i) + M(i,k)·M(k,k)*·p(k)
  std::vector<bool> active(n, true);
  std::vector<Term> loops(n);
  for (std::size_t k : order) {
    active[k] = false;
    loops[k] = ka_simplify(Term::star(m[k][k]));
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || m[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j]) continue;
        const Term extra = through(m[i][k], loops[k], m[k][j]);
        if (!extra.is_zero()) m[i][j] = ka_simplify(extra + m[i][j]);
      }
      p[i] = ka_simplify(p[i] + through(m[i][k], loops[k], p[k]));
    }
  }

  // Back-substitution, last pivot first:
  //   x(k) = M(k,k)*·(p(k) + Σ M(k,j)·x(j)) over pivots j eliminated after k.
  std::vector<Term> x(n);
  std::vector<bool> solved(n, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t k = *it;
    std::vector<Term> sum{p[k]};
    for (std::size_t j = 0; j < n; ++j) {
      if (solved[j] && !m[k][j].is_zero()) sum.push_back(Term::seq({m[k][j], x[j]}));
    }
    x[k] = ka_simplify(Term::seq({loops[k], Term::plus(std::move(sum))}));
    solved[k] = true;
  }

  Assignment out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(system.index()[i], x[i]);
  return out;
}

Assignment apply(const LinearSystem& system, const Assignment& v) {
  Assignment out;
  for (std::size_t i = 0; i < system.size(); ++i) {
    std::vector<Term> sum{system.vector(i)};
    for (std::size_t j = 0; j < system.size(); ++j) {
      auto it = v.find(system.index()[j]);
      if (it == v.end()) throw std::invalid_argument("assignment misses index '" + system.index()[j] + "'");
      sum.push_back(Term::seq({system.matrix(i, j), it->second}));
    }
    out.emplace(system.index()[i], simplify(Term::plus(std::move(sum))));
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

Term parse_entry(const Token& token, std::size_t line) {
  if (token.text == "_") return Term::zero();
  try {
    return parse(token.text);
  } catch (const ParseError& e) {
    throw SystemFormatError(std::string("bad entry '") + token.text + "': " + e.what(), line,
                            token.column + e.position());
  }
}

}  // namespace

LinearSystem load_system(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  LinearSystem system;
  bool have_index = false;
  while (std::getline(in, text)) {
    ++line_no;
    auto tokens = tokenize(text);
    if (!have_index) {
      have_index = true;
      for (const auto& t : tokens) {
        if (system.position(t.text)) throw SystemFormatError("duplicate index '" + t.text + "'", line_no, t.column);
        system.add_index(t.text);
      }
      continue;
    }
    if (tokens.empty()) continue;
    const std::size_t n = system.size();
    auto row = system.position(tokens[0].text);
    if (!row) throw SystemFormatError("unknown row '" + tokens[0].text + "'", line_no, tokens[0].column);
    if (tokens.size() < 2 || tokens[1].text != "|") {
      throw SystemFormatError("expected '|' after the row name", line_no,
                              tokens.size() < 2 ? text.size() + 1 : tokens[1].column);
    }
    if (tokens.size() != n + 4 || tokens[n + 2].text != ";") {
      const std::size_t col = tokens.size() > n + 2 ? tokens[n + 2].column : text.size() + 1;
      throw SystemFormatError("expected " + std::to_string(n) + " matrix entries, ';' and a vector entry", line_no,
                              col);
    }
    for (std::size_t j = 0; j < n; ++j) system.set_matrix(*row, j, parse_entry(tokens[j + 2], line_no));
    system.set_vector(*row, parse_entry(tokens[n + 3], line_no));
  }
  return system;
}

LinearSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_system(in);
}

std::string dump_system(const LinearSystem& system) {
  auto entry = [](Term t) { return t.is_zero() ? std::string("_") : to_string(t); };
  std::ostringstream out;
  for (std::size_t i = 0; i < system.size(); ++i) out << (i ? " " : "") << system.index()[i];
  out << '\n';
  for (std::size_t i = 0; i < system.size(); ++i) {
    out << system.index()[i] << " |";
    for (std::size_t j = 0; j < system.size(); ++j) out << ' ' << entry(system.matrix(i, j));
    out << " ; " << entry(system.vector(i)) << '\n';
  }
  return out.str();
}

}  // namespace cka
