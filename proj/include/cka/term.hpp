#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cka {

enum class TermKind : std::uint8_t { Zero, One, Letter, Plus, Seq, Par, Star };

struct TermNode;

/// Immutable, hash-consed expression over the operators 0, 1, letters,
/// `+`, `.`, `|` and postfix `*`.
///
/// Two structurally equal terms share one node, so equality and hashing are
/// pointer operations. The n-ary constructors flatten nested operands of the
/// same kind; they do not otherwise rewrite. Construction with a single
/// operand yields that operand, and an empty operand list yields the unit of
/// the operator (0 for `+`, 1 for `.` and `|`).
class Term {
 public:
  Term();

  static Term zero();
  static Term one();
  static Term letter(std::string_view symbol);
  static Term plus(std::vector<Term> operands);
  static Term seq(std::vector<Term> operands);
  static Term par(std::vector<Term> operands);
  static Term star(Term body);

  static Term plus(std::initializer_list<Term> operands) { return plus(std::vector<Term>(operands)); }
  static Term seq(std::initializer_list<Term> operands) { return seq(std::vector<Term>(operands)); }
  static Term par(std::initializer_list<Term> operands) { return par(std::vector<Term>(operands)); }

  [[nodiscard]] TermKind kind() const;
  [[nodiscard]] const std::string& symbol() const;
  [[nodiscard]] std::span<const Term> operands() const;
  [[nodiscard]] Term body() const;

  [[nodiscard]] bool is_zero() const { return kind() == TermKind::Zero; }
  [[nodiscard]] bool is_one() const { return kind() == TermKind::One; }

  /// Syntactic emptiness: true iff the term denotes the empty language.
  [[nodiscard]] bool denotes_empty() const;
  [[nodiscard]] bool nullable() const;
  [[nodiscard]] std::size_t width() const;
  /// Number of syntax nodes.
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool has_star() const;
  [[nodiscard]] std::size_t hash() const;

  [[nodiscard]] const TermNode* node() const { return node_; }

  friend bool operator==(Term a, Term b) { return a.node_ == b.node_; }

 private:
  explicit Term(const TermNode* node) : node_(node) {}
  friend class TermFactory;

  const TermNode* node_;
};

/// Deterministic total order on terms, used to sort operands of `+` and `|`.
std::strong_ordering compare(Term a, Term b);

struct TermLess {
  bool operator()(Term a, Term b) const { return compare(a, b) < 0; }
};

struct TermHash {
  std::size_t operator()(Term t) const { return t.hash(); }
};

using TermSet = std::set<Term, TermLess>;

// Binary conveniences.
inline Term operator+(Term a, Term b) { return Term::plus({a, b}); }
inline Term operator*(Term a, Term b) { return Term::seq({a, b}); }
inline Term operator|(Term a, Term b) { return Term::par({a, b}); }

bool nullable(Term e);
std::size_t width(Term e);

/// Compact text form accepted by `parse`; contains no whitespace.
std::string to_string(Term e);
std::ostream& operator<<(std::ostream& os, Term e);

/// Finite, ordered set of letter symbols.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> symbols) : symbols_(symbols) {}
  explicit Alphabet(std::set<std::string> symbols) : symbols_(std::move(symbols)) {}

  [[nodiscard]] bool contains(std::string_view symbol) const { return symbols_.contains(std::string(symbol)); }
  void insert(std::string symbol) { symbols_.insert(std::move(symbol)); }
  [[nodiscard]] const std::set<std::string>& symbols() const { return symbols_; }
  [[nodiscard]] std::size_t size() const { return symbols_.size(); }

 private:
  std::set<std::string> symbols_;
};

Alphabet alphabet_of(Term e);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& symbol, std::size_t position)
      : ParseError("unknown symbol '" + symbol + "'", position), symbol_(symbol) {}
  [[nodiscard]] const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Parses the expression grammar. Precedence, loosest first: `+`, `|`, `.`,
/// postfix `*`. Binary operators associate to the left. When `alphabet` is
/// given, every letter must belong to it.
Term parse(std::string_view text, const Alphabet* alphabet = nullptr);

/// Rewrite rules the simplifier may apply. All are equations of bi-Kleene
/// algebra; the exchange law is deliberately absent.
enum class SimplifyRule : std::uint8_t {
  FlattenAssociative,
  DropUnit,
  Annihilate,
  DropZeroSummand,
  Idempotence,
  SortCommutative,
  StarOfUnit,
  StarDropUnitSummand,
  StarOfStar,
  StarUnstarSummand,
  StarOfUnrolling,
  SeqStarIdempotence,
  SumAbsorption,
  SumFoldUnrolling,
};

std::string_view rule_name(SimplifyRule rule);

/// Records the rules the simplifier applies on the current thread while in
/// scope. Only the innermost trace receives events; results that were
/// already memoized are not replayed.
class SimplifyTrace {
 public:
  SimplifyTrace();
  ~SimplifyTrace();
  SimplifyTrace(const SimplifyTrace&) = delete;
  SimplifyTrace& operator=(const SimplifyTrace&) = delete;

  [[nodiscard]] const std::vector<SimplifyRule>& rules() const { return rules_; }
  void record(SimplifyRule rule) { rules_.push_back(rule); }

 private:
  std::vector<SimplifyRule> rules_;
  SimplifyTrace* previous_;
};

/// Normalizes a term using bi-Kleene algebra equations that preserve the
/// star-bounded language at every bound: unit and annihilator folding,
/// idempotent sums, flattening, commutative ordering of `+` and `|`
/// operands, and `0*`, `1*`, `(1 + e)*` reductions.
Term simplify(Term e);

/// simplify() extended with Kleene algebra identities for the star, such as
/// (e*)* = e*, e*·e* = e*, (e + f*)* = (e + f)*, absorption of summands that
/// are syntactically below another summand, and 1 + e·e* = e*. The result is
/// ≡BKA to the input, but its bounded languages may differ because stars
/// are merged. The exchange law is never used.
Term ka_simplify(Term e);

}  // namespace cka

template <>
struct std::hash<cka::Term> {
  std::size_t operator()(cka::Term t) const noexcept { return t.hash(); }
};
