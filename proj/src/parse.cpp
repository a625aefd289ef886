#include "cka/term.hpp"

#include <cctype>

namespace cka {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Alphabet* alphabet) : text_(text), alphabet_(alphabet) {}

  Term parse_all() {
    Term t = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term parse_sum() {
    Term t = parse_par();
    while (accept('+')) t = Term::plus({t, parse_par()});
    return t;
  }

  Term parse_par() {
    Term t = parse_seq();
    while (accept('|')) t = Term::par({t, parse_seq()});
    return t;
  }

  Term parse_seq() {
    Term t = parse_postfix();
    while (accept('.')) t = Term::seq({t, parse_postfix()});
    return t;
  }

  Term parse_postfix() {
    Term t = parse_atom();
    while (accept('*')) t = Term::star(t);
    return t;
  }

  Term parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("malformed literal");
      return c == '0' ? Term::zero() : Term::one();
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size()) {
        const char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
          ++pos_;
        } else {
          break;
        }
      }
      std::string_view symbol = text_.substr(start, pos_ - start);
      if (alphabet_ != nullptr && !alphabet_->contains(symbol)) throw UnknownSymbolError(std::string(symbol), start);
      return Term::letter(symbol);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Alphabet* alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view text, const Alphabet* alphabet) { return Parser(text, alphabet).parse_all(); }

}  // namespace cka
