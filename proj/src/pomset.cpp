#include "cka/pomset.hpp"

#include <algorithm>
#include <ostream>

namespace cka {

struct Pomset::Node {
  PomsetKind kind = PomsetKind::Unit;
  std::string label;
  std::vector<Pomset> children;
  std::size_t size = 0;
  std::string text;
};

namespace {

std::shared_ptr<const Pomset::Node> unit_node() {
  static const auto node = [] {
    auto n = std::make_shared<Pomset::Node>();
    n->text = "1";
    return n;
  }();
  return node;
}

}  // namespace

Pomset::Pomset() : node_(unit_node()) {}

Pomset Pomset::unit() { return Pomset(); }

Pomset Pomset::prim(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("pomset label must be non-empty");
  auto n = std::make_shared<Node>();
  n->kind = PomsetKind::Prim;
  n->label = std::string(label);
  n->size = 1;
  n->text = n->label;
  return Pomset(std::move(n));
}

Pomset Pomset::seq(std::vector<Pomset> parts) {
  std::vector<Pomset> flat;
  for (Pomset& p : parts) {
    if (p.kind() == PomsetKind::Unit) continue;
    if (p.kind() == PomsetKind::Seq) {
      auto c = p.children();
      flat.insert(flat.end(), c.begin(), c.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = PomsetKind::Seq;
  for (const Pomset& c : flat) {
    n->size += c.size();
    if (!n->text.empty()) n->text += '.';
    if (c.kind() == PomsetKind::Par) {
      n->text += '(' + c.text() + ')';
    } else {
      n->text += c.text();
    }
  }
  n->children = std::move(flat);
  return Pomset(std::move(n));
}

Pomset Pomset::par(std::vector<Pomset> parts) {
  std::vector<Pomset> flat;
  for (Pomset& p : parts) {
    if (p.kind() == PomsetKind::Unit) continue;
    if (p.kind() == PomsetKind::Par) {
      auto c = p.children();
      flat.insert(flat.end(), c.begin(), c.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  auto n = std::make_shared<Node>();
  n->kind = PomsetKind::Par;
  for (const Pomset& c : flat) {
    n->size += c.size();
    if (!n->text.empty()) n->text += '|';
    n->text += c.text();
  }
  n->children = std::move(flat);
  return Pomset(std::move(n));
}

PomsetKind Pomset::kind() const { return node_->kind; }
const std::string& Pomset::label() const { return node_->label; }
std::span<const Pomset> Pomset::children() const { return node_->children; }
std::size_t Pomset::size() const { return node_->size; }
const std::string& Pomset::text() const { return node_->text; }

std::vector<Pomset> Pomset::seq_blocks() const {
  if (is_unit()) return {};
  if (kind() == PomsetKind::Seq) return node_->children;
  return {*this};
}

std::vector<Pomset> Pomset::par_components() const {
  if (is_unit()) return {};
  if (kind() == PomsetKind::Par) return node_->children;
  return {*this};
}

std::strong_ordering operator<=>(const Pomset& a, const Pomset& b) {
  const int c = a.text().compare(b.text());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Pomset seq_compose(const Pomset& u, const Pomset& v) { return Pomset::seq({u, v}); }
Pomset par_compose(const Pomset& u, const Pomset& v) { return Pomset::par({u, v}); }

std::string to_string(const Pomset& u) { return u.text(); }
std::ostream& operator<<(std::ostream& os, const Pomset& u) { return os << u.text(); }

namespace {

class PomsetParser {
 public:
  explicit PomsetParser(std::string_view text) : text_(text) {}

  Pomset parse_all() {
    Pomset p = parse_par();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("pomset syntax: " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Pomset parse_par() {
    std::vector<Pomset> parts{parse_seq()};
    while (accept('|')) parts.push_back(parse_seq());
    return Pomset::par(std::move(parts));
  }

  Pomset parse_seq() {
    std::vector<Pomset> parts{parse_atom()};
    while (accept('.')) parts.push_back(parse_atom());
    return Pomset::seq(std::move(parts));
  }

  Pomset parse_atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Pomset p = parse_par();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (c == '1') {
      ++pos_;
      return Pomset::unit();
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9') ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return Pomset::prim(text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Pomset parse_pomset(std::string_view text) { return PomsetParser(text).parse_all(); }

}  // namespace cka
