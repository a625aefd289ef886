#include "cka/term.hpp"

#include "term_node.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <unordered_set>

namespace cka {

namespace {

std::size_t combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct NodeKey {
  TermKind kind;
  std::string_view symbol;
  std::span<const Term> operands;
};

std::size_t key_hash(const NodeKey& key) {
  std::size_t h = std::hash<int>{}(static_cast<int>(key.kind));
  h = combine(h, std::hash<std::string_view>{}(key.symbol));
  for (Term t : key.operands) h = combine(h, std::hash<const void*>{}(t.node()));
  return h;
}

struct NodePtrHash {
  using is_transparent = void;
  std::size_t operator()(const TermNode* n) const { return n->hash; }
  std::size_t operator()(const NodeKey& k) const { return key_hash(k); }
};

struct NodePtrEq {
  using is_transparent = void;
  static bool same(const TermNode* n, const NodeKey& k) {
    return n->kind == k.kind && n->symbol == k.symbol &&
           std::equal(n->operands.begin(), n->operands.end(), k.operands.begin(), k.operands.end());
  }
  bool operator()(const TermNode* a, const TermNode* b) const { return a == b; }
  bool operator()(const TermNode* a, const NodeKey& b) const { return same(a, b); }
  bool operator()(const NodeKey& a, const TermNode* b) const { return same(b, a); }
};

}  // namespace

// Owns every node for the lifetime of the process.
class TermFactory {
 public:
  static TermFactory& instance() {
    static TermFactory factory;
    return factory;
  }

  Term make(TermKind kind, std::string_view symbol, std::vector<Term> operands) {
    NodeKey key{kind, symbol, operands};
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return Term(*it);
    TermNode& node = nodes_.emplace_back();
    node.kind = kind;
    node.symbol = std::string(symbol);
    node.operands = std::move(operands);
    node.hash = key_hash(NodeKey{node.kind, node.symbol, node.operands});
    fill_attributes(node);
    table_.insert(&node);
    return Term(&node);
  }

  static Term wrap(const TermNode* node) { return Term(node); }

  std::mutex& cache_mutex() { return cache_mutex_; }

 private:
  static void fill_attributes(TermNode& n) {
    const auto& ops = n.operands;
    n.size = 1;
    for (Term t : ops) n.size += t.node()->size;
    n.has_star = n.kind == TermKind::Star ||
                 std::any_of(ops.begin(), ops.end(), [](Term t) { return t.node()->has_star; });
    switch (n.kind) {
      case TermKind::Zero:
        n.empty = true;
        n.nullable = false;
        n.width = 0;
        break;
      case TermKind::One:
        n.empty = false;
        n.nullable = true;
        n.width = 0;
        break;
      case TermKind::Letter:
        n.empty = false;
        n.nullable = false;
        n.width = 1;
        break;
      case TermKind::Plus:
        n.empty = std::all_of(ops.begin(), ops.end(), [](Term t) { return t.node()->empty; });
        n.nullable = std::any_of(ops.begin(), ops.end(), [](Term t) { return t.node()->nullable; });
        n.width = 0;
        for (Term t : ops) n.width = std::max(n.width, t.node()->width);
        break;
      case TermKind::Seq:
      case TermKind::Par:
        n.empty = std::any_of(ops.begin(), ops.end(), [](Term t) { return t.node()->empty; });
        n.nullable = std::all_of(ops.begin(), ops.end(), [](Term t) { return t.node()->nullable; });
        n.width = 0;
        for (Term t : ops) {
          n.width = n.kind == TermKind::Seq ? std::max(n.width, t.node()->width) : n.width + t.node()->width;
        }
        break;
      case TermKind::Star:
        n.empty = false;
        n.nullable = true;
        n.width = ops[0].node()->width;
        break;
    }
    if (n.empty) n.width = 0;
  }

  std::mutex mutex_;
  std::mutex cache_mutex_;
  std::deque<TermNode> nodes_;
  std::unordered_set<const TermNode*, NodePtrHash, NodePtrEq> table_;
};

std::mutex& term_cache_mutex() { return TermFactory::instance().cache_mutex(); }
Term term_from_node(const TermNode* node) { return TermFactory::wrap(node); }

namespace {

Term make_nary(TermKind kind, std::vector<Term> operands) {
  std::vector<Term> flat;
  flat.reserve(operands.size());
  for (Term t : operands) {
    if (t.kind() == kind) {
      auto inner = t.operands();
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(t);
    }
  }
  if (flat.empty()) return kind == TermKind::Plus ? Term::zero() : Term::one();
  if (flat.size() == 1) return flat.front();
  return TermFactory::instance().make(kind, {}, std::move(flat));
}

}  // namespace

Term::Term() : Term(zero()) {}

Term Term::zero() {
  static const Term t = TermFactory::instance().make(TermKind::Zero, {}, {});
  return t;
}

Term Term::one() {
  static const Term t = TermFactory::instance().make(TermKind::One, {}, {});
  return t;
}

Term Term::letter(std::string_view symbol) {
  if (symbol.empty()) throw std::invalid_argument("letter symbol must be non-empty");
  return TermFactory::instance().make(TermKind::Letter, symbol, {});
}

Term Term::plus(std::vector<Term> operands) { return make_nary(TermKind::Plus, std::move(operands)); }
Term Term::seq(std::vector<Term> operands) { return make_nary(TermKind::Seq, std::move(operands)); }
Term Term::par(std::vector<Term> operands) { return make_nary(TermKind::Par, std::move(operands)); }

Term Term::star(Term body) { return TermFactory::instance().make(TermKind::Star, {}, {body}); }

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::symbol() const { return node_->symbol; }
std::span<const Term> Term::operands() const { return node_->operands; }

Term Term::body() const {
  if (kind() != TermKind::Star) throw std::logic_error("body() called on a non-star term");
  return node_->operands.front();
}

bool Term::denotes_empty() const { return node_->empty; }
bool Term::nullable() const { return node_->nullable; }
std::size_t Term::width() const { return node_->width; }
std::size_t Term::size() const { return node_->size; }
bool Term::has_star() const { return node_->has_star; }
std::size_t Term::hash() const { return node_->hash; }

bool nullable(Term e) { return e.nullable(); }
std::size_t width(Term e) { return e.width(); }

std::strong_ordering compare(Term a, Term b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case TermKind::Zero:
    case TermKind::One:
      return std::strong_ordering::equal;
    case TermKind::Letter:
      return a.symbol() <=> b.symbol();
    default:
      break;
  }
  auto xs = a.operands();
  auto ys = b.operands();
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(xs[i], ys[i]); c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

namespace {

int precedence(TermKind kind) {
  switch (kind) {
    case TermKind::Plus:
      return 0;
    case TermKind::Par:
      return 1;
    case TermKind::Seq:
      return 2;
    case TermKind::Star:
      return 3;
    default:
      return 4;
  }
}

void print(std::string& out, Term e, int context) {
  const int own = precedence(e.kind());
  const bool parens = own < context;
  if (parens) out += '(';
  switch (e.kind()) {
    case TermKind::Zero:
      out += '0';
      break;
    case TermKind::One:
      out += '1';
      break;
    case TermKind::Letter:
      out += e.symbol();
      break;
    case TermKind::Plus:
    case TermKind::Par:
    case TermKind::Seq: {
      const char op = e.kind() == TermKind::Plus ? '+' : e.kind() == TermKind::Par ? '|' : '.';
      bool first = true;
      for (Term t : e.operands()) {
        if (!first) out += op;
        first = false;
        print(out, t, own + 1);
      }
      break;
    }
    case TermKind::Star:
      print(out, e.body(), 3);
      out += '*';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(Term e) {
  std::string out;
  print(out, e, 0);
  return out;
}

std::ostream& operator<<(std::ostream& os, Term e) { return os << to_string(e); }

Alphabet alphabet_of(Term e) {
  Alphabet result;
  std::vector<Term> stack{e};
  while (!stack.empty()) {
    Term t = stack.back();
    stack.pop_back();
    if (t.kind() == TermKind::Letter) result.insert(t.symbol());
    for (Term c : t.operands()) stack.push_back(c);
  }
  return result;
}

}  // namespace cka
