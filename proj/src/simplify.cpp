#include "cka/term.hpp"

#include "term_node.hpp"

#include <algorithm>
#include <optional>

namespace cka {

namespace {

thread_local SimplifyTrace* active_trace = nullptr;

void note(SimplifyRule rule) {
  if (active_trace != nullptr) active_trace->record(rule);
}

std::vector<Term> flatten(TermKind kind, std::vector<Term> operands) {
  std::vector<Term> flat;
  for (Term t : operands) {
    if (t.kind() == kind) {
      note(SimplifyRule::FlattenAssociative);
      auto inner = t.operands();
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(t);
    }
  }
  return flat;
}

Term simplify_plus(std::vector<Term> ops) {
  ops = flatten(TermKind::Plus, std::move(ops));
  const auto before = ops.size();
  std::erase_if(ops, [](Term t) { return t.is_zero(); });
  if (ops.size() != before) note(SimplifyRule::DropZeroSummand);
  if (!std::is_sorted(ops.begin(), ops.end(), TermLess{})) {
    note(SimplifyRule::SortCommutative);
    std::sort(ops.begin(), ops.end(), TermLess{});
  }
  auto last = std::unique(ops.begin(), ops.end());
  if (last != ops.end()) {
    note(SimplifyRule::Idempotence);
    ops.erase(last, ops.end());
  }
  return Term::plus(std::move(ops));
}

Term simplify_product(TermKind kind, std::vector<Term> ops) {
  ops = flatten(kind, std::move(ops));
  if (std::any_of(ops.begin(), ops.end(), [](Term t) { return t.is_zero(); })) {
    note(SimplifyRule::Annihilate);
    return Term::zero();
  }
  const auto before = ops.size();
  std::erase_if(ops, [](Term t) { return t.is_one(); });
  if (ops.size() != before) note(SimplifyRule::DropUnit);
  if (kind == TermKind::Par && !std::is_sorted(ops.begin(), ops.end(), TermLess{})) {
    note(SimplifyRule::SortCommutative);
    std::sort(ops.begin(), ops.end(), TermLess{});
  }
  return kind == TermKind::Seq ? Term::seq(std::move(ops)) : Term::par(std::move(ops));
}

Term simplify_star(Term body) {
  if (body.is_zero() || body.is_one()) {
    note(SimplifyRule::StarOfUnit);
    return Term::one();
  }
  if (body.kind() == TermKind::Plus) {
    auto ops = body.operands();
    if (std::any_of(ops.begin(), ops.end(), [](Term t) { return t.is_one(); })) {
      note(SimplifyRule::StarDropUnitSummand);
      std::vector<Term> rest;
      for (Term t : ops) {
        if (!t.is_one()) rest.push_back(t);
      }
      return simplify_star(Term::plus(std::move(rest)));
    }
  }
  return Term::star(body);
}

Term simplify_once(Term e) {
  switch (e.kind()) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Letter:
      return e;
    case TermKind::Star:
      return simplify_star(simplify(e.body()));
    default:
      break;
  }
  std::vector<Term> ops;
  ops.reserve(e.operands().size());
  for (Term t : e.operands()) ops.push_back(simplify(t));
  if (e.kind() == TermKind::Plus) return simplify_plus(std::move(ops));
  return simplify_product(e.kind(), std::move(ops));
}

// Syntactic sufficient condition for x ≤ y in every Kleene algebra.
bool below(Term x, Term y) {
  if (x == y || x.is_zero()) return true;
  if (x.is_one() && y.nullable()) return true;
  if (x.kind() == TermKind::Plus) {
    auto ops = x.operands();
    return std::all_of(ops.begin(), ops.end(), [&](Term t) { return below(t, y); });
  }
  switch (y.kind()) {
    case TermKind::Plus: {
      auto ops = y.operands();
      return std::any_of(ops.begin(), ops.end(), [&](Term t) { return below(x, t); });
    }
    case TermKind::Star: {
      if (below(x, y.body())) return true;
      if (x.kind() != TermKind::Seq) return false;
      auto ops = x.operands();
      return std::all_of(ops.begin(), ops.end(), [&](Term t) { return t == y || below(t, y.body()); });
    }
    case TermKind::Seq: {
      // x ≤ g(i) with every other factor nullable.
      auto ops = y.operands();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        bool others = true;
        for (std::size_t j = 0; j < ops.size() && others; ++j) others = j == i || ops[j].nullable();
        if (others && below(x, ops[i])) return true;
      }
      return false;
    }
    default:
      return false;
  }
}

// The star g* when t is g·g* or g*·g.
std::optional<Term> unrolled_star(Term t) {
  if (t.kind() != TermKind::Seq) return std::nullopt;
  auto ops = t.operands();
  const std::size_t n = ops.size();
  if (ops.back().kind() == TermKind::Star &&
      simplify(Term::seq(std::vector<Term>(ops.begin(), ops.end() - 1))) == ops.back().body()) {
    return ops.back();
  }
  if (ops.front().kind() == TermKind::Star &&
      simplify(Term::seq(std::vector<Term>(ops.begin() + 1, ops.begin() + static_cast<std::ptrdiff_t>(n)))) ==
          ops.front().body()) {
    return ops.front();
  }
  return std::nullopt;
}

Term ka_once(Term e);

Term ka_plus(std::vector<Term> ops) {
  Term sum = simplify(Term::plus(std::move(ops)));
  if (sum.kind() != TermKind::Plus) return sum;
  std::vector<Term> parts(sum.operands().begin(), sum.operands().end());
  if (sum.nullable()) {
    for (Term& t : parts) {
      if (auto star = unrolled_star(t)) {
        note(SimplifyRule::SumFoldUnrolling);
        t = *star;
      }
    }
  }
  std::vector<Term> kept;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < parts.size() && !absorbed; ++j) {
      if (i == j || parts[i] == parts[j]) continue;
      // Of two mutually absorbing summands keep the earlier one.
      absorbed = below(parts[i], parts[j]) && (!below(parts[j], parts[i]) || j < i);
    }
    if (absorbed) {
      note(SimplifyRule::SumAbsorption);
    } else {
      kept.push_back(parts[i]);
    }
  }
  return simplify(Term::plus(std::move(kept)));
}

Term ka_seq(std::vector<Term> ops) {
  Term prod = simplify(Term::seq(std::move(ops)));
  if (prod.kind() != TermKind::Seq) return prod;
  std::vector<Term> kept;
  for (Term t : prod.operands()) {
    if (!kept.empty() && t.kind() == TermKind::Star && kept.back() == t) {
      note(SimplifyRule::SeqStarIdempotence);
      continue;
    }
    kept.push_back(t);
  }
  return simplify(Term::seq(std::move(kept)));
}

Term ka_star(Term body) {
  body = simplify(body);
  if (body.kind() == TermKind::Star) {
    note(SimplifyRule::StarOfStar);
    return body;
  }
  if (body.kind() == TermKind::Plus) {
    std::vector<Term> ops(body.operands().begin(), body.operands().end());
    bool changed = false;
    for (Term& t : ops) {
      if (t.kind() == TermKind::Star) {
        t = t.body();
        changed = true;
      } else if (auto star = unrolled_star(t)) {
        t = star->body();
        changed = true;
      }
    }
    if (changed) {
      note(SimplifyRule::StarUnstarSummand);
      return ka_star(ka_plus(std::move(ops)));
    }
  }
  if (auto star = unrolled_star(body)) {
    note(SimplifyRule::StarOfUnrolling);
    return *star;
  }
  return simplify(Term::star(body));
}

Term ka_once(Term e) {
  switch (e.kind()) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Letter:
      return e;
    case TermKind::Star:
      return ka_star(ka_simplify(e.body()));
    default:
      break;
  }
  std::vector<Term> ops;
  for (Term t : e.operands()) ops.push_back(ka_simplify(t));
  if (e.kind() == TermKind::Plus) return ka_plus(std::move(ops));
  if (e.kind() == TermKind::Seq) return ka_seq(std::move(ops));
  return simplify(Term::par(std::move(ops)));
}

}  // namespace

std::string_view rule_name(SimplifyRule rule) {
  switch (rule) {
    case SimplifyRule::FlattenAssociative:
      return "flatten-associative";
    case SimplifyRule::DropUnit:
      return "drop-unit";
    case SimplifyRule::Annihilate:
      return "annihilate";
    case SimplifyRule::DropZeroSummand:
      return "drop-zero-summand";
    case SimplifyRule::Idempotence:
      return "idempotence";
    case SimplifyRule::SortCommutative:
      return "sort-commutative";
    case SimplifyRule::StarOfUnit:
      return "star-of-unit";
    case SimplifyRule::StarDropUnitSummand:
      return "star-drop-unit-summand";
    case SimplifyRule::StarOfStar:
      return "star-of-star";
    case SimplifyRule::StarUnstarSummand:
      return "star-unstar-summand";
    case SimplifyRule::StarOfUnrolling:
      return "star-of-unrolling";
    case SimplifyRule::SeqStarIdempotence:
      return "seq-star-idempotence";
    case SimplifyRule::SumAbsorption:
      return "sum-absorption";
    case SimplifyRule::SumFoldUnrolling:
      return "sum-fold-unrolling";
  }
  return "unknown";
}

SimplifyTrace::SimplifyTrace() : previous_(active_trace) { active_trace = this; }
SimplifyTrace::~SimplifyTrace() { active_trace = previous_; }

Term simplify(Term e) {
  const TermNode* node = e.node();
  if (const TermNode* cached = node->simplified.load(std::memory_order_acquire)) {
    return term_from_node(cached);
  }
  // Single bottom-up pass, repeated until nothing changes.
  Term current = simplify_once(e);
  for (;;) {
    Term next = simplify_once(current);
    if (next == current) break;
    current = next;
  }
  node->simplified.store(current.node(), std::memory_order_release);
  current.node()->simplified.store(current.node(), std::memory_order_release);
  return current;
}

Term ka_simplify(Term e) {
  const TermNode* node = e.node();
  if (const TermNode* cached = node->ka_simplified.load(std::memory_order_acquire)) {
    return term_from_node(cached);
  }
  Term current = ka_once(simplify(e));
  for (;;) {
    Term next = ka_once(current);
    if (next == current) break;
    current = next;
  }
  node->ka_simplified.store(current.node(), std::memory_order_release);
  current.node()->ka_simplified.store(current.node(), std::memory_order_release);
  return current;
}

}  // namespace cka
