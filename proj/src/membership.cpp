#include "cka/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace cka {

namespace {

Pomset seq_range(const std::vector<Pomset>& blocks, std::size_t from, std::size_t to) {
  return Pomset::seq(std::vector<Pomset>(blocks.begin() + static_cast<std::ptrdiff_t>(from),
                                         blocks.begin() + static_cast<std::ptrdiff_t>(to)));
}

Term tail_of(Term e) {
  auto ops = e.operands();
  std::vector<Term> rest(ops.begin() + 1, ops.end());
  return e.kind() == TermKind::Seq ? Term::seq(std::move(rest)) : Term::par(std::move(rest));
}

std::size_t saturating_add(std::size_t a, std::size_t b) { return a > SIZE_MAX - b ? SIZE_MAX : a + b; }

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > SIZE_MAX / b ? SIZE_MAX : a * b;
}

void collect_labels(const Pomset& u, std::set<std::string>& out) {
  if (u.kind() == PomsetKind::Prim) out.insert(u.label());
  for (const Pomset& c : u.children()) collect_labels(c, out);
}

}  // namespace

const MembershipOracle::Footprint& MembershipOracle::footprint(Term e) {
  if (auto it = footprints_.find(e.node()); it != footprints_.end()) return it->second;
  Footprint f;
  switch (e.kind()) {
    case TermKind::Zero:
      f.min_events = SIZE_MAX;
      break;
    case TermKind::One:
      break;
    case TermKind::Letter:
      f.min_events = f.max_events = 1;
      f.letters.insert(e.symbol());
      break;
    case TermKind::Plus:
      f.min_events = SIZE_MAX;
      for (Term t : e.operands()) {
        const Footprint& g = footprint(t);
        f.min_events = std::min(f.min_events, g.min_events);
        f.max_events = std::max(f.max_events, g.max_events);
        f.letters.insert(g.letters.begin(), g.letters.end());
      }
      break;
    case TermKind::Seq:
    case TermKind::Par:
      for (Term t : e.operands()) {
        const Footprint& g = footprint(t);
        f.min_events = saturating_add(f.min_events, g.min_events);
        f.max_events = saturating_add(f.max_events, g.max_events);
        f.letters.insert(g.letters.begin(), g.letters.end());
      }
      if (f.min_events == SIZE_MAX) f.max_events = 0;
      break;
    case TermKind::Star: {
      const Footprint& g = footprint(e.body());
      f.letters = g.letters;
      f.max_events = bound_ ? saturating_mul(*bound_, g.max_events) : (g.max_events == 0 ? 0 : SIZE_MAX);
      break;
    }
  }
  return footprints_.emplace(e.node(), std::move(f)).first->second;
}

// Subsumption preserves events and labels, so these conditions hold for the
// closed language as well.
bool MembershipOracle::fits(const Pomset& u, Term e) {
  const Footprint& f = footprint(e);
  if (u.size() < f.min_events || u.size() > f.max_events) return false;
  std::set<std::string> labels;
  collect_labels(u, labels);
  return std::includes(f.letters.begin(), f.letters.end(), labels.begin(), labels.end());
}

std::size_t MembershipOracle::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::string>{}(k.text);
  h ^= std::hash<const void*>{}(k.node) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::size_t>{}(k.extra) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool MembershipOracle::bka_contains(const Pomset& u, Term e) { return contains(u, e, false); }
bool MembershipOracle::cka_contains(const Pomset& u, Term e) { return contains(u, e, true); }

bool MembershipOracle::contains(const Pomset& u, Term e, bool closed) {
  if (u.is_unit()) return e.nullable();
  switch (e.kind()) {
    case TermKind::Zero:
    case TermKind::One:
      return false;
    case TermKind::Letter:
      // Primitive pomsets are only subsumed by themselves.
      return u.kind() == PomsetKind::Prim && u.label() == e.symbol();
    default:
      break;
  }
  Key key{u.text(), e.node(), 0};
  auto& memo = memo_[closed ? 1 : 0];
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (!fits(u, e)) {
    memo.emplace(std::move(key), false);
    return false;
  }

  bool result = false;
  switch (e.kind()) {
    case TermKind::Plus:
      for (Term t : e.operands()) {
        if (contains(u, t, closed)) {
          result = true;
          break;
        }
      }
      break;
    case TermKind::Seq:
      result = contains_seq(u.seq_blocks(), e.operands().front(), tail_of(e), closed);
      break;
    case TermKind::Par:
      result = closed ? contains_par_cka(u, e.operands().front(), tail_of(e))
                      : contains_par_bka(u, e.operands().front(), tail_of(e));
      break;
    case TermKind::Star: {
      const auto blocks = u.seq_blocks();
      result = contains_star(blocks, 0, e.body(), bound_.value_or(blocks.size()), closed);
      break;
    }
    default:
      break;
  }
  memo.emplace(std::move(key), result);
  return result;
}

// Both the BKA language and its closure of a sequential composition split u
// at a boundary between maximal sequential blocks.
bool MembershipOracle::contains_seq(const std::vector<Pomset>& blocks, Term head, Term tail, bool closed) {
  for (std::size_t cut = 0; cut <= blocks.size(); ++cut) {
    if (contains(seq_range(blocks, 0, cut), head, closed) &&
        contains(seq_range(blocks, cut, blocks.size()), tail, closed)) {
      return true;
    }
  }
  return false;
}

bool MembershipOracle::contains_star(const std::vector<Pomset>& blocks, std::size_t from, Term body,
                                     std::size_t pieces, bool closed) {
  if (from == blocks.size()) return true;
  pieces = std::min(pieces, blocks.size() - from);
  if (pieces == 0) return false;
  Key key{seq_range(blocks, from, blocks.size()).text(), body.node(), pieces};
  auto& memo = star_memo_[closed ? 1 : 0];
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool result = false;
  for (std::size_t to = from + 1; to <= blocks.size() && !result; ++to) {
    result = contains(seq_range(blocks, from, to), body, closed) && contains_star(blocks, to, body, pieces - 1, closed);
  }
  memo.emplace(std::move(key), result);
  return result;
}

bool MembershipOracle::contains_par_bka(const Pomset& u, Term head, Term tail) {
  const auto parts = u.par_components();
  const std::size_t n = parts.size();
  std::set<std::string> tried;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Pomset> left, right;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? left : right).push_back(parts[i]);
    const Pomset l = Pomset::par(std::move(left));
    if (!tried.insert(l.text()).second) continue;
    if (contains(l, head, false) && contains(Pomset::par(std::move(right)), tail, false)) return true;
  }
  return false;
}

// u lies below some v∥w with v, w drawn from the two languages iff its events
// split into two sets whose restrictions lie below members of each language.
bool MembershipOracle::contains_par_cka(const Pomset& u, Term head, Term tail) {
  const LabelledPoset p = to_labelled_poset(u);
  const Footprint& fh = footprint(head);
  const Footprint& ft = footprint(tail);
  // Events whose label only one side can produce are assigned up front.
  std::uint64_t forced = 0;
  std::uint64_t free = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool left = fh.letters.contains(p.label(i));
    const bool right = ft.letters.contains(p.label(i));
    if (!left && !right) return false;
    if (left && right) {
      free |= std::uint64_t{1} << i;
    } else if (left) {
      forced |= std::uint64_t{1} << i;
    }
  }
  const std::uint64_t all = p.all_events();
  std::set<std::pair<std::string, std::string>> tried;
  for (std::uint64_t sub = 0;; sub = (sub - free) & free) {
    const std::uint64_t mask = forced | sub;
    const auto left_size = static_cast<std::size_t>(std::popcount(mask));
    const std::size_t right_size = p.size() - left_size;
    if (left_size >= fh.min_events && left_size <= fh.max_events && right_size >= ft.min_events &&
        right_size <= ft.max_events) {
      const Pomset l = from_labelled_poset(p.restrict(mask));
      const Pomset r = from_labelled_poset(p.restrict(all & ~mask));
      if (tried.emplace(l.text(), r.text()).second && contains(l, head, true) && contains(r, tail, true)) return true;
    }
    if (sub == free) break;
  }
  return false;
}

}  // namespace cka
