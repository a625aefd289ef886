#include "cka/splitting.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <unordered_map>

namespace cka {

namespace {

using PairSet = std::set<SplicePair>;

void add(PairSet& out, Term l, Term r) { out.insert(SplicePair{simplify(l), simplify(r)}); }

Term rest_of(Term e, std::size_t from) {
  auto ops = e.operands();
  std::vector<Term> rest(ops.begin() + static_cast<std::ptrdiff_t>(from), ops.end());
  return e.kind() == TermKind::Seq ? Term::seq(std::move(rest)) : Term::par(std::move(rest));
}

PairSet product(const std::vector<SplicePair>& xs, const std::vector<SplicePair>& ys) {
  PairSet out;
  for (const auto& x : xs) {
    for (const auto& y : ys) add(out, x.left | y.left, x.right | y.right);
  }
  return out;
}

class SpliceCache {
 public:
  template <typename Compute>
  std::vector<SplicePair> get(Term e, Compute&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(e.node()); it != cache_.end()) return it->second;
    }
    std::vector<SplicePair> value = compute(e);
    std::lock_guard lock(mutex_);
    return cache_.emplace(e.node(), std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<const void*, std::vector<SplicePair>> cache_;
};

std::vector<SplicePair> to_vector(const PairSet& s) { return {s.begin(), s.end()}; }

std::vector<SplicePair> compute_par(Term e) {
  PairSet out;
  add(out, Term::one(), e);
  add(out, e, Term::one());
  switch (e.kind()) {
    case TermKind::Plus:
      for (Term t : e.operands()) {
        for (const auto& p : par_splices(t)) out.insert(p);
      }
      break;
    case TermKind::Star:
      for (const auto& p : par_splices(e.body())) out.insert(p);
      break;
    case TermKind::Seq: {
      // e0 · rest: splices of e0 when rest is nullable, of rest when e0 is.
      const Term head = e.operands().front();
      const Term rest = rest_of(e, 1);
      if (rest.nullable()) {
        for (const auto& p : par_splices(head)) out.insert(p);
      }
      if (head.nullable()) {
        for (const auto& p : par_splices(rest)) out.insert(p);
      }
      break;
    }
    case TermKind::Par: {
      for (const auto& p : product(par_splices(e.operands().front()), par_splices(rest_of(e, 1)))) out.insert(p);
      break;
    }
    default:
      break;
  }
  return to_vector(out);
}

std::vector<SplicePair> compute_seq(Term e) {
  PairSet out;
  switch (e.kind()) {
    case TermKind::Zero:
      break;
    case TermKind::One:
      add(out, Term::one(), Term::one());
      break;
    case TermKind::Letter:
      add(out, e, Term::one());
      add(out, Term::one(), e);
      break;
    case TermKind::Plus:
      for (Term t : e.operands()) {
        for (const auto& p : seq_splices(t)) out.insert(p);
      }
      break;
    case TermKind::Seq: {
      const Term head = e.operands().front();
      const Term rest = rest_of(e, 1);
      for (const auto& p : seq_splices(head)) add(out, p.left, p.right * rest);
      for (const auto& p : seq_splices(rest)) add(out, head * p.left, p.right);
      break;
    }
    case TermKind::Par:
      out = product(seq_splices(e.operands().front()), seq_splices(rest_of(e, 1)));
      break;
    case TermKind::Star:
      add(out, Term::one(), Term::one());
      for (const auto& p : seq_splices(e.body())) add(out, e * p.left, p.right * e);
      break;
  }
  return to_vector(out);
}

SpliceCache& par_cache() {
  static SpliceCache cache;
  return cache;
}

SpliceCache& seq_cache() {
  static SpliceCache cache;
  return cache;
}

}  // namespace

std::vector<SplicePair> par_splices(Term e) { return par_cache().get(e, compute_par); }

std::vector<SplicePair> seq_splices(Term e) { return seq_cache().get(e, compute_seq); }

std::vector<Term> remainders(Term e) {
  TermSet seen{simplify(e)};
  std::vector<Term> work{simplify(e)};
  while (!work.empty()) {
    const Term f = work.back();
    work.pop_back();
    for (const auto& p : seq_splices(f)) {
      if (seen.insert(p.right).second) work.push_back(p.right);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace cka
