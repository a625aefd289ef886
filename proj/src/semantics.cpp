#include "cka/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace cka {

namespace {

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw ResourceLimit("pomset language exceeds the cardinality cap of " + std::to_string(cap));
  }
}

void insert_checked(PomsetLanguage& out, Pomset p, std::size_t cap) {
  out.insert(std::move(p));
  check_cap(out.size(), cap);
}

}  // namespace

PomsetLanguage seq_product(const PomsetLanguage& a, const PomsetLanguage& b, std::size_t cap) {
  PomsetLanguage out;
  for (const Pomset& x : a) {
    for (const Pomset& y : b) insert_checked(out, seq_compose(x, y), cap);
  }
  return out;
}

PomsetLanguage par_product(const PomsetLanguage& a, const PomsetLanguage& b, std::size_t cap) {
  PomsetLanguage out;
  for (const Pomset& x : a) {
    for (const Pomset& y : b) insert_checked(out, par_compose(x, y), cap);
  }
  return out;
}

PomsetLanguage bounded_star(const PomsetLanguage& a, std::size_t k, std::size_t cap) {
  PomsetLanguage result{Pomset::unit()};
  PomsetLanguage power{Pomset::unit()};
  for (std::size_t n = 1; n <= k; ++n) {
    power = seq_product(power, a, cap);
    for (const Pomset& p : power) insert_checked(result, p, cap);
  }
  return result;
}

PomsetLanguage restrict_events(const PomsetLanguage& a, std::size_t max_events) {
  PomsetLanguage out;
  for (const Pomset& p : a) {
    if (p.size() <= max_events) out.insert(p);
  }
  return out;
}

namespace {

class BoundedEvaluator {
 public:
  BoundedEvaluator(std::size_t k, std::size_t cap, std::size_t max_events = SIZE_MAX)
      : k_(k), cap_(cap), n_(max_events) {}

  const PomsetLanguage& eval(Term e) {
    if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
    PomsetLanguage out;
    switch (e.kind()) {
      case TermKind::Zero:
        break;
      case TermKind::One:
        out.insert(Pomset::unit());
        break;
      case TermKind::Letter:
        if (n_ >= 1) out.insert(Pomset::prim(e.symbol()));
        break;
      case TermKind::Plus:
        for (Term t : e.operands()) {
          for (const Pomset& p : eval(t)) insert_checked(out, p, cap_);
        }
        break;
      case TermKind::Seq:
      case TermKind::Par: {
        out.insert(Pomset::unit());
        for (Term t : e.operands()) out = product(out, eval(t), e.kind() == TermKind::Seq);
        break;
      }
      case TermKind::Star: {
        const PomsetLanguage& body = eval(e.body());
        out.insert(Pomset::unit());
        PomsetLanguage power = out;
        for (std::size_t n = 1; n <= k_; ++n) {
          power = product(power, body, true);
          for (const Pomset& p : power) insert_checked(out, p, cap_);
        }
        break;
      }
    }
    return memo_.emplace(e.node(), std::move(out)).first->second;
  }

 private:
  // Composition never loses events, so pruning oversized operands is exact
  // for the size-restricted result.
  PomsetLanguage product(const PomsetLanguage& a, const PomsetLanguage& b, bool sequential) {
    PomsetLanguage out;
    for (const Pomset& x : a) {
      for (const Pomset& y : b) {
        if (x.size() + y.size() > n_) continue;
        insert_checked(out, sequential ? seq_compose(x, y) : par_compose(x, y), cap_);
      }
    }
    return out;
  }

  std::size_t k_;
  std::size_t cap_;
  std::size_t n_;
  std::unordered_map<const void*, PomsetLanguage> memo_;
};

class SizedEvaluator {
 public:
  SizedEvaluator(std::size_t max_events, std::size_t cap) : n_(max_events), cap_(cap) {}

  const PomsetLanguage& eval(Term e) {
    if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
    PomsetLanguage out;
    switch (e.kind()) {
      case TermKind::Zero:
        break;
      case TermKind::One:
        out.insert(Pomset::unit());
        break;
      case TermKind::Letter:
        if (n_ >= 1) out.insert(Pomset::prim(e.symbol()));
        break;
      case TermKind::Plus:
        for (Term t : e.operands()) {
          for (const Pomset& p : eval(t)) insert_checked(out, p, cap_);
        }
        break;
      case TermKind::Seq:
      case TermKind::Par: {
        out.insert(Pomset::unit());
        for (Term t : e.operands()) {
          out = product(out, eval(t), e.kind() == TermKind::Seq);
        }
        break;
      }
      case TermKind::Star: {
        PomsetLanguage body;
        for (const Pomset& p : eval(e.body())) {
          if (!p.is_unit()) body.insert(p);
        }
        out.insert(Pomset::unit());
        PomsetLanguage frontier = out;
        // Each non-empty factor adds an event, so this terminates after n rounds.
        while (!frontier.empty()) {
          PomsetLanguage next;
          for (const Pomset& p : product(frontier, body, true)) {
            if (out.insert(p).second) next.insert(p);
          }
          check_cap(out.size(), cap_);
          frontier = std::move(next);
        }
        break;
      }
    }
    return memo_.emplace(e.node(), std::move(out)).first->second;
  }

 private:
  PomsetLanguage product(const PomsetLanguage& a, const PomsetLanguage& b, bool sequential) {
    PomsetLanguage out;
    for (const Pomset& x : a) {
      for (const Pomset& y : b) {
        if (x.size() + y.size() > n_) continue;
        insert_checked(out, sequential ? seq_compose(x, y) : par_compose(x, y), cap_);
      }
    }
    return out;
  }

  std::size_t n_;
  std::size_t cap_;
  std::unordered_map<const void*, PomsetLanguage> memo_;
};

}  // namespace

PomsetLanguage bka_language(Term e, std::size_t k, std::size_t cap) { return BoundedEvaluator(k, cap).eval(e); }

PomsetLanguage bka_language_within(Term e, std::size_t k, std::size_t max_events, std::size_t cap) {
  return BoundedEvaluator(k, cap, max_events).eval(e);
}

PomsetLanguage bka_language_upto(Term e, std::size_t max_events, std::size_t cap) {
  return SizedEvaluator(max_events, cap).eval(e);
}

namespace {

// Ways to write g as p·q, including the trivial ones.
std::vector<std::pair<Pomset, Pomset>> factorizations(const Pomset& g) {
  std::vector<std::pair<Pomset, Pomset>> out{{Pomset::unit(), g}, {g, Pomset::unit()}};
  if (g.kind() == PomsetKind::Seq) {
    auto blocks = g.children();
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      out.emplace_back(Pomset::seq(std::vector<Pomset>(blocks.begin(), blocks.begin() + i)),
                       Pomset::seq(std::vector<Pomset>(blocks.begin() + i, blocks.end())));
    }
  }
  return out;
}

// Pomsets obtained from u by a single exchange step (p1·q1)∥(p2·q2) →
// (p1∥p2)·(q1∥q2) applied at any position.
std::vector<Pomset> exchange_steps(const Pomset& u) {
  std::vector<Pomset> out;
  if (u.kind() == PomsetKind::Unit || u.kind() == PomsetKind::Prim) return out;
  auto children = u.children();
  const std::size_t n = children.size();

  for (std::size_t i = 0; i < n; ++i) {
    for (const Pomset& w : exchange_steps(children[i])) {
      std::vector<Pomset> parts(children.begin(), children.end());
      parts[i] = w;
      out.push_back(u.kind() == PomsetKind::Seq ? Pomset::seq(std::move(parts)) : Pomset::par(std::move(parts)));
    }
  }
  if (u.kind() != PomsetKind::Par) return out;

  // Assign each child to the first group, the second group or the rest.
  std::vector<int> slot(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && slot[i] == 2) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
    std::vector<Pomset> g1, g2, rest;
    for (std::size_t j = 0; j < n; ++j) {
      (slot[j] == 1 ? g1 : slot[j] == 2 ? g2 : rest).push_back(children[j]);
    }
    if (g1.empty() || g2.empty()) continue;
    const Pomset left = Pomset::par(std::move(g1));
    const Pomset right = Pomset::par(std::move(g2));
    for (const auto& [p1, q1] : factorizations(left)) {
      for (const auto& [p2, q2] : factorizations(right)) {
        Pomset exchanged = Pomset::seq({par_compose(p1, p2), par_compose(q1, q2)});
        std::vector<Pomset> parts = rest;
        parts.push_back(std::move(exchanged));
        Pomset w = Pomset::par(std::move(parts));
        if (w != u) out.push_back(std::move(w));
      }
    }
  }
  return out;
}

}  // namespace

PomsetLanguage downclose(const PomsetLanguage& language, std::size_t cap) {
  PomsetLanguage out = language;
  check_cap(out.size(), cap);
  std::deque<Pomset> queue(language.begin(), language.end());
  while (!queue.empty()) {
    Pomset u = std::move(queue.front());
    queue.pop_front();
    for (Pomset& w : exchange_steps(u)) {
      if (out.insert(w).second) {
        check_cap(out.size(), cap);
        queue.push_back(std::move(w));
      }
    }
  }
  return out;
}

namespace {

// Sub-multisets of a sorted label vector, returned as (chosen, remaining).
std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> splits_of(
    const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::size_t>> counts;
  for (const auto& l : labels) {
    if (counts.empty() || counts.back().first != l) {
      counts.emplace_back(l, 1);
    } else {
      ++counts.back().second;
    }
  }
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
  std::vector<std::size_t> take(counts.size(), 0);
  for (;;) {
    std::vector<std::string> chosen, remaining;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      chosen.insert(chosen.end(), take[i], counts[i].first);
      remaining.insert(remaining.end(), counts[i].second - take[i], counts[i].first);
    }
    out.emplace_back(std::move(chosen), std::move(remaining));
    std::size_t i = 0;
    while (i < counts.size() && take[i] == counts[i].second) take[i++] = 0;
    if (i == counts.size()) break;
    ++take[i];
  }
  return out;
}

class SpEnumerator {
 public:
  static SpEnumerator& instance() {
    static SpEnumerator e;
    return e;
  }

  PomsetLanguage all(const std::vector<std::string>& labels, std::size_t cap) {
    std::lock_guard lock(mutex_);
    return compute(labels, cap);
  }

 private:
  const PomsetLanguage& compute(const std::vector<std::string>& labels, std::size_t cap) {
    if (auto it = memo_.find(labels); it != memo_.end()) {
      check_cap(it->second.size(), cap);
      return it->second;
    }
    PomsetLanguage out;
    if (labels.empty()) {
      out.insert(Pomset::unit());
    } else if (labels.size() == 1) {
      out.insert(Pomset::prim(labels.front()));
    } else {
      for (const auto& [chosen, remaining] : splits_of(labels)) {
        if (chosen.empty() || remaining.empty()) continue;
        const PomsetLanguage& head = compute(chosen, cap);
        const PomsetLanguage& tail = compute(remaining, cap);
        for (const Pomset& h : head) {
          // Sequences: the first block is a non-sequential pomset.
          if (h.kind() != PomsetKind::Seq) {
            for (const Pomset& t : tail) insert_checked(out, seq_compose(h, t), cap);
          }
          // Parallel forms: the component holding the first label is non-parallel.
          if (h.kind() != PomsetKind::Par && chosen.front() == labels.front()) {
            for (const Pomset& t : tail) insert_checked(out, par_compose(h, t), cap);
          }
        }
      }
    }
    return memo_.emplace(labels, std::move(out)).first->second;
  }

  std::mutex mutex_;
  std::map<std::vector<std::string>, PomsetLanguage> memo_;
};

}  // namespace

PomsetLanguage enumerate_sp(std::vector<std::string> labels, std::size_t label_cap, std::size_t cap) {
  if (labels.size() > label_cap) {
    throw ResourceLimit("enumeration over " + std::to_string(labels.size()) + " labels exceeds the cap of " +
                        std::to_string(label_cap));
  }
  std::sort(labels.begin(), labels.end());
  return SpEnumerator::instance().all(labels, cap);
}

PomsetLanguage downclose_by_enumeration(const PomsetLanguage& language, std::size_t label_cap, std::size_t cap) {
  PomsetLanguage out;
  for (const Pomset& v : language) {
    const LabelledPoset pv = to_labelled_poset(v);
    const std::size_t pairs = pv.order_pairs();
    for (const Pomset& u : enumerate_sp(pv.labels(), label_cap, cap)) {
      if (out.contains(u)) continue;
      const LabelledPoset pu = to_labelled_poset(u);
      if (pu.order_pairs() >= pairs && subsumes(pu, pv)) insert_checked(out, u, cap);
    }
  }
  return out;
}

PomsetLanguage cka_language(Term e, std::size_t k, std::size_t cap) { return downclose(bka_language(e, k, cap), cap); }

std::optional<Pomset> first_missing(const PomsetLanguage& a, const PomsetLanguage& b) {
  for (const Pomset& p : a) {
    if (!b.contains(p)) return p;
  }
  return std::nullopt;
}

LanguageComparison language_equal(const PomsetLanguage& a, const PomsetLanguage& b) {
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x == *y) {
      ++x;
      ++y;
    } else if (*x < *y) {
      return {false, *x, true};
    } else {
      return {false, *y, false};
    }
  }
  if (x != a.end()) return {false, *x, true};
  if (y != b.end()) return {false, *y, false};
  return {};
}

}  // namespace cka
