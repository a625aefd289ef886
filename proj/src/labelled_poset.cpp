#include "cka/pomset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace cka {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    mask &= mask - 1;
    f(i);
  }
}

}  // namespace

LabelledPoset::LabelledPoset(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxEvents) throw std::length_error("labelled poset exceeds 64 events");
  succ_.assign(labels_.size(), 0);
}

std::size_t LabelledPoset::add_event(std::string label) {
  if (labels_.size() >= kMaxEvents) throw std::length_error("labelled poset exceeds 64 events");
  labels_.push_back(std::move(label));
  succ_.push_back(0);
  return labels_.size() - 1;
}

void LabelledPoset::add_order(std::size_t i, std::size_t j) {
  const std::uint64_t added = bit(j) | succ_[j];
  for (std::size_t p = 0; p < size(); ++p) {
    if (p == i || less(p, i)) succ_[p] |= added;
  }
}

std::uint64_t LabelledPoset::predecessors(std::size_t i) const {
  std::uint64_t mask = 0;
  for (std::size_t p = 0; p < size(); ++p) {
    if (less(p, i)) mask |= bit(p);
  }
  return mask;
}

std::size_t LabelledPoset::order_pairs() const {
  std::size_t n = 0;
  for (std::uint64_t s : succ_) n += static_cast<std::size_t>(std::popcount(s));
  return n;
}

std::uint64_t LabelledPoset::all_events() const { return size() == 64 ? ~std::uint64_t{0} : bit(size()) - 1; }

void LabelledPoset::validate() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (less(i, i)) throw std::invalid_argument("order is not irreflexive at event " + std::to_string(i));
    if (succ_[i] & ~all_events()) throw std::invalid_argument("order refers to a missing event");
    for_each_bit(succ_[i], [&](std::size_t j) {
      if ((succ_[j] & ~succ_[i]) != 0) throw std::invalid_argument("order is not transitive");
    });
  }
}

LabelledPoset LabelledPoset::restrict(std::uint64_t mask) const {
  std::vector<std::size_t> index(size(), 0);
  std::vector<std::string> labels;
  for_each_bit(mask, [&](std::size_t i) {
    index[i] = labels.size();
    labels.push_back(labels_[i]);
  });
  LabelledPoset out(std::move(labels));
  for_each_bit(mask, [&](std::size_t i) {
    for_each_bit(succ_[i] & mask, [&](std::size_t j) { out.succ_[index[i]] |= bit(index[j]); });
  });
  return out;
}

LabelledPoset to_labelled_poset(const Pomset& u) {
  LabelledPoset p;
  std::function<std::uint64_t(const Pomset&)> build = [&](const Pomset& w) -> std::uint64_t {
    switch (w.kind()) {
      case PomsetKind::Unit:
        return 0;
      case PomsetKind::Prim:
        return bit(p.add_event(w.label()));
      case PomsetKind::Par: {
        std::uint64_t mask = 0;
        for (const Pomset& c : w.children()) mask |= build(c);
        return mask;
      }
      case PomsetKind::Seq: {
        std::vector<std::uint64_t> blocks;
        for (const Pomset& c : w.children()) blocks.push_back(build(c));
        std::uint64_t later = 0;
        for (std::size_t i = blocks.size(); i-- > 0;) {
          for_each_bit(blocks[i], [&](std::size_t x) {
            for_each_bit(later, [&](std::size_t y) { p.add_order(x, y); });
          });
          later |= blocks[i];
        }
        return later;
      }
    }
    return 0;
  };
  build(u);
  return p;
}

bool is_n_free(const LabelledPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> pred(n);
  for (std::size_t i = 0; i < n; ++i) pred[i] = p.predecessors(i);
  auto comparable = [&](std::size_t x, std::size_t y) { return p.less(x, y) || p.less(y, x); };
  // u0 < u1, u2 < u3, u0 < u3, and the pairs (u0,u2), (u1,u3), (u1,u2) unrelated.
  for (std::size_t u0 = 0; u0 < n; ++u0) {
    const std::uint64_t s0 = p.successors(u0);
    bool found = false;
    for_each_bit(s0, [&](std::size_t u1) {
      if (found) return;
      for_each_bit(s0 & ~bit(u1), [&](std::size_t u3) {
        if (found || comparable(u1, u3)) return;
        for_each_bit(pred[u3] & ~bit(u0), [&](std::size_t u2) {
          if (found || u2 == u1) return;
          if (!comparable(u0, u2) && !comparable(u1, u2)) found = true;
        });
      });
    });
    if (found) return false;
  }
  return true;
}

namespace {

struct Decomposer {
  const LabelledPoset& p;
  std::vector<std::uint64_t> related;  // successors and predecessors

  explicit Decomposer(const LabelledPoset& poset) : p(poset), related(poset.size()) {
    for (std::size_t i = 0; i < p.size(); ++i) related[i] = p.successors(i) | p.predecessors(i);
  }

  // Connected components of the graph on `mask` whose edges are given by
  // `neighbours`.
  template <typename Neighbours>
  std::vector<std::uint64_t> components(std::uint64_t mask, Neighbours neighbours) const {
    std::vector<std::uint64_t> out;
    std::uint64_t rest = mask;
    while (rest != 0) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for_each_bit(frontier, [&](std::size_t x) { next |= neighbours(x) & mask; });
        frontier = next & ~comp;
        comp |= next;
      }
      out.push_back(comp);
      rest &= ~comp;
    }
    return out;
  }

  Pomset build(std::uint64_t mask) const {
    if (mask == 0) return Pomset::unit();
    if (std::popcount(mask) == 1) return Pomset::prim(p.label(static_cast<std::size_t>(std::countr_zero(mask))));

    auto parallel = components(mask, [&](std::size_t x) { return related[x]; });
    if (parallel.size() > 1) {
      std::vector<Pomset> parts;
      for (std::uint64_t c : parallel) parts.push_back(build(c));
      return Pomset::par(std::move(parts));
    }
    auto serial = components(mask, [&](std::size_t x) { return ~related[x] & ~bit(x); });
    if (serial.size() > 1) {
      auto first = [](std::uint64_t m) { return static_cast<std::size_t>(std::countr_zero(m)); };
      std::sort(serial.begin(), serial.end(),
                [&](std::uint64_t a, std::uint64_t b) { return p.less(first(a), first(b)); });
      for (std::size_t i = 0; i + 1 < serial.size(); ++i) {
        bool ordered = true;
        for_each_bit(serial[i], [&](std::size_t x) {
          if ((p.successors(x) & serial[i + 1]) != serial[i + 1]) ordered = false;
        });
        if (!ordered) throw NotSeriesParallel();
      }
      std::vector<Pomset> parts;
      for (std::uint64_t c : serial) parts.push_back(build(c));
      return Pomset::seq(std::move(parts));
    }
    throw NotSeriesParallel();
  }
};

}  // namespace

Pomset from_labelled_poset(const LabelledPoset& p) { return Decomposer(p).build(p.all_events()); }

std::optional<std::vector<std::size_t>> find_subsumption(const LabelledPoset& u, const LabelledPoset& v) {
  const std::size_t n = v.size();
  if (u.size() != n) return std::nullopt;
  {
    auto lu = u.labels();
    auto lv = v.labels();
    std::sort(lu.begin(), lu.end());
    std::sort(lv.begin(), lv.end());
    if (lu != lv) return std::nullopt;
  }
  if (u.order_pairs() < v.order_pairs()) return std::nullopt;

  std::vector<std::uint64_t> pred_u(n), pred_v(n);
  for (std::size_t i = 0; i < n; ++i) {
    pred_u[i] = u.predecessors(i);
    pred_v[i] = v.predecessors(i);
  }
  // Fewer predecessors first is a linear extension of v.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(pred_v[a]) < std::popcount(pred_v[b]);
  });

  std::vector<std::uint64_t> candidates(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (u.label(y) == v.label(x) && std::popcount(pred_u[y]) >= std::popcount(pred_v[x]) &&
          std::popcount(u.successors(y)) >= std::popcount(v.successors(x))) {
        candidates[x] |= bit(y);
      }
    }
    if (candidates[x] == 0) return std::nullopt;
  }

  std::vector<std::size_t> map(n, 0);
  std::uint64_t used = 0;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    // Every image of a predecessor of x must precede the image of x.
    std::uint64_t allowed = candidates[x] & ~used;
    for_each_bit(pred_v[x], [&](std::size_t q) { allowed &= u.successors(map[q]); });
    while (allowed != 0) {
      const auto y = static_cast<std::size_t>(std::countr_zero(allowed));
      allowed &= allowed - 1;
      map[x] = y;
      used |= bit(y);
      if (search(depth + 1)) return true;
      used &= ~bit(y);
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

bool subsumes(const LabelledPoset& u, const LabelledPoset& v) { return find_subsumption(u, v).has_value(); }

bool subsumes(const Pomset& u, const Pomset& v) {
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  return subsumes(to_labelled_poset(u), to_labelled_poset(v));
}

bool isomorphic(const LabelledPoset& u, const LabelledPoset& v) {
  return u.order_pairs() == v.order_pairs() && subsumes(u, v);
}

}  // namespace cka
