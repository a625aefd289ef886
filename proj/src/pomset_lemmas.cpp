#include "cka/pomset.hpp"

namespace cka {

namespace {

std::uint64_t range_mask(std::size_t begin, std::size_t end) {
  std::uint64_t mask = 0;
  for (std::size_t i = begin; i < end; ++i) mask |= std::uint64_t{1} << i;
  return mask;
}

std::uint64_t image(const std::vector<std::size_t>& h, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    if ((mask >> x) & 1U) out |= std::uint64_t{1} << h[x];
  }
  return out;
}

std::uint64_t preimage(const std::vector<std::size_t>& h, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t x = 0; x < h.size(); ++x) {
    if ((mask >> h[x]) & 1U) out |= std::uint64_t{1} << x;
  }
  return out;
}

// Poset of u·v (when `ordered`) or u∥v, numbering the events of u first.
LabelledPoset juxtapose(const Pomset& u, const Pomset& v, bool ordered) {
  const LabelledPoset pu = to_labelled_poset(u);
  const LabelledPoset pv = to_labelled_poset(v);
  LabelledPoset out;
  for (const auto& l : pu.labels()) out.add_event(l);
  for (const auto& l : pv.labels()) out.add_event(l);
  const std::size_t n = pu.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pu.less(i, j)) out.add_order(i, j);
    }
    if (ordered) {
      for (std::size_t j = 0; j < pv.size(); ++j) out.add_order(i, n + j);
    }
  }
  for (std::size_t i = 0; i < pv.size(); ++i) {
    for (std::size_t j = 0; j < pv.size(); ++j) {
      if (pv.less(i, j)) out.add_order(n + i, n + j);
    }
  }
  return out;
}

Pomset part(const LabelledPoset& p, std::uint64_t mask) { return from_labelled_poset(p.restrict(mask)); }

std::vector<std::size_t> witness(const LabelledPoset& u, const LabelledPoset& v, const char* op) {
  auto h = find_subsumption(u, v);
  if (!h) throw PreconditionError(std::string(op) + ": required subsumption does not hold");
  return *h;
}

}  // namespace

std::pair<Pomset, Pomset> factor_seq_subsumption(const Pomset& u, const Pomset& v0, const Pomset& v1) {
  const LabelledPoset pu = to_labelled_poset(u);
  const auto h = witness(pu, juxtapose(v0, v1, true), "factor_seq_subsumption");
  const std::uint64_t first = image(h, range_mask(0, v0.size()));
  return {part(pu, first), part(pu, pu.all_events() & ~first)};
}

std::pair<Pomset, Pomset> factor_par_subsumption(const Pomset& u0, const Pomset& u1, const Pomset& v) {
  const LabelledPoset pv = to_labelled_poset(v);
  const auto h = witness(juxtapose(u0, u1, false), pv, "factor_par_subsumption");
  const std::uint64_t first = preimage(h, range_mask(0, u0.size()));
  return {part(pv, first), part(pv, pv.all_events() & ~first)};
}

LeviSplit levi_seq(const Pomset& u, const Pomset& v, const std::vector<Pomset>& ws) {
  if (ws.empty()) throw PreconditionError("levi_seq: sequence of factors is empty");
  for (const Pomset& w : ws) {
    if (w.is_unit()) throw PreconditionError("levi_seq: factors must be non-empty");
  }
  const LabelledPoset puv = juxtapose(u, v, true);
  // A flattened sequence keeps each factor's events contiguous and in order.
  const auto h = witness(puv, to_labelled_poset(Pomset::seq(ws)), "levi_seq");
  const std::uint64_t left = range_mask(0, u.size());
  const std::uint64_t right = puv.all_events() & ~left;

  std::size_t offset = 0;
  for (std::size_t m = 0; m < ws.size(); ++m) {
    const std::uint64_t block = image(h, range_mask(offset, offset + ws[m].size()));
    offset += ws[m].size();
    if ((block & right) != 0 || m + 1 == ws.size()) {
      return LeviSplit{m, part(puv, block & left), part(puv, block & right)};
    }
  }
  throw std::logic_error("levi_seq: unreachable");
}

std::tuple<Pomset, Pomset, Pomset, Pomset> levi_par(const Pomset& u, const Pomset& v, const Pomset& w,
                                                    const Pomset& x) {
  if (par_compose(u, v) != par_compose(w, x)) throw PreconditionError("levi_par: u|v and w|x differ");
  const LabelledPoset puv = juxtapose(u, v, false);
  // Between isomorphic posets every subsumption is an isomorphism.
  const auto h = witness(puv, juxtapose(w, x, false), "levi_par");
  const std::uint64_t su = range_mask(0, u.size());
  const std::uint64_t sv = puv.all_events() & ~su;
  const std::uint64_t sw = image(h, range_mask(0, w.size()));
  const std::uint64_t sx = puv.all_events() & ~sw;
  return {part(puv, su & sw), part(puv, su & sx), part(puv, sv & sw), part(puv, sv & sx)};
}

std::tuple<Pomset, Pomset, Pomset, Pomset> interpolate(const Pomset& u, const Pomset& v, const Pomset& w,
                                                       const Pomset& x) {
  const LabelledPoset pwx = juxtapose(w, x, false);
  const auto h = witness(juxtapose(u, v, true), pwx, "interpolate");
  const std::uint64_t sw = range_mask(0, w.size());
  const std::uint64_t sx = pwx.all_events() & ~sw;
  const std::uint64_t to_u = preimage(h, range_mask(0, u.size()));
  const std::uint64_t to_v = pwx.all_events() & ~to_u;
  return {part(pwx, sw & to_u), part(pwx, sw & to_v), part(pwx, sx & to_u), part(pwx, sx & to_v)};
}

}  // namespace cka
