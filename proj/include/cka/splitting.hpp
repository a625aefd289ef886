#pragma once

#include "cka/term.hpp"

#include <compare>
#include <vector>

namespace cka {

struct SplicePair {
  Term left;
  Term right;

  friend bool operator==(const SplicePair&, const SplicePair&) = default;
  friend std::strong_ordering operator<=>(const SplicePair& a, const SplicePair& b) {
    if (auto c = compare(a.left, b.left); c != 0) return c;
    return compare(a.right, b.right);
  }
};

/// Parallel splices (ℓ, r) of `e`: pairs with ℓ∥r below `e` that together
/// cover every parallel decomposition of a pomset of `e`. Both components are
/// simplified; the result is sorted and free of duplicates. An n-ary `.` or
/// `|` is treated as nested to the right.
std::vector<SplicePair> par_splices(Term e);

/// Sequential splices (ℓ, r) of `e`: pairs with ℓ·r below `e` that together
/// cover every sequential decomposition of a pomset of `e`. Simplified,
/// sorted and free of duplicates.
std::vector<SplicePair> seq_splices(Term e);

/// Right-hand remainders: the least set containing simplify(e) and closed
/// under taking right components of sequential splices. Sorted.
std::vector<Term> remainders(Term e);

}  // namespace cka
