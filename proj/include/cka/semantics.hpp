#pragma once

#include "cka/pomset.hpp"
#include "cka/term.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cka {

inline constexpr std::size_t kDefaultLanguageCap = 200000;
inline constexpr std::size_t kDefaultLabelCap = 7;

/// Raised when an enumeration would exceed its configured size; results are
/// never silently truncated.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pointwise compositions of finite languages, each checked against `cap`.
PomsetLanguage seq_product(const PomsetLanguage& a, const PomsetLanguage& b, std::size_t cap = kDefaultLanguageCap);
PomsetLanguage par_product(const PomsetLanguage& a, const PomsetLanguage& b, std::size_t cap = kDefaultLanguageCap);
/// Union of the powers 0..k of `a`.
PomsetLanguage bounded_star(const PomsetLanguage& a, std::size_t k, std::size_t cap = kDefaultLanguageCap);
/// Members with at most `max_events` events.
PomsetLanguage restrict_events(const PomsetLanguage& a, std::size_t max_events);

/// BKA language of `e` where every star contributes only its powers 0..k.
/// Exact for star-free terms, monotone in k.
PomsetLanguage bka_language(Term e, std::size_t k, std::size_t cap = kDefaultLanguageCap);

/// restrict_events(bka_language(e, k), max_events), computed without
/// materializing larger pomsets.
PomsetLanguage bka_language_within(Term e, std::size_t k, std::size_t max_events,
                                   std::size_t cap = kDefaultLanguageCap);

/// The members of the unbounded BKA language of `e` that have at most
/// `max_events` events.
PomsetLanguage bka_language_upto(Term e, std::size_t max_events, std::size_t cap = kDefaultLanguageCap);

/// Downward closure under subsumption, computed by exhaustively applying
/// exchange steps in every context.
PomsetLanguage downclose(const PomsetLanguage& language, std::size_t cap = kDefaultLanguageCap);

/// Downward closure computed by enumerating every series-parallel pomset over
/// each member's label multiset and keeping the subsumed ones.
PomsetLanguage downclose_by_enumeration(const PomsetLanguage& language, std::size_t label_cap = kDefaultLabelCap,
                                        std::size_t cap = kDefaultLanguageCap);

/// downclose(bka_language(e, k)).
PomsetLanguage cka_language(Term e, std::size_t k, std::size_t cap = kDefaultLanguageCap);

/// Every normal-form series-parallel pomset whose label multiset is exactly
/// `labels`.
PomsetLanguage enumerate_sp(std::vector<std::string> labels, std::size_t label_cap = kDefaultLabelCap,
                            std::size_t cap = kDefaultLanguageCap);

struct LanguageComparison {
  bool equal = true;
  /// Smallest member of the symmetric difference, when unequal.
  std::optional<Pomset> witness;
  /// Whether the witness belongs to the first language.
  bool witness_in_first = false;

  explicit operator bool() const { return equal; }
};

LanguageComparison language_equal(const PomsetLanguage& a, const PomsetLanguage& b);
/// First member of `a` that is missing from `b`.
std::optional<Pomset> first_missing(const PomsetLanguage& a, const PomsetLanguage& b);

/// Membership queries that decide `u ∈ L` without enumerating `L`.
///
/// With a bound, every star is truncated at that many powers, matching
/// `bka_language`; without one the exact languages are used. Answers are
/// memoized per instance.
class MembershipOracle {
 public:
  explicit MembershipOracle(std::optional<std::size_t> bound = std::nullopt) : bound_(bound) {}

  /// u ∈ bka_language(e, bound).
  bool bka_contains(const Pomset& u, Term e);
  /// u ∈ downclose(bka_language(e, bound)).
  bool cka_contains(const Pomset& u, Term e);

 private:
  struct Key {
    std::string text;
    const void* node;
    std::size_t extra;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  // Necessary conditions on members of a term's language.
  struct Footprint {
    std::size_t min_events = 0;
    std::size_t max_events = 0;
    std::set<std::string> letters;
  };
  const Footprint& footprint(Term e);
  bool fits(const Pomset& u, Term e);

  bool contains(const Pomset& u, Term e, bool closed);
  bool contains_star(const std::vector<Pomset>& blocks, std::size_t from, Term body, std::size_t pieces,
                     bool closed);
  bool contains_seq(const std::vector<Pomset>& blocks, Term head, Term tail, bool closed);
  bool contains_par_bka(const Pomset& u, Term head, Term tail);
  bool contains_par_cka(const Pomset& u, Term head, Term tail);

  std::optional<std::size_t> bound_;
  std::unordered_map<Key, bool, KeyHash> memo_[2];
  std::unordered_map<Key, bool, KeyHash> star_memo_[2];
  std::unordered_map<const void*, Footprint> footprints_;
};

}  // namespace cka
