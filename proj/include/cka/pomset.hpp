#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cka {

enum class PomsetKind : std::uint8_t { Unit, Prim, Seq, Par };

/// Series-parallel pomset in normal form.
///
/// Sequential children are never sequential themselves, parallel children are
/// never parallel and are kept sorted by canonical text, and the empty pomset
/// never occurs as a child. Under these rules two pomsets are isomorphic iff
/// their normal forms coincide, so comparison uses the canonical text.
class Pomset {
 public:
  Pomset();

  static Pomset unit();
  static Pomset prim(std::string_view label);
  /// Normalizing n-ary compositions; units are dropped and nesting flattened.
  static Pomset seq(std::vector<Pomset> parts);
  static Pomset par(std::vector<Pomset> parts);

  [[nodiscard]] PomsetKind kind() const;
  [[nodiscard]] const std::string& label() const;
  [[nodiscard]] std::span<const Pomset> children() const;
  [[nodiscard]] bool is_unit() const { return kind() == PomsetKind::Unit; }

  /// Number of events.
  [[nodiscard]] std::size_t size() const;
  /// Canonical text, e.g. `(a|b).c`.
  [[nodiscard]] const std::string& text() const;

  /// Maximal sequential blocks: children of a sequence, the pomset itself if
  /// it is a single non-unit block, nothing for the unit.
  [[nodiscard]] std::vector<Pomset> seq_blocks() const;
  /// Maximal parallel components, analogous to `seq_blocks`.
  [[nodiscard]] std::vector<Pomset> par_components() const;

  friend bool operator==(const Pomset& a, const Pomset& b) { return a.text() == b.text(); }
  friend std::strong_ordering operator<=>(const Pomset& a, const Pomset& b);

  struct Node;

 private:
  explicit Pomset(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Pomset seq_compose(const Pomset& u, const Pomset& v);
Pomset par_compose(const Pomset& u, const Pomset& v);

std::string to_string(const Pomset& u);
std::ostream& operator<<(std::ostream& os, const Pomset& u);

/// Parses the canonical text form (and any expression of prims, `1`, `.`,
/// `|` and parentheses) into a normal-form pomset.
Pomset parse_pomset(std::string_view text);

using PomsetLanguage = std::set<Pomset>;

/// Carrier `0..n-1` with a transitively closed strict order held as
/// successor bitmasks.
class LabelledPoset {
 public:
  static constexpr std::size_t kMaxEvents = 64;

  LabelledPoset() = default;
  explicit LabelledPoset(std::vector<std::string> labels);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] bool less(std::size_t i, std::size_t j) const { return (succ_[i] >> j) & 1U; }
  [[nodiscard]] std::uint64_t successors(std::size_t i) const { return succ_[i]; }
  [[nodiscard]] std::uint64_t predecessors(std::size_t i) const;
  [[nodiscard]] std::size_t order_pairs() const;

  std::size_t add_event(std::string label);
  /// Adds `i < j` and restores transitive closure.
  void add_order(std::size_t i, std::size_t j);
  /// Throws std::invalid_argument when the relation is not a strict order.
  void validate() const;

  /// Sub-poset on the events in `mask`, renumbered in increasing order.
  [[nodiscard]] LabelledPoset restrict(std::uint64_t mask) const;
  [[nodiscard]] std::uint64_t all_events() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> succ_;
};

class NotSeriesParallel : public std::runtime_error {
 public:
  NotSeriesParallel() : std::runtime_error("poset is not series-parallel") {}
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LabelledPoset to_labelled_poset(const Pomset& u);
bool is_n_free(const LabelledPoset& p);
Pomset from_labelled_poset(const LabelledPoset& p);

/// A subsumption from `v` to `u`: `map[x]` is the event of `u` assigned to
/// event `x` of `v`. Exists iff `u` is at least as sequential as `v`.
std::optional<std::vector<std::size_t>> find_subsumption(const LabelledPoset& u, const LabelledPoset& v);
bool subsumes(const LabelledPoset& u, const LabelledPoset& v);
/// True iff u ⊑ v.
bool subsumes(const Pomset& u, const Pomset& v);
bool isomorphic(const LabelledPoset& u, const LabelledPoset& v);

/// From u ⊑ v0·v1, returns (u0, u1) with u = u0·u1, u0 ⊑ v0 and u1 ⊑ v1.
std::pair<Pomset, Pomset> factor_seq_subsumption(const Pomset& u, const Pomset& v0, const Pomset& v1);
/// From u0∥u1 ⊑ v, returns (v0, v1) with v = v0∥v1, u0 ⊑ v0 and u1 ⊑ v1.
std::pair<Pomset, Pomset> factor_par_subsumption(const Pomset& u0, const Pomset& u1, const Pomset& v);

struct LeviSplit {
  std::size_t m;
  Pomset y;
  Pomset z;
};

/// From u·v ⊑ w0·…·w(n−1) with every w non-empty, finds m, y, z such that
/// y·z ⊑ w(m), u ⊑ w0·…·w(m−1)·y and v ⊑ z·w(m+1)·…·w(n−1).
LeviSplit levi_seq(const Pomset& u, const Pomset& v, const std::vector<Pomset>& ws);

/// From u∥v = w∥x, returns (y0, y1, z0, z1) with u = y0∥y1, v = z0∥z1,
/// w = y0∥z0 and x = y1∥z1.
std::tuple<Pomset, Pomset, Pomset, Pomset> levi_par(const Pomset& u, const Pomset& v, const Pomset& w,
                                                    const Pomset& x);

/// From u·v ⊑ w∥x, returns (w0, w1, x0, x1) with w0·w1 ⊑ w, x0·x1 ⊑ x,
/// u ⊑ w0∥x0 and v ⊑ w1∥x1.
std::tuple<Pomset, Pomset, Pomset, Pomset> interpolate(const Pomset& u, const Pomset& v, const Pomset& w,
                                                       const Pomset& x);

}  // namespace cka
