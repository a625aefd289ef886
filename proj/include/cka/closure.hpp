#pragma once

#include "cka/linear_system.hpp"
#include "cka/term.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cka {

class ClosureDepthExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Linear system whose least solution at `target` is the closure of e∥f.
struct ClosureSystem {
  LinearSystem system;
  std::string target;
  /// Index name to the pair of remainders it stands for.
  std::map<std::string, std::pair<Term, Term>> pairs;
};

/// Builds terms ↓e whose BKA language is the downward closure of the BKA
/// language of e. Results are memoized on the simplified input; the engine
/// may be shared between threads.
class ClosureEngine {
 public:
  explicit ClosureEngine(std::size_t max_depth = 256) : max_depth_(max_depth) {}

  Term close(Term e);
  /// e∥f plus the closures of all parallel splices of e∥f of smaller width.
  Term preclose(Term e, Term f);
  ClosureSystem build_system(Term e, Term f);
  /// Least solution of build_system(e, f) at the index of e∥f.
  Term close_par(Term e, Term f);

  /// Deepest nesting of close calls seen so far.
  [[nodiscard]] std::size_t max_depth_seen() const;

 private:
  class DepthGuard;

  std::size_t max_depth_;
  mutable std::mutex mutex_;
  std::unordered_map<const void*, Term> closures_;
  std::map<std::pair<const void*, const void*>, Term> preclosures_;
  std::size_t deepest_ = 0;
};

/// Name of the closure-system index for the pair (g, h).
std::string pair_index_name(Term g, Term h);

/// Closure through a process-wide engine.
Term close(Term e);

}  // namespace cka
