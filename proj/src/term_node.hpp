#pragma once

#include "cka/term.hpp"

#include <atomic>
#include <mutex>

namespace cka {

struct TermNode {
  TermKind kind = TermKind::Zero;
  std::string symbol;
  std::vector<Term> operands;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t width = 0;
  bool nullable = false;
  bool empty = false;
  bool has_star = false;
  // Memoized result of simplify(); null until computed.
  mutable std::atomic<const TermNode*> simplified{nullptr};
  // Same for ka_simplify().
  mutable std::atomic<const TermNode*> ka_simplified{nullptr};
};

std::mutex& term_cache_mutex();
Term term_from_node(const TermNode* node);

}  // namespace cka
