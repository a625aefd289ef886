#include "cka/closure.hpp"

#include "cka/splitting.hpp"

namespace cka {

namespace {

thread_local std::size_t current_depth = 0;

std::string wrapped(Term t) {
  const bool loose = t.kind() == TermKind::Plus || t.kind() == TermKind::Par;
  return loose ? "(" + to_string(t) + ")" : to_string(t);
}

}  // namespace

class ClosureEngine::DepthGuard {
 public:
  explicit DepthGuard(ClosureEngine& engine) {
    if (++current_depth > engine.max_depth_) {
      --current_depth;
      throw ClosureDepthExceeded("closure recursion exceeded depth " + std::to_string(engine.max_depth_));
    }
    std::lock_guard lock(engine.mutex_);
    engine.deepest_ = std::max(engine.deepest_, current_depth);
  }
  ~DepthGuard() { --current_depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

std::string pair_index_name(Term g, Term h) { return wrapped(g) + "|" + wrapped(h); }

std::size_t ClosureEngine::max_depth_seen() const {
  std::lock_guard lock(mutex_);
  return deepest_;
}

Term ClosureEngine::close(Term e) {
  const Term s = simplify(e);
  {
    std::lock_guard lock(mutex_);
    if (auto it = closures_.find(s.node()); it != closures_.end()) return it->second;
  }
  DepthGuard guard(*this);
  Term result = s;
  switch (s.kind()) {
    case TermKind::Zero:
    case TermKind::One:
    case TermKind::Letter:
      break;
    case TermKind::Plus:
    case TermKind::Seq: {
      std::vector<Term> parts;
      for (Term t : s.operands()) parts.push_back(close(t));
      result = ka_simplify(s.kind() == TermKind::Plus ? Term::plus(std::move(parts)) : Term::seq(std::move(parts)));
      break;
    }
    case TermKind::Star:
      result = ka_simplify(Term::star(close(s.body())));
      break;
    case TermKind::Par: {
      auto ops = s.operands();
      result = close_par(ops.front(), Term::par(std::vector<Term>(ops.begin() + 1, ops.end())));
      break;
    }
  }
  std::lock_guard lock(mutex_);
  return closures_.emplace(s.node(), result).first->second;
}

Term ClosureEngine::preclose(Term e, Term f) {
  const auto key = std::make_pair(static_cast<const void*>(e.node()), static_cast<const void*>(f.node()));
  {
    std::lock_guard lock(mutex_);
    if (auto it = preclosures_.find(key); it != preclosures_.end()) return it->second;
  }
  const Term both = e | f;
  const std::size_t w = both.width();
  std::vector<Term> sum{both};
  for (const auto& [l, r] : par_splices(both)) {
    if (l.width() < w && r.width() < w) sum.push_back(close(l) | close(r));
  }
  const Term result = ka_simplify(Term::plus(std::move(sum)));
  std::lock_guard lock(mutex_);
  return preclosures_.emplace(key, result).first->second;
}

ClosureSystem ClosureEngine::build_system(Term e, Term f) {
  const auto re = remainders(e);
  const auto rf = remainders(f);
  ClosureSystem out;
  for (Term g : re) {
    for (Term h : rf) {
      const std::string name = pair_index_name(g, h);
      const std::size_t i = out.system.add_index(name);
      out.pairs.emplace(name, std::make_pair(g, h));
      out.system.set_vector(i, simplify(g | h));
    }
  }
  for (Term g : re) {
    for (Term h : rf) {
      const std::size_t i = *out.system.position(pair_index_name(g, h));
      for (const auto& sg : seq_splices(g)) {
        for (const auto& sh : seq_splices(h)) {
          const std::size_t j = *out.system.position(pair_index_name(sg.right, sh.right));
          out.system.add_to_matrix(i, j, preclose(sg.left, sh.left));
        }
      }
    }
  }
  for (std::size_t i = 0; i < out.system.size(); ++i) {
    for (std::size_t j = 0; j < out.system.size(); ++j) {
      out.system.set_matrix(i, j, ka_simplify(out.system.matrix(i, j)));
    }
  }
  out.target = pair_index_name(simplify(e), simplify(f));
  return out;
}

Term ClosureEngine::close_par(Term e, Term f) {
  DepthGuard guard(*this);
  const ClosureSystem cs = build_system(e, f);
  return solve_least(cs.system).at(cs.target);
}

Term close(Term e) {
  static ClosureEngine engine;
  return engine.close(e);
}

}  // namespace cka
