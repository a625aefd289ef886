#pragma once

#include "cka/pomset.hpp"
#include "cka/semantics.hpp"

#include <vector>

namespace cka::testing {

/// u ⊑ v by trying every bijection between the carriers.
bool brute_subsumes(const LabelledPoset& u, const LabelledPoset& v);
bool brute_subsumes(const Pomset& u, const Pomset& v);
/// Isomorphism by trying every bijection.
bool brute_isomorphic(const LabelledPoset& u, const LabelledPoset& v);

/// Every SP pomset over exactly the given labels, generated from all
/// labelled posets built by binary series/parallel composition of events.
PomsetLanguage brute_sp(const std::vector<std::string>& labels);

}  // namespace cka::testing
