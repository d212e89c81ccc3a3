#pragma once

#include <functional>
#include <vector>

#include "identities.hpp"
#include "lincomb.hpp"

namespace mba {

// Every relation that holds in the variety on the given leaf multiset:
// each preset identity, its placeholders replaced by arbitrary monomials on a
// sub-multiset, the resulting instance embedded into every one-hole monomial
// context over the remaining labels.  (Placeholder substitution alone is not
// enough: an identity instance sitting under a product or bracket is a
// relation the quotient must also contain, and at arity >= 3 some of those
// embedded relations are not substitution instances of anything.)
//
// Duplicate rows (up to leading-coefficient normalization) are removed.
// Deterministic order regardless of `threads`.
void for_each_consequence(Variety v, const std::vector<int>& labels, int threads,
                          const std::function<void(const LinComb&)>& sink);

}  // namespace mba
