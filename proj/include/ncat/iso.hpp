#ifndef NCAT_ISO_HPP
#define NCAT_ISO_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "ncat/core.hpp"

namespace ncat {

struct IsoWitness {
  NFunctor forward;
  NFunctor backward;
};

/// Exhaustive levelwise backtracking enumeration of all n-functors A -> B,
/// in lexicographic CellId order.  Returns false early when the visitor
/// asks to stop.  When `bijective` is set only levelwise bijections are
/// produced (isomorphism candidates).
void enumerate_functors(const NCat& a, const NCat& b,
                        const std::function<bool(const NFunctor&)>& visit,
                        bool bijective = false);

std::vector<NFunctor> all_functors(const NCat& a, const NCat& b,
                                   std::size_t limit = SIZE_MAX);

/// Crude upper bound on |nCat(A, B)|, saturating at `cap`.
std::uint64_t functor_space_bound(const NCat& a, const NCat& b, std::uint64_t cap);

/// Exhaustive isomorphism search; "none" is a proof of non-isomorphism.
std::optional<IsoWitness> find_isomorphism(const NCat& a, const NCat& b);

bool isomorphic(const NCat& a, const NCat& b);

}  // namespace ncat

#endif
