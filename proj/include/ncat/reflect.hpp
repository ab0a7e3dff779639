#ifndef NCAT_REFLECT_HPP
#define NCAT_REFLECT_HPP

#include "ncat/core.hpp"

namespace ncat {

struct NPreorderCheck {
  bool is_npreorder = false;
  // Two distinct parallel n-cells, present when the check fails.
  std::optional<std::pair<Cell, Cell>> witness;
};

/// True iff no two distinct n-cells share both src and tgt at level n
/// (top boundary maps jointly monic).
NPreorderCheck is_npreorder(const NCat& a);

struct ReflectionResult {
  NCat image;      // an n-preorder
  NFunctor unit;   // quotient at level n, identity below
};

/// Reflection into n-preorders: identifies all n-cells with the same
/// top-level domain and codomain.  Classes are named by their
/// lexicographically least member.
ReflectionResult reflect(const NCat& a);

/// The induced map between reflections of dom and cod of f; computed as
/// the class map, not searched.
NFunctor reflect_induced(const NFunctor& f);

/// Universal property of the unit at test sizes: every functor A -> X
/// with X an n-preorder factors uniquely through the reflection.
/// Exhaustive functor enumeration.
bool check_unit_universal(const NCat& a, const NCat& x);

}  // namespace ncat

#endif
