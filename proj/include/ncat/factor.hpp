#ifndef NCAT_FACTOR_HPP
#define NCAT_FACTOR_HPP

#include <variant>

#include "ncat/core.hpp"
#include "ncat/limits.hpp"

namespace ncat {

/// Membership in the four morphism classes of the reflective and
/// monotone-light systems, with first lexicographic counterexample per
/// failed flag.
struct MorphismClass {
  bool vertical = false;
  bool stably_vertical = false;
  bool trivial_covering = false;
  bool covering = false;

  // Each witness is a pair of parallel (n-1)-cells (or a level marker for
  // a bijection failure) describing why the flag is false.
  std::optional<std::string> vertical_witness;
  std::optional<std::string> stably_vertical_witness;
  std::optional<std::string> trivial_covering_witness;
  std::optional<std::string> covering_witness;

  std::string summary() const;
};

MorphismClass classify(const NFunctor& f);

enum class SystemKind { reflective, monotone_light };

struct Factorization {
  NFunctor e;
  NCat middle;
  NFunctor m;
  SystemKind system;
};

/// (vertical, trivial covering) factorization via the pullback of the
/// reflected map along the codomain unit.
Factorization reflective_factorize(const NFunctor& f);

/// (stably vertical, covering) factorization: the middle keeps the
/// domain's cells below the top level and takes image hom-sets above.
Factorization ml_factorize(const NFunctor& f);

struct DiagonalFailure {
  std::vector<NFunctor> diagonals;  // all found (zero or >= 2)
};

/// Orthogonality test: exhaustive search for the unique diagonal in a
/// commuting square m . top = bottom . e.
std::variant<NFunctor, DiagonalFailure> fill_diagonal(const NFunctor& e, const NFunctor& m,
                                                      const NFunctor& top,
                                                      const NFunctor& bottom);

/// For a trivial covering, every naturality square of the unit at every
/// level, composable-pair set and interchange-square set must be a
/// pullback of finite sets; checked by direct enumeration.
bool unit_naturality_squares_are_pullbacks(const NFunctor& f);

}  // namespace ncat

#endif
