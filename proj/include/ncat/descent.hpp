#ifndef NCAT_DESCENT_HPP
#define NCAT_DESCENT_HPP

#include <array>

#include "ncat/core.hpp"

namespace ncat {

/// A 3x2 block of n-cells: three pairwise-composable rows (each a
/// composable pair along one level), composable as a triple along the
/// other level componentwise.  0 <= i < j < n.
struct ComposableConfig {
  enum class Kind { vertical_triple_of_horizontal_pairs, horizontal_triple_of_vertical_pairs };
  Kind kind = Kind::vertical_triple_of_horizontal_pairs;
  int j = 1, i = 0;  // declared in (kind, j, i, cells) comparison order
  // rows[r] = {earlier, later} along the pair level; rows r -> r+1 are
  // composable along the triple level.
  std::array<std::array<Cell, 2>, 3> cells;

  auto operator<=>(const ComposableConfig&) const = default;

  int pair_level() const { return kind == Kind::vertical_triple_of_horizontal_pairs ? i : j; }
  int triple_level() const { return kind == Kind::vertical_triple_of_horizontal_pairs ? j : i; }
  std::string to_string() const;
};

bool config_is_valid(const NCat& b, const ComposableConfig& c);

/// All configs of b, lexicographic in (kind, j, i, cells).
std::vector<ComposableConfig> enumerate_configs(const NCat& b);

struct EdmCheck {
  bool sufficient = false;
  // For n >= 2, the first codomain config with no preimage; for n = 1 the
  // witness packs the composable arrow triple down the rows (both columns
  // of each row equal).
  std::optional<ComposableConfig> missing;
};

/// Sufficient condition for effective descent: f surjective on composable
/// configurations (composable arrow triples when n = 1).  A negative
/// answer does not decide that f is not an effective descent morphism.
EdmCheck is_edm_sufficient(const NFunctor& f);

/// Smallest preorder relation on the skeleton's top cells containing the
/// generators and closed under reflexivity, transitivity and all lower
/// compositions; returned as the corresponding n-category of dimension
/// skeleton.n + 1.  Relation cells are named "(h|h')".
NCat preorder_closure(const NCat& skeleton,
                      const std::vector<std::pair<Cell, Cell>>& generators);

struct EdmResult {
  NCat e;        // an n-preorder
  NFunctor p;    // e -> b, surjective on configs
};

/// The canonical e.d.m. over b: one preorder-closure summand per
/// composable config, each projecting by its derivation witnesses.
EdmResult build_edm(const NCat& b);

/// Stable units at a concrete cospan over an n-preorder:
/// I(A x_X B) ~ I(A) x_X I(B).
bool verify_stable_units(const NFunctor& f, const NFunctor& g);

/// Semi-left-exactness at a concrete pullback of the unit of a along a
/// map g from an n-preorder into I(a): the reflected top projection is an
/// isomorphism.
bool verify_semi_left_exact(const NCat& a, const NFunctor& g);

/// Simplicity at f: the reflection of the vertical part of f's reflective
/// factorization is an isomorphism.
bool verify_simple(const NFunctor& f);

}  // namespace ncat

#endif
