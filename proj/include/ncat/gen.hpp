#ifndef NCAT_GEN_HPP
#define NCAT_GEN_HPP

#include <cstdint>
#include <random>

#include "ncat/core.hpp"

namespace ncat {

/// Seeded generators for randomized suites.  Everything is a pure
/// function of the engine state, so a trial seed replays exactly.

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::size_t below(std::size_t bound);  // uniform in [0, bound)
  bool chance(double p);
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
};

/// k objects, everything above an identity tower.
NCat discrete(int n, int k);

/// The free-living k-cell padded with identities up to dimension n.
NCat walking_cell(int n, int k);

/// Random n-preorder: iterated preorder closures over a random relation
/// tower starting from `k` objects.
NCat random_npreorder(Rng& rng, int n, int k);

/// Doubles every top cell; composition carries an absorbing flag, so the
/// result is a valid n-category with parallel top cells.  Copies are
/// primed.
NCat thicken(const NCat& a);

/// The collapse thicken(a) -> a (primes forgotten); surjective and
/// non-injective on n-cells whenever a has one.
NFunctor thicken_collapse(const NCat& a);

/// General-population generator for the axiom and reflection suites:
/// preorders, thickenings, binary products and coproducts thereof.
NCat random_ncat(Rng& rng, int n, int k);

/// No level has a cycle of non-identity cells (in particular no
/// non-identity endo cells).  The canonical e.d.m. construction is only
/// exercised on this family: a preorder summand has at most one cell per
/// parallel pair, so configs mixing distinct parallel cells — which need
/// a cycle somewhere below — have no preimage.
bool loop_free(const NCat& a);

/// Adds a parallel copy of one eligible top cell of a loop-free
/// n-category (keeps it loop-free); returns nullopt when no cell
/// qualifies or the extension fails validation.
std::optional<NCat> duplicate_parallel(Rng& rng, const NCat& a);

/// Loop-free generator for the descent suite: a random n-preorder with a
/// few parallel duplications.
NCat random_loopfree(Rng& rng, int n, int k);

struct Relabeled {
  NCat cat;
  NFunctor iso;  // original -> renamed
};

/// Deterministic fresh names ("l<level>c<index>"), order shuffled by rng.
Relabeled relabel(Rng& rng, const NCat& a);

/// Randomized backtracking search for any functor a -> b; nullopt when
/// none exists (exhaustive up to the node budget).
std::optional<NFunctor> random_functor(Rng& rng, const NCat& a, const NCat& b,
                                       std::size_t budget = 200000);

/// A random functor built by composing canonical constructions out of a
/// random domain (units, collapses, injections, projections, relabelings).
NFunctor random_pipeline_functor(Rng& rng, int n, int k);

}  // namespace ncat

#endif
