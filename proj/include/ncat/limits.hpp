#ifndef NCAT_LIMITS_HPP
#define NCAT_LIMITS_HPP

#include "ncat/core.hpp"

namespace ncat {

// Deterministic pair/tag naming so repeated runs produce identical files.
Cell pair_name(const Cell& a, const Cell& b);
std::optional<std::pair<Cell, Cell>> split_pair_name(const Cell& c);

struct PullbackResult {
  NCat apex;
  NFunctor p1;  // apex -> f.dom
  NFunctor p2;  // apex -> g.dom
};

struct ProductResult {
  NCat apex;
  NFunctor p1, p2;
};

struct CoproductResult {
  NCat sum;
  std::vector<NFunctor> injections;
};

NCat terminal(int n);
NFunctor unique_to_terminal(const NCat& a);

/// Pointwise pullback of a cospan f: A -> X, g: B -> X.
PullbackResult pullback(const NFunctor& f, const NFunctor& g);

ProductResult product(const NCat& a, const NCat& b);

CoproductResult coproduct(const std::vector<NCat>& summands);

/// Mediating functor into a pullback apex, induced by a commuting cone
/// (u: Q -> A, v: Q -> B).
NFunctor pullback_mediator(const PullbackResult& pb, const NFunctor& u, const NFunctor& v);

/// On-demand universal-property check: for every cone over the cospan with
/// apex among `test_apexes`, exactly one mediating functor exists.
/// Exhaustive; intended for test sizes only.
bool check_pullback_universal(const NFunctor& f, const NFunctor& g, const PullbackResult& pb,
                              const std::vector<NCat>& test_apexes);

}  // namespace ncat

#endif
