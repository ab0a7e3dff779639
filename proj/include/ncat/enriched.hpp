#ifndef NCAT_ENRICHED_HPP
#define NCAT_ENRICHED_HPP

#include <functional>
#include <tuple>

#include "ncat/core.hpp"
#include "ncat/reflect.hpp"

namespace ncat {

/// The cartesian base of (dim)-categories together with a reflector into a
/// full subcategory.  Terminal object and binary products are the chosen
/// ones from the limits module; coherence isomorphisms are canonical
/// product rearrangements and never materialized.
struct BaseReflector {
  int dim = 0;
  std::function<ReflectionResult(const NCat&)> on_object;  // F with its unit
  std::function<NFunctor(const NFunctor&)> on_morphism;    // F f : F dom -> F cod
};

/// The base of dim-categories with the direct reflection into
/// dim-preorders.
BaseReflector direct_base(int dim);

/// A category enriched in dim-categories: hom-objects with composition
/// law M and identities j, subject to associativity and unit axioms as
/// equalities of base morphisms.
struct VCat {
  int dim = 0;
  std::vector<Cell> objects;
  std::map<std::pair<Cell, Cell>, NCat> hom;
  // M[(a,b,c)]: hom(b,c) x hom(a,b) -> hom(a,c), domain the chosen product
  std::map<std::tuple<Cell, Cell, Cell>, NFunctor> M;
  std::map<Cell, NFunctor> j;  // terminal -> hom(a,a)

  bool operator==(const VCat&) const = default;

  const NCat& hom_of(const Cell& a, const Cell& b) const;
};

struct VFunctor {
  VCat dom, cod;
  LevelMap obj;
  std::map<std::pair<Cell, Cell>, NFunctor> t;  // T_{a,b}

  bool operator==(const VFunctor&) const = default;
};

struct VCatCheck {
  bool ok = true;
  std::string detail;  // first violation
};

VCatCheck vcat_validate(const VCat& v);

VFunctor vcat_identity(const VCat& v);
VFunctor vcompose(const VFunctor& g, const VFunctor& f);
ValidationResult is_vfunctor_valid(const VFunctor& f);

/// Isomorphism characterization: object bijection plus levelwise-bijective
/// hom components; the inverse is constructed explicitly.
bool vfunctor_is_iso(const VFunctor& f);
VFunctor invert_vfunctor(const VFunctor& f);

struct VProductResult {
  VCat prod;
  VFunctor p1, p2;
};

VProductResult vcat_product(const VCat& a, const VCat& b);

/// Exhaustive enumeration of enriched functors; desk sizes only.
void enumerate_vfunctors(const VCat& a, const VCat& b,
                         const std::function<bool(const VFunctor&)>& visit);

struct DerivedReflection {
  VCat image;
  VFunctor unit;  // identity on objects, base units on homs
};

/// Homwise application of the base reflector; composition transported
/// along the canonical product comparison (which the base contract makes
/// invertible).
DerivedReflection derive_reflect(const VCat& v, const BaseReflector& base);

/// An n-category (n >= 2) as a category enriched in (n-1)-categories:
/// hom(a,b) collects the higher cells with 0-boundaries (a, b).
VCat to_enriched(const NCat& a);

struct FromEnrichedResult {
  NCat cat;
  // (a, b, hom level, hom cell) -> cell name in cat; identity naming
  // unless hom cell names collide across homs.
  std::map<std::tuple<Cell, Cell, int, Cell>, Cell> names;
};

FromEnrichedResult from_enriched(const VCat& v);

/// The reflection into n-preorders obtained by iterating the enriched
/// construction: reflect directly at n = 1, otherwise derive homwise from
/// the recursively iterated base and transport back.  Returns the unit.
NFunctor iterate_reflect(const NCat& a);

struct BaseConditionReport {
  bool product_condition = true;   // eta_{XxY} = eta_X x eta_Y
  bool terminal_condition = true;  // eta of the terminal is the identity
  bool idempotent = true;          // eta of a reflected object is the identity
  std::string detail;
  bool ok() const { return product_condition && terminal_condition && idempotent; }
};

BaseConditionReport check_base_conditions(const BaseReflector& base,
                                          const std::vector<NCat>& sample);

/// Exhaustive enriched isomorphism search at desk sizes.
bool vcat_isomorphic(const VCat& a, const VCat& b);

}  // namespace ncat

#endif
