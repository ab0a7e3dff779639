#ifndef NCAT_CORE_HPP
#define NCAT_CORE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncat {

using Cell = std::string;
using LevelMap = std::map<Cell, Cell>;
using CompTable = std::map<std::pair<Cell, Cell>, Cell>;

// Hard safety cap on enumeration sizes, overridable via NCAT_GALOIS_MAX_CELLS.
std::size_t max_cells_per_level();

/// A finite strict n-category in table form.
///
/// Levels run 0..n.  Only adjacent-level src/tgt/idn are stored; iterated
/// boundaries and identity towers are derived.  comp[(j,i)] composes two
/// level-j cells along a common level-i boundary; comp(later, earlier)
/// means "earlier first, then later".
struct NCat {
  int n = 1;
  std::vector<std::vector<Cell>> cells;        // size n+1
  std::vector<LevelMap> src, tgt;              // size n+1, valid for levels 1..n
  std::vector<LevelMap> idn;                   // size n+1, idn[l]: cells[l-1] -> cells[l]
  std::map<std::pair<int, int>, CompTable> comp;  // keyed by (j,i), 0 <= i < j <= n

  // Cell order within a level is presentation only; equality ignores it.
  bool operator==(const NCat& o) const;

  bool has_cell(int level, const Cell& c) const;
  const Cell& src_of(int level, const Cell& c) const;
  const Cell& tgt_of(int level, const Cell& c) const;
  const Cell& idn_of(int level, const Cell& c) const;  // idn[level] applied to a (level-1)-cell

  // Iterated boundary of a level-`from` cell down to level `to` (to <= from).
  Cell bnd_src(int from, int to, const Cell& c) const;
  Cell bnd_tgt(int from, int to, const Cell& c) const;

  // Identity tower of a level-`from` cell up to level `to` (from <= to).
  Cell idn_tower(int from, int to, const Cell& c) const;

  bool composable(int j, int i, const Cell& later, const Cell& earlier) const;
  const CompTable& table(int j, int i) const;
  std::optional<Cell> compose_cells(int j, int i, const Cell& later, const Cell& earlier) const;

  // Is this cell the identity tower on some lower cell?
  bool is_identity_cell(int level, const Cell& c) const;

  // Level-l cells with the given adjacent src and tgt.
  std::vector<Cell> hom_at(int level, const Cell& s, const Cell& t) const;
  // Hom-set of the top-level vertical category: n-cells from h to h'
  // (h, h' parallel (n-1)-cells).
  std::vector<Cell> hom(const Cell& h, const Cell& hp) const { return hom_at(n, h, hp); }
};

struct Violation {
  std::string law;                 // name of the first violated law
  int i = -1, j = -1, k = -1;      // levels involved, -1 when not applicable
  std::vector<Cell> offenders;
  std::string detail;

  std::string to_string() const;
};

struct ValidationResult {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
  std::string to_string() const;
};

/// Checks every n-category law by exhaustive enumeration and reports the
/// first violation found: structure, comp-domain exactness, globularity,
/// identity boundaries, unit laws, associativity, boundaries of composites,
/// identity functoriality and interchange.
ValidationResult validate_ncat(const NCat& a);

/// A strict n-functor as a level-indexed family of total cell maps.
struct NFunctor {
  NCat dom, cod;
  std::vector<LevelMap> maps;  // size n+1

  bool operator==(const NFunctor&) const = default;

  const Cell& apply(int level, const Cell& c) const;
};

ValidationResult is_functor_valid(const NFunctor& f);

NFunctor identity_functor(const NCat& a);
// Levelwise composition; requires f.cod == g.dom.
NFunctor compose(const NFunctor& g, const NFunctor& f);

bool is_bijective_on(const LevelMap& m, const std::vector<Cell>& domain,
                     const std::vector<Cell>& codomain);
// All level maps bijective; the inverse is then a valid n-functor.
bool functor_is_iso(const NFunctor& f);
NFunctor invert_functor(const NFunctor& f);

}  // namespace ncat

#endif
