#include "ncat/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncat {

std::size_t max_cells_per_level() {
  static const std::size_t cap = [] {
    if (const char* s = std::getenv("NCAT_GALOIS_MAX_CELLS")) {
      long v = std::atol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{64};
  }();
  return cap;
}

bool NCat::operator==(const NCat& o) const {
  if (n != o.n || cells.size() != o.cells.size()) return false;
  for (std::size_t l = 0; l < cells.size(); ++l) {
    std::vector<Cell> a = cells[l], b = o.cells[l];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  return src == o.src && tgt == o.tgt && idn == o.idn && comp == o.comp;
}

bool NCat::has_cell(int level, const Cell& c) const {
  if (level < 0 || level > n) return false;
  const auto& v = cells[static_cast<std::size_t>(level)];
  return std::find(v.begin(), v.end(), c) != v.end();
}

static const Cell& lookup(const LevelMap& m, const Cell& c, const char* what) {
  auto it = m.find(c);
  if (it == m.end()) throw std::out_of_range(std::string(what) + ": no entry for " + c);
  return it->second;
}

const Cell& NCat::src_of(int level, const Cell& c) const {
  return lookup(src[static_cast<std::size_t>(level)], c, "src");
}
const Cell& NCat::tgt_of(int level, const Cell& c) const {
  return lookup(tgt[static_cast<std::size_t>(level)], c, "tgt");
}
const Cell& NCat::idn_of(int level, const Cell& c) const {
  return lookup(idn[static_cast<std::size_t>(level)], c, "idn");
}

Cell NCat::bnd_src(int from, int to, const Cell& c) const {
  Cell cur = c;
  for (int l = from; l > to; --l) cur = src_of(l, cur);
  return cur;
}
Cell NCat::bnd_tgt(int from, int to, const Cell& c) const {
  Cell cur = c;
  for (int l = from; l > to; --l) cur = tgt_of(l, cur);
  return cur;
}
Cell NCat::idn_tower(int from, int to, const Cell& c) const {
  Cell cur = c;
  for (int l = from + 1; l <= to; ++l) cur = idn_of(l, cur);
  return cur;
}

bool NCat::composable(int j, int i, const Cell& later, const Cell& earlier) const {
  return bnd_src(j, i, later) == bnd_tgt(j, i, earlier);
}

const CompTable& NCat::table(int j, int i) const {
  static const CompTable empty;
  auto it = comp.find({j, i});
  return it == comp.end() ? empty : it->second;
}

std::optional<Cell> NCat::compose_cells(int j, int i, const Cell& later,
                                        const Cell& earlier) const {
  const auto& t = table(j, i);
  auto it = t.find({later, earlier});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

bool NCat::is_identity_cell(int level, const Cell& c) const {
  if (level == 0) return false;
  for (const auto& [below, up] : idn[static_cast<std::size_t>(level)])
    if (up == c) return true;
  return false;
}

std::vector<Cell> NCat::hom_at(int level, const Cell& s, const Cell& t) const {
  std::vector<Cell> out;
  for (const Cell& c : cells[static_cast<std::size_t>(level)])
    if (src_of(level, c) == s && tgt_of(level, c) == t) out.push_back(c);
  return out;
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << "violation of " << law;
  if (j >= 0) {
    os << " at level";
    if (i >= 0 || k >= 0) os << "s";
    os << " ";
    if (k >= 0) os << "(" << k << "," << j << "," << i << ")";
    else if (i >= 0) os << "(" << j << "," << i << ")";
    else os << j;
  }
  if (!offenders.empty()) {
    os << " on cells [";
    for (std::size_t x = 0; x < offenders.size(); ++x) {
      if (x) os << ", ";
      os << offenders[x];
    }
    os << "]";
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

std::string ValidationResult::to_string() const {
  return ok() ? std::string("OK") : violation->to_string();
}

namespace {

struct Checker {
  const NCat& a;
  std::optional<Violation> bad;

  bool fail(std::string law, int j, int i, int k, std::vector<Cell> cs, std::string detail) {
    if (!bad) bad = Violation{std::move(law), i, j, k, std::move(cs), std::move(detail)};
    return false;
  }

  bool structure() {
    if (a.n < 1) return fail("structure", -1, -1, -1, {}, "level count must be >= 1");
    const auto m = static_cast<std::size_t>(a.n) + 1;
    if (a.cells.size() != m || a.src.size() != m || a.tgt.size() != m || a.idn.size() != m)
      return fail("structure", -1, -1, -1, {}, "level-indexed tables have wrong length");
    for (int l = 0; l <= a.n; ++l) {
      const auto& cs = a.cells[static_cast<std::size_t>(l)];
      if (cs.size() > max_cells_per_level())
        return fail("structure", l, -1, -1, {}, "cell count exceeds NCAT_GALOIS_MAX_CELLS cap");
      std::set<Cell> seen(cs.begin(), cs.end());
      if (seen.size() != cs.size())
        return fail("structure", l, -1, -1, {}, "duplicate cell name within a level");
    }
    for (int l = 1; l <= a.n; ++l) {
      for (const Cell& c : a.cells[static_cast<std::size_t>(l)]) {
        for (const auto* tab : {&a.src[static_cast<std::size_t>(l)], &a.tgt[static_cast<std::size_t>(l)]}) {
          auto it = tab->find(c);
          if (it == tab->end())
            return fail("structure", l, -1, -1, {c}, "missing src/tgt entry");
          if (!a.has_cell(l - 1, it->second))
            return fail("structure", l, -1, -1, {c, it->second}, "dangling boundary cell");
        }
      }
      if (a.src[static_cast<std::size_t>(l)].size() != a.cells[static_cast<std::size_t>(l)].size() ||
          a.tgt[static_cast<std::size_t>(l)].size() != a.cells[static_cast<std::size_t>(l)].size())
        return fail("structure", l, -1, -1, {}, "src/tgt defined on unknown cells");
      for (const Cell& c : a.cells[static_cast<std::size_t>(l - 1)]) {
        auto it = a.idn[static_cast<std::size_t>(l)].find(c);
        if (it == a.idn[static_cast<std::size_t>(l)].end())
          return fail("structure", l, -1, -1, {c}, "missing idn entry");
        if (!a.has_cell(l, it->second))
          return fail("structure", l, -1, -1, {c, it->second}, "dangling identity cell");
      }
      if (a.idn[static_cast<std::size_t>(l)].size() != a.cells[static_cast<std::size_t>(l - 1)].size())
        return fail("structure", l, -1, -1, {}, "idn defined on unknown cells");
    }
    for (const auto& [ji, tab] : a.comp) {
      auto [j, i] = ji;
      if (!(0 <= i && i < j && j <= a.n))
        return fail("structure", j, i, -1, {}, "comp table with invalid level pair");
      for (const auto& [key, val] : tab) {
        if (!a.has_cell(j, key.first) || !a.has_cell(j, key.second) || !a.has_cell(j, val))
          return fail("structure", j, i, -1, {key.first, key.second, val},
                      "dangling cell in comp table");
      }
    }
    return true;
  }

  bool comp_domain() {
    for (int j = 1; j <= a.n; ++j) {
      for (int i = 0; i < j; ++i) {
        const auto& tab = a.table(j, i);
        for (const Cell& g2 : a.cells[static_cast<std::size_t>(j)]) {
          for (const Cell& g1 : a.cells[static_cast<std::size_t>(j)]) {
            bool comp_ok = a.composable(j, i, g2, g1);
            bool defined = tab.count({g2, g1}) > 0;
            if (comp_ok && !defined)
              return fail("comp-domain", j, i, -1, {g2, g1},
                          "comp undefined on a composable pair");
            if (!comp_ok && defined)
              return fail("comp-domain", j, i, -1, {g2, g1},
                          "comp defined on a non-composable pair");
          }
        }
      }
    }
    return true;
  }

  bool globularity() {
    for (int l = 2; l <= a.n; ++l) {
      for (const Cell& x : a.cells[static_cast<std::size_t>(l)]) {
        const Cell& s = a.src_of(l, x);
        const Cell& t = a.tgt_of(l, x);
        if (a.src_of(l - 1, s) != a.src_of(l - 1, t) || a.tgt_of(l - 1, s) != a.tgt_of(l - 1, t))
          return fail("globularity", l, -1, -1, {x}, "src/tgt boundaries disagree");
      }
    }
    return true;
  }

  bool identity_boundaries() {
    for (int l = 1; l <= a.n; ++l) {
      for (const Cell& c : a.cells[static_cast<std::size_t>(l - 1)]) {
        const Cell& e = a.idn_of(l, c);
        if (a.src_of(l, e) != c || a.tgt_of(l, e) != c)
          return fail("identity-boundaries", l, -1, -1, {c, e},
                      "identity cell has wrong boundaries");
      }
    }
    return true;
  }

  bool unit_laws() {
    for (int j = 1; j <= a.n; ++j) {
      for (int i = 0; i < j; ++i) {
        for (const Cell& g : a.cells[static_cast<std::size_t>(j)]) {
          Cell es = a.idn_tower(i, j, a.bnd_src(j, i, g));
          Cell et = a.idn_tower(i, j, a.bnd_tgt(j, i, g));
          auto right = a.compose_cells(j, i, g, es);
          auto left = a.compose_cells(j, i, et, g);
          if (!right || *right != g)
            return fail("unit", j, i, -1, {g, es}, "right unit law fails");
          if (!left || *left != g)
            return fail("unit", j, i, -1, {et, g}, "left unit law fails");
        }
      }
    }
    return true;
  }

  bool associativity() {
    for (const auto& [ji, tab] : a.comp) {
      auto [j, i] = ji;
      for (const auto& [gf, _] : tab) {
        const Cell& g = gf.first;
        const Cell& f = gf.second;
        for (const Cell& h : a.cells[static_cast<std::size_t>(j)]) {
          if (!a.composable(j, i, h, g)) continue;
          auto hg = a.compose_cells(j, i, h, g);
          auto gf2 = a.compose_cells(j, i, g, f);
          if (!hg || !gf2) continue;  // caught by comp_domain
          auto lhs = a.compose_cells(j, i, h, *gf2);
          auto rhs = a.compose_cells(j, i, *hg, f);
          if (!lhs || !rhs || *lhs != *rhs)
            return fail("associativity", j, i, -1, {h, g, f}, "composition not associative");
        }
      }
    }
    return true;
  }

  bool composite_boundaries() {
    for (const auto& [ji, tab] : a.comp) {
      auto [j, i] = ji;
      for (const auto& [gf, h] : tab) {
        const Cell& g2 = gf.first;
        const Cell& g1 = gf.second;
        if (a.bnd_src(j, i, h) != a.bnd_src(j, i, g1) || a.bnd_tgt(j, i, h) != a.bnd_tgt(j, i, g2))
          return fail("composite-boundaries", j, i, -1, {g2, g1, h},
                      "composite has wrong level-i boundaries");
        if (j - 1 > i) {
          auto s = a.compose_cells(j - 1, i, a.src_of(j, g2), a.src_of(j, g1));
          auto t = a.compose_cells(j - 1, i, a.tgt_of(j, g2), a.tgt_of(j, g1));
          if (!s || a.src_of(j, h) != *s || !t || a.tgt_of(j, h) != *t)
            return fail("composite-boundaries", j, i, -1, {g2, g1, h},
                        "src/tgt of composite is not composite of boundaries");
        }
      }
    }
    return true;
  }

  bool identity_functoriality() {
    for (const auto& [ji, tab] : a.comp) {
      auto [j, i] = ji;
      int k = j + 1;
      if (k > a.n) continue;
      for (const auto& [gf, h] : tab) {
        auto rhs = a.compose_cells(k, i, a.idn_of(k, gf.first), a.idn_of(k, gf.second));
        if (!rhs || a.idn_of(k, h) != *rhs)
          return fail("identity-functoriality", j, i, k, {gf.first, gf.second},
                      "identity of a composite is not the composite of identities");
      }
    }
    return true;
  }

  bool interchange() {
    for (int k = 2; k <= a.n; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          const auto& vt = a.table(k, j);
          for (const auto& [ab, vab] : vt) {
            for (const auto& [gd, vgd] : vt) {
              const Cell& al = ab.first;
              const Cell& be = ab.second;
              const Cell& ga = gd.first;
              const Cell& de = gd.second;
              if (!a.composable(k, i, al, ga) || !a.composable(k, i, be, de)) continue;
              auto h1 = a.compose_cells(k, i, al, ga);
              auto h2 = a.compose_cells(k, i, be, de);
              if (!h1 || !h2) continue;
              auto lhs = a.compose_cells(k, i, vab, vgd);
              auto rhs = a.compose_cells(k, j, *h1, *h2);
              if (!lhs || !rhs || *lhs != *rhs)
                return fail("interchange", j, i, k, {al, be, ga, de},
                            "interchange law fails");
            }
          }
        }
      }
    }
    return true;
  }

  void run() {
    structure() && comp_domain() && globularity() && identity_boundaries() && unit_laws() &&
        associativity() && composite_boundaries() && identity_functoriality() && interchange();
  }
};

}  // namespace

ValidationResult validate_ncat(const NCat& a) {
  Checker c{a, std::nullopt};
  c.run();
  return ValidationResult{std::move(c.bad)};
}

const Cell& NFunctor::apply(int level, const Cell& c) const {
  return lookup(maps[static_cast<std::size_t>(level)], c, "functor map");
}

ValidationResult is_functor_valid(const NFunctor& f) {
  const NCat& A = f.dom;
  const NCat& B = f.cod;
  auto fail = [](std::string law, int j, int i, std::vector<Cell> cs, std::string d) {
    return ValidationResult{Violation{std::move(law), i, j, -1, std::move(cs), std::move(d)}};
  };
  if (A.n != B.n) return fail("functor-structure", -1, -1, {}, "level counts differ");
  if (f.maps.size() != static_cast<std::size_t>(A.n) + 1)
    return fail("functor-structure", -1, -1, {}, "wrong number of level maps");
  for (int l = 0; l <= A.n; ++l) {
    const auto& m = f.maps[static_cast<std::size_t>(l)];
    for (const Cell& c : A.cells[static_cast<std::size_t>(l)]) {
      auto it = m.find(c);
      if (it == m.end()) return fail("functor-structure", l, -1, {c}, "level map not total");
      if (!B.has_cell(l, it->second))
        return fail("functor-structure", l, -1, {c, it->second}, "image cell not in codomain");
    }
  }
  for (int l = 1; l <= A.n; ++l) {
    for (const Cell& c : A.cells[static_cast<std::size_t>(l)]) {
      if (f.apply(l - 1, A.src_of(l, c)) != B.src_of(l, f.apply(l, c)))
        return fail("src-preservation", l, -1, {c}, "src not preserved");
      if (f.apply(l - 1, A.tgt_of(l, c)) != B.tgt_of(l, f.apply(l, c)))
        return fail("tgt-preservation", l, -1, {c}, "tgt not preserved");
    }
    for (const Cell& c : A.cells[static_cast<std::size_t>(l - 1)])
      if (f.apply(l, A.idn_of(l, c)) != B.idn_of(l, f.apply(l - 1, c)))
        return fail("idn-preservation", l, -1, {c}, "identities not preserved");
  }
  for (const auto& [ji, tab] : A.comp) {
    auto [j, i] = ji;
    for (const auto& [gf, h] : tab) {
      auto img = B.compose_cells(j, i, f.apply(j, gf.first), f.apply(j, gf.second));
      if (!img || *img != f.apply(j, h))
        return fail("comp-preservation", j, i, {gf.first, gf.second},
                    "composite not preserved");
    }
  }
  return ValidationResult{};
}

NFunctor identity_functor(const NCat& a) {
  NFunctor f;
  f.dom = a;
  f.cod = a;
  f.maps.resize(static_cast<std::size_t>(a.n) + 1);
  for (int l = 0; l <= a.n; ++l)
    for (const Cell& c : a.cells[static_cast<std::size_t>(l)])
      f.maps[static_cast<std::size_t>(l)][c] = c;
  return f;
}

NFunctor compose(const NFunctor& g, const NFunctor& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose: middle objects differ");
  NFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.maps.resize(f.maps.size());
  for (int l = 0; l <= f.dom.n; ++l)
    for (const auto& [c, v] : f.maps[static_cast<std::size_t>(l)])
      h.maps[static_cast<std::size_t>(l)][c] = g.apply(l, v);
  return h;
}

bool is_bijective_on(const LevelMap& m, const std::vector<Cell>& domain,
                     const std::vector<Cell>& codomain) {
  if (domain.size() != codomain.size()) return false;
  std::set<Cell> image;
  for (const Cell& c : domain) {
    auto it = m.find(c);
    if (it == m.end()) return false;
    image.insert(it->second);
  }
  return image.size() == codomain.size();
}

bool functor_is_iso(const NFunctor& f) {
  for (int l = 0; l <= f.dom.n; ++l)
    if (!is_bijective_on(f.maps[static_cast<std::size_t>(l)],
                         f.dom.cells[static_cast<std::size_t>(l)],
                         f.cod.cells[static_cast<std::size_t>(l)]))
      return false;
  return true;
}

NFunctor invert_functor(const NFunctor& f) {
  if (!functor_is_iso(f)) throw std::invalid_argument("invert_functor: not an isomorphism");
  NFunctor g;
  g.dom = f.cod;
  g.cod = f.dom;
  g.maps.resize(f.maps.size());
  for (std::size_t l = 0; l < f.maps.size(); ++l)
    for (const auto& [c, v] : f.maps[l]) g.maps[l][v] = c;
  return g;
}

}  // namespace ncat
