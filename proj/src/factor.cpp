#include "ncat/factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ncat/iso.hpp"
#include "ncat/reflect.hpp"

namespace ncat {

namespace {

bool parallel_at(const NCat& a, int level, const Cell& h, const Cell& hp) {
  if (level == 0) return true;
  return a.src_of(level, h) == a.src_of(level, hp) && a.tgt_of(level, h) == a.tgt_of(level, hp);
}

// Ordered pairs (h, h') of parallel (n-1)-cells, lexicographically.
std::vector<std::pair<Cell, Cell>> parallel_pairs(const NCat& a) {
  std::vector<Cell> lower = a.cells[a.n - 1];
  std::sort(lower.begin(), lower.end());
  std::vector<std::pair<Cell, Cell>> out;
  for (const Cell& h : lower)
    for (const Cell& hp : lower)
      if (parallel_at(a, a.n - 1, h, hp)) out.emplace_back(h, hp);
  return out;
}

std::string hom_label(const Cell& h, const Cell& hp) { return "Hom(" + h + "," + hp + ")"; }

// Middle-object n-cell name in the monotone-light factorization: the
// B-cell tagged by the A-hom it sits over.
Cell ml_name(const Cell& b, const Cell& h, const Cell& hp) {
  return b + "@" + pair_name(h, hp);
}

}  // namespace

std::string MorphismClass::summary() const {
  std::ostringstream os;
  os << "vertical=" << (vertical ? "true" : "false")
     << " stably_vertical=" << (stably_vertical ? "true" : "false")
     << " trivial_covering=" << (trivial_covering ? "true" : "false")
     << " covering=" << (covering ? "true" : "false");
  return os.str();
}

MorphismClass classify(const NFunctor& f) {
  const NCat& a = f.dom;
  const NCat& b = f.cod;
  const int n = a.n;
  MorphismClass r;
  r.vertical = r.stably_vertical = r.trivial_covering = r.covering = true;

  for (int l = 0; l < n; ++l) {
    if (!is_bijective_on(f.maps[l], a.cells[l], b.cells[l])) {
      if (r.vertical) {
        r.vertical = false;
        r.vertical_witness = "level " + std::to_string(l) + " map is not a bijection";
      }
      if (r.stably_vertical) {
        r.stably_vertical = false;
        r.stably_vertical_witness = *r.vertical_witness;
      }
      break;
    }
  }

  for (const auto& [h, hp] : parallel_pairs(a)) {
    std::vector<Cell> dom_hom = a.hom(h, hp);
    std::vector<Cell> cod_hom = b.hom(f.apply(n - 1, h), f.apply(n - 1, hp));
    std::sort(dom_hom.begin(), dom_hom.end());
    std::sort(cod_hom.begin(), cod_hom.end());

    if (r.vertical && dom_hom.empty() && !cod_hom.empty()) {
      r.vertical = false;
      r.vertical_witness = hom_label(h, hp) + " empty but its image hom is not";
    }
    if (r.stably_vertical) {
      std::set<Cell> image;
      for (const Cell& c : dom_hom) image.insert(f.apply(n, c));
      for (const Cell& t : cod_hom)
        if (!image.count(t)) {
          r.stably_vertical = false;
          r.stably_vertical_witness = t + " not in the image of " + hom_label(h, hp);
          break;
        }
    }
    // Injectivity failures serve both the covering flags.
    std::optional<std::string> inj_witness;
    std::map<Cell, Cell> seen;
    for (const Cell& c : dom_hom) {
      auto [it, fresh] = seen.emplace(f.apply(n, c), c);
      if (!fresh) {
        inj_witness = it->second + " and " + c + " in " + hom_label(h, hp) +
                      " share the image " + it->first;
        break;
      }
    }
    if (r.covering && inj_witness) {
      r.covering = false;
      r.covering_witness = inj_witness;
    }
    if (r.trivial_covering && !dom_hom.empty()) {
      if (inj_witness) {
        r.trivial_covering = false;
        r.trivial_covering_witness = inj_witness;
      } else if (dom_hom.size() != cod_hom.size()) {
        r.trivial_covering = false;
        r.trivial_covering_witness =
            hom_label(h, hp) + " has " + std::to_string(dom_hom.size()) +
            " cells but its image hom has " + std::to_string(cod_hom.size());
      }
    }
  }
  return r;
}

Factorization reflective_factorize(const NFunctor& f) {
  ReflectionResult ra = reflect(f.dom);
  ReflectionResult rb = reflect(f.cod);
  NFunctor rf = reflect_induced(f);
  PullbackResult pb = pullback(rb.unit, rf);  // apex cells named (b|ia)
  Factorization out{pullback_mediator(pb, f, ra.unit), pb.apex, pb.p1,
                    SystemKind::reflective};
  return out;
}

Factorization ml_factorize(const NFunctor& f) {
  const NCat& a = f.dom;
  const NCat& b = f.cod;
  const int n = a.n;

  NCat mid = a;
  mid.cells[n].clear();
  mid.src[n].clear();
  mid.tgt[n].clear();
  mid.idn[n].clear();
  for (auto& [ji, tab] : mid.comp)
    if (ji.first == n) tab.clear();

  // Which middle cell a given A-cell lands on, and the B-cell under a
  // given middle cell.
  LevelMap e_top, m_top;

  for (const auto& [h, hp] : parallel_pairs(a)) {
    std::set<Cell> image;
    for (const Cell& c : a.hom(h, hp)) image.insert(f.apply(n, c));
    for (const Cell& bc : image) {
      Cell name = ml_name(bc, h, hp);
      mid.cells[n].push_back(name);
      mid.src[n][name] = h;
      mid.tgt[n][name] = hp;
      m_top[name] = bc;
    }
  }
  for (const Cell& c : a.cells[n])
    e_top[c] = ml_name(f.apply(n, c), a.src_of(n, c), a.tgt_of(n, c));
  for (const Cell& h : a.cells[n - 1])
    mid.idn[n][h] = e_top.at(a.idn_of(n, h));

  for (int i = 0; i < n; ++i) {
    CompTable& tab = mid.comp[{n, i}];
    for (const Cell& c2 : mid.cells[n])
      for (const Cell& c1 : mid.cells[n]) {
        if (mid.bnd_tgt(n, i, c1) != mid.bnd_src(n, i, c2)) continue;
        Cell bc = *b.compose_cells(n, i, m_top.at(c2), m_top.at(c1));
        Cell s, t;
        if (i == n - 1) {
          s = mid.src_of(n, c1);
          t = mid.tgt_of(n, c2);
        } else {
          s = *a.compose_cells(n - 1, i, mid.src_of(n, c2), mid.src_of(n, c1));
          t = *a.compose_cells(n - 1, i, mid.tgt_of(n, c2), mid.tgt_of(n, c1));
        }
        tab[{c2, c1}] = ml_name(bc, s, t);
      }
  }

  NFunctor e{a, mid, {}};
  NFunctor m{mid, b, {}};
  e.maps.resize(n + 1);
  m.maps.resize(n + 1);
  for (int l = 0; l < n; ++l) {
    for (const Cell& c : a.cells[l]) e.maps[l][c] = c;
    m.maps[l] = f.maps[l];
  }
  e.maps[n] = std::move(e_top);
  m.maps[n] = std::move(m_top);
  return Factorization{std::move(e), std::move(mid), std::move(m), SystemKind::monotone_light};
}

std::variant<NFunctor, DiagonalFailure> fill_diagonal(const NFunctor& e, const NFunctor& m,
                                                      const NFunctor& top,
                                                      const NFunctor& bottom) {
  if (compose(m, top).maps != compose(bottom, e).maps)
    throw std::invalid_argument("fill_diagonal: square does not commute");

  std::vector<NFunctor> found;
  enumerate_functors(e.cod, m.dom, [&](const NFunctor& d) {
    if (compose(d, e).maps == top.maps && compose(m, d).maps == bottom.maps)
      found.push_back(d);
    return true;
  });
  if (found.size() == 1) return found.front();
  return DiagonalFailure{std::move(found)};
}

namespace {

using Elem = std::vector<Cell>;

// The finite sets underlying an n-category at each object of the diagram
// shape: single cells per level, composable pairs per (j, i), and the 2x2
// interchange matrices per (k, j, i).
std::vector<Elem> level_set(const NCat& x, int l) {
  std::vector<Elem> out;
  for (const Cell& c : x.cells[l]) out.push_back({c});
  return out;
}

std::vector<Elem> pair_set(const NCat& x, int j, int i) {
  std::vector<Elem> out;
  for (const Cell& g2 : x.cells[j])
    for (const Cell& g1 : x.cells[j])
      if (x.composable(j, i, g2, g1)) out.push_back({g2, g1});
  return out;
}

std::vector<Elem> matrix_set(const NCat& x, int k, int j, int i) {
  std::vector<Elem> out;
  for (const Cell& p : x.cells[k])
    for (const Cell& q : x.cells[k]) {
      if (!x.composable(k, j, q, p)) continue;
      for (const Cell& r : x.cells[k])
        for (const Cell& s : x.cells[k])
          if (x.composable(k, j, s, r) && x.composable(k, i, r, p) && x.composable(k, i, s, q))
            out.push_back({p, q, r, s});
    }
  return out;
}

Elem map_elem(const NFunctor& f, int level, const Elem& e) {
  Elem out;
  out.reserve(e.size());
  for (const Cell& c : e) out.push_back(f.apply(level, c));
  return out;
}

// Is A -> B x_{IB} IA a bijection on this component?
bool square_is_pullback(const NFunctor& f, const NFunctor& ua, const NFunctor& ub,
                        const NFunctor& rf, int level, const std::vector<Elem>& sa,
                        const std::vector<Elem>& sb, const std::vector<Elem>& sia) {
  std::set<std::pair<Elem, Elem>> fiber;
  for (const Elem& eb : sb)
    for (const Elem& eia : sia)
      if (map_elem(ub, level, eb) == map_elem(rf, level, eia)) fiber.insert({eb, eia});
  std::set<std::pair<Elem, Elem>> hit;
  for (const Elem& ea : sa) {
    auto img = std::make_pair(map_elem(f, level, ea), map_elem(ua, level, ea));
    if (!fiber.count(img)) return false;       // square would not even commute
    if (!hit.insert(img).second) return false;  // not injective
  }
  return hit.size() == fiber.size();
}

}  // namespace

bool unit_naturality_squares_are_pullbacks(const NFunctor& f) {
  const NCat& a = f.dom;
  const NCat& b = f.cod;
  const int n = a.n;
  ReflectionResult ra = reflect(a);
  ReflectionResult rb = reflect(b);
  NFunctor rf = reflect_induced(f);
  const NCat& ia = ra.image;

  for (int l = 0; l <= n; ++l)
    if (!square_is_pullback(f, ra.unit, rb.unit, rf, l, level_set(a, l), level_set(b, l),
                            level_set(ia, l)))
      return false;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      if (!square_is_pullback(f, ra.unit, rb.unit, rf, j, pair_set(a, j, i), pair_set(b, j, i),
                              pair_set(ia, j, i)))
        return false;
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i)
        if (!square_is_pullback(f, ra.unit, rb.unit, rf, k, matrix_set(a, k, j, i),
                                matrix_set(b, k, j, i), matrix_set(ia, k, j, i)))
          return false;
  return true;
}

}  // namespace ncat
