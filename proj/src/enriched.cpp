#include "ncat/enriched.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncat/iso.hpp"
#include "ncat/limits.hpp"

namespace ncat {

namespace {

Cell term_cell(int dim, int level) { return terminal(dim).cells[level][0]; }

bool maps_are_identity(const NFunctor& f) {
  for (const auto& lm : f.maps)
    for (const auto& [c, d] : lm)
      if (c != d) return false;
  return true;
}

std::vector<std::pair<Cell, Cell>> object_pairs(const VCat& v) {
  std::vector<Cell> obs = v.objects;
  std::sort(obs.begin(), obs.end());
  std::vector<std::pair<Cell, Cell>> out;
  for (const Cell& a : obs)
    for (const Cell& b : obs) out.emplace_back(a, b);
  return out;
}

}  // namespace

BaseReflector direct_base(int dim) {
  return BaseReflector{dim, [](const NCat& x) { return reflect(x); },
                       [](const NFunctor& f) { return reflect_induced(f); }};
}

const NCat& VCat::hom_of(const Cell& a, const Cell& b) const {
  auto it = hom.find({a, b});
  if (it == hom.end()) throw std::invalid_argument("VCat: missing hom(" + a + "," + b + ")");
  return it->second;
}

VCatCheck vcat_validate(const VCat& v) {
  auto fail = [](std::string d) { return VCatCheck{false, std::move(d)}; };
  for (const auto& [a, b] : object_pairs(v)) {
    auto it = v.hom.find({a, b});
    if (it == v.hom.end()) return fail("missing hom(" + a + "," + b + ")");
    if (it->second.n != v.dim) return fail("hom(" + a + "," + b + ") has wrong dimension");
    ValidationResult r = validate_ncat(it->second);
    if (!r.ok()) return fail("hom(" + a + "," + b + "): " + r.to_string());
  }
  NCat term = terminal(v.dim);
  for (const Cell& a : v.objects) {
    auto it = v.j.find(a);
    if (it == v.j.end()) return fail("missing j(" + a + ")");
    if (it->second.dom != term || it->second.cod != v.hom_of(a, a))
      return fail("j(" + a + ") has the wrong (co)domain");
    if (!is_functor_valid(it->second).ok()) return fail("j(" + a + ") is not a functor");
  }
  for (const Cell& a : v.objects)
    for (const Cell& b : v.objects)
      for (const Cell& c : v.objects) {
        auto it = v.M.find({a, b, c});
        if (it == v.M.end()) return fail("missing M(" + a + "," + b + "," + c + ")");
        const NFunctor& m = it->second;
        if (m.dom != product(v.hom_of(b, c), v.hom_of(a, b)).apex || m.cod != v.hom_of(a, c))
          return fail("M(" + a + "," + b + "," + c + ") has the wrong (co)domain");
        if (!is_functor_valid(m).ok())
          return fail("M(" + a + "," + b + "," + c + ") is not a functor");
      }
  // unit axioms
  for (const auto& [a, b] : object_pairs(v)) {
    const NCat& h = v.hom_of(a, b);
    const NFunctor& ml = v.M.at({a, b, b});
    const NFunctor& mr = v.M.at({a, a, b});
    for (int l = 0; l <= v.dim; ++l)
      for (const Cell& x : h.cells[l]) {
        if (ml.apply(l, pair_name(v.j.at(b).apply(l, term_cell(v.dim, l)), x)) != x)
          return fail("left unit axiom fails at " + x + " in hom(" + a + "," + b + ")");
        if (mr.apply(l, pair_name(x, v.j.at(a).apply(l, term_cell(v.dim, l)))) != x)
          return fail("right unit axiom fails at " + x + " in hom(" + a + "," + b + ")");
      }
  }
  // associativity
  for (const Cell& a : v.objects)
    for (const Cell& b : v.objects)
      for (const Cell& c : v.objects)
        for (const Cell& d : v.objects)
          for (int l = 0; l <= v.dim; ++l)
            for (const Cell& z : v.hom_of(c, d).cells[l])
              for (const Cell& y : v.hom_of(b, c).cells[l])
                for (const Cell& x : v.hom_of(a, b).cells[l]) {
                  Cell zy = v.M.at({b, c, d}).apply(l, pair_name(z, y));
                  Cell yx = v.M.at({a, b, c}).apply(l, pair_name(y, x));
                  if (v.M.at({a, b, d}).apply(l, pair_name(zy, x)) !=
                      v.M.at({a, c, d}).apply(l, pair_name(z, yx)))
                    return fail("associativity fails at (" + z + "," + y + "," + x + ")");
                }
  return {};
}

VFunctor vcat_identity(const VCat& v) {
  VFunctor f{v, v, {}, {}};
  for (const Cell& a : v.objects) f.obj[a] = a;
  for (const auto& [p, h] : v.hom) f.t[p] = identity_functor(h);
  return f;
}

VFunctor vcompose(const VFunctor& g, const VFunctor& f) {
  if (g.dom != f.cod) throw std::invalid_argument("vcompose: middle mismatch");
  VFunctor out{f.dom, g.cod, {}, {}};
  for (const auto& [a, fa] : f.obj) out.obj[a] = g.obj.at(fa);
  for (const auto& [p, ft] : f.t)
    out.t[p] = compose(g.t.at({f.obj.at(p.first), f.obj.at(p.second)}), ft);
  return out;
}

ValidationResult is_vfunctor_valid(const VFunctor& f) {
  auto fail = [](std::string law, std::string detail) {
    return ValidationResult{Violation{std::move(law), -1, -1, -1, {}, std::move(detail)}};
  };
  for (const Cell& a : f.dom.objects) {
    if (!f.obj.count(a)) return fail("vfunctor-structure", "no image for object " + a);
    if (std::find(f.cod.objects.begin(), f.cod.objects.end(), f.obj.at(a)) ==
        f.cod.objects.end())
      return fail("vfunctor-structure", "object image not in codomain: " + f.obj.at(a));
  }
  for (const auto& [a, b] : object_pairs(f.dom)) {
    auto it = f.t.find({a, b});
    if (it == f.t.end()) return fail("vfunctor-structure", "missing T(" + a + "," + b + ")");
    if (it->second.dom != f.dom.hom_of(a, b) ||
        it->second.cod != f.cod.hom_of(f.obj.at(a), f.obj.at(b)))
      return fail("vfunctor-structure", "T(" + a + "," + b + ") has the wrong (co)domain");
    ValidationResult r = is_functor_valid(it->second);
    if (!r.ok()) return fail("vfunctor-structure", "T(" + a + "," + b + "): " + r.to_string());
  }
  const int dim = f.dom.dim;
  for (const Cell& a : f.dom.objects) {
    const NFunctor& ja = f.dom.j.at(a);
    const NFunctor& jfa = f.cod.j.at(f.obj.at(a));
    for (int l = 0; l <= dim; ++l) {
      Cell tc = term_cell(dim, l);
      if (f.t.at({a, a}).apply(l, ja.apply(l, tc)) != jfa.apply(l, tc))
        return fail("vfunctor-identities", "identity of " + a + " not preserved");
    }
  }
  for (const Cell& a : f.dom.objects)
    for (const Cell& b : f.dom.objects)
      for (const Cell& c : f.dom.objects) {
        const NFunctor& m = f.dom.M.at({a, b, c});
        const NFunctor& mc = f.cod.M.at({f.obj.at(a), f.obj.at(b), f.obj.at(c)});
        for (int l = 0; l <= dim; ++l)
          for (const Cell& y : f.dom.hom_of(b, c).cells[l])
            for (const Cell& x : f.dom.hom_of(a, b).cells[l])
              if (f.t.at({a, c}).apply(l, m.apply(l, pair_name(y, x))) !=
                  mc.apply(l, pair_name(f.t.at({b, c}).apply(l, y),
                                        f.t.at({a, b}).apply(l, x))))
                return fail("vfunctor-composition",
                            "composition not preserved at (" + y + "," + x + ")");
      }
  return {};
}

bool vfunctor_is_iso(const VFunctor& f) {
  LevelMap om = f.obj;
  std::vector<Cell> dom_obs = f.dom.objects;
  if (!is_bijective_on(om, dom_obs, f.cod.objects)) return false;
  for (const auto& [p, tf] : f.t)
    if (!functor_is_iso(tf)) return false;
  return true;
}

VFunctor invert_vfunctor(const VFunctor& f) {
  if (!vfunctor_is_iso(f)) throw std::invalid_argument("invert_vfunctor: not an isomorphism");
  VFunctor inv{f.cod, f.dom, {}, {}};
  for (const auto& [a, fa] : f.obj) inv.obj[fa] = a;
  for (const auto& [p, tf] : f.t)
    inv.t[{f.obj.at(p.first), f.obj.at(p.second)}] = invert_functor(tf);
  return inv;
}

VProductResult vcat_product(const VCat& a, const VCat& b) {
  if (a.dim != b.dim) throw std::invalid_argument("vcat_product: base dimension mismatch");
  const int dim = a.dim;
  VCat prod;
  prod.dim = dim;
  VFunctor p1{{}, a, {}, {}}, p2{{}, b, {}, {}};

  for (const Cell& x : a.objects)
    for (const Cell& y : b.objects) {
      Cell o = pair_name(x, y);
      prod.objects.push_back(o);
      p1.obj[o] = x;
      p2.obj[o] = y;
    }

  std::map<std::pair<Cell, Cell>, ProductResult> hp;
  for (const Cell& o1 : prod.objects)
    for (const Cell& o2 : prod.objects) {
      auto [x1, y1] = *split_pair_name(o1);
      auto [x2, y2] = *split_pair_name(o2);
      ProductResult pr = product(a.hom_of(x1, x2), b.hom_of(y1, y2));
      prod.hom[{o1, o2}] = pr.apex;
      p1.t[{o1, o2}] = pr.p1;
      p2.t[{o1, o2}] = pr.p2;
      hp.emplace(std::make_pair(o1, o2), std::move(pr));
    }

  NCat term = terminal(dim);
  for (const Cell& o : prod.objects) {
    auto [x, y] = *split_pair_name(o);
    NFunctor jo{term, prod.hom_of(o, o), {}};
    jo.maps.resize(dim + 1);
    for (int l = 0; l <= dim; ++l) {
      Cell tc = term_cell(dim, l);
      jo.maps[l][tc] = pair_name(a.j.at(x).apply(l, tc), b.j.at(y).apply(l, tc));
    }
    prod.j[o] = std::move(jo);
  }

  for (const Cell& o1 : prod.objects)
    for (const Cell& o2 : prod.objects)
      for (const Cell& o3 : prod.objects) {
        auto [x1, y1] = *split_pair_name(o1);
        auto [x2, y2] = *split_pair_name(o2);
        auto [x3, y3] = *split_pair_name(o3);
        const NFunctor& ma = a.M.at({x1, x2, x3});
        const NFunctor& mb = b.M.at({y1, y2, y3});
        NCat dom = product(prod.hom_of(o2, o3), prod.hom_of(o1, o2)).apex;
        NFunctor m{dom, prod.hom_of(o1, o3), {}};
        m.maps.resize(dim + 1);
        for (int l = 0; l <= dim; ++l)
          for (const Cell& c : m.dom.cells[l]) {
            auto [later, earlier] = *split_pair_name(c);
            auto [ya, yb] = *split_pair_name(later);
            auto [xa, xb] = *split_pair_name(earlier);
            m.maps[l][c] = pair_name(ma.apply(l, pair_name(ya, xa)),
                                     mb.apply(l, pair_name(yb, xb)));
          }
        prod.M[{o1, o2, o3}] = std::move(m);
      }

  p1.dom = prod;
  p2.dom = prod;
  return {std::move(prod), std::move(p1), std::move(p2)};
}

void enumerate_vfunctors(const VCat& a, const VCat& b,
                         const std::function<bool(const VFunctor&)>& visit) {
  std::vector<Cell> dom_obs = a.objects;
  std::sort(dom_obs.begin(), dom_obs.end());
  std::vector<Cell> cod_obs = b.objects;
  std::sort(cod_obs.begin(), cod_obs.end());
  if (dom_obs.empty()) {
    VFunctor f{a, b, {}, {}};
    visit(f);
    return;
  }

  bool stop = false;
  std::vector<std::size_t> pick(dom_obs.size(), 0);
  while (!stop) {
    VFunctor f{a, b, {}, {}};
    for (std::size_t k = 0; k < dom_obs.size(); ++k) f.obj[dom_obs[k]] = cod_obs[pick[k]];

    std::vector<std::pair<Cell, Cell>> pairs = object_pairs(a);
    std::function<bool(std::size_t)> assign = [&](std::size_t idx) -> bool {
      if (idx == pairs.size()) {
        if (is_vfunctor_valid(f).ok() && !visit(f)) return false;
        return true;
      }
      const auto& [x, y] = pairs[idx];
      bool keep_going = true;
      enumerate_functors(a.hom_of(x, y), b.hom_of(f.obj.at(x), f.obj.at(y)),
                         [&](const NFunctor& tf) {
                           f.t[{x, y}] = tf;
                           keep_going = assign(idx + 1);
                           return keep_going;
                         });
      f.t.erase({x, y});
      return keep_going;
    };
    if (!assign(0)) {
      stop = true;
      break;
    }

    // next object map
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == cod_obs.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
}

DerivedReflection derive_reflect(const VCat& v, const BaseReflector& base) {
  if (v.dim != base.dim) throw std::invalid_argument("derive_reflect: dimension mismatch");
  std::map<std::pair<Cell, Cell>, ReflectionResult> rr;
  for (const auto& [p, h] : v.hom) rr.emplace(p, base.on_object(h));

  VCat image;
  image.dim = v.dim;
  image.objects = v.objects;
  for (const auto& [p, r] : rr) image.hom[p] = r.image;
  for (const Cell& a : v.objects) image.j[a] = compose(rr.at({a, a}).unit, v.j.at(a));

  for (const Cell& a : v.objects)
    for (const Cell& b : v.objects)
      for (const Cell& c : v.objects) {
        const NFunctor& m = v.M.at({a, b, c});
        ProductResult p = product(v.hom_of(b, c), v.hom_of(a, b));
        NFunctor fm = base.on_morphism(m);
        NFunctor fp1 = base.on_morphism(p.p1);
        NFunctor fp2 = base.on_morphism(p.p2);
        ProductResult fprod = product(rr.at({b, c}).image, rr.at({a, b}).image);
        NFunctor cmp{fm.dom, fprod.apex, {}};
        cmp.maps.resize(v.dim + 1);
        for (int l = 0; l <= v.dim; ++l)
          for (const Cell& w : cmp.dom.cells[l])
            cmp.maps[l][w] = pair_name(fp1.apply(l, w), fp2.apply(l, w));
        if (!functor_is_iso(cmp))
          throw std::logic_error(
              "derive_reflect: base reflector does not preserve this product");
        image.M[{a, b, c}] = compose(fm, invert_functor(cmp));
      }

  VFunctor unit{v, image, {}, {}};
  for (const Cell& a : v.objects) unit.obj[a] = a;
  for (const auto& [p, r] : rr) unit.t[p] = r.unit;
  return {std::move(image), std::move(unit)};
}

VCat to_enriched(const NCat& a) {
  if (a.n < 2) throw std::invalid_argument("to_enriched: requires n >= 2");
  const int dim = a.n - 1;
  VCat v;
  v.dim = dim;
  v.objects = a.cells[0];

  for (const Cell& x : v.objects)
    for (const Cell& y : v.objects) {
      NCat h;
      h.n = dim;
      h.cells.assign(dim + 1, {});
      h.src.assign(dim + 1, {});
      h.tgt.assign(dim + 1, {});
      h.idn.assign(dim + 1, {});
      for (int l = 0; l <= dim; ++l)
        for (const Cell& c : a.cells[l + 1])
          if (a.bnd_src(l + 1, 0, c) == x && a.bnd_tgt(l + 1, 0, c) == y) {
            h.cells[l].push_back(c);
            if (l >= 1) {
              h.src[l][c] = a.src_of(l + 1, c);
              h.tgt[l][c] = a.tgt_of(l + 1, c);
            }
          }
      for (int l = 1; l <= dim; ++l)
        for (const Cell& c : h.cells[l - 1]) h.idn[l][c] = a.idn_of(l + 1, c);
      for (int j = 1; j <= dim; ++j)
        for (int i = 0; i < j; ++i) {
          CompTable& tab = h.comp[{j, i}];
          std::set<Cell> here(h.cells[j].begin(), h.cells[j].end());
          for (const auto& [args, res] : a.table(j + 1, i + 1))
            if (here.count(args.first) && here.count(args.second)) tab[args] = res;
        }
      v.hom[{x, y}] = std::move(h);
    }

  NCat term = terminal(dim);
  for (const Cell& x : v.objects) {
    NFunctor jx{term, v.hom_of(x, x), {}};
    jx.maps.resize(dim + 1);
    for (int l = 0; l <= dim; ++l)
      jx.maps[l][term_cell(dim, l)] = a.idn_tower(0, l + 1, x);
    v.j[x] = std::move(jx);
  }

  for (const Cell& x : v.objects)
    for (const Cell& y : v.objects)
      for (const Cell& z : v.objects) {
        NFunctor m{product(v.hom_of(y, z), v.hom_of(x, y)).apex, v.hom_of(x, z), {}};
        m.maps.resize(dim + 1);
        for (int l = 0; l <= dim; ++l)
          for (const Cell& c : m.dom.cells[l]) {
            auto [later, earlier] = *split_pair_name(c);
            m.maps[l][c] = *a.compose_cells(l + 1, 0, later, earlier);
          }
        v.M[{x, y, z}] = std::move(m);
      }
  return v;
}

FromEnrichedResult from_enriched(const VCat& v) {
  const int dim = v.dim;
  const int n = dim + 1;

  bool rename = false;
  for (int l = 0; l <= dim && !rename; ++l) {
    std::set<Cell> seen;
    for (const auto& [p, h] : v.hom)
      for (const Cell& c : h.cells[l])
        if (!seen.insert(c).second) rename = true;
  }

  FromEnrichedResult out;
  auto name = [&](const Cell& a, const Cell& b, int l, const Cell& c) {
    Cell nm = rename ? pair_name(a, b) + ":" + c : c;
    out.names[{a, b, l, c}] = nm;
    return nm;
  };

  NCat& cat = out.cat;
  cat.n = n;
  cat.cells.assign(n + 1, {});
  cat.src.assign(n + 1, {});
  cat.tgt.assign(n + 1, {});
  cat.idn.assign(n + 1, {});
  cat.cells[0] = v.objects;

  for (const auto& [a, b] : object_pairs(v)) {
    const NCat& h = v.hom_of(a, b);
    for (int l = 0; l <= dim; ++l)
      for (const Cell& c : h.cells[l]) {
        Cell nm = name(a, b, l, c);
        cat.cells[l + 1].push_back(nm);
        if (l == 0) {
          cat.src[1][nm] = a;
          cat.tgt[1][nm] = b;
        } else {
          cat.src[l + 1][nm] = out.names.at({a, b, l - 1, h.src_of(l, c)});
          cat.tgt[l + 1][nm] = out.names.at({a, b, l - 1, h.tgt_of(l, c)});
        }
      }
    for (int l = 1; l <= dim; ++l)
      for (const Cell& c : h.cells[l - 1])
        cat.idn[l + 1][out.names.at({a, b, l - 1, c})] = out.names.at({a, b, l, h.idn_of(l, c)});
    for (int j = 1; j <= dim; ++j)
      for (int i = 0; i < j; ++i) {
        CompTable& tab = cat.comp[{j + 1, i + 1}];
        for (const auto& [args, res] : h.table(j, i))
          tab[{out.names.at({a, b, j, args.first}), out.names.at({a, b, j, args.second})}] =
              out.names.at({a, b, j, res});
      }
  }
  for (const Cell& a : v.objects)
    cat.idn[1][a] = out.names.at({a, a, 0, v.j.at(a).apply(0, term_cell(dim, 0))});

  for (const Cell& a : v.objects)
    for (const Cell& b : v.objects)
      for (const Cell& c : v.objects) {
        const NFunctor& m = v.M.at({a, b, c});
        for (int l = 0; l <= dim; ++l) {
          CompTable& tab = cat.comp[{l + 1, 0}];
          for (const Cell& y : v.hom_of(b, c).cells[l])
            for (const Cell& x : v.hom_of(a, b).cells[l])
              tab[{out.names.at({b, c, l, y}), out.names.at({a, b, l, x})}] =
                  out.names.at({a, c, l, m.apply(l, pair_name(y, x))});
        }
      }
  return out;
}

namespace {

// The map between reflections induced by f, read off along the two
// (surjective) units; a conflict would contradict the universal property.
NFunctor induced_along_units(const NFunctor& f, const NFunctor& unit_dom,
                             const NFunctor& unit_cod) {
  NFunctor out{unit_dom.cod, unit_cod.cod, {}};
  out.maps.resize(f.dom.n + 1);
  for (int l = 0; l <= f.dom.n; ++l)
    for (const Cell& c : f.dom.cells[l]) {
      Cell key = unit_dom.apply(l, c);
      Cell val = unit_cod.apply(l, f.apply(l, c));
      auto [it, fresh] = out.maps[l].emplace(key, val);
      if (!fresh && it->second != val)
        throw std::logic_error("induced map along units is ill-defined");
    }
  return out;
}

}  // namespace

NFunctor iterate_reflect(const NCat& a) {
  if (a.n == 1) return reflect(a).unit;

  BaseReflector base;
  base.dim = a.n - 1;
  base.on_object = [](const NCat& x) {
    NFunctor u = iterate_reflect(x);
    return ReflectionResult{u.cod, u};
  };
  base.on_morphism = [](const NFunctor& f) {
    return induced_along_units(f, iterate_reflect(f.dom), iterate_reflect(f.cod));
  };

  VCat v = to_enriched(a);
  DerivedReflection dr = derive_reflect(v, base);
  FromEnrichedResult fe = from_enriched(dr.image);

  NFunctor unit{a, fe.cat, {}};
  unit.maps.resize(a.n + 1);
  for (const Cell& x : a.cells[0]) unit.maps[0][x] = x;
  for (int l = 1; l <= a.n; ++l)
    for (const Cell& c : a.cells[l]) {
      Cell x = a.bnd_src(l, 0, c), y = a.bnd_tgt(l, 0, c);
      Cell img = dr.unit.t.at({x, y}).apply(l - 1, c);
      unit.maps[l][c] = fe.names.at({x, y, l - 1, img});
    }
  return unit;
}

BaseConditionReport check_base_conditions(const BaseReflector& base,
                                          const std::vector<NCat>& sample) {
  BaseConditionReport rep;
  auto note = [&](bool& flag, const std::string& d) {
    flag = false;
    if (rep.detail.empty()) rep.detail = d;
  };

  NCat term = terminal(base.dim);
  ReflectionResult rt = base.on_object(term);
  if (!maps_are_identity(rt.unit) || rt.image != term)
    note(rep.terminal_condition, "unit of the terminal is not the identity");

  std::vector<ReflectionResult> refl;
  for (const NCat& x : sample) refl.push_back(base.on_object(x));

  for (const ReflectionResult& r : refl) {
    ReflectionResult again = base.on_object(r.image);
    if (!maps_are_identity(again.unit) || again.image != r.image)
      note(rep.idempotent, "reflector is not idempotent on a sample object");
  }

  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t k = 0; k < sample.size(); ++k) {
      ProductResult p = product(sample[i], sample[k]);
      ReflectionResult rp = base.on_object(p.apex);
      NFunctor fp1 = base.on_morphism(p.p1);
      NFunctor fp2 = base.on_morphism(p.p2);
      ProductResult fprod = product(refl[i].image, refl[k].image);
      NFunctor cmp{rp.image, fprod.apex, {}};
      cmp.maps.resize(base.dim + 1);
      for (int l = 0; l <= base.dim; ++l)
        for (const Cell& w : rp.image.cells[l])
          cmp.maps[l][w] = pair_name(fp1.apply(l, w), fp2.apply(l, w));
      bool ok = functor_is_iso(cmp);
      if (ok) {
        // eta_X x eta_Y must equal cmp . eta_{XxY}
        for (int l = 0; l <= base.dim && ok; ++l)
          for (const Cell& w : p.apex.cells[l]) {
            auto [x, y] = *split_pair_name(w);
            if (cmp.apply(l, rp.unit.apply(l, w)) !=
                pair_name(refl[i].unit.apply(l, x), refl[k].unit.apply(l, y))) {
              ok = false;
              break;
            }
          }
      }
      if (!ok)
        note(rep.product_condition,
             "unit of a sample product is not the product of the units");
    }
  return rep;
}

bool vcat_isomorphic(const VCat& a, const VCat& b) {
  if (a.objects.size() != b.objects.size() || a.dim != b.dim) return false;
  bool found = false;
  enumerate_vfunctors(a, b, [&](const VFunctor& f) {
    if (vfunctor_is_iso(f)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace ncat
