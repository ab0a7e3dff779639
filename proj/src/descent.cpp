#include "ncat/descent.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ncat/factor.hpp"
#include "ncat/iso.hpp"
#include "ncat/limits.hpp"
#include "ncat/reflect.hpp"

namespace ncat {

std::string ComposableConfig::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::vertical_triple_of_horizontal_pairs ? "v" : "h") << " j=" << j
     << " i=" << i;
  for (const auto& row : cells) os << " [" << row[0] << "," << row[1] << "]";
  return os.str();
}

bool config_is_valid(const NCat& b, const ComposableConfig& c) {
  if (!(0 <= c.i && c.i < c.j && c.j < b.n)) return false;
  int pl = c.pair_level(), tl = c.triple_level();
  for (const auto& row : c.cells) {
    for (const Cell& g : row)
      if (!b.has_cell(b.n, g)) return false;
    if (!b.composable(b.n, pl, row[1], row[0])) return false;
  }
  for (int r = 0; r + 1 < 3; ++r)
    for (int col = 0; col < 2; ++col)
      if (!b.composable(b.n, tl, c.cells[r + 1][col], c.cells[r][col])) return false;
  return true;
}

std::vector<ComposableConfig> enumerate_configs(const NCat& b) {
  std::vector<ComposableConfig> out;
  std::vector<Cell> top = b.cells[b.n];
  std::sort(top.begin(), top.end());
  for (auto kind : {ComposableConfig::Kind::vertical_triple_of_horizontal_pairs,
                    ComposableConfig::Kind::horizontal_triple_of_vertical_pairs})
    for (int j = 1; j < b.n; ++j)
      for (int i = 0; i < j; ++i) {
        ComposableConfig probe{kind, j, i, {}};
        int pl = probe.pair_level(), tl = probe.triple_level();
        std::vector<std::array<Cell, 2>> rows;
        for (const Cell& g0 : top)
          for (const Cell& g1 : top)
            if (b.composable(b.n, pl, g1, g0)) rows.push_back({g0, g1});
        auto stacks = [&](const std::array<Cell, 2>& lo, const std::array<Cell, 2>& hi) {
          return b.composable(b.n, tl, hi[0], lo[0]) && b.composable(b.n, tl, hi[1], lo[1]);
        };
        for (const auto& r0 : rows)
          for (const auto& r1 : rows) {
            if (!stacks(r0, r1)) continue;
            for (const auto& r2 : rows)
              if (stacks(r1, r2)) out.push_back({kind, j, i, {r0, r1, r2}});
          }
      }
  std::sort(out.begin(), out.end());
  return out;
}

EdmCheck is_edm_sufficient(const NFunctor& f) {
  const NCat& a = f.dom;
  const NCat& b = f.cod;
  const int n = a.n;

  std::map<Cell, std::vector<Cell>> pre;
  for (const Cell& c : a.cells[n]) pre[f.apply(n, c)].push_back(c);

  if (n == 1) {
    for (const Cell& c1 : b.cells[1])
      for (const Cell& c2 : b.cells[1]) {
        if (!b.composable(1, 0, c2, c1)) continue;
        for (const Cell& c3 : b.cells[1]) {
          if (!b.composable(1, 0, c3, c2)) continue;
          bool hit = false;
          for (const Cell& a1 : pre[c1])
            for (const Cell& a2 : pre[c2])
              for (const Cell& a3 : pre[c3])
                if (a.composable(1, 0, a2, a1) && a.composable(1, 0, a3, a2)) hit = true;
          if (!hit) {
            ComposableConfig w;
            w.j = w.i = 0;
            w.cells = {{{c1, c1}, {c2, c2}, {c3, c3}}};
            return {false, w};
          }
        }
      }
    return {true, std::nullopt};
  }

  for (const ComposableConfig& cfg : enumerate_configs(b)) {
    int pl = cfg.pair_level(), tl = cfg.triple_level();
    std::array<std::array<Cell, 2>, 3> cand;
    // Backtracking over the six slots in row-major order.
    std::function<bool(int)> place = [&](int slot) -> bool {
      if (slot == 6) return true;
      int r = slot / 2, col = slot % 2;
      auto it = pre.find(cfg.cells[r][col]);
      if (it == pre.end()) return false;
      for (const Cell& c : it->second) {
        if (col == 1 && !a.composable(n, pl, c, cand[r][0])) continue;
        if (r > 0 && !a.composable(n, tl, c, cand[r - 1][col])) continue;
        cand[r][col] = c;
        if (place(slot + 1)) return true;
      }
      return false;
    };
    if (!place(0)) return {false, cfg};
  }
  return {true, std::nullopt};
}

namespace {

using Rel = std::pair<Cell, Cell>;

// Worklist closure of the generator relation under reflexivity,
// transitivity and every lower composition.  When `witness_src` is given,
// each derived relation carries the corresponding composite of witnesses
// in that category (first derivation wins).
std::map<Rel, Cell> close_relation(const NCat& sk, const std::vector<std::pair<Rel, Cell>>& gens,
                                   const NCat* witness_src) {
  const int m = sk.n;  // relation lives on level-m cells
  std::map<Rel, Cell> rel;
  std::deque<Rel> work;
  auto add = [&](const Rel& r, const Cell& w) {
    if (rel.emplace(r, w).second) work.push_back(r);
  };

  std::vector<Cell> tops = sk.cells[m];
  std::sort(tops.begin(), tops.end());
  for (const Cell& h : tops)
    add({h, h}, witness_src ? witness_src->idn_of(m + 1, h) : Cell{});
  for (const auto& [r, w] : gens) add(r, w);

  auto derive = [&](const Rel& r1, const Cell& w1, const Rel& r2, const Cell& w2) {
    // r2 after r1 transitively
    if (r1.second == r2.first) {
      Cell w = witness_src ? *witness_src->compose_cells(m + 1, m, w2, w1) : Cell{};
      add({r1.first, r2.second}, w);
    }
    for (int i = 0; i < m; ++i) {
      if (sk.bnd_tgt(m, i, r1.first) != sk.bnd_src(m, i, r2.first)) continue;
      Rel r{*sk.compose_cells(m, i, r2.first, r1.first),
            *sk.compose_cells(m, i, r2.second, r1.second)};
      Cell w = witness_src ? *witness_src->compose_cells(m + 1, i, w2, w1) : Cell{};
      add(r, w);
    }
  };

  while (!work.empty()) {
    Rel r1 = work.front();
    work.pop_front();
    // snapshot: newly derived pairs re-enter via the worklist
    std::vector<std::pair<Rel, Cell>> current(rel.begin(), rel.end());
    for (const auto& [r2, w2] : current) {
      derive(r1, rel.at(r1), r2, w2);
      derive(r2, w2, r1, rel.at(r1));
    }
  }
  return rel;
}

NCat relation_to_ncat(const NCat& sk, const std::map<Rel, Cell>& rel) {
  const int m = sk.n;
  NCat out = sk;
  out.n = m + 1;
  out.cells.resize(m + 2);
  out.src.resize(m + 2);
  out.tgt.resize(m + 2);
  out.idn.resize(m + 2);
  for (const auto& [r, w] : rel) {
    Cell name = pair_name(r.first, r.second);
    out.cells[m + 1].push_back(name);
    out.src[m + 1][name] = r.first;
    out.tgt[m + 1][name] = r.second;
  }
  for (const Cell& h : sk.cells[m]) out.idn[m + 1][h] = pair_name(h, h);
  CompTable& vert = out.comp[{m + 1, m}];
  for (const auto& [r1, w1] : rel)
    for (const auto& [r2, w2] : rel)
      if (r1.second == r2.first)
        vert[{pair_name(r2.first, r2.second), pair_name(r1.first, r1.second)}] =
            pair_name(r1.first, r2.second);
  for (int i = 0; i < m; ++i) {
    CompTable& tab = out.comp[{m + 1, i}];
    for (const auto& [r1, w1] : rel)
      for (const auto& [r2, w2] : rel) {
        if (sk.bnd_tgt(m, i, r1.first) != sk.bnd_src(m, i, r2.first)) continue;
        tab[{pair_name(r2.first, r2.second), pair_name(r1.first, r1.second)}] =
            pair_name(*sk.compose_cells(m, i, r2.first, r1.first),
                      *sk.compose_cells(m, i, r2.second, r1.second));
      }
  }
  return out;
}

// Smallest sub-(n-1)-category of b containing the boundaries of the given
// n-cells: closed under boundaries, identities and all compositions below
// the top level.
NCat span_skeleton(const NCat& b, const std::vector<Cell>& top_cells) {
  const int n = b.n;
  std::vector<std::set<Cell>> keep(n);
  for (const Cell& g : top_cells) {
    keep[n - 1].insert(b.src_of(n, g));
    keep[n - 1].insert(b.tgt_of(n, g));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    auto add = [&](int l, const Cell& c) {
      if (keep[l].insert(c).second) grew = true;
    };
    for (int l = n - 1; l >= 1; --l)
      for (const Cell& c : keep[l]) {
        add(l - 1, b.src_of(l, c));
        add(l - 1, b.tgt_of(l, c));
      }
    for (int l = 0; l + 1 <= n - 1; ++l)
      for (const Cell& c : keep[l]) add(l + 1, b.idn_of(l + 1, c));
    for (int j = 1; j <= n - 1; ++j)
      for (int i = 0; i < j; ++i)
        for (const Cell& g2 : keep[j])
          for (const Cell& g1 : keep[j])
            if (b.composable(j, i, g2, g1)) add(j, *b.compose_cells(j, i, g2, g1));
  }

  NCat sk;
  sk.n = n - 1;
  sk.cells.assign(n, {});
  sk.src.assign(n, {});
  sk.tgt.assign(n, {});
  sk.idn.assign(n, {});
  for (int l = 0; l <= n - 1; ++l) {
    sk.cells[l].assign(keep[l].begin(), keep[l].end());
    if (l >= 1)
      for (const Cell& c : keep[l]) {
        sk.src[l][c] = b.src_of(l, c);
        sk.tgt[l][c] = b.tgt_of(l, c);
      }
  }
  for (int l = 1; l <= n - 1; ++l)
    for (const Cell& c : keep[l - 1]) sk.idn[l][c] = b.idn_of(l, c);
  for (int j = 1; j <= n - 1; ++j)
    for (int i = 0; i < j; ++i) {
      CompTable& tab = sk.comp[{j, i}];
      for (const auto& [args, res] : b.table(j, i))
        if (keep[j].count(args.first) && keep[j].count(args.second)) tab[args] = res;
    }
  return sk;
}

}  // namespace

NCat preorder_closure(const NCat& skeleton, const std::vector<std::pair<Cell, Cell>>& generators) {
  const int m = skeleton.n;
  for (const auto& [h, hp] : generators) {
    if (!skeleton.has_cell(m, h) || !skeleton.has_cell(m, hp))
      throw std::invalid_argument("preorder_closure: generator cell not in skeleton");
    if (m >= 1 && (skeleton.src_of(m, h) != skeleton.src_of(m, hp) ||
                   skeleton.tgt_of(m, h) != skeleton.tgt_of(m, hp)))
      throw std::invalid_argument("preorder_closure: generator pair not parallel");
  }
  std::vector<std::pair<Rel, Cell>> gens;
  for (const auto& g : generators) gens.push_back({g, Cell{}});
  return relation_to_ncat(skeleton, close_relation(skeleton, gens, nullptr));
}

EdmResult build_edm(const NCat& b) {
  const int n = b.n;
  if (n < 2) throw std::invalid_argument("build_edm: requires n >= 2");

  std::vector<NCat> summands;
  std::vector<std::map<Rel, Cell>> witnesses;
  std::vector<NCat> skeletons;
  for (const ComposableConfig& cfg : enumerate_configs(b)) {
    std::vector<Cell> tops;
    for (const auto& row : cfg.cells)
      for (const Cell& g : row) tops.push_back(g);
    NCat sk = span_skeleton(b, tops);
    std::vector<std::pair<Rel, Cell>> gens;
    for (const Cell& g : tops) gens.push_back({{b.src_of(n, g), b.tgt_of(n, g)}, g});
    std::map<Rel, Cell> rel = close_relation(sk, gens, &b);
    summands.push_back(relation_to_ncat(sk, rel));
    witnesses.push_back(std::move(rel));
    skeletons.push_back(std::move(sk));
  }

  CoproductResult cp = coproduct(summands);
  NFunctor p{cp.sum, b, {}};
  p.maps.resize(n + 1);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const NFunctor& inj = cp.injections[k];
    for (int l = 0; l < n; ++l)
      for (const Cell& c : summands[k].cells[l]) p.maps[l][inj.apply(l, c)] = c;
    for (const auto& [r, w] : witnesses[k])
      p.maps[n][inj.apply(n, pair_name(r.first, r.second))] = w;
  }
  return {std::move(cp.sum), std::move(p)};
}

bool verify_stable_units(const NFunctor& f, const NFunctor& g) {
  if (f.cod != g.cod) throw std::invalid_argument("verify_stable_units: cospan mismatch");
  if (!is_npreorder(f.cod).is_npreorder)
    throw std::invalid_argument("verify_stable_units: codomain is not an n-preorder");
  PullbackResult pb = pullback(f, g);
  NCat left = reflect(pb.apex).image;
  NCat right = pullback(reflect_induced(f), reflect_induced(g)).apex;
  return find_isomorphism(left, right).has_value();
}

bool verify_semi_left_exact(const NCat& a, const NFunctor& g) {
  ReflectionResult ra = reflect(a);
  if (g.cod != ra.image)
    throw std::invalid_argument("verify_semi_left_exact: codomain is not I(a)");
  if (!is_npreorder(g.dom).is_npreorder)
    throw std::invalid_argument("verify_semi_left_exact: domain is not an n-preorder");
  PullbackResult pb = pullback(ra.unit, g);
  return functor_is_iso(reflect_induced(pb.p2));
}

bool verify_simple(const NFunctor& f) {
  return functor_is_iso(reflect_induced(reflective_factorize(f).e));
}

}  // namespace ncat
