#include "ncat/gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncat/descent.hpp"
#include "ncat/iso.hpp"
#include "ncat/limits.hpp"
#include "ncat/reflect.hpp"

namespace ncat {

std::size_t Rng::below(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(eng);
}

bool Rng::chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(eng) < p; }

namespace {

Cell tower_name(const Cell& c) { return "i(" + c + ")"; }

NCat empty_shell(int n) {
  NCat a;
  a.n = n;
  a.cells.assign(n + 1, {});
  a.src.assign(n + 1, {});
  a.tgt.assign(n + 1, {});
  a.idn.assign(n + 1, {});
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) a.comp[{j, i}];
  return a;
}

}  // namespace

NCat discrete(int n, int k) {
  NCat a = empty_shell(n);
  for (int o = 0; o < k; ++o) a.cells[0].push_back("o" + std::to_string(o));
  for (int l = 1; l <= n; ++l)
    for (const Cell& c : a.cells[l - 1]) {
      Cell t = tower_name(c);
      a.cells[l].push_back(t);
      a.src[l][t] = c;
      a.tgt[l][t] = c;
      a.idn[l][c] = t;
    }
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      CompTable& tab = a.comp[{j, i}];
      for (const Cell& c : a.cells[j]) tab[{c, c}] = c;
    }
  return a;
}

NCat walking_cell(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("walking_cell: need 0 <= k <= n");
  if (k == 0) return discrete(n, 1);

  NCat a = empty_shell(n);
  auto sname = [](int m) { return "s" + std::to_string(m); };
  auto tname = [](int m) { return "t" + std::to_string(m); };

  for (int l = 0; l <= n; ++l) {
    if (l < k) {
      a.cells[l].push_back(sname(l));
      a.cells[l].push_back(tname(l));
      if (l > 0) {
        a.src[l][sname(l)] = sname(l - 1);
        a.tgt[l][sname(l)] = tname(l - 1);
        a.src[l][tname(l)] = sname(l - 1);
        a.tgt[l][tname(l)] = tname(l - 1);
      }
    }
    if (l == k) {
      a.cells[l].push_back("th");
      a.src[l]["th"] = sname(l - 1);
      a.tgt[l]["th"] = tname(l - 1);
    }
    if (l > 0)
      for (const Cell& c : a.cells[l - 1]) {
        Cell t = tower_name(c);
        a.cells[l].push_back(t);
        a.src[l][t] = c;
        a.tgt[l][t] = c;
        a.idn[l][c] = t;
      }
  }

  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      CompTable& tab = a.comp[{j, i}];
      for (const Cell& x : a.cells[j])
        for (const Cell& y : a.cells[j]) {
          if (!a.composable(j, i, y, x)) continue;
          // In the free k-cell one factor is always degenerate at level i.
          bool x_deg = a.idn_tower(i, j, a.bnd_src(j, i, x)) == x;
          bool y_deg = a.idn_tower(i, j, a.bnd_src(j, i, y)) == y;
          if (!x_deg && !y_deg)
            throw std::logic_error("walking_cell: unexpected composable pair");
          tab[{y, x}] = x_deg ? y : x;
        }
    }
  return a;
}

NCat random_npreorder(Rng& rng, int n, int k) {
  NCat a = empty_shell(0);
  for (int o = 0; o < k; ++o) a.cells[0].push_back("o" + std::to_string(o));
  for (int step = 0; step < n; ++step) {
    std::vector<std::pair<Cell, Cell>> candidates;
    const int m = a.n;
    for (const Cell& h : a.cells[m])
      for (const Cell& hp : a.cells[m]) {
        if (h == hp) continue;
        if (m >= 1 && (a.src_of(m, h) != a.src_of(m, hp) || a.tgt_of(m, h) != a.tgt_of(m, hp)))
          continue;
        candidates.emplace_back(h, hp);
      }
    std::shuffle(candidates.begin(), candidates.end(), rng.eng);
    std::size_t want = candidates.empty() ? 0 : rng.below(std::min<std::size_t>(4, candidates.size() + 1));
    NCat next;
    for (;; want = want / 2) {
      std::vector<std::pair<Cell, Cell>> gens(candidates.begin(), candidates.begin() + want);
      next = preorder_closure(a, gens);
      if (next.cells[m + 1].size() <= max_cells_per_level() || want == 0) break;
    }
    a = std::move(next);
  }
  return a;
}

NCat thicken(const NCat& a) {
  const int n = a.n;
  NCat b = a;
  auto primed = [](const Cell& c) { return c + "'"; };
  for (const Cell& c : a.cells[n]) {
    Cell p = primed(c);
    b.cells[n].push_back(p);
    b.src[n][p] = a.src_of(n, c);
    b.tgt[n][p] = a.tgt_of(n, c);
  }
  for (int i = 0; i < n; ++i) {
    CompTable& tab = b.comp[{n, i}];
    for (const auto& [args, res] : a.table(n, i)) {
      tab[{primed(args.first), args.second}] = primed(res);
      tab[{args.first, primed(args.second)}] = primed(res);
      tab[{primed(args.first), primed(args.second)}] = primed(res);
    }
  }
  return b;
}

NFunctor thicken_collapse(const NCat& a) {
  NFunctor f{thicken(a), a, {}};
  f.maps.resize(a.n + 1);
  for (int l = 0; l <= a.n; ++l)
    for (const Cell& c : f.dom.cells[l])
      f.maps[l][c] = (l == a.n && c.back() == '\'') ? c.substr(0, c.size() - 1) : c;
  return f;
}

NCat random_ncat(Rng& rng, int n, int k) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    NCat a;
    switch (rng.below(5)) {
      case 0:
        a = random_npreorder(rng, n, k);
        break;
      case 1:
        a = thicken(random_npreorder(rng, n, k));
        break;
      case 2: {
        NCat x = random_npreorder(rng, n, 1 + rng.below(k));
        NCat y = random_npreorder(rng, n, 1 + rng.below(k));
        a = product(rng.chance(0.5) ? thicken(x) : x, y).apex;
        break;
      }
      case 3: {
        NCat x = random_npreorder(rng, n, 1 + rng.below(k));
        NCat y = rng.chance(0.5) ? thicken(random_npreorder(rng, n, 1 + rng.below(k)))
                                 : discrete(n, 1 + rng.below(k));
        a = coproduct({x, y}).sum;
        break;
      }
      default:
        a = rng.chance(0.5) ? walking_cell(n, 1 + rng.below(n)) : discrete(n, 1 + rng.below(k));
        break;
    }
    bool small = true;
    for (const auto& lvl : a.cells) small = small && lvl.size() <= max_cells_per_level();
    if (small) return a;
  }
  return discrete(n, 1);
}

bool loop_free(const NCat& a) {
  for (int l = 0; l < a.n; ++l) {
    std::map<Cell, std::vector<Cell>> adj;
    for (const Cell& e : a.cells[l + 1])
      if (!a.is_identity_cell(l + 1, e)) adj[a.src_of(l + 1, e)].push_back(a.tgt_of(l + 1, e));
    std::map<Cell, int> state;  // 0 new, 1 open, 2 done
    std::function<bool(const Cell&)> dfs = [&](const Cell& v) -> bool {
      state[v] = 1;
      for (const Cell& w : adj[v]) {
        if (state[w] == 1) return false;
        if (state[w] == 0 && !dfs(w)) return false;
      }
      state[v] = 2;
      return true;
    };
    for (const Cell& v : a.cells[l])
      if (state[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

std::optional<NCat> duplicate_parallel(Rng& rng, const NCat& a) {
  const int n = a.n;
  std::vector<Cell> eligible;
  for (const Cell& c : a.cells[n]) {
    if (a.is_identity_cell(n, c)) continue;
    bool endo = false;
    for (int i = 0; i < n; ++i)
      if (a.bnd_src(n, i, c) == a.bnd_tgt(n, i, c)) endo = true;
    if (!endo) eligible.push_back(c);
  }
  if (eligible.empty()) return std::nullopt;
  std::sort(eligible.begin(), eligible.end());
  Cell c = eligible[rng.below(eligible.size())];
  Cell copy = c + "~";

  NCat b = a;
  b.cells[n].push_back(copy);
  b.src[n][copy] = a.src_of(n, c);
  b.tgt[n][copy] = a.tgt_of(n, c);
  for (int i = 0; i < n; ++i) {
    CompTable& tab = b.comp[{n, i}];
    for (const auto& [args, res] : a.table(n, i)) {
      // A composite with an identity tower tracks the copy; any other
      // composite lands back on the original's value.
      if (args.second == c) {
        bool later_degenerate = a.idn_tower(i, n, a.bnd_src(n, i, args.first)) == args.first;
        tab[{args.first, copy}] = later_degenerate ? copy : res;
      }
      if (args.first == c) {
        bool earlier_degenerate = a.idn_tower(i, n, a.bnd_src(n, i, args.second)) == args.second;
        tab[{copy, args.second}] = earlier_degenerate ? copy : res;
      }
    }
  }
  if (!validate_ncat(b).ok() || !loop_free(b)) return std::nullopt;
  return b;
}

NCat random_loopfree(Rng& rng, int n, int k) {
  NCat a = discrete(n, 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    NCat cand = random_npreorder(rng, n, k);
    if (loop_free(cand)) {
      a = std::move(cand);
      break;
    }
  }
  int dups = static_cast<int>(rng.below(3));
  for (int d = 0; d < dups; ++d) {
    if (a.cells[n].size() + 1 > max_cells_per_level()) break;
    if (auto b = duplicate_parallel(rng, a)) a = std::move(*b);
  }
  return a;
}

Relabeled relabel(Rng& rng, const NCat& a) {
  std::vector<LevelMap> ren(a.n + 1);
  for (int l = 0; l <= a.n; ++l) {
    std::vector<Cell> order = a.cells[l];
    std::sort(order.begin(), order.end());
    std::shuffle(order.begin(), order.end(), rng.eng);
    for (std::size_t idx = 0; idx < order.size(); ++idx)
      ren[l][order[idx]] = "l" + std::to_string(l) + "c" + std::to_string(idx);
  }
  NCat b = empty_shell(a.n);
  for (int l = 0; l <= a.n; ++l) {
    for (const Cell& c : a.cells[l]) b.cells[l].push_back(ren[l].at(c));
    if (l >= 1)
      for (const Cell& c : a.cells[l]) {
        b.src[l][ren[l].at(c)] = ren[l - 1].at(a.src_of(l, c));
        b.tgt[l][ren[l].at(c)] = ren[l - 1].at(a.tgt_of(l, c));
      }
    if (l >= 1)
      for (const Cell& c : a.cells[l - 1]) b.idn[l][ren[l - 1].at(c)] = ren[l].at(a.idn_of(l, c));
  }
  for (const auto& [ji, tab] : a.comp) {
    CompTable& out = b.comp[ji];
    for (const auto& [args, res] : tab)
      out[{ren[ji.first].at(args.first), ren[ji.first].at(args.second)}] = ren[ji.first].at(res);
  }
  NFunctor iso{a, b, std::move(ren)};
  return {std::move(b), std::move(iso)};
}

std::optional<NFunctor> random_functor(Rng& rng, const NCat& a, const NCat& b, std::size_t) {
  // Randomize the lexicographic backtracking by searching between shuffled
  // relabelings and transporting the result back.
  Relabeled ra = relabel(rng, a);
  Relabeled rb = relabel(rng, b);
  std::optional<NFunctor> hit;
  enumerate_functors(ra.cat, rb.cat, [&](const NFunctor& f) {
    hit = f;
    return false;
  });
  if (!hit) return std::nullopt;
  return compose(invert_functor(rb.iso), compose(*hit, ra.iso));
}

NFunctor random_pipeline_functor(Rng& rng, int n, int k) {
  NFunctor f = identity_functor(random_ncat(rng, n, k));
  int steps = 1 + static_cast<int>(rng.below(3));
  auto fits = [](const NCat& a) {
    for (const auto& lvl : a.cells)
      if (lvl.size() > max_cells_per_level()) return false;
    return true;
  };
  for (int s = 0; s < steps; ++s) {
    switch (rng.below(6)) {
      case 0:
        f = compose(reflect(f.cod).unit, f);
        break;
      case 1:
        f = compose(unique_to_terminal(f.cod), f);
        break;
      case 2: {
        NCat extra = discrete(n, 1 + rng.below(k));
        CoproductResult cp = coproduct({f.cod, extra});
        if (fits(cp.sum)) f = compose(cp.injections[0], f);
        break;
      }
      case 3:
        if (fits(thicken(f.dom))) f = compose(f, thicken_collapse(f.dom));
        break;
      case 4: {
        NCat extra = random_npreorder(rng, n, 1 + rng.below(k));
        ProductResult pr = product(f.dom, extra);
        if (fits(pr.apex)) f = compose(f, pr.p1);
        break;
      }
      default:
        f = compose(relabel(rng, f.cod).iso, f);
        break;
    }
  }
  return f;
}

}  // namespace ncat
