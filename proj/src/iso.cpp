#include "ncat/iso.hpp"

#include <algorithm>
#include <set>

namespace ncat {

namespace {

// Boundary-incidence signature used to prune the isomorphism search: an
// iso must match identity-flags and the counts of higher cells hanging
// off a cell by iterated src/tgt.
std::vector<int> degree_signature(const NCat& a, int level, const Cell& c) {
  std::vector<int> sig;
  sig.push_back(a.is_identity_cell(level, c) ? 1 : 0);
  for (int m = level + 1; m <= a.n; ++m) {
    int ins = 0, outs = 0;
    for (const Cell& x : a.cells[static_cast<std::size_t>(m)]) {
      if (a.bnd_src(m, level, x) == c) ++outs;
      if (a.bnd_tgt(m, level, x) == c) ++ins;
    }
    sig.push_back(outs);
    sig.push_back(ins);
  }
  return sig;
}

struct Search {
  const NCat& a;
  const NCat& b;
  const std::function<bool(const NFunctor&)>& visit;
  bool bijective;
  bool stopped = false;

  NFunctor f;
  std::vector<std::set<Cell>> used;  // per level, bijective mode only
  std::map<std::pair<int, Cell>, std::vector<int>> sig_a, sig_b;

  const std::vector<int>& sig(const NCat& n, std::map<std::pair<int, Cell>, std::vector<int>>& m,
                              int level, const Cell& c) {
    auto it = m.find({level, c});
    if (it == m.end()) it = m.emplace(std::pair{level, c}, degree_signature(n, level, c)).first;
    return it->second;
  }

  bool comp_preserved_at(int level) {
    for (int i = 0; i < level; ++i) {
      const auto& tab = a.table(level, i);
      for (const auto& [gf, h] : tab) {
        auto img = b.compose_cells(level, i, f.apply(level, gf.first), f.apply(level, gf.second));
        if (!img || *img != f.apply(level, h)) return false;
      }
    }
    return true;
  }

  void assign(int level, std::size_t pos) {
    if (stopped) return;
    const auto& dom_cells = a.cells[static_cast<std::size_t>(level)];
    if (pos == dom_cells.size()) {
      if (!comp_preserved_at(level)) return;
      if (level == a.n) {
        if (!visit(f)) stopped = true;
        return;
      }
      assign(level + 1, 0);
      return;
    }
    const Cell& x = dom_cells[pos];
    auto& lm = f.maps[static_cast<std::size_t>(level)];

    auto try_candidate = [&](const Cell& y) {
      if (bijective && used[static_cast<std::size_t>(level)].count(y)) return;
      if (level >= 1) {
        if (b.src_of(level, y) != f.apply(level - 1, a.src_of(level, x))) return;
        if (b.tgt_of(level, y) != f.apply(level - 1, a.tgt_of(level, x))) return;
      }
      if (bijective && sig(a, sig_a, level, x) != sig(b, sig_b, level, y)) return;
      lm[x] = y;
      if (bijective) used[static_cast<std::size_t>(level)].insert(y);
      assign(level, pos + 1);
      if (bijective) used[static_cast<std::size_t>(level)].erase(y);
      lm.erase(x);
    };

    // Images of identity cells are forced.
    if (level >= 1) {
      for (const auto& [below, up] : a.idn[static_cast<std::size_t>(level)]) {
        if (up == x) {
          try_candidate(b.idn_of(level, f.apply(level - 1, below)));
          return;
        }
      }
    }
    for (const Cell& y : b.cells[static_cast<std::size_t>(level)]) {
      try_candidate(y);
      if (stopped) return;
    }
  }
};

}  // namespace

void enumerate_functors(const NCat& a, const NCat& b,
                        const std::function<bool(const NFunctor&)>& visit, bool bijective) {
  if (a.n != b.n) return;
  if (bijective) {
    for (int l = 0; l <= a.n; ++l)
      if (a.cells[static_cast<std::size_t>(l)].size() != b.cells[static_cast<std::size_t>(l)].size())
        return;
  }
  Search s{a, b, visit, bijective, false, {}, {}, {}, {}};
  s.f.dom = a;
  s.f.cod = b;
  s.f.maps.resize(static_cast<std::size_t>(a.n) + 1);
  s.used.resize(static_cast<std::size_t>(a.n) + 1);
  s.assign(0, 0);
}

std::vector<NFunctor> all_functors(const NCat& a, const NCat& b, std::size_t limit) {
  std::vector<NFunctor> out;
  enumerate_functors(a, b, [&](const NFunctor& f) {
    out.push_back(f);
    return out.size() < limit;
  });
  return out;
}

std::uint64_t functor_space_bound(const NCat& a, const NCat& b, std::uint64_t cap) {
  // Non-identity cells are free choices at worst; identities are forced.
  std::uint64_t total = 1;
  for (int l = 0; l <= a.n; ++l) {
    std::uint64_t base = std::max<std::uint64_t>(1, b.cells[static_cast<std::size_t>(l)].size());
    for (const Cell& c : a.cells[static_cast<std::size_t>(l)]) {
      if (a.is_identity_cell(l, c)) continue;
      if (total > cap / base) return cap;
      total *= base;
    }
  }
  return total;
}

std::optional<IsoWitness> find_isomorphism(const NCat& a, const NCat& b) {
  std::optional<IsoWitness> found;
  enumerate_functors(a, b,
                     [&](const NFunctor& f) {
                       found = IsoWitness{f, invert_functor(f)};
                       return false;
                     },
                     /*bijective=*/true);
  return found;
}

bool isomorphic(const NCat& a, const NCat& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace ncat
