#include "ncat/reflect.hpp"

#include <stdexcept>

#include "ncat/iso.hpp"

namespace ncat {

NPreorderCheck is_npreorder(const NCat& a) {
  const auto& top = a.cells[static_cast<std::size_t>(a.n)];
  for (std::size_t x = 0; x < top.size(); ++x) {
    for (std::size_t y = x + 1; y < top.size(); ++y) {
      if (a.src_of(a.n, top[x]) == a.src_of(a.n, top[y]) &&
          a.tgt_of(a.n, top[x]) == a.tgt_of(a.n, top[y]))
        return NPreorderCheck{false, std::pair{top[x], top[y]}};
    }
  }
  return NPreorderCheck{true, std::nullopt};
}

namespace {

// Class representative of an n-cell: the lexicographically least n-cell
// with the same top src/tgt.
LevelMap top_class_map(const NCat& a) {
  LevelMap cls;
  std::map<std::pair<Cell, Cell>, Cell> least;
  for (const Cell& c : a.cells[static_cast<std::size_t>(a.n)]) {
    auto key = std::pair{a.src_of(a.n, c), a.tgt_of(a.n, c)};
    auto it = least.find(key);
    if (it == least.end() || c < it->second) least[key] = c;
  }
  for (const Cell& c : a.cells[static_cast<std::size_t>(a.n)])
    cls[c] = least.at({a.src_of(a.n, c), a.tgt_of(a.n, c)});
  return cls;
}

}  // namespace

ReflectionResult reflect(const NCat& a) {
  const int n = a.n;
  LevelMap cls = top_class_map(a);

  NCat img = a;
  auto& top = img.cells[static_cast<std::size_t>(n)];
  top.clear();
  for (const auto& [c, r] : cls)
    if (c == r) top.push_back(r);

  LevelMap new_src, new_tgt, new_idn;
  for (const Cell& r : top) {
    new_src[r] = a.src_of(n, r);
    new_tgt[r] = a.tgt_of(n, r);
  }
  for (const Cell& c : a.cells[static_cast<std::size_t>(n - 1)])
    new_idn[c] = cls.at(a.idn_of(n, c));
  img.src[static_cast<std::size_t>(n)] = std::move(new_src);
  img.tgt[static_cast<std::size_t>(n)] = std::move(new_tgt);
  img.idn[static_cast<std::size_t>(n)] = std::move(new_idn);

  for (int i = 0; i < n; ++i) {
    CompTable desc;
    for (const auto& [gf, h] : a.table(n, i)) {
      Cell g2 = cls.at(gf.first);
      Cell g1 = cls.at(gf.second);
      Cell hr = cls.at(h);
      auto it = desc.find({g2, g1});
      if (it != desc.end() && it->second != hr)
        throw std::logic_error("reflect: descended composition ill-defined");
      desc[{g2, g1}] = hr;
    }
    img.comp[{n, i}] = std::move(desc);
  }

  NFunctor unit;
  unit.dom = a;
  unit.cod = img;
  unit.maps.resize(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l < n; ++l)
    for (const Cell& c : a.cells[static_cast<std::size_t>(l)])
      unit.maps[static_cast<std::size_t>(l)][c] = c;
  unit.maps[static_cast<std::size_t>(n)] = std::move(cls);
  return ReflectionResult{std::move(img), std::move(unit)};
}

NFunctor reflect_induced(const NFunctor& f) {
  ReflectionResult ra = reflect(f.dom);
  ReflectionResult rb = reflect(f.cod);
  const int n = f.dom.n;
  NFunctor g;
  g.dom = ra.image;
  g.cod = rb.image;
  g.maps.resize(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l < n; ++l) g.maps[static_cast<std::size_t>(l)] = f.maps[static_cast<std::size_t>(l)];
  for (const Cell& r : ra.image.cells[static_cast<std::size_t>(n)])
    g.maps[static_cast<std::size_t>(n)][r] = rb.unit.apply(n, f.apply(n, r));
  return g;
}

bool check_unit_universal(const NCat& a, const NCat& x) {
  if (!is_npreorder(x).is_npreorder)
    throw std::invalid_argument("check_unit_universal: codomain is not an n-preorder");
  ReflectionResult r = reflect(a);
  std::vector<NFunctor> from_image = all_functors(r.image, x);
  bool ok = true;
  enumerate_functors(a, x, [&](const NFunctor& t) {
    std::size_t count = 0;
    for (const NFunctor& u : from_image)
      if (compose(u, r.unit) == t) ++count;
    if (count != 1) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

}  // namespace ncat
