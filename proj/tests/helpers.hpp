#ifndef NCAT_TESTS_HELPERS_HPP
#define NCAT_TESTS_HELPERS_HPP

// Hand-built fixtures, written out table by table on purpose: the unit
// tests use them as oracles for the generator- and construction-produced
// values, so they must not share code with the library.

#include "ncat/core.hpp"

namespace ncat::testfix {

inline NCat shell(int n) {
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

// Objects a, b; arrows f, g : a -> b plus identities; one 2-cell th: f => g.
inline NCat walking2() {
  NCat c = shell(2);
  c.cells[0] = {"a", "b"};
  c.cells[1] = {"f", "g", "ia", "ib"};
  c.cells[2] = {"th", "iff", "igg", "iia", "iib"};
  c.src[1] = {{"f", "a"}, {"g", "a"}, {"ia", "a"}, {"ib", "b"}};
  c.tgt[1] = {{"f", "b"}, {"g", "b"}, {"ia", "a"}, {"ib", "b"}};
  c.src[2] = {{"th", "f"}, {"iff", "f"}, {"igg", "g"}, {"iia", "ia"}, {"iib", "ib"}};
  c.tgt[2] = {{"th", "g"}, {"iff", "f"}, {"igg", "g"}, {"iia", "ia"}, {"iib", "ib"}};
  c.idn[1] = {{"a", "ia"}, {"b", "ib"}};
  c.idn[2] = {{"f", "iff"}, {"g", "igg"}, {"ia", "iia"}, {"ib", "iib"}};
  c.comp[{1, 0}] = {{{"ib", "f"}, "f"},   {{"ib", "g"}, "g"},   {{"f", "ia"}, "f"},
                    {{"g", "ia"}, "g"},   {{"ia", "ia"}, "ia"}, {{"ib", "ib"}, "ib"}};
  c.comp[{2, 1}] = {{{"th", "iff"}, "th"},   {{"igg", "th"}, "th"},   {{"iff", "iff"}, "iff"},
                    {{"igg", "igg"}, "igg"}, {{"iia", "iia"}, "iia"}, {{"iib", "iib"}, "iib"}};
  c.comp[{2, 0}] = {{{"iib", "th"}, "th"},   {{"iib", "iff"}, "iff"}, {{"iib", "igg"}, "igg"},
                    {{"th", "iia"}, "th"},   {{"iff", "iia"}, "iff"}, {{"igg", "iia"}, "igg"},
                    {{"iia", "iia"}, "iia"}, {{"iib", "iib"}, "iib"}};
  return c;
}

// walking2 with a second parallel 2-cell th2 : f => g.
inline NCat parallel2() {
  NCat c = walking2();
  c.cells[2].push_back("th2");
  c.src[2]["th2"] = "f";
  c.tgt[2]["th2"] = "g";
  c.comp[{2, 0}][{"iib", "th2"}] = "th2";
  c.comp[{2, 0}][{"th2", "iia"}] = "th2";
  c.comp[{2, 1}][{"th2", "iff"}] = "th2";
  c.comp[{2, 1}][{"igg", "th2"}] = "th2";
  return c;
}

// walking2 without the non-identity 2-cell.
inline NCat parallel_arrows2() {
  NCat c = walking2();
  c.cells[2] = {"iff", "igg", "iia", "iib"};
  c.src[2].erase("th");
  c.tgt[2].erase("th");
  c.comp[{2, 0}].erase({"iib", "th"});
  c.comp[{2, 0}].erase({"th", "iia"});
  c.comp[{2, 1}].erase({"th", "iff"});
  c.comp[{2, 1}].erase({"igg", "th"});
  return c;
}

inline NFunctor make_functor(NCat dom, NCat cod, std::vector<LevelMap> maps) {
  NFunctor f;
  f.dom = std::move(dom);
  f.cod = std::move(cod);
  f.maps = std::move(maps);
  return f;
}

// All level maps identity on the domain's cells, then overridden.
inline NFunctor identity_on_cells_functor(const NCat& dom, const NCat& cod,
                                          const LevelMap& top_override) {
  std::vector<LevelMap> maps(dom.n + 1);
  for (int l = 0; l <= dom.n; ++l)
    for (const Cell& c : dom.cells[l]) maps[l][c] = c;
  for (const auto& [k, v] : top_override) maps[dom.n][k] = v;
  return make_functor(dom, cod, std::move(maps));
}

}  // namespace ncat::testfix

#endif
