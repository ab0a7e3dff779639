#include "doctest.h"
#include "helpers.hpp"
#include "ncat/enriched.hpp"
#include "ncat/gen.hpp"
#include "ncat/iso.hpp"
#include "ncat/limits.hpp"

using namespace ncat;
using namespace ncat::testfix;

TEST_CASE("to_enriched exposes the hom 1-categories") {
  NCat w = walking2();
  VCat v = to_enriched(w);
  CHECK(v.dim == 1);
  CHECK(v.objects == std::vector<Cell>{"a", "b"});
  CHECK(vcat_validate(v).ok);
  const NCat& hab = v.hom_of("a", "b");
  CHECK(hab.cells[0] == std::vector<Cell>{"f", "g"});
  CHECK(hab.cells[1].size() == 3);  // th and the two identities
  const NCat& haa = v.hom_of("a", "a");
  CHECK(haa.cells[0] == std::vector<Cell>{"ia"});
  // identity element picks out ia
  CHECK(v.j.at("a").apply(0, "*") == "ia");
}

TEST_CASE("from_enriched inverts to_enriched up to isomorphism") {
  for (NCat a : {walking2(), parallel2(), thicken(walking2())}) {
    VCat v = to_enriched(a);
    REQUIRE(vcat_validate(v).ok);
    FromEnrichedResult back = from_enriched(v);
    CHECK(validate_ncat(back.cat).ok());
    CHECK(isomorphic(back.cat, a));
  }
  Rng rng(31);
  NCat r = random_ncat(rng, 3, 2);
  CHECK(isomorphic(from_enriched(to_enriched(r)).cat, r));
}

TEST_CASE("enriched functors and isomorphisms") {
  VCat v = to_enriched(parallel2());
  VFunctor id = vcat_identity(v);
  CHECK(is_vfunctor_valid(id).ok());
  CHECK(vfunctor_is_iso(id));
  CHECK(vcompose(id, id) == id);
  VFunctor inv = invert_vfunctor(id);
  CHECK(inv == id);

  bool saw_identity = false;
  int count = 0;
  enumerate_vfunctors(v, v, [&](const VFunctor& f) {
    CHECK(is_vfunctor_valid(f).ok());
    if (f == id) saw_identity = true;
    ++count;
    return true;
  });
  CHECK(saw_identity);
  CHECK(count >= 2);  // the th/th2 swap gives at least one more

  CHECK(vcat_isomorphic(v, v));
  CHECK_FALSE(vcat_isomorphic(v, to_enriched(walking2())));
}

TEST_CASE("enriched binary product") {
  VCat va = to_enriched(walking2());
  VCat vb = to_enriched(thicken(walking2()));
  VProductResult pr = vcat_product(va, vb);
  CHECK(vcat_validate(pr.prod).ok);
  CHECK(pr.prod.objects.size() == va.objects.size() * vb.objects.size());
  CHECK(is_vfunctor_valid(pr.p1).ok());
  CHECK(is_vfunctor_valid(pr.p2).ok());
  // agrees with the product of the underlying 2-categories
  NCat flat = from_enriched(pr.prod).cat;
  CHECK(isomorphic(flat, product(walking2(), thicken(walking2())).apex));
}

TEST_CASE("base contract of the direct reflection") {
  BaseReflector base = direct_base(1);
  std::vector<NCat> sample = {walking_cell(1, 1), discrete(1, 2), thicken(walking_cell(1, 1))};
  BaseConditionReport rep = check_base_conditions(base, sample);
  CHECK(rep.ok());

  // a broken base: reflect everything onto a freshly named point
  BaseReflector broken;
  broken.dim = 1;
  broken.on_object = [](const NCat& x) {
    NCat z;
    z.n = 1;
    z.cells = {{"z"}, {"i(z)"}};
    z.src = {{}, {{"i(z)", "z"}}};
    z.tgt = z.src;
    z.idn = {{}, {{"z", "i(z)"}}};
    z.comp[{1, 0}] = {{{"i(z)", "i(z)"}, "i(z)"}};
    NFunctor u{x, z, {}};
    u.maps.resize(2);
    for (int l = 0; l <= 1; ++l)
      for (const Cell& c : x.cells[l]) u.maps[l][c] = z.cells[l][0];
    return ReflectionResult{z, u};
  };
  broken.on_morphism = [&broken](const NFunctor& f) {
    NCat z = broken.on_object(f.dom).image;
    NFunctor g{z, z, {}};
    g.maps.resize(2);
    g.maps[0]["z"] = "z";
    g.maps[1]["i(z)"] = "i(z)";
    return g;
  };
  BaseConditionReport bad = check_base_conditions(broken, sample);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.terminal_condition);
}

TEST_CASE("derived homwise reflection matches the direct one") {
  for (NCat a : {parallel2(), thicken(walking2())}) {
    VCat v = to_enriched(a);
    DerivedReflection dr = derive_reflect(v, direct_base(1));
    CHECK(vcat_validate(dr.image).ok);
    CHECK(is_vfunctor_valid(dr.unit).ok());
    NCat flat = from_enriched(dr.image).cat;
    CHECK(isomorphic(flat, reflect(a).image));
  }
}

TEST_CASE("iterated reflection crosschecks against the direct reflection") {
  for (NCat a : {parallel2(), thicken(walking2())}) {
    NFunctor unit = iterate_reflect(a);
    CHECK(is_functor_valid(unit).ok());
    CHECK(unit.dom == a);
    CHECK(is_npreorder(unit.cod).is_npreorder);
    CHECK(isomorphic(unit.cod, reflect(a).image));
  }
  // dimension-1 base case delegates to the direct reflection
  NCat t1 = thicken(walking_cell(1, 1));
  CHECK(iterate_reflect(t1).cod == reflect(t1).image);

  Rng rng(37);
  NCat r = random_ncat(rng, 3, 2);
  CHECK(isomorphic(iterate_reflect(r).cod, reflect(r).image));
}
