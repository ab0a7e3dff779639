#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ncat/gen.hpp"
#include "ncat/iso.hpp"
#include "ncat/limits.hpp"
#include "ncat/reflect.hpp"

using namespace ncat;
using namespace ncat::testfix;

TEST_CASE("n-preorder recognition") {
  CHECK(is_npreorder(walking2()).is_npreorder);
  CHECK(is_npreorder(terminal(3)).is_npreorder);
  auto chk = is_npreorder(parallel2());
  REQUIRE_FALSE(chk.is_npreorder);
  REQUIRE(chk.witness.has_value());
  CHECK(chk.witness->first == "th");
  CHECK(chk.witness->second == "th2");
}

TEST_CASE("reflection collapses exactly the parallel top cells") {
  NCat p = parallel2();
  auto r = reflect(p);
  CHECK(validate_ncat(r.image).ok());
  CHECK(is_npreorder(r.image).is_npreorder);
  CHECK(is_functor_valid(r.unit).ok());
  // class {th, th2} is named by its least member, everything else survives
  std::vector<Cell> got = r.image.cells[2], want = walking2().cells[2];
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(r.unit.apply(2, "th2") == "th");
  CHECK(r.unit.apply(2, "th") == "th");
  CHECK(r.image == walking2());
}

TEST_CASE("reflecting an n-preorder is the identity on the nose") {
  NCat w = walking2();
  auto r = reflect(w);
  CHECK(r.image == w);
  CHECK(r.unit.maps == identity_functor(w).maps);

  Rng rng(7);
  NCat x = random_npreorder(rng, 3, 3);
  auto rx = reflect(x);
  CHECK(rx.image == x);
  CHECK(rx.unit.maps == identity_functor(x).maps);
}

TEST_CASE("induced maps between reflections") {
  NCat w = walking2();
  NFunctor col = thicken_collapse(w);
  NFunctor icol = reflect_induced(col);
  CHECK(is_functor_valid(icol).ok());
  CHECK(icol.dom == reflect(col.dom).image);
  CHECK(icol.cod == reflect(col.cod).image);
  // naturality: I(f) . unit_dom = unit_cod . f
  CHECK(compose(icol, reflect(col.dom).unit).maps ==
        compose(reflect(col.cod).unit, col).maps);
  // collapsing the thickening and reflecting commute, so I(col) is iso
  CHECK(functor_is_iso(icol));
}

TEST_CASE("unit is universal among maps into n-preorders") {
  CHECK(check_unit_universal(parallel2(), walking2()));
  CHECK(check_unit_universal(parallel2(), terminal(2)));
  CHECK(check_unit_universal(thicken(walking2()), discrete(2, 2)));
  Rng rng(11);
  NCat a = random_ncat(rng, 2, 2);
  NCat x = random_npreorder(rng, 2, 2);
  CHECK(check_unit_universal(a, x));
}
