#include "doctest.h"
#include "helpers.hpp"
#include "ncat/core.hpp"
#include "ncat/iso.hpp"

using namespace ncat;
using namespace ncat::testfix;

TEST_CASE("hand-built fixtures satisfy every law") {
  CHECK(validate_ncat(walking2()).ok());
  CHECK(validate_ncat(parallel2()).ok());
  CHECK(validate_ncat(parallel_arrows2()).ok());
}

TEST_CASE("boundary and identity helpers") {
  NCat c = walking2();
  CHECK(c.bnd_src(2, 0, "th") == "a");
  CHECK(c.bnd_tgt(2, 0, "th") == "b");
  CHECK(c.bnd_src(2, 1, "th") == "f");
  CHECK(c.bnd_src(2, 2, "th") == "th");
  CHECK(c.idn_tower(0, 2, "a") == "iia");
  CHECK(c.idn_tower(1, 1, "f") == "f");
  CHECK(c.is_identity_cell(2, "iia"));
  CHECK(c.is_identity_cell(2, "iff"));
  CHECK_FALSE(c.is_identity_cell(2, "th"));
  CHECK_FALSE(c.is_identity_cell(1, "f"));
  CHECK(c.hom("f", "g") == std::vector<Cell>{"th"});
  CHECK(c.hom("g", "f").empty());
  CHECK(c.hom_at(1, "a", "b") == std::vector<Cell>{"f", "g"});
}

TEST_CASE("composition accessors") {
  NCat c = walking2();
  CHECK(c.composable(2, 0, "iib", "th"));
  CHECK_FALSE(c.composable(2, 0, "th", "iib"));
  CHECK(c.compose_cells(2, 1, "igg", "th") == Cell{"th"});
  CHECK(c.compose_cells(2, 1, "th", "igg") == std::nullopt);
}

TEST_CASE("validator pinpoints the broken law") {
  auto law_of = [](const NCat& c) {
    auto v = validate_ncat(c);
    REQUIRE_FALSE(v.ok());
    return v.violation->law;
  };

  // retargeting a 2-cell invalidates comp pairs before globularity is read
  NCat c = walking2();
  c.src[2]["th"] = "ia";
  CHECK(law_of(c) == "comp-domain");

  // non-parallel boundaries with the comp tables patched up by hand
  c = shell(2);
  c.cells[0] = {"a", "b"};
  c.cells[1] = {"f", "ia", "ib"};
  c.cells[2] = {"iff", "iia", "iib", "x"};
  c.src[1] = {{"f", "a"}, {"ia", "a"}, {"ib", "b"}};
  c.tgt[1] = {{"f", "b"}, {"ia", "a"}, {"ib", "b"}};
  c.idn[1] = {{"a", "ia"}, {"b", "ib"}};
  c.src[2] = {{"iff", "f"}, {"iia", "ia"}, {"iib", "ib"}, {"x", "f"}};
  c.tgt[2] = {{"iff", "f"}, {"iia", "ia"}, {"iib", "ib"}, {"x", "ia"}};
  c.idn[2] = {{"f", "iff"}, {"ia", "iia"}, {"ib", "iib"}};
  c.comp[{1, 0}] = {{{"ib", "f"}, "f"}, {{"f", "ia"}, "f"}, {{"ia", "ia"}, "ia"},
                    {{"ib", "ib"}, "ib"}};
  c.comp[{2, 1}] = {{{"iff", "iff"}, "iff"}, {{"iia", "iia"}, "iia"}, {{"iib", "iib"}, "iib"},
                    {{"x", "iff"}, "x"},     {{"iia", "x"}, "x"}};
  c.comp[{2, 0}] = {{{"iib", "iff"}, "iff"}, {{"iff", "iia"}, "iff"}, {{"iia", "iia"}, "iia"},
                    {{"iib", "iib"}, "iib"}, {{"x", "iia"}, "x"},     {{"iia", "x"}, "x"},
                    {{"x", "x"}, "x"},       {{"iff", "x"}, "iff"}};
  CHECK(law_of(c) == "globularity");

  c = walking2();
  c.comp[{1, 0}].erase({"ib", "f"});
  CHECK(law_of(c) == "comp-domain");

  c = walking2();
  c.comp[{1, 0}][{"f", "ib"}] = "f";  // not a composable pair
  CHECK(law_of(c) == "comp-domain");

  c = walking2();
  c.comp[{1, 0}][{"ib", "f"}] = "g";
  CHECK(law_of(c) == "unit");

  c = walking2();
  c.idn[1]["a"] = "ib";
  CHECK(law_of(c) == "identity-boundaries");

  c = walking2();
  c.comp[{2, 0}][{"iib", "th"}] = "iff";  // wrong target
  CHECK(law_of(c) == "unit");

  c = parallel2();
  c.comp[{2, 1}][{"igg", "th"}] = "th2";
  CHECK(law_of(c) == "unit");

  c = walking2();
  c.cells[2].push_back("th");  // duplicate name
  CHECK(law_of(c) == "structure");

  c = walking2();
  c.src[2].erase("th");
  CHECK(law_of(c) == "structure");
}

TEST_CASE("functor validation") {
  NCat w = walking2();
  NCat p = parallel2();

  NFunctor id = identity_functor(w);
  CHECK(is_functor_valid(id).ok());
  CHECK(functor_is_iso(id));

  // collapse th2 onto th: the only nontrivial endofunctor source
  NFunctor col = identity_on_cells_functor(p, w, {{"th2", "th"}});
  CHECK(is_functor_valid(col).ok());
  CHECK_FALSE(functor_is_iso(col));

  NFunctor gf = compose(col, identity_functor(p));
  CHECK(gf.maps == col.maps);
  CHECK(is_functor_valid(gf).ok());

  // boundary-breaking assignment: th (f => g) onto igg (g => g)
  NFunctor bad = identity_on_cells_functor(w, w, {{"th", "igg"}});
  auto v = is_functor_valid(bad);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violation->law == "src-preservation");

  // composition-breaking assignment needs parallel room: send th to th2
  NFunctor notid = identity_on_cells_functor(p, p, {{"th", "th2"}, {"th2", "th"}});
  CHECK(is_functor_valid(notid).ok());
  CHECK(functor_is_iso(notid));
  NFunctor back = invert_functor(notid);
  CHECK(compose(back, notid).maps == identity_functor(p).maps);
}

TEST_CASE("functor enumeration and isomorphism search") {
  NCat w = walking2();
  NCat p = parallel2();

  auto into_p = all_functors(w, p);
  for (const auto& f : into_p) CHECK(is_functor_valid(f).ok());
  // object maps with hom room: every functor is determined by where th
  // goes once objects and arrows are fixed; count is small and stable
  CHECK(into_p.size() >= 2);

  CHECK(isomorphic(w, w));
  CHECK_FALSE(isomorphic(w, p));
  auto iso = find_isomorphism(p, p);
  REQUIRE(iso.has_value());
  CHECK(functor_is_iso(iso->forward));
  CHECK(compose(iso->backward, iso->forward).maps == identity_functor(p).maps);

  CHECK(functor_space_bound(w, p, 1000) >= into_p.size());
}
