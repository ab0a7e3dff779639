#include "ncat/suites.hpp"

#include <algorithm>

#include "ncat/descent.hpp"
#include "ncat/enriched.hpp"
#include "ncat/factor.hpp"
#include "ncat/gen.hpp"
#include "ncat/iso.hpp"
#include "ncat/limits.hpp"
#include "ncat/reflect.hpp"

namespace ncat {

bool SuiteReport::ok() const { return failures() == 0; }

int SuiteReport::failures() const {
  int f = 0;
  for (const auto& t : trials)
    if (!t.pass) ++f;
  return f;
}

std::uint64_t trial_seed(std::uint64_t base, int index) {
  // splitmix64 step so nearby (base, index) pairs decorrelate
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t kDiagonalSearchCap = 200000;

std::string axioms_trial(Rng& rng, int n, int size) {
  NCat a = random_ncat(rng, n, size);
  ValidationResult r = validate_ncat(a);
  return r.ok() ? "" : r.to_string();
}

// A random functor into x, built by precomposing canonical constructions.
NFunctor random_functor_into(Rng& rng, const NCat& x, int size) {
  NFunctor f = identity_functor(x);
  int steps = 1 + static_cast<int>(rng.below(2));
  auto fits = [](const NCat& a) {
    for (const auto& lvl : a.cells)
      if (lvl.size() > max_cells_per_level()) return false;
    return true;
  };
  for (int s = 0; s < steps; ++s) {
    switch (rng.below(3)) {
      case 0:
        if (fits(thicken(f.dom))) f = compose(f, thicken_collapse(f.dom));
        break;
      case 1: {
        ProductResult pr = product(f.dom, random_npreorder(rng, x.n, 1 + rng.below(size)));
        if (fits(pr.apex)) f = compose(f, pr.p1);
        break;
      }
      default: {
        Relabeled rl = relabel(rng, f.dom);
        f = compose(f, invert_functor(rl.iso));
        break;
      }
    }
  }
  return f;
}

std::string stable_units_trial(Rng& rng, int n, int size) {
  NCat x = random_npreorder(rng, n, std::max(1, size));
  NFunctor f = random_functor_into(rng, x, size);
  NFunctor g = random_functor_into(rng, x, size);
  if (!verify_stable_units(f, g))
    return "I(AxB over X) not isomorphic to I(A)xI(B) over X";
  return "";
}

std::string check_square(const NFunctor& e, const NFunctor& m, const NFunctor& top,
                         const NFunctor& bottom, const char* label, bool& skipped) {
  if (functor_space_bound(e.cod, m.dom, kDiagonalSearchCap) >= kDiagonalSearchCap) {
    skipped = true;
    return "";
  }
  auto r = fill_diagonal(e, m, top, bottom);
  if (std::holds_alternative<NFunctor>(r)) return "";
  auto& fail = std::get<DiagonalFailure>(r);
  return std::string(label) + ": expected one diagonal, found " +
         std::to_string(fail.diagonals.size());
}

std::string orthogonality_trial(Rng& rng, int n, int size, int* squares_checked) {
  NFunctor f = random_pipeline_functor(rng, n, size);
  Factorization rf = reflective_factorize(f);
  Factorization mf = ml_factorize(f);

  MorphismClass ce = classify(rf.e), cm = classify(rf.m);
  if (!ce.vertical) return "reflective e not vertical: " + ce.vertical_witness.value_or("");
  if (!cm.trivial_covering)
    return "reflective m not a trivial covering: " + cm.trivial_covering_witness.value_or("");
  MorphismClass de = classify(mf.e), dm = classify(mf.m);
  if (!de.stably_vertical)
    return "m-l e not stably vertical: " + de.stably_vertical_witness.value_or("");
  if (!dm.covering) return "m-l m not a covering: " + dm.covering_witness.value_or("");

  if (compose(rf.m, rf.e).maps != f.maps) return "reflective factorization does not recompose";
  if (compose(mf.m, mf.e).maps != f.maps) return "m-l factorization does not recompose";

  struct Square {
    const NFunctor *e, *m, *top, *bottom;
    const char* label;
  };
  Square squares[] = {
      {&rf.e, &rf.m, &rf.e, &rf.m, "reflective (e,m)"},
      {&mf.e, &mf.m, &mf.e, &mf.m, "monotone-light (e,m)"},
      {&mf.e, &rf.m, &rf.e, &mf.m, "mixed (e',m)"},
  };
  for (const Square& s : squares) {
    bool skipped = false;
    std::string err = check_square(*s.e, *s.m, *s.top, *s.bottom, s.label, skipped);
    if (!err.empty()) return err;
    if (!skipped && squares_checked) ++*squares_checked;
  }
  return "";
}

std::string crosscheck_trial(Rng& rng, int n, int size) {
  NCat a = random_ncat(rng, n, size);
  NFunctor u = iterate_reflect(a);
  if (!is_npreorder(u.cod).is_npreorder) return "iterated image is not an n-preorder";
  if (!is_functor_valid(u).ok()) return "iterated unit is not a functor";
  if (!isomorphic(u.cod, reflect(a).image))
    return "iterated image not isomorphic to the direct reflection";
  return "";
}

}  // namespace

SuiteReport run_orthogonality(int n, int size, std::uint64_t seed, int trials,
                              int* squares_checked) {
  SuiteReport rep;
  rep.suite = "orthogonality";
  for (int t = 0; t < trials; ++t) {
    TrialReport tr;
    tr.index = t;
    tr.seed = trial_seed(seed, t);
    Rng rng(tr.seed);
    tr.detail = orthogonality_trial(rng, n, size, squares_checked);
    tr.pass = tr.detail.empty();
    rep.trials.push_back(std::move(tr));
  }
  return rep;
}

SuiteReport run_suite(const std::string& suite, int n, int size, std::uint64_t seed, int trials) {
  SuiteReport rep;
  rep.suite = suite;
  for (int t = 0; t < trials; ++t) {
    TrialReport tr;
    tr.index = t;
    tr.seed = trial_seed(seed, t);
    Rng rng(tr.seed);
    std::string err;
    if (suite == "axioms")
      err = axioms_trial(rng, n, size);
    else if (suite == "stable-units")
      err = stable_units_trial(rng, n, size);
    else if (suite == "orthogonality")
      err = orthogonality_trial(rng, n, size, nullptr);
    else if (suite == "crosscheck")
      err = crosscheck_trial(rng, n, size);
    else
      throw std::invalid_argument("unknown suite: " + suite);
    tr.pass = err.empty();
    tr.detail = std::move(err);
    rep.trials.push_back(std::move(tr));
  }
  return rep;
}

}  // namespace ncat
