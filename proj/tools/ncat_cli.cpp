#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncat/core.hpp"
#include "ncat/descent.hpp"
#include "ncat/factor.hpp"
#include "ncat/io.hpp"
#include "ncat/limits.hpp"
#include "ncat/reflect.hpp"
#include "ncat/suites.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ncat;

void ensure_dir(const std::string& dir) { fs::create_directories(dir); }

int cmd_validate(const std::string& path) {
  ValidationResult r = validate_ncat(read_ncat(path));
  if (r.ok()) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << r.to_string() << "\n";
  return 1;
}

int cmd_reflect(const std::string& path, const std::string& out) {
  ReflectionResult r = reflect(read_ncat(path));
  ensure_dir(out);
  write_ncat((fs::path(out) / "image.ncat").string(), r.image);
  write_nfunctor((fs::path(out) / "unit.nfun").string(), r.unit);
  std::cout << "wrote image.ncat and unit.nfun to " << out << "\n";
  return 0;
}

int cmd_classify(const std::string& path) {
  MorphismClass c = classify(read_nfunctor(path));
  std::cout << c.summary() << "\n";
  auto witness = [](const char* flag, const std::optional<std::string>& w) {
    if (w) std::cout << "  " << flag << ": " << *w << "\n";
  };
  witness("vertical", c.vertical_witness);
  witness("stably_vertical", c.stably_vertical_witness);
  witness("trivial_covering", c.trivial_covering_witness);
  witness("covering", c.covering_witness);
  return 0;
}

int cmd_factor(const std::string& system, const std::string& path, const std::string& out) {
  NFunctor f = read_nfunctor(path);
  Factorization fac = system == "reflective" ? reflective_factorize(f) : ml_factorize(f);
  ensure_dir(out);
  write_nfunctor((fs::path(out) / "e.nfun").string(), fac.e);
  write_ncat((fs::path(out) / "middle.ncat").string(), fac.middle);
  write_nfunctor((fs::path(out) / "m.nfun").string(), fac.m);
  std::cout << "e: " << classify(fac.e).summary() << "\n";
  std::cout << "m: " << classify(fac.m).summary() << "\n";
  bool want = system == "reflective"
                  ? classify(fac.e).vertical && classify(fac.m).trivial_covering
                  : classify(fac.e).stably_vertical && classify(fac.m).covering;
  bool recompose = compose(fac.m, fac.e).maps == f.maps;
  std::cout << "recomposes: " << (recompose ? "true" : "false") << "\n";
  return want && recompose ? 0 : 1;
}

int cmd_pullback(const std::string& fp, const std::string& gp, const std::string& out) {
  PullbackResult pb = pullback(read_nfunctor(fp), read_nfunctor(gp));
  ensure_dir(out);
  write_ncat((fs::path(out) / "apex.ncat").string(), pb.apex);
  write_nfunctor((fs::path(out) / "p1.nfun").string(), pb.p1);
  write_nfunctor((fs::path(out) / "p2.nfun").string(), pb.p2);
  std::cout << "wrote apex.ncat, p1.nfun, p2.nfun to " << out << "\n";
  return 0;
}

int cmd_product(const std::string& ap, const std::string& bp, const std::string& out) {
  ProductResult pr = product(read_ncat(ap), read_ncat(bp));
  ensure_dir(out);
  write_ncat((fs::path(out) / "apex.ncat").string(), pr.apex);
  write_nfunctor((fs::path(out) / "p1.nfun").string(), pr.p1);
  write_nfunctor((fs::path(out) / "p2.nfun").string(), pr.p2);
  std::cout << "wrote apex.ncat, p1.nfun, p2.nfun to " << out << "\n";
  return 0;
}

int cmd_coproduct(const std::vector<std::string>& paths, const std::string& out) {
  std::vector<NCat> summands;
  for (const auto& p : paths) summands.push_back(read_ncat(p));
  CoproductResult cp = coproduct(summands);
  ensure_dir(out);
  write_ncat((fs::path(out) / "sum.ncat").string(), cp.sum);
  for (std::size_t k = 0; k < cp.injections.size(); ++k)
    write_nfunctor((fs::path(out) / ("in" + std::to_string(k) + ".nfun")).string(),
                   cp.injections[k]);
  std::cout << "wrote sum.ncat and " << cp.injections.size() << " injections to " << out << "\n";
  return 0;
}

int cmd_edm(const std::string& path, const std::string& out) {
  NCat b = read_ncat(path);
  EdmResult r = build_edm(b);
  ensure_dir(out);
  write_ncat((fs::path(out) / "E.ncat").string(), r.e);
  write_nfunctor((fs::path(out) / "p.nfun").string(), r.p);
  EdmCheck c = is_edm_sufficient(r.p);
  std::cout << "is_edm_sufficient: " << (c.sufficient ? "true" : "false") << "\n";
  if (c.missing) std::cout << "missing config: " << c.missing->to_string() << "\n";
  return c.sufficient ? 0 : 1;
}

int cmd_check(const std::string& suite, int n, int size, std::uint64_t seed, int trials) {
  SuiteReport rep = run_suite(suite, n, size, seed, trials);
  for (const auto& t : rep.trials) {
    std::cout << "trial " << t.index << " seed " << t.seed << " "
              << (t.pass ? "pass" : "FAIL") << (t.detail.empty() ? "" : ": " + t.detail)
              << "\n";
  }
  std::cout << rep.suite << ": " << (rep.trials.size() - rep.failures()) << "/"
            << rep.trials.size() << " trials passed\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite n-categories: reflection into n-preorders, factorization systems, "
               "descent constructions"};
  app.require_subcommand(1);

  std::string in1, in2, outdir = ".", system = "reflective", suite;
  std::vector<std::string> inputs;
  int n = 2, size = 3, trials = 20;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check every n-category law");
  validate->add_option("file", in1)->required();

  auto* refl = app.add_subcommand("reflect", "reflection into n-preorders");
  refl->add_option("file", in1)->required();
  refl->add_option("-o,--out", outdir);

  auto* cls = app.add_subcommand("classify", "morphism class flags and witnesses");
  cls->add_option("file", in1)->required();

  auto* fac = app.add_subcommand("factor", "factor through the chosen system");
  fac->add_option("--system", system)->check(CLI::IsMember({"reflective", "ml"}));
  fac->add_option("file", in1)->required();
  fac->add_option("-o,--out", outdir);

  auto* pb = app.add_subcommand("pullback", "pointwise pullback of a cospan");
  pb->add_option("f", in1)->required();
  pb->add_option("g", in2)->required();
  pb->add_option("-o,--out", outdir);

  auto* prod = app.add_subcommand("product", "binary product");
  prod->add_option("a", in1)->required();
  prod->add_option("b", in2)->required();
  prod->add_option("-o,--out", outdir);

  auto* cop = app.add_subcommand("coproduct", "finite coproduct");
  cop->add_option("files", inputs)->required()->expected(-1);
  cop->add_option("-o,--out", outdir);

  auto* edm = app.add_subcommand("edm", "canonical effective-descent construction");
  edm->add_option("file", in1)->required();
  edm->add_option("-o,--out", outdir);

  auto* chk = app.add_subcommand("check", "randomized property suites");
  chk->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"stable-units", "orthogonality", "crosscheck", "axioms"}));
  chk->add_option("--n", n);
  chk->add_option("--size", size);
  chk->add_option("--seed", seed);
  chk->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(in1);
    if (refl->parsed()) return cmd_reflect(in1, outdir);
    if (cls->parsed()) return cmd_classify(in1);
    if (fac->parsed()) return cmd_factor(system, in1, outdir);
    if (pb->parsed()) return cmd_pullback(in1, in2, outdir);
    if (prod->parsed()) return cmd_product(in1, in2, outdir);
    if (cop->parsed()) return cmd_coproduct(inputs, outdir);
    if (edm->parsed()) return cmd_edm(in1, outdir);
    if (chk->parsed()) return cmd_check(suite, n, size, seed, trials);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
