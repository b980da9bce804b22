#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "invhom/algebra.hpp"
#include "invhom/factorize.hpp"
#include "invhom/homology.hpp"
#include "invhom/verify.hpp"

namespace {

using namespace invhom;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string morphism;
  bool based = false;
  std::string selector;
  int max_n = 2;
  long samples = 1000;
  std::uint64_t seed = 1;
  std::string theory;
  std::string algebra;
  std::string ring = "Q";
  int degrees = 4;
  std::string format = "human";
};

std::string read_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  std::string text = os.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

int run_factorize(const Options& opt) {
  std::string text = opt.morphism.empty() ? read_stdin() : opt.morphism;
  NCMorphism f = NCMorphism::parse(text);
  const bool machine = opt.format == "machine";

  if (opt.based && !f.is_based())
    throw NotBased("--based requires a morphism with f(0) = 0");

  auto [phi, d, h] = factor_delta_d_hplus(f);
  NCMorphism rebuilt = embed_delta(phi).compose(embed_group(d)).compose(embed_group(h));
  const bool ok = rebuilt == f;

  std::cout << (machine ? "command = factorize\n" : "");
  std::cout << "input = " << f.to_string() << "\n";
  std::cout << "phi = " << phi.to_string() << "\n";
  std::cout << "d = " << d.to_string() << "\n";
  std::cout << "h = " << h.to_string() << "\n";
  if (opt.based) {
    auto [rho, h2] = factor_reflexive(f);
    std::cout << "rho = " << rho.to_string() << "\n";
    std::cout << "rho_in_delta_r_op = " << (in_delta_r_op(rho) ? "true" : "false") << "\n";
  }
  std::cout << "reconstruction = " << (ok ? "ok" : "failed") << "\n";
  return ok ? kExitPass : kExitFail;
}

int run_verify(const Options& opt) {
  if (!verify::is_selector(opt.selector)) {
    std::cerr << "unknown selector '" << opt.selector << "'; expected one of:";
    for (const auto& s : verify::selectors()) std::cerr << " " << s;
    std::cerr << "\n";
    return kExitUsage;
  }
  verify::SweepConfig config{opt.max_n, opt.samples, opt.seed};
  std::cout << "command = verify\n"
            << "selector = " << opt.selector << "\n"
            << "max_n = " << opt.max_n << "\n"
            << "samples = " << opt.samples << "\n"
            << "seed = " << opt.seed << "\n";
  bool all_ok = true;
  for (const auto& r : verify::run_selector(opt.selector, config)) {
    all_ok = all_ok && r.passed;
    std::cout << "check = " << r.name << "\n"
              << "passed = " << (r.passed ? "true" : "false") << "\n"
              << "cases = " << r.cases << "\n"
              << "detail = " << r.detail << "\n";
  }
  std::cout << "result = " << (all_ok ? "pass" : "fail") << "\n";
  return all_ok ? kExitPass : kExitFail;
}

InvolutiveAlgebra load_algebra(const Options& opt) {
  if (opt.algebra.empty()) throw ParseError("--algebra is required (builtin name or file path)");
  if (InvolutiveAlgebra::is_builtin_name(opt.algebra))
    return InvolutiveAlgebra::builtin(opt.algebra, Ring::parse(opt.ring));
  std::ifstream in(opt.algebra);
  if (!in) throw ParseError("cannot open algebra file: " + opt.algebra);
  std::ostringstream os;
  os << in.rdbuf();
  InvolutiveAlgebra a = InvolutiveAlgebra::parse(os.str());
  if (!(Ring::parse(opt.ring) == a.ring()) && opt.ring != "Q")
    throw ParseError("--ring disagrees with the ring declared in " + opt.algebra);
  ValidationReport report = a.validate();
  if (!report.ok()) throw ParseError("algebra fails validation: " + report.to_string());
  return a;
}

int run_homology(const Options& opt) {
  InvolutiveAlgebra a = load_algebra(opt);
  InvolutiveBimodule m = InvolutiveBimodule::regular(a);
  const int N = opt.degrees;
  if (N < 0) throw ParseError("--degrees must be nonnegative");

  std::vector<HomologyGroup> groups;
  if (opt.theory == "hochschild")
    groups = hochschild_homology(a, m, N);
  else if (opt.theory == "reflexive")
    groups = reflexive_homology(a, m, N);
  else if (opt.theory == "cyclic")
    groups = cyclic_homology(a, N);
  else if (opt.theory == "dihedral")
    groups = dihedral_homology_rational(a, N);
  else
    throw ParseError("unknown theory '" + opt.theory +
                     "'; expected hochschild, reflexive, cyclic or dihedral");

  if (opt.format == "machine") {
    std::cout << "command = homology\n"
              << "theory = " << opt.theory << "\n"
              << "algebra = " << (InvolutiveAlgebra::is_builtin_name(opt.algebra) ? opt.algebra
                                                                                  : a.name())
              << "\n"
              << "ring = " << a.ring().name() << "\n"
              << "degrees = " << N << "\n";
    for (int n = 0; n <= N; ++n) {
      std::cout << "degree = " << n << "\n"
                << "free_rank = " << groups[n].free_rank << "\n"
                << "torsion =";
      for (const auto& t : groups[n].torsion) std::cout << " " << t.get_str();
      std::cout << "\n";
    }
  } else {
    for (int n = 0; n <= N; ++n)
      std::cout << "H_" << n << " = " << groups[n].to_string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invhom: factorizations, lemma sweeps and homology tables for "
               "involutive non-commutative sets"};
  app.require_subcommand(1);
  Options opt;

  auto* fac = app.add_subcommand("factorize",
                                 "split a morphism into order-map, dihedral and based parts");
  fac->add_option("morphism", opt.morphism, "morphism text, e.g. '1 -> 0 ; 0: 1- 0+' (stdin if omitted)");
  fac->add_flag("--based", opt.based, "require f(0) = 0 and report the reflexive part");
  fac->add_option("--format", opt.format, "human | machine")->check(CLI::IsMember({"human", "machine"}));

  auto* ver = app.add_subcommand("verify", "run decomposition and functoriality sweeps");
  ver->add_option("selector", opt.selector, "which sweep to run (see --help-selectors)")->required();
  ver->add_option("--max-n", opt.max_n, "largest object index [n] to touch");
  ver->add_option("--samples", opt.samples, "random samples per sweep")->check(CLI::PositiveNumber);
  ver->add_option("--seed", opt.seed, "seed for the deterministic generator");
  ver->add_option("--format", opt.format, "human | machine")->check(CLI::IsMember({"human", "machine"}));

  auto* hom = app.add_subcommand("homology", "print a homology table for an involutive algebra");
  hom->add_option("theory", opt.theory, "hochschild | reflexive | cyclic | dihedral")->required();
  hom->add_option("--algebra", opt.algebra, "builtin name or algebra file path")->required();
  hom->add_option("--ring", opt.ring, "Q | Z | F<p> (builtins only; files declare their ring)");
  hom->add_option("--degrees", opt.degrees, "compute H_0 .. H_N");
  hom->add_option("--format", opt.format, "human | machine")->check(CLI::IsMember({"human", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (fac->parsed()) return run_factorize(opt);
    if (ver->parsed()) return run_verify(opt);
    if (hom->parsed()) return run_homology(opt);
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (lower --max-n)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
