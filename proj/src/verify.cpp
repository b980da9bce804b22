#include "invhom/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "invhom/rng.hpp"

namespace invhom::verify {

namespace {

void fail(CheckResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

SignedPermutation random_based_element(Rng& rng, int points) {
  std::vector<int> sigma(points);
  sigma[0] = 0;
  std::vector<int> rest(points - 1);
  for (int i = 1; i < points; ++i) rest[i - 1] = i;
  for (int i = points - 2; i > 0; --i)
    std::swap(rest[i], rest[rng.range(0, i)]);
  std::vector<bool> labels(points, false);
  for (int i = 1; i < points; ++i) {
    sigma[i] = rest[i - 1];
    labels[i] = rng.coin();
  }
  return SignedPermutation(std::move(sigma), std::move(labels));
}

// Unsigned classical operators, built directly from the definitions; these
// are the right-hand sides of the generator identities.
void expand_into(TensorElement& out, const std::vector<Coeffs>& slots, const Rat& scalar) {
  std::vector<int> idx(slots.size(), 0);
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t pos, const Rat& acc) {
    if (pos == slots.size()) {
      out.add_term(idx, acc);
      return;
    }
    for (std::size_t k = 0; k < slots[pos].size(); ++k) {
      if (slots[pos][k] == 0) continue;
      idx[pos] = static_cast<int>(k);
      rec(pos + 1, acc * slots[pos][k]);
    }
  };
  rec(0, scalar);
}

Coeffs unit_vec(int d, int i) {
  Coeffs v(static_cast<std::size_t>(d));
  v[i] = 1;
  return v;
}

TensorElement plain_rotation(const TensorElement& x) {
  const int n = x.degree();
  TensorElement out(x.ring(), n, x.module_rank(), x.algebra_rank());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<int> nidx(idx.size());
    nidx[0] = idx[n];
    for (int j = 1; j <= n; ++j) nidx[j] = idx[j - 1];
    out.add_term(nidx, c);
  }
  return out;
}

// abar_n (x) abar_{n-1} (x) ... (x) abar_0
TensorElement full_reversal_with_involution(const InvolutiveAlgebra& a, const TensorElement& x) {
  const int n = x.degree();
  TensorElement out(x.ring(), n, a.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<Coeffs> slots(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) slots[j] = a.involve(unit_vec(a.dim(), idx[n - j]));
    expand_into(out, slots, c);
  }
  return out;
}

// mbar (x) abar_n (x) ... (x) abar_1
TensorElement based_reversal_with_involution(const InvolutiveAlgebra& a,
                                             const InvolutiveBimodule& m,
                                             const TensorElement& x) {
  const int n = x.degree();
  TensorElement out(x.ring(), n, m.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<Coeffs> slots(static_cast<std::size_t>(n + 1));
    slots[0] = m.involve(a, unit_vec(m.dim(), idx[0]));
    for (int j = 1; j <= n; ++j) slots[j] = a.involve(unit_vec(a.dim(), idx[n - j + 1]));
    expand_into(out, slots, c);
  }
  return out;
}

std::vector<TensorElement> all_basis_tensors(const Ring& ring, int degree, int module_rank,
                                             int algebra_rank) {
  std::vector<TensorElement> out;
  const long total = tensor_rank(module_rank, algebra_rank, degree);
  for (long code = 0; code < total; ++code)
    out.push_back(TensorElement::basis(
        ring, degree, module_rank, algebra_rank,
        decode_tensor_index(module_rank, algebra_rank, degree, code)));
  return out;
}

std::vector<InvolutiveAlgebra> catalog(int max_dim) {
  std::vector<InvolutiveAlgebra> out;
  for (const auto& name : InvolutiveAlgebra::builtin_names()) {
    InvolutiveAlgebra a = InvolutiveAlgebra::builtin(name, Ring::rationals());
    if (a.dim() <= max_dim) out.push_back(std::move(a));
  }
  out.push_back(InvolutiveAlgebra::builtin("group_c2", Ring::prime_field(2)));
  out.push_back(InvolutiveAlgebra::builtin("dual_numbers_minus", Ring::prime_field(2)));
  return out;
}

}  // namespace

CheckResult dihedral_subgroup(int max_n) {
  CheckResult r{"dihedral-subgroup"};
  for (int n = 0; n <= max_n; ++n) {
    const SignedPermutation id = SignedPermutation::identity(n + 1);
    const SignedPermutation R = SignedPermutation::canonical_r(n);
    const SignedPermutation T = SignedPermutation::canonical_t(n);
    ++r.cases;
    if (!(R.compose(R) == id)) fail(r, "R^2 != 1 at n=" + std::to_string(n));
    if (!(T.power(n + 1) == id)) fail(r, "T^(n+1) != 1 at n=" + std::to_string(n));
    if (!(R.compose(T).compose(R) == T.inverse())) fail(r, "RTR != T^-1 at n=" + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      if (R.image_of(i) != n - i) fail(r, "R does not act by i -> n-i at n=" + std::to_string(n));
    auto sub = enumerate_family(GroupFamily::Dihedral, n);
    if (sub.size() != family_order(GroupFamily::Dihedral, n))
      fail(r, "|<R,T>| != 2(n+1) at n=" + std::to_string(n));
    long based = 0;
    for (const auto& g : sub)
      if (is_member(g, GroupFamily::BasedHyperoctahedral)) ++based;
    if (based != 1) fail(r, "|D meet H+| != 1 at n=" + std::to_string(n));
  }
  if (r.passed)
    r.detail = "relations and subgroup orders hold for n <= " + std::to_string(max_n);
  return r;
}

CheckResult delta_h_decomposition(int max_n, long samples, std::uint64_t seed) {
  CheckResult r{"delta-h"};
  const int exhaustive_n = std::min(max_n, 2);
  for (int n = 0; n <= exhaustive_n && r.passed; ++n)
    for (int m = 0; m <= exhaustive_n && r.passed; ++m) {
      auto homs = enumerate_homs(n + 1, m + 1);
      // reconstruction counts over all (phi, g) pairs at once
      std::map<NCMorphism, long> hits;
      for (const auto& phi : enumerate_monotone(n + 1, m + 1))
        for_each_in_family(GroupFamily::Hyperoctahedral, n,
                           [&](const SignedPermutation& g) {
                             ++hits[embed_delta(phi).compose(embed_group(g))];
                           });
      for (const auto& f : homs) {
        ++r.cases;
        auto [phi, g] = factor_delta_h(f);
        if (!(embed_delta(phi).compose(embed_group(g)) == f)) {
          fail(r, "reconstruction failed for " + f.to_string());
          break;
        }
        auto it = hits.find(f);
        if (it == hits.end() || it->second != 1) {
          fail(r, "non-unique factorization for " + f.to_string());
          break;
        }
      }
    }
  Rng rng(seed);
  for (long s = 0; s < samples && r.passed; ++s) {
    const int n = rng.range(0, max_n), m = rng.range(0, max_n);
    NCMorphism f = random_morphism(rng, n + 1, m + 1);
    ++r.cases;
    auto [phi, g] = factor_delta_h(f);
    if (!(embed_delta(phi).compose(embed_group(g)) == f))
      fail(r, "sampled reconstruction failed for " + f.to_string());
  }
  if (r.passed)
    r.detail = "exhaustive to n,m <= " + std::to_string(exhaustive_n) + ", " +
               std::to_string(samples) + " samples to n <= " + std::to_string(max_n) +
               " (seed " + std::to_string(seed) + ")";
  return r;
}

CheckResult d_hplus_decomposition(int max_n) {
  CheckResult r{"d-hplus"};
  for (int n = 0; n <= max_n && r.passed; ++n) {
    auto dihedral = enumerate_family(GroupFamily::Dihedral, n);
    std::set<SignedPermutation> dihedral_set(dihedral.begin(), dihedral.end());
    auto based = enumerate_family(GroupFamily::BasedHyperoctahedral, n);

    // |D| * |H+| products, counted: uniqueness and coverage in one sweep
    std::map<SignedPermutation, long> products;
    for (const auto& d : dihedral)
      for (const auto& h : based) ++products[d.compose(h)];

    const std::size_t order = family_order(GroupFamily::Hyperoctahedral, n);
    if (dihedral.size() * based.size() != order)
      fail(r, "|D| * |H+| != |H| at n=" + std::to_string(n));
    if (products.size() != order)
      fail(r, "products d.h do not cover H at n=" + std::to_string(n));
    for (const auto& [g, count] : products)
      if (count != 1) {
        fail(r, "non-unique splitting of " + g.to_string() + " at n=" + std::to_string(n));
        break;
      }

    for_each_in_family(GroupFamily::Hyperoctahedral, n, [&](const SignedPermutation& g) {
      ++r.cases;
      if (!r.passed) return;
      auto [d, h] = factor_d_hplus(g);
      if (!(d.compose(h) == g)) fail(r, "reconstruction failed for " + g.to_string());
      if (!dihedral_set.count(d)) fail(r, "dihedral part not in <R,T> for " + g.to_string());
      if (!is_member(h, GroupFamily::BasedHyperoctahedral))
        fail(r, "based part not based for " + g.to_string());
    });
  }
  if (r.passed)
    r.detail = "exhaustive over H_(n+1) for n <= " + std::to_string(max_n) +
               " with counting identity";
  return r;
}

CheckResult reflexive_decomposition(int max_n, long samples, std::uint64_t seed) {
  CheckResult r{"reflexive-decomp"};
  const int exhaustive_n = std::min(max_n, 2);
  const int table_points = std::min(max_n, 3) + 1;
  HomTable table = delta_r_op_homs(table_points);
  auto certified = [&](const NCMorphism& rho) {
    auto it = table.find({rho.source_points(), rho.target_points()});
    if (it == table.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), rho);
  };

  for (int n = 0; n <= exhaustive_n && r.passed; ++n)
    for (int m = 0; m <= exhaustive_n && r.passed; ++m) {
      std::vector<NCMorphism> based;
      for (const auto& f : enumerate_homs(n + 1, m + 1))
        if (f.is_based()) based.push_back(f);

      // coverage + uniqueness of rho . h over the whole hom set, and the
      // counting identity |Hom_IGamma| = |Hom_DeltaR_op| * |H+|
      const auto& rhos = table[{n + 1, m + 1}];
      std::map<NCMorphism, long> products;
      for (const auto& rho : rhos)
        for_each_in_family(GroupFamily::BasedHyperoctahedral, n,
                           [&](const SignedPermutation& h) { ++products[rho.compose(embed_group(h))]; });
      if (rhos.size() * family_order(GroupFamily::BasedHyperoctahedral, n) != based.size())
        fail(r, "counting identity fails at n=" + std::to_string(n) + ", m=" + std::to_string(m));
      if (products.size() != based.size())
        fail(r, "products rho.h do not cover the based homs at n=" + std::to_string(n) +
                    ", m=" + std::to_string(m));
      for (const auto& [f, count] : products)
        if (count != 1) {
          fail(r, "non-unique based factorization of " + f.to_string());
          break;
        }

      for (const auto& f : based) {
        if (!r.passed) break;
        ++r.cases;
        auto [rho, h] = factor_reflexive(f);
        if (!(rho.compose(embed_group(h)) == f)) fail(r, "reconstruction failed for " + f.to_string());
        if (!certified(rho)) fail(r, "rho not in the generated subcategory for " + f.to_string());
        if (!in_delta_r_op(rho)) fail(r, "rho fails the normal-form membership for " + f.to_string());
      }
    }

  Rng rng(seed);
  const int sample_n = std::min(max_n, 3);
  for (long s = 0; s < samples && r.passed; ++s) {
    const int n = rng.range(0, sample_n), m = rng.range(0, sample_n);
    NCMorphism f = random_based_morphism(rng, n + 1, m + 1);
    ++r.cases;
    auto [rho, h] = factor_reflexive(f);
    if (!(rho.compose(embed_group(h)) == f))
      fail(r, "sampled reconstruction failed for " + f.to_string());
    else if (!certified(rho))
      fail(r, "sampled rho not in the generated subcategory for " + f.to_string());
  }
  if (r.passed)
    r.detail = "exhaustive to n,m <= " + std::to_string(exhaustive_n) + ", " +
               std::to_string(samples) + " samples to n <= " + std::to_string(sample_n) +
               " (seed " + std::to_string(seed) + ")";
  return r;
}

CheckResult b_functoriality(int max_n, long samples, std::uint64_t seed) {
  CheckResult r{"b-functoriality"};
  Rng rng(seed);
  for (long s = 0; s < samples && r.passed; ++s) {
    const int a = rng.range(0, max_n), b = rng.range(0, max_n), c = rng.range(0, max_n);
    NCMorphism f1 = random_morphism(rng, a + 1, b + 1);
    NCMorphism f2 = random_morphism(rng, b + 1, c + 1);
    SignedPermutation h = random_based_element(rng, c + 1);
    ++r.cases;
    SignedPermutation lhs = b_module_action(f2.compose(f1), h);
    SignedPermutation rhs = b_module_action(f1, b_module_action(f2, h));
    if (!(lhs == rhs))
      fail(r, "action violates contravariance for f1=" + f1.to_string() +
                  ", f2=" + f2.to_string() + ", h=" + h.to_string());
  }
  if (r.passed)
    r.detail = std::to_string(samples) + " composable pairs, sizes <= " +
               std::to_string(max_n) + " (seed " + std::to_string(seed) + ")";
  return r;
}

CheckResult bar_functoriality(int max_n, long samples, std::uint64_t seed) {
  CheckResult r{"bar-functoriality"};
  std::vector<InvolutiveAlgebra> algebras;
  for (const char* name : {"group_c2", "dual_numbers_minus"})
    for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2)})
      algebras.push_back(InvolutiveAlgebra::builtin(name, ring));

  for (const auto& a : algebras) {
    Rng rng(seed);
    for (long s = 0; s < samples && r.passed; ++s) {
      const int na = rng.range(0, max_n), nb = rng.range(0, max_n), nc = rng.range(0, max_n);
      NCMorphism f = random_morphism(rng, na + 1, nb + 1);
      NCMorphism g = random_morphism(rng, nb + 1, nc + 1);
      NCMorphism gf = g.compose(f);
      ++r.cases;
      for (const auto& x : all_basis_tensors(a.ring(), na, a.dim(), a.dim())) {
        if (!(bar_apply(a, gf, x) == bar_apply(a, g, bar_apply(a, f, x)))) {
          fail(r, "H_A(g.f) != H_A(g).H_A(f) on " + a.name() + " over " + a.ring().name() +
                      " for f=" + f.to_string() + ", g=" + g.to_string());
          break;
        }
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(samples) + " pairs per algebra/ring, sizes <= " +
               std::to_string(max_n) + " (seed " + std::to_string(seed) + ")";
  return r;
}

CheckResult generator_identities(int max_n) {
  CheckResult r{"generator-identities"};
  for (const auto& a : catalog(4)) {
    InvolutiveBimodule m = InvolutiveBimodule::regular(a);
    for (int n = 0; n <= max_n && r.passed; ++n) {
      const SignedPermutation R = SignedPermutation::canonical_r(n);
      const SignedPermutation T = SignedPermutation::canonical_t(n);
      const NCMorphism reflect = embed_reflection(n);
      const NCMorphism based_rev = embed_group(T.compose(R));
      if (!(based_rev == reflect)) {
        fail(r, "embed_group(T.R) != embed_reflection at n=" + std::to_string(n));
        break;
      }
      for (const auto& x : all_basis_tensors(a.ring(), n, a.dim(), a.dim())) {
        ++r.cases;
        if (!(bar_apply(a, embed_group(R), x) == full_reversal_with_involution(a, x)))
          fail(r, "R identity fails on " + a.name() + "/" + a.ring().name() +
                      " at n=" + std::to_string(n));
        if (!(bar_apply(a, embed_group(T), x) == plain_rotation(x)))
          fail(r, "T identity fails on " + a.name() + "/" + a.ring().name() +
                      " at n=" + std::to_string(n));
        if (!(bar_apply(a, based_rev, x) == based_reversal_with_involution(a, m, x)))
          fail(r, "T.R identity fails on " + a.name() + "/" + a.ring().name() +
                      " at n=" + std::to_string(n));
        if (!(based_bar_apply(a, m, reflect, x) == based_reversal_with_involution(a, m, x)))
          fail(r, "reflection restriction fails on " + a.name() + "/" + a.ring().name() +
                      " at n=" + std::to_string(n));
        if (!r.passed) break;
        // faces and degeneracies through the order-map embedding
        if (n >= 1)
          for (int i = 0; i <= n; ++i)
            if (!(based_bar_apply(a, m, face_morphism(n, i), x) == loday_face(a, m, i, x))) {
              fail(r, "face identity fails at i=" + std::to_string(i) + ", n=" + std::to_string(n));
              break;
            }
        for (int j = 0; j <= n && r.passed; ++j)
          if (!(based_bar_apply(a, m, degeneracy_morphism(n, j), x) ==
                loday_degeneracy(a, m, j, x))) {
            fail(r, "degeneracy identity fails at j=" + std::to_string(j) +
                        ", n=" + std::to_string(n));
            break;
          }
      }
    }
  }
  if (r.passed) r.detail = "all builtin algebras, basis tensors to n <= " + std::to_string(max_n);
  return r;
}

CheckResult chain_level_identities(int max_n) {
  CheckResult r{"chain-level"};
  for (const auto& a : catalog(4)) {
    InvolutiveBimodule m = InvolutiveBimodule::regular(a);
    for (int n = 0; n <= max_n && r.passed; ++n) {
      for (const auto& x : all_basis_tensors(a.ring(), n, a.dim(), a.dim())) {
        ++r.cases;
        const TensorElement yx = apply_reflexive(a, m, x);
        if (!(apply_reflexive(a, m, yx) == x))
          fail(r, "y^2 != 1 on " + a.name() + " at n=" + std::to_string(n));
        if (n >= 1) {
          const TensorElement bx = hochschild_boundary(a, m, x);
          if (n >= 2 && !hochschild_boundary(a, m, bx).is_zero())
            fail(r, "b^2 != 0 on " + a.name() + " at n=" + std::to_string(n));
          if (!(hochschild_boundary(a, m, yx) == apply_reflexive(a, m, bx)))
            fail(r, "y is not a chain map on " + a.name() + " at n=" + std::to_string(n));
          // cyclic identities: (1 - t)N = 0 and b(1 - t) = (1 - t)b'
          TensorElement norm(x.ring(), n, a.dim(), a.dim());
          TensorElement power = x;
          for (int i = 0; i <= n; ++i) {
            norm = norm.added(power);
            power = apply_cyclic(a, power);
          }
          if (!(norm.added(apply_cyclic(a, norm).scaled(-1)).is_zero()))
            fail(r, "(1-t)N != 0 on " + a.name() + " at n=" + std::to_string(n));
          const TensorElement one_minus_t = x.added(apply_cyclic(a, x).scaled(-1));
          const TensorElement lhs = hochschild_boundary(a, m, one_minus_t);
          const TensorElement bp = bar_boundary_prime(a, x);
          const TensorElement rhs = bp.added(apply_cyclic(a, bp).scaled(-1));
          if (!(lhs == rhs))
            fail(r, "b(1-t) != (1-t)b' on " + a.name() + " at n=" + std::to_string(n));
        }
        if (!r.passed) break;
      }
    }
  }
  if (r.passed) r.detail = "all builtin algebras, basis tensors to n <= " + std::to_string(max_n);
  return r;
}

std::vector<std::string> selectors() {
  return {"dihedral-subgroup", "delta-h",          "d-hplus",
          "reflexive-decomp",  "b-functoriality",  "bar-functoriality",
          "generator-identities", "all"};
}

bool is_selector(const std::string& name) {
  auto s = selectors();
  return std::find(s.begin(), s.end(), name) != s.end();
}

std::vector<CheckResult> run_selector(const std::string& selector, const SweepConfig& c) {
  std::vector<CheckResult> out;
  auto want = [&](const char* name) { return selector == "all" || selector == name; };
  if (want("dihedral-subgroup")) out.push_back(dihedral_subgroup(std::max(c.max_n, 6)));
  if (want("delta-h")) out.push_back(delta_h_decomposition(c.max_n, c.samples, c.seed));
  if (want("d-hplus")) out.push_back(d_hplus_decomposition(std::min(c.max_n, 4)));
  if (want("reflexive-decomp")) out.push_back(reflexive_decomposition(c.max_n, c.samples, c.seed));
  if (want("b-functoriality"))
    out.push_back(b_functoriality(std::min(c.max_n, 3), c.samples, c.seed));
  if (want("bar-functoriality"))
    out.push_back(bar_functoriality(std::min(c.max_n, 4), c.samples, c.seed));
  if (want("generator-identities")) out.push_back(generator_identities(std::min(c.max_n, 3)));
  if (out.empty()) throw UnknownName("unknown verification selector: " + selector);
  return out;
}

}  // namespace invhom::verify
