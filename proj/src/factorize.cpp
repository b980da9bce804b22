#include "invhom/factorize.hpp"

#include <set>

namespace invhom {

DeltaHFactorization factor_delta_h(const NCMorphism& f) {
  const int points = f.source_points();
  std::vector<int> sigma(points);
  std::vector<bool> labels(points);
  std::vector<int> phi_image(points);
  int pos = 0;
  for (int i = 0; i < f.target_points(); ++i)
    for (const auto& pt : f.preimage(i)) {
      sigma[pt.element] = pos;
      labels[pos] = pt.flip;
      phi_image[pos] = i;
      ++pos;
    }
  return {OrderMap(std::move(phi_image), f.target_points()),
          SignedPermutation(std::move(sigma), std::move(labels))};
}

DHplusFactorization factor_d_hplus(const SignedPermutation& g) {
  const int points = g.size();
  const int n = points - 1;
  const int k = g.image_of(0);
  SignedPermutation d = SignedPermutation::identity(points);
  std::vector<int> sigma(points);
  std::vector<bool> labels(points);
  if (!g.label(k)) {
    d = SignedPermutation::canonical_t(n).power(k);
    for (int j = 0; j < points; ++j) sigma[j] = (g.image_of(j) - k + points) % points;
    for (int i = 0; i < points; ++i) labels[i] = g.label((k + i) % points);
  } else {
    d = SignedPermutation::canonical_r(n).compose(SignedPermutation::canonical_t(n).power(n - k));
    for (int j = 0; j < points; ++j) sigma[j] = (k - g.image_of(j) + points) % points;
    for (int i = 0; i < points; ++i) labels[i] = !g.label((k - i + points) % points);
  }
  SignedPermutation h(std::move(sigma), std::move(labels));
  if (!is_member(h, GroupFamily::BasedHyperoctahedral) || !(d.compose(h) == g))
    throw Error("dihedral/based splitting failed to reconstruct its input");
  return {std::move(d), std::move(h)};
}

FullFactorization factor_delta_d_hplus(const NCMorphism& f) {
  auto [phi, g] = factor_delta_h(f);
  auto [d, h] = factor_d_hplus(g);
  return {std::move(phi), std::move(d), std::move(h)};
}

ReflexiveFactorization factor_reflexive(const NCMorphism& f) {
  if (!f.is_based()) throw NotBased("factor_reflexive requires f(0) = 0");
  auto [phi, d, h] = factor_delta_d_hplus(f);
  NCMorphism rho = embed_delta(phi).compose(embed_group(d));
  if (!rho.is_based()) throw Error("reflexive part of a based morphism must be based");
  return {std::move(rho), std::move(h)};
}

SignedPermutation b_module_action(const NCMorphism& f, const SignedPermutation& h) {
  if (h.size() != f.target_points())
    throw SizeMismatch("b_module_action: group element size does not match the target");
  if (!is_member(h, GroupFamily::BasedHyperoctahedral))
    throw NotBased("b_module_action expects a based group element");
  return factor_delta_d_hplus(embed_group(h).compose(f)).h;
}

bool in_delta_r_op(const NCMorphism& f) {
  if (!f.is_based()) return false;
  return factor_delta_d_hplus(f).h.is_identity();
}

HomTable delta_r_op_homs(int max_points) {
  std::map<std::pair<int, int>, std::set<NCMorphism>> table;
  auto add = [&](const NCMorphism& m) {
    return table[{m.source_points(), m.target_points()}].insert(m).second;
  };

  std::vector<NCMorphism> worklist;
  auto seed = [&](NCMorphism m) {
    if (add(m)) worklist.push_back(std::move(m));
  };
  for (int points = 1; points <= max_points; ++points) {
    const int n = points - 1;
    seed(NCMorphism::identity(points));
    seed(embed_reflection(n));
    if (points < max_points)
      for (int j = 0; j <= n; ++j) seed(degeneracy_morphism(n, j));
    if (points >= 2)
      for (int i = 0; i <= n; ++i) seed(face_morphism(n, i));
  }

  while (!worklist.empty()) {
    NCMorphism m = std::move(worklist.back());
    worklist.pop_back();
    // compose with everything already found, on both sides
    std::vector<NCMorphism> fresh;
    for (const auto& [key, homs] : table) {
      for (const auto& other : homs) {
        if (other.source_points() == m.target_points()) fresh.push_back(other.compose(m));
        if (m.source_points() == other.target_points()) fresh.push_back(m.compose(other));
      }
    }
    for (auto& c : fresh)
      if (add(c)) worklist.push_back(std::move(c));
  }

  HomTable out;
  for (auto& [key, homs] : table) out[key] = {homs.begin(), homs.end()};
  return out;
}

}  // namespace invhom
