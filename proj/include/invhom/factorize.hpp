#pragma once

#include <map>
#include <utility>
#include <vector>

#include "invhom/groups.hpp"
#include "invhom/ncset.hpp"

namespace invhom {

// Constructive normal forms behind the category decompositions: every
// morphism splits uniquely as an order-preserving map after a group element,
// the group splits as (dihedral) . (based), and for based morphisms the
// leftover order-preserving-plus-dihedral part lands in the reflexive
// subcategory. All factorizations return the outer part first.

struct DeltaHFactorization {
  OrderMap phi;
  SignedPermutation g;
};

struct DHplusFactorization {
  SignedPermutation d;  // in the subgroup generated by R and T
  SignedPermutation h;  // based: h(0) = 0 with trivial label at 0
};

struct FullFactorization {
  OrderMap phi;
  SignedPermutation d;
  SignedPermutation h;
};

struct ReflexiveFactorization {
  NCMorphism rho;  // member of the reflexive subcategory
  SignedPermutation h;
};

// f = embed_delta(phi) . embed_group(g), uniquely. The group element reads
// off the concatenation of the preimages of f in target order.
DeltaHFactorization factor_delta_h(const NCMorphism& f);

// g = d . h with d in <R, T> and h based. Implements the two-case splitting
// at k = sigma(0): if the label carried into slot k is trivial, d is T^k;
// otherwise d = R . T^(n-k) and the remaining labels flip.
DHplusFactorization factor_d_hplus(const SignedPermutation& g);

// The chained normal form f = embed_delta(phi) . embed_group(d) . embed_group(h).
FullFactorization factor_delta_d_hplus(const NCMorphism& f);

// For based f: f = rho . embed_group(h) with rho = embed_delta(phi) . embed_group(d)
// again based. Throws NotBased when f(0) != 0.
ReflexiveFactorization factor_reflexive(const NCMorphism& f);

// Right action of a morphism f: [n] -> [m] on based group elements: compose
// embed_group(h) with f and project onto the based component of the normal
// form. The projection step realizes "determined by pre-composition": the
// composite leaves the groupoid, and the unique factorization puts it back.
// Extends k-linearly to the free module on H+_{m+1}.
SignedPermutation b_module_action(const NCMorphism& f, const SignedPermutation& h);

// Membership in the reflexive subcategory, decided via the normal form:
// based with trivial based-group part.
bool in_delta_r_op(const NCMorphism& f);

// Hom sets of the reflexive subcategory computed independently of the
// factorization: closure of the face, degeneracy and reflection generators
// under composition through objects with at most max_points points.
// Keyed by (source points, target points).
using HomTable = std::map<std::pair<int, int>, std::vector<NCMorphism>>;
HomTable delta_r_op_homs(int max_points);

}  // namespace invhom
