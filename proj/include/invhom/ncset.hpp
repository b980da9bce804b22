#pragma once

#include <string>
#include <vector>

#include "invhom/errors.hpp"
#include "invhom/groups.hpp"
#include "invhom/rng.hpp"

namespace invhom {

// One point of a totally ordered C2-labeled preimage: a source element
// together with its label (flip = true encodes the label t).
struct LabeledPoint {
  int element = 0;
  bool flip = false;
  bool operator==(const LabeledPoint&) const = default;
  auto operator<=>(const LabeledPoint&) const = default;
};

// A preimage list in its total order.
using LabeledPreimage = std::vector<LabeledPoint>;

// The C2 action on ordered labeled sets: acting by t inverts the ordering
// and multiplies every label by t; acting by 1 does nothing.
LabeledPreimage star_action(bool t_acts, const LabeledPreimage& p);

// An order-preserving map between the sets {0..n} and {0..m}, kept as the
// list of images. Used for the simplicial part of factorizations.
struct OrderMap {
  int target_points = 0;
  std::vector<int> image;

  OrderMap() = default;
  OrderMap(std::vector<int> image, int target_points);
  static OrderMap identity(int points);

  int source_points() const { return static_cast<int>(image.size()); }
  bool is_identity() const;
  OrderMap compose(const OrderMap& rhs) const;  // this after rhs
  bool operator==(const OrderMap&) const = default;
  std::string to_string() const;
};

std::vector<OrderMap> enumerate_monotone(int source_points, int target_points);

// A morphism of the category of involutive non-commutative sets: a map of
// finite sets [n] -> [m] whose point preimages are totally ordered and
// C2-labeled. The preimages are the single source of truth; the underlying
// map is derived from them.
class NCMorphism {
 public:
  // Preimages indexed by target point; they must partition {0..source_points-1}.
  NCMorphism(int source_points, int target_points, std::vector<LabeledPreimage> preimages);

  static NCMorphism identity(int points);

  int source_points() const { return source_points_; }
  int target_points() const { return static_cast<int>(preimages_.size()); }
  int source_index() const { return source_points_ - 1; }   // the n of [n]
  int target_index() const { return target_points() - 1; }  // the m of [m]

  const LabeledPreimage& preimage(int i) const;
  const std::vector<LabeledPreimage>& preimages() const { return preimages_; }

  // Underlying map and the label carried by a source point.
  int map(int j) const;
  bool flip(int j) const;

  NCMorphism compose(const NCMorphism& rhs) const;  // this after rhs
  bool is_based() const { return map(0) == 0; }

  bool operator==(const NCMorphism&) const = default;
  bool operator<(const NCMorphism& rhs) const;

  // Textual format, e.g. "1 -> 0 ; 0: 1- 0+". Empty preimages print as ".".
  std::string to_string() const;
  static NCMorphism parse(const std::string& text);

 private:
  int source_points_ = 0;
  std::vector<LabeledPreimage> preimages_;
  std::vector<int> target_of_;  // derived: target_of_[j] = f(j)
  std::vector<bool> flip_of_;
};

enum class CategoryTag { Fas, IFas, GammaAs, IGammaAs, Delta, DeltaR_op };

std::string category_name(CategoryTag tag);

// Membership predicates for the categories of (involutive, based)
// non-commutative sets. DeltaR_op is decided through the factorization
// machinery (see factorize.hpp).
bool is_in(const NCMorphism& f, CategoryTag tag);

// The subgroup elements of H_{n+1} as bijective morphisms: the preimage of i
// is the singleton {sigma^-1(i)} labeled z_i, matching the signed-point
// action, so that embed_group(g.compose(h)) = embed_group(g).compose(embed_group(h)).
NCMorphism embed_group(const SignedPermutation& g);

// Order-preserving maps with increasing, identity-labeled preimages.
NCMorphism embed_delta(const OrderMap& phi);

// The reflection generator of the based reflexive subcategory: the preimage
// of 0 is {0^t} and the preimage of i > 0 is {(n-i+1)^t}.
NCMorphism embed_reflection(int n);

// The simplicial generators realized as based morphisms [n] -> [n-1] and
// [n] -> [n+1]. face_morphism(n, i) merges i and i+1 for i < n; the last
// face wraps, sending its preimage of 0 to the ordered pair (n, 0).
// degeneracy_morphism(n, j) leaves the preimage of j+1 empty.
NCMorphism face_morphism(int n, int i);
NCMorphism degeneracy_morphism(int n, int j);

// All morphisms [n] -> [m]; throws CapExceeded beyond the cap.
std::vector<NCMorphism> enumerate_homs(int source_points, int target_points,
                                       std::size_t cap = 4'000'000);
std::size_t hom_count(int source_points, int target_points);

NCMorphism random_morphism(Rng& rng, int source_points, int target_points);
NCMorphism random_based_morphism(Rng& rng, int source_points, int target_points);

}  // namespace invhom
