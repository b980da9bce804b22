#include <doctest.h>

#include <map>
#include <set>

#include "invhom/groups.hpp"
#include "invhom/rng.hpp"

using namespace invhom;

namespace {

SignedPermutation make(std::vector<int> sigma, std::vector<bool> labels) {
  return SignedPermutation(std::move(sigma), std::move(labels));
}

// Independent oracle: a signed permutation acts on signed points (i, s) by
// (i, s) -> (sigma(i), s * z_{sigma(i)}); group composition must be function
// composition of these actions.
std::pair<int, bool> act(const SignedPermutation& g, int i, bool s) {
  const int image = g.image_of(i);
  return {image, s != g.label(image)};
}

bool composes_as_actions(const SignedPermutation& g, const SignedPermutation& h) {
  SignedPermutation gh = g.compose(h);
  for (int i = 0; i < g.size(); ++i)
    for (bool s : {false, true}) {
      auto via_h = act(h, i, s);
      auto expected = act(g, via_h.first, via_h.second);
      if (act(gh, i, s) != expected) return false;
    }
  return true;
}

SignedPermutation random_element(Rng& rng, int points) {
  std::vector<int> sigma(points);
  for (int i = 0; i < points; ++i) sigma[i] = i;
  for (int i = points - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.range(0, i)]);
  std::vector<bool> labels(points);
  for (int i = 0; i < points; ++i) labels[i] = rng.coin();
  return make(std::move(sigma), std::move(labels));
}

}  // namespace

TEST_CASE("semidirect product law on the worked example") {
  // (1,1;tau) . (1,t;id) = (t,1;tau) in H_2
  SignedPermutation g = make({1, 0}, {false, false});
  SignedPermutation h = make({0, 1}, {false, true});
  SignedPermutation expected = make({1, 0}, {true, false});
  CHECK(g.compose(h) == expected);
  CHECK(composes_as_actions(g, h));
}

TEST_CASE("composition agrees with the signed-point action oracle") {
  SUBCASE("exhaustive in H_2") {
    auto all = enumerate_family(GroupFamily::Hyperoctahedral, 1);
    REQUIRE(all.size() == 8);
    for (const auto& g : all)
      for (const auto& h : all) CHECK(composes_as_actions(g, h));
  }
  SUBCASE("random pairs in H_3 and H_4") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
      const int points = rng.range(3, 4);
      CHECK(composes_as_actions(random_element(rng, points), random_element(rng, points)));
    }
  }
}

TEST_CASE("identity and inverses") {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    SignedPermutation g = random_element(rng, rng.range(1, 5));
    CHECK(g.compose(SignedPermutation::identity(g.size())) == g);
    CHECK(SignedPermutation::identity(g.size()).compose(g) == g);
    CHECK(g.compose(g.inverse()).is_identity());
    CHECK(g.inverse().compose(g).is_identity());
    CHECK(g.inverse().inverse() == g);
  }
  CHECK(SignedPermutation::identity(3).inverse().is_identity());
  // inverse(T) = (1,...,1; t^-1)
  SignedPermutation t_inv = SignedPermutation::canonical_t(2).inverse();
  CHECK(t_inv == make({2, 0, 1}, {false, false, false}));
}

TEST_CASE("associativity on random triples") {
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    const int points = rng.range(1, 6);
    auto a = random_element(rng, points), b = random_element(rng, points),
         c = random_element(rng, points);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
  }
}

TEST_CASE("canonical generators") {
  SignedPermutation r1 = SignedPermutation::canonical_r(1);
  CHECK(r1 == make({1, 0}, {true, true}));
  CHECK(SignedPermutation::canonical_t(0).is_identity());
  for (int n = 0; n <= 8; ++n) {
    SignedPermutation R = SignedPermutation::canonical_r(n);
    SignedPermutation T = SignedPermutation::canonical_t(n);
    CHECK(R.compose(R).is_identity());
    CHECK(T.power(n + 1).is_identity());
    CHECK(R.compose(T).compose(R) == T.inverse());
    for (int i = 0; i <= n; ++i) CHECK(R.image_of(i) == n - i);
  }
}

TEST_CASE("membership predicates") {
  // (1, t; id) is based: sigma(0) = 0 and the label over slot 0 is trivial
  CHECK(is_member(make({0, 1}, {false, true}), GroupFamily::BasedHyperoctahedral));
  CHECK_FALSE(is_member(make({0, 1}, {true, false}), GroupFamily::BasedHyperoctahedral));
  CHECK_FALSE(is_member(make({1, 0}, {false, false}), GroupFamily::BasedHyperoctahedral));
  CHECK(is_member(make({1, 0}, {false, false}), GroupFamily::Symmetric));
  CHECK_FALSE(is_member(make({1, 0}, {true, false}), GroupFamily::Symmetric));
  for (int n = 0; n <= 4; ++n) {
    CHECK(is_member(SignedPermutation::canonical_r(n), GroupFamily::Reflexive));
    CHECK(is_member(SignedPermutation::canonical_t(n).power(n), GroupFamily::Cyclic));
    CHECK(is_member(
        SignedPermutation::canonical_r(n).compose(SignedPermutation::canonical_t(n)),
        GroupFamily::Dihedral));
  }
  CHECK_FALSE(is_member(make({0, 1}, {false, true}), GroupFamily::Cyclic));
}

TEST_CASE("enumeration sizes and uniqueness") {
  CHECK(enumerate_family(GroupFamily::Hyperoctahedral, 1).size() == 8);
  CHECK(enumerate_family(GroupFamily::Dihedral, 2).size() == 6);
  CHECK(enumerate_family(GroupFamily::BasedHyperoctahedral, 0).size() == 1);
  CHECK(enumerate_family(GroupFamily::BasedHyperoctahedral, 0).front().is_identity());
  for (int n = 0; n <= 3; ++n) {
    for (GroupFamily fam :
         {GroupFamily::Reflexive, GroupFamily::Cyclic, GroupFamily::Dihedral,
          GroupFamily::Symmetric, GroupFamily::Hyperoctahedral,
          GroupFamily::BasedHyperoctahedral}) {
      auto all = enumerate_family(fam, n);
      CHECK(all.size() == family_order(fam, n));
      std::set<SignedPermutation> unique(all.begin(), all.end());
      CHECK(unique.size() == all.size());
      for (const auto& g : all) CHECK(is_member(g, fam));
    }
  }
  CHECK_THROWS_AS(enumerate_family(GroupFamily::Hyperoctahedral, 3, 100), CapExceeded);
}

TEST_CASE("counting identities |D| |H+| = |H| and |D meet H+| = 1 up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    auto dihedral = enumerate_family(GroupFamily::Dihedral, n);
    std::size_t based_count = 0, hyper_count = 0;
    for_each_in_family(GroupFamily::BasedHyperoctahedral, n,
                       [&](const SignedPermutation&) { ++based_count; });
    for_each_in_family(GroupFamily::Hyperoctahedral, n,
                       [&](const SignedPermutation&) { ++hyper_count; });
    CHECK(dihedral.size() * based_count == hyper_count);
    long in_based = 0;
    for (const auto& g : dihedral)
      if (is_member(g, GroupFamily::BasedHyperoctahedral)) ++in_based;
    CHECK(in_based == 1);
  }
}

TEST_CASE("rendering") {
  CHECK(SignedPermutation::identity(2).to_string() == "[0^+, 1^+]");
  // (1, t; id): 1 maps to 1 carrying the label t
  CHECK(make({0, 1}, {false, true}).to_string() == "[0^+, 1^-]");
  CHECK(SignedPermutation::canonical_r(1).to_string() == "[1^-, 0^-]");
}

TEST_CASE("size mismatch is rejected") {
  CHECK_THROWS_AS(SignedPermutation::identity(2).compose(SignedPermutation::identity(3)),
                  SizeMismatch);
  CHECK_THROWS_AS(make({0, 0}, {false, false}), SizeMismatch);
}
