#include <doctest.h>

#include <set>

#include "invhom/ncset.hpp"
#include "invhom/rng.hpp"

using namespace invhom;

namespace {

LabeledPoint pt(int e, bool flip) { return LabeledPoint{e, flip}; }

NCMorphism morphism(int src, int tgt, std::vector<LabeledPreimage> pre) {
  return NCMorphism(src, tgt, std::move(pre));
}

bool partition_ok(const NCMorphism& f) {
  std::vector<int> seen(f.source_points(), 0);
  for (int i = 0; i < f.target_points(); ++i)
    for (const auto& p : f.preimage(i)) ++seen[p.element];
  for (int c : seen)
    if (c != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("star action") {
  LabeledPreimage p{pt(0, false), pt(2, true), pt(1, false)};
  SUBCASE("t inverts the ordering and flips every label") {
    LabeledPreimage expected{pt(1, true), pt(2, false), pt(0, true)};
    CHECK(star_action(true, p) == expected);
  }
  SUBCASE("1 acts trivially") { CHECK(star_action(false, p) == p); }
  SUBCASE("acting twice is the identity") { CHECK(star_action(true, star_action(true, p)) == p); }
}

TEST_CASE("composition of labeled-preimage morphisms") {
  SUBCASE("identities") {
    NCMorphism id2 = NCMorphism::identity(2);
    NCMorphism f = morphism(2, 1, {{pt(0, false), pt(1, true)}});
    CHECK(f.compose(id2) == f);
    CHECK(NCMorphism::identity(1).compose(f) == f);
  }
  SUBCASE("a flip reverses and relabels the whole preimage") {
    // f: [1] -> [0] with f^-1(0) = {0^1 < 1^1}; g: [0] -> [0] with g^-1(0) = {0^t}
    NCMorphism f = morphism(2, 1, {{pt(0, false), pt(1, false)}});
    NCMorphism g = morphism(1, 1, {{pt(0, true)}});
    NCMorphism expected = morphism(2, 1, {{pt(1, true), pt(0, true)}});
    CHECK(g.compose(f) == expected);
  }
  SUBCASE("associativity, exhaustive at one point and random above") {
    auto small = enumerate_homs(2, 2);
    for (const auto& f : small)
      for (const auto& g : small)
        for (const auto& h : small)
          CHECK(h.compose(g).compose(f) == h.compose(g.compose(f)));
    Rng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
      int a = rng.range(1, 5), b = rng.range(1, 5), c = rng.range(1, 5), d = rng.range(1, 5);
      NCMorphism f = random_morphism(rng, a, b);
      NCMorphism g = random_morphism(rng, b, c);
      NCMorphism h = random_morphism(rng, c, d);
      CHECK(h.compose(g).compose(f) == h.compose(g.compose(f)));
    }
  }
  SUBCASE("validity is preserved") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      NCMorphism f = random_morphism(rng, rng.range(1, 5), rng.range(1, 4));
      NCMorphism g = random_morphism(rng, f.target_points(), rng.range(1, 4));
      CHECK(partition_ok(g.compose(f)));
    }
  }
  SUBCASE("size mismatch is rejected") {
    NCMorphism f = morphism(2, 1, {{pt(0, false), pt(1, false)}});
    CHECK_THROWS_AS(f.compose(f), SizeMismatch);
  }
}

TEST_CASE("category membership") {
  NCMorphism id3 = NCMorphism::identity(3);
  for (CategoryTag tag : {CategoryTag::Fas, CategoryTag::IFas, CategoryTag::GammaAs,
                          CategoryTag::IGammaAs, CategoryTag::Delta, CategoryTag::DeltaR_op})
    CHECK(is_in(id3, tag));

  NCMorphism reflection = embed_reflection(2);
  CHECK(is_in(reflection, CategoryTag::IGammaAs));
  CHECK(is_in(reflection, CategoryTag::DeltaR_op));
  CHECK_FALSE(is_in(reflection, CategoryTag::Fas));
  CHECK_FALSE(is_in(reflection, CategoryTag::Delta));

  // f(0) = 1 violates the basepoint
  NCMorphism unbased = morphism(2, 2, {{pt(1, false)}, {pt(0, false)}});
  CHECK_FALSE(is_in(unbased, CategoryTag::IGammaAs));
  CHECK_FALSE(is_in(unbased, CategoryTag::GammaAs));
  CHECK(is_in(unbased, CategoryTag::Fas));

  // order-preserving with increasing plain preimages
  NCMorphism mono = morphism(3, 2, {{pt(0, false), pt(1, false)}, {pt(2, false)}});
  CHECK(is_in(mono, CategoryTag::Delta));
  NCMorphism decreasing = morphism(3, 2, {{pt(1, false), pt(0, false)}, {pt(2, false)}});
  CHECK_FALSE(is_in(decreasing, CategoryTag::Delta));
}

TEST_CASE("based categories are closed under composition") {
  Rng rng(31415);
  for (int trial = 0; trial < 300; ++trial) {
    int a = rng.range(1, 4), b = rng.range(1, 4), c = rng.range(1, 4);
    NCMorphism f = random_based_morphism(rng, a, b);
    NCMorphism g = random_based_morphism(rng, b, c);
    CHECK(is_in(f, CategoryTag::IGammaAs));
    CHECK(is_in(g.compose(f), CategoryTag::IGammaAs));
  }
}

TEST_CASE("embedding the group") {
  SUBCASE("identity goes to the identity") {
    CHECK(embed_group(SignedPermutation::identity(3)) == NCMorphism::identity(3));
  }
  SUBCASE("R embeds as the full reflection with t labels") {
    const int n = 3;
    NCMorphism r = embed_group(SignedPermutation::canonical_r(n));
    for (int j = 0; j <= n; ++j) {
      CHECK(r.map(j) == n - j);
      CHECK(r.flip(j));
    }
  }
  SUBCASE("embedding is a homomorphism, exhaustively in H_2") {
    auto all = enumerate_family(GroupFamily::Hyperoctahedral, 1);
    for (const auto& g : all)
      for (const auto& h : all)
        CHECK(embed_group(g.compose(h)) == embed_group(g).compose(embed_group(h)));
  }
  SUBCASE("embedding is a homomorphism on random pairs in H_4") {
    Rng rng(2024);
    auto random_element = [&](int points) {
      std::vector<int> sigma(points);
      for (int i = 0; i < points; ++i) sigma[i] = i;
      for (int i = points - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.range(0, i)]);
      std::vector<bool> labels(points);
      for (int i = 0; i < points; ++i) labels[i] = rng.coin();
      return SignedPermutation(std::move(sigma), std::move(labels));
    };
    for (int trial = 0; trial < 1000; ++trial) {
      SignedPermutation g = random_element(4), h = random_element(4);
      CHECK(embed_group(g.compose(h)) == embed_group(g).compose(embed_group(h)));
    }
  }
}

TEST_CASE("embedding order-preserving maps") {
  SUBCASE("identity") {
    CHECK(embed_delta(OrderMap::identity(3)) == NCMorphism::identity(3));
  }
  SUBCASE("the unique map [1] -> [0]") {
    NCMorphism f = embed_delta(OrderMap({0, 0}, 1));
    CHECK(f == morphism(2, 1, {{pt(0, false), pt(1, false)}}));
  }
  SUBCASE("monotone maps compose functorially") {
    Rng rng(555);
    for (int trial = 0; trial < 300; ++trial) {
      int a = rng.range(1, 5), b = rng.range(1, 5), c = rng.range(1, 5);
      auto pick = [&](int src, int tgt) {
        std::vector<int> img(src);
        int cur = rng.range(0, tgt - 1);
        for (int i = 0; i < src; ++i) {
          cur = std::min(tgt - 1, cur + rng.range(0, 1));
          img[i] = cur;
        }
        return OrderMap(std::move(img), tgt);
      };
      OrderMap phi = pick(a, b), psi = pick(b, c);
      CHECK(embed_delta(psi.compose(phi)) == embed_delta(psi).compose(embed_delta(phi)));
    }
  }
  SUBCASE("non-monotone input is rejected") {
    CHECK_THROWS_AS(OrderMap({1, 0}, 2), NotMonotone);
  }
}

TEST_CASE("the reflection generator") {
  SUBCASE("smallest case") {
    NCMorphism r0 = embed_reflection(0);
    CHECK(r0.preimage(0) == LabeledPreimage{pt(0, true)});
  }
  SUBCASE("n = 2 sends 0 -> {0^t}, 1 -> {2^t}, 2 -> {1^t}") {
    NCMorphism r = embed_reflection(2);
    CHECK(r.preimage(0) == LabeledPreimage{pt(0, true)});
    CHECK(r.preimage(1) == LabeledPreimage{pt(2, true)});
    CHECK(r.preimage(2) == LabeledPreimage{pt(1, true)});
  }
  SUBCASE("an involution for n <= 6") {
    for (int n = 0; n <= 6; ++n) {
      NCMorphism r = embed_reflection(n);
      CHECK(r.compose(r) == NCMorphism::identity(n + 1));
    }
  }
}

TEST_CASE("face and degeneracy morphisms") {
  // the n-th face wraps: its preimage of 0 is the ordered pair (n, 0)
  NCMorphism wrap = face_morphism(2, 2);
  CHECK(wrap.preimage(0) == LabeledPreimage{pt(2, false), pt(0, false)});
  CHECK(wrap.is_based());
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) CHECK(face_morphism(n, i).is_based());
  for (int n = 0; n <= 4; ++n)
    for (int j = 0; j <= n; ++j) {
      NCMorphism s = degeneracy_morphism(n, j);
      CHECK(s.is_based());
      CHECK(s.preimage(j + 1).empty());
      CHECK(is_in(s, CategoryTag::Delta));
    }
}

TEST_CASE("hom-set enumeration matches the closed form") {
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      auto homs = enumerate_homs(n + 1, m + 1);
      CHECK(homs.size() == hom_count(n + 1, m + 1));
      std::set<NCMorphism> unique(homs.begin(), homs.end());
      CHECK(unique.size() == homs.size());
      // |Hom([n],[m])| = |Hom_Delta([n],[m])| * 2^(n+1) (n+1)!
      std::size_t monotone = enumerate_monotone(n + 1, m + 1).size();
      std::size_t group = family_order(GroupFamily::Hyperoctahedral, n);
      CHECK(homs.size() == monotone * group);
    }
  CHECK_THROWS_AS(enumerate_homs(6, 6, 1000), CapExceeded);
}

TEST_CASE("textual format round-trips bit-exactly") {
  SUBCASE("fixed vectors") {
    CHECK(NCMorphism::parse("1 -> 0 ; 0: 1- 0+").to_string() == "1 -> 0 ; 0: 1- 0+");
    CHECK(NCMorphism::parse("0 -> 1 ; 0: 0+ ; 1: .").to_string() == "0 -> 1 ; 0: 0+ ; 1: .");
    NCMorphism f = morphism(3, 2, {{pt(2, true), pt(0, false)}, {pt(1, true)}});
    CHECK(NCMorphism::parse(f.to_string()) == f);
    CHECK(f.to_string() == "2 -> 1 ; 0: 2- 0+ ; 1: 1-");
  }
  SUBCASE("random morphisms survive print/parse") {
    Rng rng(808);
    for (int trial = 0; trial < 300; ++trial) {
      NCMorphism f = random_morphism(rng, rng.range(1, 5), rng.range(1, 5));
      CHECK(NCMorphism::parse(f.to_string()) == f);
      CHECK(NCMorphism::parse(f.to_string()).to_string() == f.to_string());
    }
  }
  SUBCASE("malformed inputs are rejected with positions") {
    CHECK_THROWS_AS(NCMorphism::parse("1 -> 0"), ParseError);
    CHECK_THROWS_AS(NCMorphism::parse("1 -> 0 ; 0: 1-"), SizeMismatch);    // 0 missing
    CHECK_THROWS_AS(NCMorphism::parse("1 -> 0 ; 0: 1- 0"), ParseError);    // no sign
    CHECK_THROWS_AS(NCMorphism::parse("1 -> 0 ; 0: 1- 0+ 2+"), IndexOutOfRange);
    CHECK_THROWS_AS(NCMorphism::parse("1 -> 1 ; 0: 1- 0+ ; 1:"), ParseError);
    CHECK_THROWS_AS(NCMorphism::parse("garbage"), ParseError);
  }
}
