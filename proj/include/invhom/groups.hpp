#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "invhom/errors.hpp"

namespace invhom {

// An element (z_0, ..., z_n; sigma) of the hyperoctahedral group
// H_{n+1} = C2^{n+1} x| Sigma_{n+1}, acting on the set {0, ..., n}.
//
// Conventions, fixed once and used everywhere:
//   * sigma(i) is the image of i; label(i) is the C2 component z_i sitting
//     at slot i (true encodes the generator t, composition of labels is XOR).
//   * As a map of signed points, g sends (i, s) to (sigma(i), s ^ z_{sigma(i)}):
//     the label is read off at the *target* slot.
//   * compose(g, h) applies h first and satisfies
//     (z; sigma)(w; tau) = (z . sigma(w); sigma tau) with sigma(w)_i = w_{sigma^-1(i)},
//     which is exactly function composition of the signed-point actions.
class SignedPermutation {
 public:
  explicit SignedPermutation(int n_plus_1);  // identity
  SignedPermutation(std::vector<int> sigma, std::vector<bool> labels);

  static SignedPermutation identity(int n_plus_1) { return SignedPermutation(n_plus_1); }
  // R = (t, ..., t; r_{n+1}) with r_{n+1}(i) = n - i.
  static SignedPermutation canonical_r(int n);
  // T = (1, ..., 1; t_{n+1}) with t_{n+1}(i) = i + 1 mod n + 1.
  static SignedPermutation canonical_t(int n);

  int size() const { return static_cast<int>(sigma_.size()); }  // n + 1
  int image_of(int i) const { return sigma_.at(i); }
  bool label(int i) const { return labels_.at(i); }  // z_i
  const std::vector<int>& sigma() const { return sigma_; }

  SignedPermutation compose(const SignedPermutation& rhs) const;  // this after rhs
  SignedPermutation inverse() const;
  SignedPermutation power(long k) const;
  bool is_identity() const;

  bool operator==(const SignedPermutation&) const = default;
  bool operator<(const SignedPermutation& rhs) const;

  // "[sigma(0)^s, sigma(1)^s, ...]" where s is + for label 1 and - for label t,
  // showing with each i the label carried by the assignment i -> sigma(i).
  std::string to_string() const;

 private:
  std::vector<int> sigma_;
  std::vector<bool> labels_;
};

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

enum class GroupFamily {
  Reflexive,
  Cyclic,
  Dihedral,
  Symmetric,
  Hyperoctahedral,
  BasedHyperoctahedral,
};

std::string family_name(GroupFamily fam);

bool is_member(const SignedPermutation& g, GroupFamily fam);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

// Exact order of the family inside H_{n+1}.
std::size_t family_order(GroupFamily fam, int n);

// Visit every element exactly once; throws CapExceeded if the family order
// exceeds the cap.
void for_each_in_family(GroupFamily fam, int n,
                        const std::function<void(const SignedPermutation&)>& fn,
                        std::size_t cap = kDefaultEnumerationCap);

std::vector<SignedPermutation> enumerate_family(GroupFamily fam, int n,
                                                std::size_t cap = kDefaultEnumerationCap);

}  // namespace invhom
