#include "invhom/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace invhom {

SignedPermutation::SignedPermutation(int n_plus_1) {
  if (n_plus_1 <= 0) throw SizeMismatch("signed permutation needs at least one point");
  sigma_.resize(n_plus_1);
  std::iota(sigma_.begin(), sigma_.end(), 0);
  labels_.assign(n_plus_1, false);
}

SignedPermutation::SignedPermutation(std::vector<int> sigma, std::vector<bool> labels)
    : sigma_(std::move(sigma)), labels_(std::move(labels)) {
  if (sigma_.empty() || sigma_.size() != labels_.size())
    throw SizeMismatch("sigma and labels must have equal positive length");
  std::vector<bool> seen(sigma_.size(), false);
  for (int v : sigma_) {
    if (v < 0 || v >= static_cast<int>(sigma_.size()) || seen[v])
      throw SizeMismatch("sigma is not a permutation");
    seen[v] = true;
  }
}

SignedPermutation SignedPermutation::canonical_r(int n) {
  std::vector<int> sigma(n + 1);
  for (int i = 0; i <= n; ++i) sigma[i] = n - i;
  return SignedPermutation(std::move(sigma), std::vector<bool>(n + 1, true));
}

SignedPermutation SignedPermutation::canonical_t(int n) {
  std::vector<int> sigma(n + 1);
  for (int i = 0; i <= n; ++i) sigma[i] = (i + 1) % (n + 1);
  return SignedPermutation(std::move(sigma), std::vector<bool>(n + 1, false));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& rhs) const {
  if (size() != rhs.size()) throw SizeMismatch("composing signed permutations of unequal size");
  const int n1 = size();
  std::vector<int> inv_sigma(n1);
  for (int i = 0; i < n1; ++i) inv_sigma[sigma_[i]] = i;
  std::vector<int> sigma(n1);
  std::vector<bool> labels(n1);
  for (int i = 0; i < n1; ++i) {
    sigma[i] = sigma_[rhs.sigma_[i]];
    labels[i] = labels_[i] ^ rhs.labels_[inv_sigma[i]];
  }
  return SignedPermutation(std::move(sigma), std::move(labels));
}

SignedPermutation SignedPermutation::inverse() const {
  const int n1 = size();
  std::vector<int> sigma(n1);
  std::vector<bool> labels(n1);
  for (int i = 0; i < n1; ++i) sigma[sigma_[i]] = i;
  for (int j = 0; j < n1; ++j) labels[j] = labels_[sigma_[j]];
  return SignedPermutation(std::move(sigma), std::move(labels));
}

SignedPermutation SignedPermutation::power(long k) const {
  SignedPermutation base = k >= 0 ? *this : inverse();
  if (k < 0) k = -k;
  SignedPermutation acc = identity(size());
  for (long i = 0; i < k; ++i) acc = base.compose(acc);
  return acc;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (sigma_[i] != i || labels_[i]) return false;
  return true;
}

bool SignedPermutation::operator<(const SignedPermutation& rhs) const {
  if (sigma_ != rhs.sigma_) return sigma_ < rhs.sigma_;
  return labels_ < rhs.labels_;
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << sigma_[i] << "^" << (labels_[sigma_[i]] ? "-" : "+");
  }
  os << "]";
  return os.str();
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  return g.compose(h);
}

SignedPermutation inverse(const SignedPermutation& g) { return g.inverse(); }

std::string family_name(GroupFamily fam) {
  switch (fam) {
    case GroupFamily::Reflexive: return "Reflexive";
    case GroupFamily::Cyclic: return "Cyclic";
    case GroupFamily::Dihedral: return "Dihedral";
    case GroupFamily::Symmetric: return "Symmetric";
    case GroupFamily::Hyperoctahedral: return "Hyperoctahedral";
    case GroupFamily::BasedHyperoctahedral: return "BasedHyperoctahedral";
  }
  return "?";
}

namespace {

// Closure of {R, T} in H_{n+1}; small (order 2(n+1)), so membership in the
// dihedral and cyclic families is decided by plain enumeration instead of an
// algebraic criterion.
std::vector<SignedPermutation> closure(const std::vector<SignedPermutation>& gens,
                                       std::size_t cap) {
  std::set<SignedPermutation> seen(gens.begin(), gens.end());
  if (gens.empty()) return {};
  seen.insert(SignedPermutation::identity(gens.front().size()));
  std::vector<SignedPermutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        SignedPermutation gs = s.compose(g);
        if (seen.insert(gs).second) {
          next.push_back(std::move(gs));
          if (seen.size() > cap) throw CapExceeded("subgroup closure exceeds cap");
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedPermutation> dihedral_subgroup(int n, std::size_t cap) {
  return closure({SignedPermutation::canonical_r(n), SignedPermutation::canonical_t(n)}, cap);
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

bool is_member(const SignedPermutation& g, GroupFamily fam) {
  const int n = g.size() - 1;
  switch (fam) {
    case GroupFamily::Hyperoctahedral:
      return true;
    case GroupFamily::BasedHyperoctahedral:
      return g.image_of(0) == 0 && !g.label(0);
    case GroupFamily::Symmetric:
      for (int i = 0; i < g.size(); ++i)
        if (g.label(i)) return false;
      return true;
    case GroupFamily::Reflexive:
      return g.is_identity() || g == SignedPermutation::canonical_r(n);
    case GroupFamily::Cyclic: {
      SignedPermutation t = SignedPermutation::canonical_t(n);
      SignedPermutation acc = SignedPermutation::identity(n + 1);
      for (int k = 0; k <= n; ++k) {
        if (g == acc) return true;
        acc = t.compose(acc);
      }
      return false;
    }
    case GroupFamily::Dihedral: {
      auto sub = dihedral_subgroup(n, kDefaultEnumerationCap);
      return std::find(sub.begin(), sub.end(), g) != sub.end();
    }
  }
  return false;
}

std::size_t family_order(GroupFamily fam, int n) {
  const auto m = static_cast<std::size_t>(n + 1);
  switch (fam) {
    case GroupFamily::Hyperoctahedral: {
      std::size_t order = factorial(n + 1);
      for (std::size_t i = 0; i < m; ++i) order *= 2;
      return order;
    }
    case GroupFamily::BasedHyperoctahedral: {
      std::size_t order = factorial(n);
      for (int i = 0; i < n; ++i) order *= 2;
      return order;
    }
    case GroupFamily::Symmetric:
      return factorial(n + 1);
    case GroupFamily::Cyclic:
      return m;
    case GroupFamily::Dihedral:
      return n == 0 ? 2 : 2 * m;
    case GroupFamily::Reflexive:
      return 2;
  }
  return 0;
}

void for_each_in_family(GroupFamily fam, int n,
                        const std::function<void(const SignedPermutation&)>& fn,
                        std::size_t cap) {
  if (family_order(fam, n) > cap)
    throw CapExceeded(family_name(fam) + " at n=" + std::to_string(n) + " exceeds cap");
  const int m = n + 1;
  switch (fam) {
    case GroupFamily::Hyperoctahedral:
    case GroupFamily::BasedHyperoctahedral:
    case GroupFamily::Symmetric: {
      const bool based = fam == GroupFamily::BasedHyperoctahedral;
      const bool signs = fam != GroupFamily::Symmetric;
      std::vector<int> sigma(m);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        if (based && sigma[0] != 0) continue;
        if (!signs) {
          fn(SignedPermutation(sigma, std::vector<bool>(m, false)));
          continue;
        }
        const int free_bits = based ? n : m;
        for (std::uint64_t mask = 0; mask < (1ull << free_bits); ++mask) {
          std::vector<bool> labels(m, false);
          for (int b = 0; b < free_bits; ++b)
            labels[based ? b + 1 : b] = (mask >> b) & 1;
          fn(SignedPermutation(sigma, std::move(labels)));
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      return;
    }
    case GroupFamily::Cyclic: {
      SignedPermutation t = SignedPermutation::canonical_t(n);
      SignedPermutation acc = SignedPermutation::identity(m);
      for (int k = 0; k < m; ++k) {
        fn(acc);
        acc = t.compose(acc);
      }
      return;
    }
    case GroupFamily::Reflexive: {
      fn(SignedPermutation::identity(m));
      fn(SignedPermutation::canonical_r(n));
      return;
    }
    case GroupFamily::Dihedral: {
      for (const auto& g : dihedral_subgroup(n, cap)) fn(g);
      return;
    }
  }
}

std::vector<SignedPermutation> enumerate_family(GroupFamily fam, int n, std::size_t cap) {
  std::vector<SignedPermutation> out;
  for_each_in_family(fam, n, [&](const SignedPermutation& g) { out.push_back(g); }, cap);
  return out;
}

}  // namespace invhom
