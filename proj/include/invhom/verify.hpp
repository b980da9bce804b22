#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invhom/factorize.hpp"
#include "invhom/homology.hpp"

namespace invhom::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // first counterexample, or a summary of what ran
};

// Generator relations of the dihedral subgroup of H_{n+1} and its size,
// plus triviality of its intersection with the based subgroup.
CheckResult dihedral_subgroup(int max_n);

// Existence and uniqueness of the order-map/group normal form: exhaustive
// for source and target indices <= min(max_n, 2), sampled reconstruction up
// to max_n.
CheckResult delta_h_decomposition(int max_n, long samples, std::uint64_t seed);

// Exhaustive dihedral/based splitting over all of H_{n+1} for n <= max_n,
// including the counting identity |D| * |H+| = |H| and uniqueness.
CheckResult d_hplus_decomposition(int max_n);

// Based factorization with independent membership certification of the
// reflexive part, exhaustive for indices <= min(max_n, 2) and sampled above.
CheckResult reflexive_decomposition(int max_n, long samples, std::uint64_t seed);

// Right-action contravariance of the based-component projection.
CheckResult b_functoriality(int max_n, long samples, std::uint64_t seed);

// Functoriality of the bar construction for group_c2 and dual_numbers_minus
// over Q and F2, checked on every basis tensor per sampled pair.
CheckResult bar_functoriality(int max_n, long samples, std::uint64_t seed);

// Generator-level identities tying the bar construction to the classical
// operators: R acts by reversal-with-involution, T by rotation, T.R and the
// reflection by the based reversal, and the order-map generators restrict to
// the simplicial faces and degeneracies.
CheckResult generator_identities(int max_n);

// Chain-level identities: b.b = 0, the signed involution is a chain map and
// squares to the identity, and the cyclic identities (1-t)N = 0 and
// b(1-t) = (1-t)b'.
CheckResult chain_level_identities(int max_n);

struct SweepConfig {
  int max_n = 2;
  long samples = 1000;
  std::uint64_t seed = 1;
};

std::vector<std::string> selectors();
bool is_selector(const std::string& name);
std::vector<CheckResult> run_selector(const std::string& selector, const SweepConfig& config);

}  // namespace invhom::verify
