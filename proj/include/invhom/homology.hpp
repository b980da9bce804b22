#pragma once

#include <map>
#include <string>
#include <vector>

#include "invhom/algebra.hpp"
#include "invhom/linalg.hpp"
#include "invhom/ncset.hpp"

namespace invhom {

// A k-linear combination of basis tensors in M (x) A^(x)n. The multi-index
// (i_0, i_1, ..., i_n) picks a module basis element in position 0 and algebra
// basis elements elsewhere.
class TensorElement {
 public:
  TensorElement(Ring ring, int degree, int module_rank, int algebra_rank);
  static TensorElement basis(Ring ring, int degree, int module_rank, int algebra_rank,
                             std::vector<int> idx);

  const Ring& ring() const { return ring_; }
  int degree() const { return degree_; }
  int module_rank() const { return module_rank_; }
  int algebra_rank() const { return algebra_rank_; }

  void add_term(const std::vector<int>& idx, const Rat& c);
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  TensorElement added(const TensorElement& rhs) const;
  TensorElement scaled(const Rat& factor) const;
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const TensorElement&) const = default;
  std::string to_string() const;

 private:
  Ring ring_;
  int degree_ = 0;
  int module_rank_ = 0;
  int algebra_rank_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

// Position of a basis tensor in the canonical ordering of M (x) A^(x)n
// (index 0 varies fastest). Used to lay tensors out as matrix coordinates.
long tensor_rank(int module_rank, int algebra_rank, int degree);
long encode_tensor_index(int module_rank, int algebra_rank, const std::vector<int>& idx);
std::vector<int> decode_tensor_index(int module_rank, int algebra_rank, int degree, long code);

// The hyperoctahedral bar construction on a morphism of involutive
// non-commutative sets: each target slot receives the ordered product of its
// (possibly involuted) preimage factors; an empty preimage yields the unit.
// The element must live in A^(x)(n+1), i.e. the module position is A itself.
TensorElement bar_apply(const InvolutiveAlgebra& a, const NCMorphism& f, const TensorElement& x);

// The based variant on M (x) A^(x)n for based morphisms: the slot-0 product
// is evaluated through the bimodule actions, with the bimodule involution
// where a label is t. Throws NotBased if f(0) != 0.
TensorElement based_bar_apply(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                              const NCMorphism& f, const TensorElement& x);

// Simplicial structure of the Loday construction.
TensorElement loday_face(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int i,
                         const TensorElement& x);
TensorElement loday_degeneracy(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int j,
                               const TensorElement& x);

// b = sum (-1)^i face_i, and the truncated b' that omits the wrap face.
TensorElement hochschild_boundary(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                  const TensorElement& x);
TensorElement bar_boundary_prime(const InvolutiveAlgebra& a, const TensorElement& x);

// The chain-level involution and rotation, with the signs that make them
// commute with b (resp. satisfy the cyclic bicomplex identities):
//   y_n = (-1)^(n(n+1)/2) (mbar (x) abar_n (x) ... (x) abar_1)
//   t_n = (-1)^n        (a_n (x) a_0 (x) ... (x) a_{n-1})
TensorElement apply_reflexive(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                              const TensorElement& x);
TensorElement apply_cyclic(const InvolutiveAlgebra& a, const TensorElement& x);

// A bounded chain complex of free modules; construction checks that
// consecutive differentials compose to zero.
class ChainComplex {
 public:
  ChainComplex(Ring ring, std::vector<long> ranks, std::vector<ExactMatrix> differentials);

  const Ring& ring() const { return ring_; }
  int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
  long rank(int n) const { return ranks_.at(n); }
  // d_n : C_n -> C_{n-1} for 1 <= n <= top_degree()
  const ExactMatrix& differential(int n) const;

  // Homology in degree n; requires n + 1 <= top_degree() so that both the
  // incoming and outgoing differentials are present (d_0 = 0).
  HomologyGroup homology(int n) const;

 private:
  Ring ring_;
  std::vector<long> ranks_;
  std::vector<ExactMatrix> diffs_;  // diffs_[n-1] is d_n
};

// Matrices of the operators above on the degree-n modules.
ExactMatrix boundary_matrix(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int n);
ExactMatrix boundary_prime_matrix(const InvolutiveAlgebra& a, int n);
ExactMatrix reflexive_operator(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int n);
ExactMatrix cyclic_operator(const InvolutiveAlgebra& a, int n);
ExactMatrix cyclic_norm_operator(const InvolutiveAlgebra& a, int n);  // 1 + t + ... + t^n

// The Hochschild complex of (A, M) up to degree N.
ChainComplex hochschild_complex(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int N);

// Total complex (to degree N) of the two-periodic C2 bicomplex whose columns
// are Hochschild complexes and whose rows alternate 1 - y and 1 + y.
ChainComplex reflexive_total_complex(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                     int N);

// Total complex (to degree N) of the cyclic (b, b', 1 - t, N) bicomplex.
ChainComplex cyclic_total_complex(const InvolutiveAlgebra& a, int N);

// The involution of the cyclic total complex induced by the dihedral
// structure (block p acts by +-y, resp. +-y t, on even resp. odd columns).
std::vector<ExactMatrix> dihedral_involution(const InvolutiveAlgebra& a, int N);

// Restriction of a field-coefficient complex to the eigenspaces of a chain
// involution (eigenvalue +1 or -1).
ChainComplex eigenspace_subcomplex(const ChainComplex& c,
                                   const std::vector<ExactMatrix>& involution, int eigenvalue);

// Homology tables in degrees 0..N.
std::vector<HomologyGroup> hochschild_homology(const InvolutiveAlgebra& a,
                                               const InvolutiveBimodule& m, int N);
std::vector<HomologyGroup> reflexive_homology(const InvolutiveAlgebra& a,
                                              const InvolutiveBimodule& m, int N);
std::vector<HomologyGroup> cyclic_homology(const InvolutiveAlgebra& a, int N);
// Rational dihedral homology as the C2-invariant part of the cyclic total
// complex; refuses rings other than Q, where taking invariants is not exact.
std::vector<HomologyGroup> dihedral_homology_rational(const InvolutiveAlgebra& a, int N);

}  // namespace invhom
