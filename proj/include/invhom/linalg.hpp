#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "invhom/errors.hpp"

namespace invhom {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficient ring: Z, Q, or Z/p with p prime. Everything downstream is
// exact; no floating point appears anywhere in the library.
struct Ring {
  enum class Kind { Integers, Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  long p = 0;  // modulus, meaningful only for PrimeField

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring rationals() { return {Kind::Rationals, 0}; }
  static Ring prime_field(long p);

  // "Z", "Q", "F2", ... and the inverse of name().
  static Ring parse(std::string_view text);
  std::string name() const;

  bool is_field() const { return kind != Kind::Integers; }
  bool operator==(const Ring&) const = default;
};

// Canonical representative of a scalar: reduces mod p for prime fields
// (inverting the denominator) and checks integrality over Z.
Rat ring_normalize(const Ring& ring, const Rat& value);

struct Triplet {
  int row = 0;
  int col = 0;
  Rat value;
};

// Dense row-major matrix of exact scalars. Values are normalized on write,
// so PrimeField entries are always representatives in [0, p).
class ExactMatrix {
 public:
  ExactMatrix(Ring ring, int rows, int cols);
  static ExactMatrix identity(Ring ring, int n);
  static ExactMatrix from_triplets(Ring ring, int rows, int cols,
                                   const std::vector<Triplet>& entries);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int r, int c) const { return data_[index(r, c)]; }
  void set(int r, int c, const Rat& value);
  void add_at(int r, int c, const Rat& value);

  bool is_zero() const;
  ExactMatrix multiply(const ExactMatrix& rhs) const;
  ExactMatrix added(const ExactMatrix& rhs) const;
  ExactMatrix scaled(const Rat& factor) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix&) const = default;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  Ring ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

struct SmithResult {
  std::vector<Int> factors;  // nonzero invariant factors, d1 | d2 | ... | dr
  int rank = 0;
};

// Smith normal form of an integer matrix. Pivoting prefers the smallest
// nonzero absolute value to limit intermediate entry growth.
SmithResult smith_normal_form(const ExactMatrix& m);

// Rank over the fraction field (so over Q for integer matrices).
int rank(const ExactMatrix& m);

// Basis of the null space of a matrix over a field, returned as columns.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Basis (as columns) of the kernel lattice {x in Z^cols : m x = 0} of an
// integer matrix; the columns span a direct summand of Z^cols.
ExactMatrix integer_kernel_lattice(const ExactMatrix& m);

// Solve a x = b exactly, requiring a to have full column rank and the system
// to be consistent; b is consumed column-wise. Field rings only.
ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b);

struct HomologyGroup {
  Ring ring;
  long free_rank = 0;         // rank over Z, or dimension over a field
  std::vector<Int> torsion;   // invariant factors > 1, only over Z

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;

  // "Z^2 (+) Z/4", "Q^1", "F_2^3", or "0".
  std::string to_string() const;
};

// Homology at the middle of  *--d_in-->*--d_out-->*.  Shapes must chain and
// d_out . d_in must vanish. Over a field this is dim ker(d_out) - rank(d_in);
// over Z the full invariant-factor decomposition of ker/im is computed.
HomologyGroup homology_at(const ExactMatrix& d_in, const ExactMatrix& d_out);

}  // namespace invhom
