#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invhom/linalg.hpp"

namespace invhom {

struct ValidationIssue {
  std::string axiom;
  std::vector<int> witness;
  std::string to_string() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

using Coeffs = std::vector<Rat>;

// A finite-rank free algebra given by structure constants, with a unit
// vector and an anti-automorphism squaring to the identity.
class InvolutiveAlgebra {
 public:
  InvolutiveAlgebra(Ring ring, int dim, std::vector<std::string> basis_names,
                    std::vector<Coeffs> mult, Coeffs unit, std::vector<Coeffs> involution);

  // Catalog: ground, group_c2, dual_numbers_plus, dual_numbers_minus,
  // mat2_transpose, trunc_poly_3. Throws UnknownName otherwise. The result
  // is validated.
  static InvolutiveAlgebra builtin(std::string_view name, const Ring& ring);
  static bool is_builtin_name(std::string_view name);
  static std::vector<std::string> builtin_names();

  // Line-oriented text format; see to_file() for the exact layout. Every
  // mult and inv line is required.
  static InvolutiveAlgebra parse(const std::string& text);
  std::string to_file() const;

  const Ring& ring() const { return ring_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const Coeffs& unit() const { return unit_; }

  // product of basis elements e_i e_j as a coefficient vector
  const Coeffs& mult_table(int i, int j) const { return mult_[index(i, j)]; }
  // image of basis element e_i under the involution
  const Coeffs& involution_row(int i) const { return involution_[i]; }

  Coeffs multiply(std::span<const Rat> x, std::span<const Rat> y) const;
  Coeffs involve(std::span<const Rat> x) const;

  ValidationReport validate() const;

  bool operator==(const InvolutiveAlgebra&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

  Ring ring_;
  int dim_ = 0;
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<Coeffs> mult_;  // dim*dim rows of dim coefficients
  Coeffs unit_;
  std::vector<Coeffs> involution_;
};

// An involutive bimodule over an algebra, also by structure tables. The
// algebra is passed alongside rather than owned.
class InvolutiveBimodule {
 public:
  InvolutiveBimodule(int algebra_dim, int dim, std::vector<Coeffs> left_action,
                     std::vector<Coeffs> right_action, std::vector<Coeffs> involution);

  // M = A with the algebra's own product and involution.
  static InvolutiveBimodule regular(const InvolutiveAlgebra& a);

  int dim() const { return dim_; }
  int algebra_dim() const { return algebra_dim_; }

  // a . m and m . a for coefficient vectors; involution of m
  Coeffs act_left(const InvolutiveAlgebra& a, std::span<const Rat> x, std::span<const Rat> m) const;
  Coeffs act_right(const InvolutiveAlgebra& a, std::span<const Rat> m, std::span<const Rat> x) const;
  Coeffs involve(const InvolutiveAlgebra& a, std::span<const Rat> m) const;

  const Coeffs& left_table(int i, int j) const {  // e_i . m_j
    return left_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const Coeffs& right_table(int i, int j) const {  // m_i . e_j
    return right_[static_cast<std::size_t>(i) * algebra_dim_ + j];
  }
  const Coeffs& involution_row(int i) const { return involution_[i]; }

  ValidationReport validate(const InvolutiveAlgebra& a) const;

 private:
  int algebra_dim_ = 0;
  int dim_ = 0;
  std::vector<Coeffs> left_;   // [algebra i][module j] -> module vector
  std::vector<Coeffs> right_;  // [module i][algebra j] -> module vector
  std::vector<Coeffs> involution_;
};

}  // namespace invhom
