#include "invhom/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace invhom {

namespace {

Coeffs normalized(const Ring& ring, Coeffs v) {
  for (auto& x : v) x = ring_normalize(ring, x);
  return v;
}

Coeffs zero_vec(int d) { return Coeffs(static_cast<std::size_t>(d)); }

Coeffs basis_vec(int d, int i) {
  Coeffs v = zero_vec(d);
  v[i] = 1;
  return v;
}

bool equal(const Coeffs& a, const Coeffs& b) { return a == b; }

Rat parse_rat(const std::string& tok) {
  try {
    Rat v(tok);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad coefficient: " + tok);
  }
}

}  // namespace

std::string ValidationIssue::to_string() const {
  std::ostringstream os;
  os << axiom;
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) os << (i ? "; " : "") << issues[i].to_string();
  return os.str();
}

InvolutiveAlgebra::InvolutiveAlgebra(Ring ring, int dim, std::vector<std::string> basis_names,
                                     std::vector<Coeffs> mult, Coeffs unit,
                                     std::vector<Coeffs> involution)
    : ring_(ring), dim_(dim), basis_names_(std::move(basis_names)), mult_(std::move(mult)),
      unit_(std::move(unit)), involution_(std::move(involution)) {
  if (dim_ <= 0) throw ShapeMismatch("algebra rank must be positive");
  if (basis_names_.size() != static_cast<std::size_t>(dim_) ||
      mult_.size() != static_cast<std::size_t>(dim_) * dim_ ||
      unit_.size() != static_cast<std::size_t>(dim_) ||
      involution_.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("structure table sizes do not match the rank");
  for (auto& row : mult_) {
    if (row.size() != static_cast<std::size_t>(dim_)) throw ShapeMismatch("bad mult row length");
    row = normalized(ring_, std::move(row));
  }
  for (auto& row : involution_) {
    if (row.size() != static_cast<std::size_t>(dim_)) throw ShapeMismatch("bad inv row length");
    row = normalized(ring_, std::move(row));
  }
  unit_ = normalized(ring_, std::move(unit_));
  name_ = "custom";
}

Coeffs InvolutiveAlgebra::multiply(std::span<const Rat> x, std::span<const Rat> y) const {
  if (x.size() != static_cast<std::size_t>(dim_) || y.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("multiply: operand length does not match the rank");
  Coeffs out = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rat c = x[i] * y[j];
      const Coeffs& row = mult_[index(i, j)];
      for (int k = 0; k < dim_; ++k)
        if (row[k] != 0) out[k] += c * row[k];
    }
  }
  return normalized(ring_, std::move(out));
}

Coeffs InvolutiveAlgebra::involve(std::span<const Rat> x) const {
  if (x.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("involve: operand length does not match the rank");
  Coeffs out = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int k = 0; k < dim_; ++k)
      if (involution_[i][k] != 0) out[k] += x[i] * involution_[i][k];
  }
  return normalized(ring_, std::move(out));
}

ValidationReport InvolutiveAlgebra::validate() const {
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<int> witness) {
    report.issues.push_back({std::move(axiom), std::move(witness)});
  };
  for (int i = 0; i < dim_; ++i) {
    if (!equal(multiply(unit_, basis_vec(dim_, i)), basis_vec(dim_, i)))
      fail("unit is not a left unit", {i});
    if (!equal(multiply(basis_vec(dim_, i), unit_), basis_vec(dim_, i)))
      fail("unit is not a right unit", {i});
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        Coeffs lhs = multiply(mult_table(i, j), basis_vec(dim_, k));
        Coeffs rhs = multiply(basis_vec(dim_, i), mult_table(j, k));
        if (!equal(lhs, rhs)) fail("multiplication is not associative", {i, j, k});
      }
  for (int i = 0; i < dim_; ++i)
    if (!equal(involve(involution_[i]), basis_vec(dim_, i)))
      fail("involution does not square to the identity", {i});
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Coeffs lhs = involve(mult_table(i, j));
      Coeffs rhs = multiply(involution_[j], involution_[i]);
      if (!equal(lhs, rhs)) fail("involution does not reverse products", {i, j});
    }
  if (!equal(involve(unit_), unit_)) fail("involution moves the unit", {});
  return report;
}

bool InvolutiveAlgebra::is_builtin_name(std::string_view name) {
  const auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> InvolutiveAlgebra::builtin_names() {
  return {"ground", "group_c2", "dual_numbers_plus", "dual_numbers_minus",
          "mat2_transpose", "trunc_poly_3"};
}

InvolutiveAlgebra InvolutiveAlgebra::builtin(std::string_view name, const Ring& ring) {
  auto make = [&](int d, std::vector<std::string> names, std::vector<Coeffs> mult, Coeffs unit,
                  std::vector<Coeffs> inv) {
    InvolutiveAlgebra a(ring, d, std::move(names), std::move(mult), std::move(unit),
                        std::move(inv));
    a.name_ = std::string(name);
    ValidationReport report = a.validate();
    if (!report.ok()) throw Error("builtin algebra failed validation: " + report.to_string());
    return a;
  };

  if (name == "ground") {
    return make(1, {"e"}, {{1}}, {1}, {{1}});
  }
  if (name == "group_c2") {
    // basis 1, g with g^2 = 1; involution inverts the group, so it fixes both
    return make(2, {"1", "g"},
                {{1, 0}, {0, 1}, {0, 1}, {1, 0}},
                {1, 0},
                {{1, 0}, {0, 1}});
  }
  if (name == "dual_numbers_plus" || name == "dual_numbers_minus") {
    const Rat sign = name == "dual_numbers_plus" ? 1 : -1;
    return make(2, {"1", "x"},
                {{1, 0}, {0, 1}, {0, 1}, {0, 0}},
                {1, 0},
                {{1, 0}, {0, sign}});
  }
  if (name == "mat2_transpose") {
    // basis e11, e12, e21, e22; e_ab e_cd = [b=c] e_ad; transpose swaps e12, e21
    auto unit_idx = [](int a, int b) { return a * 2 + b; };
    std::vector<Coeffs> mult(16, zero_vec(4));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d)
            if (b == c) mult[static_cast<std::size_t>(unit_idx(a, b)) * 4 + unit_idx(c, d)][unit_idx(a, d)] = 1;
    std::vector<Coeffs> inv(4, zero_vec(4));
    inv[0][0] = 1;
    inv[1][2] = 1;
    inv[2][1] = 1;
    inv[3][3] = 1;
    return make(4, {"e11", "e12", "e21", "e22"}, std::move(mult), {1, 0, 0, 1}, std::move(inv));
  }
  if (name == "trunc_poly_3") {
    // basis 1, x, x^2 with x^3 = 0 and x fixed by the involution
    std::vector<Coeffs> mult(9, zero_vec(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i + j < 3) mult[static_cast<std::size_t>(i) * 3 + j][i + j] = 1;
    std::vector<Coeffs> inv(3, zero_vec(3));
    for (int i = 0; i < 3; ++i) inv[i][i] = 1;
    return make(3, {"1", "x", "x2"}, std::move(mult), {1, 0, 0}, std::move(inv));
  }
  throw UnknownName("unknown builtin algebra: " + std::string(name));
}

InvolutiveAlgebra InvolutiveAlgebra::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  bool have_ring = false, have_dim = false, have_basis = false, have_unit = false;
  Ring ring = Ring::rationals();
  int dim = 0;
  std::vector<std::string> names;
  Coeffs unit;
  std::vector<Coeffs> mult, inv;
  std::vector<bool> mult_seen, inv_seen;

  auto fail = [&](const std::string& what) {
    throw ParseError("algebra file, line " + std::to_string(lineno) + ": " + what);
  };
  auto read_coeffs = [&](std::istringstream& ls) {
    if (!have_dim) fail("coefficients before dim");
    Coeffs v;
    std::string tok;
    while (ls >> tok) v.push_back(parse_rat(tok));
    if (v.size() != static_cast<std::size_t>(dim)) fail("expected exactly dim coefficients");
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "ring") {
      std::string r;
      if (!(ls >> r)) fail("missing ring name");
      ring = Ring::parse(r);
      have_ring = true;
    } else if (key == "dim") {
      if (!(ls >> dim) || dim <= 0) fail("bad dim");
      have_dim = true;
      mult.assign(static_cast<std::size_t>(dim) * dim, {});
      inv.assign(static_cast<std::size_t>(dim), {});
      mult_seen.assign(static_cast<std::size_t>(dim) * dim, false);
      inv_seen.assign(static_cast<std::size_t>(dim), false);
    } else if (key == "basis") {
      if (!have_dim) fail("basis before dim");
      std::string tok;
      while (ls >> tok) names.push_back(tok);
      if (names.size() != static_cast<std::size_t>(dim)) fail("expected dim basis names");
      have_basis = true;
    } else if (key == "unit") {
      unit = read_coeffs(ls);
      have_unit = true;
    } else if (key == "mult") {
      int i, j;
      std::string colon;
      if (!(ls >> i >> j >> colon) || colon != ":") fail("expected 'mult <i> <j> :'");
      if (i < 0 || i >= dim || j < 0 || j >= dim) fail("mult indices out of range");
      const std::size_t idx = static_cast<std::size_t>(i) * dim + j;
      if (mult_seen[idx]) fail("duplicate mult line");
      mult[idx] = read_coeffs(ls);
      mult_seen[idx] = true;
    } else if (key == "inv") {
      int i;
      std::string colon;
      if (!(ls >> i >> colon) || colon != ":") fail("expected 'inv <i> :'");
      if (i < 0 || i >= dim) fail("inv index out of range");
      if (inv_seen[i]) fail("duplicate inv line");
      inv[i] = read_coeffs(ls);
      inv_seen[i] = true;
    } else {
      fail("unknown directive: " + key);
    }
  }
  lineno = 0;
  if (!have_ring) fail("missing ring line");
  if (!have_dim) fail("missing dim line");
  if (!have_basis) fail("missing basis line");
  if (!have_unit) fail("missing unit line");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!mult_seen[static_cast<std::size_t>(i) * dim + j])
        throw ParseError("algebra file: missing mult line for (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
  for (int i = 0; i < dim; ++i)
    if (!inv_seen[i]) throw ParseError("algebra file: missing inv line for " + std::to_string(i));
  return InvolutiveAlgebra(ring, dim, std::move(names), std::move(mult), std::move(unit),
                           std::move(inv));
}

std::string InvolutiveAlgebra::to_file() const {
  std::ostringstream os;
  os << "ring " << ring_.name() << "\n";
  os << "dim " << dim_ << "\n";
  os << "basis";
  for (const auto& n : basis_names_) os << " " << n;
  os << "\nunit";
  for (const auto& c : unit_) os << " " << c.get_str();
  os << "\n";
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      os << "mult " << i << " " << j << " :";
      for (const auto& c : mult_table(i, j)) os << " " << c.get_str();
      os << "\n";
    }
  for (int i = 0; i < dim_; ++i) {
    os << "inv " << i << " :";
    for (const auto& c : involution_[i]) os << " " << c.get_str();
    os << "\n";
  }
  return os.str();
}

InvolutiveBimodule::InvolutiveBimodule(int algebra_dim, int dim, std::vector<Coeffs> left_action,
                                       std::vector<Coeffs> right_action,
                                       std::vector<Coeffs> involution)
    : algebra_dim_(algebra_dim), dim_(dim), left_(std::move(left_action)),
      right_(std::move(right_action)), involution_(std::move(involution)) {
  if (dim_ <= 0 || algebra_dim_ <= 0) throw ShapeMismatch("bimodule rank must be positive");
  if (left_.size() != static_cast<std::size_t>(algebra_dim_) * dim_ ||
      right_.size() != static_cast<std::size_t>(dim_) * algebra_dim_ ||
      involution_.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("bimodule table sizes do not match the ranks");
}

InvolutiveBimodule InvolutiveBimodule::regular(const InvolutiveAlgebra& a) {
  const int d = a.dim();
  std::vector<Coeffs> left(static_cast<std::size_t>(d) * d), right(static_cast<std::size_t>(d) * d),
      inv(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      left[static_cast<std::size_t>(i) * d + j] = a.mult_table(i, j);
      right[static_cast<std::size_t>(i) * d + j] = a.mult_table(i, j);
    }
  for (int i = 0; i < d; ++i) inv[i] = a.involution_row(i);
  return InvolutiveBimodule(d, d, std::move(left), std::move(right), std::move(inv));
}

Coeffs InvolutiveBimodule::act_left(const InvolutiveAlgebra& a, std::span<const Rat> x,
                                    std::span<const Rat> m) const {
  if (x.size() != static_cast<std::size_t>(a.dim()) || m.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("act_left operand lengths");
  Coeffs out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < a.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (m[j] == 0) continue;
      const Rat c = x[i] * m[j];
      const Coeffs& row = left_[static_cast<std::size_t>(i) * dim_ + j];
      for (int k = 0; k < dim_; ++k)
        if (row[k] != 0) out[k] += c * row[k];
    }
  }
  return normalized(a.ring(), std::move(out));
}

Coeffs InvolutiveBimodule::act_right(const InvolutiveAlgebra& a, std::span<const Rat> m,
                                     std::span<const Rat> x) const {
  if (x.size() != static_cast<std::size_t>(a.dim()) || m.size() != static_cast<std::size_t>(dim_))
    throw ShapeMismatch("act_right operand lengths");
  Coeffs out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (x[j] == 0) continue;
      const Rat c = m[i] * x[j];
      const Coeffs& row = right_[static_cast<std::size_t>(i) * a.dim() + j];
      for (int k = 0; k < dim_; ++k)
        if (row[k] != 0) out[k] += c * row[k];
    }
  }
  return normalized(a.ring(), std::move(out));
}

Coeffs InvolutiveBimodule::involve(const InvolutiveAlgebra& a, std::span<const Rat> m) const {
  if (m.size() != static_cast<std::size_t>(dim_)) throw ShapeMismatch("involve operand length");
  Coeffs out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (m[i] == 0) continue;
    for (int k = 0; k < dim_; ++k)
      if (involution_[i][k] != 0) out[k] += m[i] * involution_[i][k];
  }
  return normalized(a.ring(), std::move(out));
}

ValidationReport InvolutiveBimodule::validate(const InvolutiveAlgebra& a) const {
  ValidationReport report;
  auto fail = [&](std::string axiom, std::vector<int> witness) {
    report.issues.push_back({std::move(axiom), std::move(witness)});
  };
  const int d = a.dim();
  auto mvec = [&](int i) { return basis_vec(dim_, i); };
  auto avec = [&](int i) { return basis_vec(d, i); };

  for (int m = 0; m < dim_; ++m) {
    if (!equal(act_left(a, a.unit(), mvec(m)), mvec(m))) fail("unit does not act as identity on the left", {m});
    if (!equal(act_right(a, mvec(m), a.unit()), mvec(m))) fail("unit does not act as identity on the right", {m});
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < dim_; ++m) {
        if (!equal(act_left(a, a.mult_table(i, j), mvec(m)),
                   act_left(a, avec(i), act_left(a, avec(j), mvec(m)))))
          fail("left action is not associative", {i, j, m});
        if (!equal(act_right(a, mvec(m), a.mult_table(i, j)),
                   act_right(a, act_right(a, mvec(m), avec(i)), avec(j))))
          fail("right action is not associative", {m, i, j});
        if (!equal(act_right(a, act_left(a, avec(i), mvec(m)), avec(j)),
                   act_left(a, avec(i), act_right(a, mvec(m), avec(j)))))
          fail("left and right actions do not commute", {i, m, j});
      }
  for (int m = 0; m < dim_; ++m)
    if (!equal(involve(a, involution_[m]), mvec(m)))
      fail("bimodule involution does not square to the identity", {m});
  for (int i = 0; i < d; ++i)
    for (int m = 0; m < dim_; ++m)
      for (int j = 0; j < d; ++j) {
        Coeffs lhs = involve(a, act_right(a, act_left(a, avec(i), mvec(m)), avec(j)));
        Coeffs rhs = act_right(a, act_left(a, a.involve(avec(j)), involve(a, mvec(m))),
                               a.involve(avec(i)));
        if (!equal(lhs, rhs)) fail("involution compatibility fails", {i, m, j});
      }
  return report;
}

}  // namespace invhom
