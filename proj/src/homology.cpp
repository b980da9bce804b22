#include "invhom/homology.hpp"

#include <functional>
#include <sstream>

namespace invhom {

namespace {

constexpr long kMatrixEntryCap = 64L * 1024 * 1024;

Coeffs basis_vec(int d, int i) {
  Coeffs v(static_cast<std::size_t>(d));
  v[i] = 1;
  return v;
}

int rotation_sign(int n) { return n % 2 == 0 ? 1 : -1; }

int reversal_sign(int n) {
  // (-1)^(n(n+1)/2)
  return (static_cast<long>(n) * (n + 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

TensorElement::TensorElement(Ring ring, int degree, int module_rank, int algebra_rank)
    : ring_(ring), degree_(degree), module_rank_(module_rank), algebra_rank_(algebra_rank) {
  if (degree < 0 || module_rank <= 0 || algebra_rank <= 0)
    throw ShapeMismatch("bad tensor element shape");
}

TensorElement TensorElement::basis(Ring ring, int degree, int module_rank, int algebra_rank,
                                   std::vector<int> idx) {
  TensorElement x(ring, degree, module_rank, algebra_rank);
  x.add_term(idx, 1);
  return x;
}

void TensorElement::add_term(const std::vector<int>& idx, const Rat& c) {
  if (static_cast<int>(idx.size()) != degree_ + 1)
    throw ShapeMismatch("tensor index length does not match the degree");
  if (idx[0] < 0 || idx[0] >= module_rank_) throw IndexOutOfRange("module index out of range");
  for (std::size_t j = 1; j < idx.size(); ++j)
    if (idx[j] < 0 || idx[j] >= algebra_rank_)
      throw IndexOutOfRange("algebra index out of range");
  Rat v = ring_normalize(ring_, terms_[idx] + c);
  if (v == 0)
    terms_.erase(idx);
  else
    terms_[idx] = v;
}

TensorElement TensorElement::added(const TensorElement& rhs) const {
  if (degree_ != rhs.degree_ || module_rank_ != rhs.module_rank_ ||
      algebra_rank_ != rhs.algebra_rank_ || !(ring_ == rhs.ring_))
    throw ShapeMismatch("adding tensors of different shapes");
  TensorElement out = *this;
  for (const auto& [idx, c] : rhs.terms_) out.add_term(idx, c);
  return out;
}

TensorElement TensorElement::scaled(const Rat& factor) const {
  TensorElement out(ring_, degree_, module_rank_, algebra_rank_);
  if (factor == 0) return out;
  for (const auto& [idx, c] : terms_) out.add_term(idx, c * factor);
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*(";
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j];
    os << ")";
  }
  return os.str();
}

long tensor_rank(int module_rank, int algebra_rank, int degree) {
  long r = module_rank;
  for (int i = 0; i < degree; ++i) {
    r *= algebra_rank;
    if (r > kMatrixEntryCap) throw CapExceeded("tensor module rank exceeds cap");
  }
  return r;
}

long encode_tensor_index(int module_rank, int algebra_rank, const std::vector<int>& idx) {
  long code = 0;
  for (std::size_t j = idx.size() - 1; j >= 1; --j) code = code * algebra_rank + idx[j];
  return code * module_rank + idx[0];
}

std::vector<int> decode_tensor_index(int module_rank, int algebra_rank, int degree, long code) {
  std::vector<int> idx(degree + 1);
  idx[0] = static_cast<int>(code % module_rank);
  code /= module_rank;
  for (int j = 1; j <= degree; ++j) {
    idx[j] = static_cast<int>(code % algebra_rank);
    code /= algebra_rank;
  }
  return idx;
}

namespace {

// Accumulate scalar * (slot_0 (x) ... (x) slot_m) into out, expanding the
// product of coefficient vectors over all basis combinations.
void expand_product(TensorElement& out, const std::vector<Coeffs>& slots, const Rat& scalar) {
  std::vector<int> idx(slots.size(), 0);
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t pos, const Rat& acc) {
    if (pos == slots.size()) {
      out.add_term(idx, acc);
      return;
    }
    const Coeffs& v = slots[pos];
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      idx[pos] = static_cast<int>(k);
      rec(pos + 1, acc * v[k]);
    }
  };
  rec(0, scalar);
}

}  // namespace

TensorElement bar_apply(const InvolutiveAlgebra& a, const NCMorphism& f, const TensorElement& x) {
  if (x.module_rank() != a.dim() || x.algebra_rank() != a.dim())
    throw ShapeMismatch("bar_apply expects a tensor over A only");
  if (f.source_points() != x.degree() + 1)
    throw SizeMismatch("bar_apply: morphism source does not match the tensor degree");
  TensorElement out(x.ring(), f.target_index(), a.dim(), a.dim());
  std::vector<Coeffs> slots(f.target_points());
  for (const auto& [idx, c] : x.terms()) {
    for (int i = 0; i < f.target_points(); ++i) {
      const auto& pre = f.preimage(i);
      Coeffs acc = a.unit();
      bool first = true;
      for (const auto& pt : pre) {
        Coeffs factor = basis_vec(a.dim(), idx[pt.element]);
        if (pt.flip) factor = a.involve(factor);
        acc = first ? std::move(factor) : a.multiply(acc, factor);
        first = false;
      }
      slots[i] = std::move(acc);
    }
    expand_product(out, slots, c);
  }
  return out;
}

TensorElement based_bar_apply(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                              const NCMorphism& f, const TensorElement& x) {
  if (x.module_rank() != m.dim() || x.algebra_rank() != a.dim())
    throw ShapeMismatch("based_bar_apply tensor shape mismatch");
  if (f.source_points() != x.degree() + 1)
    throw SizeMismatch("based_bar_apply: morphism source does not match the tensor degree");
  if (!f.is_based()) throw NotBased("based_bar_apply requires f(0) = 0");

  TensorElement out(x.ring(), f.target_index(), m.dim(), a.dim());
  std::vector<Coeffs> slots(f.target_points());
  for (const auto& [idx, c] : x.terms()) {
    // slot 0 mixes one module factor with algebra factors
    {
      Coeffs alg;   // product of algebra factors seen so far, before the module factor
      Coeffs mod;   // running value once the module factor has been absorbed
      bool in_module = false, any = false;
      for (const auto& pt : f.preimage(0)) {
        if (pt.element == 0) {
          Coeffs mfac = basis_vec(m.dim(), idx[0]);
          if (pt.flip) mfac = m.involve(a, mfac);
          mod = any && !in_module ? m.act_left(a, alg, mfac) : std::move(mfac);
          in_module = true;
          any = true;
        } else {
          Coeffs factor = basis_vec(a.dim(), idx[pt.element]);
          if (pt.flip) factor = a.involve(factor);
          if (in_module)
            mod = m.act_right(a, mod, factor);
          else
            alg = any ? a.multiply(alg, factor) : std::move(factor);
          any = true;
        }
      }
      slots[0] = std::move(mod);
    }
    for (int i = 1; i < f.target_points(); ++i) {
      Coeffs acc = a.unit();
      bool first = true;
      for (const auto& pt : f.preimage(i)) {
        Coeffs factor = basis_vec(a.dim(), idx[pt.element]);
        if (pt.flip) factor = a.involve(factor);
        acc = first ? std::move(factor) : a.multiply(acc, factor);
        first = false;
      }
      slots[i] = std::move(acc);
    }
    expand_product(out, slots, c);
  }
  return out;
}

TensorElement loday_face(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int i,
                         const TensorElement& x) {
  const int n = x.degree();
  if (n < 1 || i < 0 || i > n) throw IndexOutOfRange("face index out of range");
  TensorElement out(x.ring(), n - 1, m.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<Coeffs> slots(static_cast<std::size_t>(n));
    if (i == 0) {
      slots[0] = m.act_right(a, basis_vec(m.dim(), idx[0]), basis_vec(a.dim(), idx[1]));
      for (int j = 2; j <= n; ++j) slots[j - 1] = basis_vec(a.dim(), idx[j]);
    } else if (i == n) {
      slots[0] = m.act_left(a, basis_vec(a.dim(), idx[n]), basis_vec(m.dim(), idx[0]));
      for (int j = 1; j <= n - 1; ++j) slots[j] = basis_vec(a.dim(), idx[j]);
    } else {
      slots[0] = basis_vec(m.dim(), idx[0]);
      for (int j = 1; j < i; ++j) slots[j] = basis_vec(a.dim(), idx[j]);
      slots[i] = a.multiply(basis_vec(a.dim(), idx[i]), basis_vec(a.dim(), idx[i + 1]));
      for (int j = i + 2; j <= n; ++j) slots[j - 1] = basis_vec(a.dim(), idx[j]);
    }
    expand_product(out, slots, c);
  }
  return out;
}

TensorElement loday_degeneracy(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int j,
                               const TensorElement& x) {
  const int n = x.degree();
  if (j < 0 || j > n) throw IndexOutOfRange("degeneracy index out of range");
  TensorElement out(x.ring(), n + 1, m.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    for (int k = 0; k < a.dim(); ++k) {
      if (a.unit()[k] == 0) continue;
      std::vector<int> nidx(idx.begin(), idx.begin() + (j + 1));
      nidx.push_back(k);
      nidx.insert(nidx.end(), idx.begin() + (j + 1), idx.end());
      out.add_term(nidx, c * a.unit()[k]);
    }
  }
  return out;
}

TensorElement hochschild_boundary(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                  const TensorElement& x) {
  const int n = x.degree();
  TensorElement out(x.ring(), n - 1, m.dim(), a.dim());
  for (int i = 0; i <= n; ++i) {
    TensorElement face = loday_face(a, m, i, x);
    out = out.added(i % 2 == 0 ? face : face.scaled(-1));
  }
  return out;
}

TensorElement bar_boundary_prime(const InvolutiveAlgebra& a, const TensorElement& x) {
  const int n = x.degree();
  InvolutiveBimodule reg = InvolutiveBimodule::regular(a);
  TensorElement out(x.ring(), n - 1, a.dim(), a.dim());
  for (int i = 0; i <= n - 1; ++i) {
    TensorElement face = loday_face(a, reg, i, x);
    out = out.added(i % 2 == 0 ? face : face.scaled(-1));
  }
  return out;
}

TensorElement apply_reflexive(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                              const TensorElement& x) {
  const int n = x.degree();
  const Rat sign = reversal_sign(n);
  TensorElement out(x.ring(), n, m.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<Coeffs> slots(static_cast<std::size_t>(n + 1));
    slots[0] = m.involve(a, basis_vec(m.dim(), idx[0]));
    for (int j = 1; j <= n; ++j)
      slots[j] = a.involve(basis_vec(a.dim(), idx[n - j + 1]));
    expand_product(out, slots, c * sign);
  }
  return out;
}

TensorElement apply_cyclic(const InvolutiveAlgebra& a, const TensorElement& x) {
  if (x.module_rank() != a.dim()) throw ShapeMismatch("apply_cyclic expects a tensor over A only");
  const int n = x.degree();
  const Rat sign = rotation_sign(n);
  TensorElement out(x.ring(), n, a.dim(), a.dim());
  for (const auto& [idx, c] : x.terms()) {
    std::vector<int> nidx(idx.size());
    nidx[0] = idx[n];
    for (int j = 1; j <= n; ++j) nidx[j] = idx[j - 1];
    out.add_term(nidx, c * sign);
  }
  return out;
}

ChainComplex::ChainComplex(Ring ring, std::vector<long> ranks,
                           std::vector<ExactMatrix> differentials)
    : ring_(ring), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) throw ShapeMismatch("chain complex needs at least degree 0");
  if (diffs_.size() + 1 != ranks_.size())
    throw ShapeMismatch("expected one differential per degree above 0");
  for (std::size_t n = 1; n < ranks_.size(); ++n) {
    const ExactMatrix& d = diffs_[n - 1];
    if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n])
      throw ShapeMismatch("differential shape does not match ranks at degree " +
                          std::to_string(n));
    if (!(d.ring() == ring_)) throw ShapeMismatch("differential ring mismatch");
  }
  for (std::size_t n = 2; n < ranks_.size(); ++n)
    if (!diffs_[n - 2].multiply(diffs_[n - 1]).is_zero())
      throw CompositionNonzero("d.d != 0 at degree " + std::to_string(n));
}

const ExactMatrix& ChainComplex::differential(int n) const {
  if (n < 1 || n > top_degree()) throw IndexOutOfRange("no differential at degree " + std::to_string(n));
  return diffs_[n - 1];
}

HomologyGroup ChainComplex::homology(int n) const {
  if (n < 0 || n + 1 > top_degree())
    throw IndexOutOfRange("homology degree " + std::to_string(n) +
                          " needs the complex built one degree higher");
  const ExactMatrix& d_in = diffs_[n];  // d_{n+1}
  if (n == 0) {
    ExactMatrix d_out(ring_, 0, static_cast<int>(ranks_[0]));
    return homology_at(d_in, d_out);
  }
  return homology_at(d_in, diffs_[n - 1]);
}

namespace {

ExactMatrix operator_matrix(const Ring& ring, long rows, long cols,
                            const std::function<TensorElement(long)>& image_of,
                            int module_rank, int algebra_rank) {
  if (rows * cols > kMatrixEntryCap) throw CapExceeded("operator matrix exceeds entry cap");
  std::vector<Triplet> triplets;
  for (long j = 0; j < cols; ++j) {
    TensorElement img = image_of(j);
    for (const auto& [idx, c] : img.terms())
      triplets.push_back(
          {static_cast<int>(encode_tensor_index(module_rank, algebra_rank, idx)),
           static_cast<int>(j), c});
  }
  return ExactMatrix::from_triplets(ring, static_cast<int>(rows), static_cast<int>(cols),
                                    triplets);
}

}  // namespace

ExactMatrix boundary_matrix(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int n) {
  const long rows = tensor_rank(m.dim(), a.dim(), n - 1);
  const long cols = tensor_rank(m.dim(), a.dim(), n);
  return operator_matrix(
      a.ring(), rows, cols,
      [&](long j) {
        return hochschild_boundary(
            a, m,
            TensorElement::basis(a.ring(), n, m.dim(), a.dim(),
                                 decode_tensor_index(m.dim(), a.dim(), n, j)));
      },
      m.dim(), a.dim());
}

ExactMatrix boundary_prime_matrix(const InvolutiveAlgebra& a, int n) {
  const long rows = tensor_rank(a.dim(), a.dim(), n - 1);
  const long cols = tensor_rank(a.dim(), a.dim(), n);
  return operator_matrix(
      a.ring(), rows, cols,
      [&](long j) {
        return bar_boundary_prime(
            a, TensorElement::basis(a.ring(), n, a.dim(), a.dim(),
                                    decode_tensor_index(a.dim(), a.dim(), n, j)));
      },
      a.dim(), a.dim());
}

ExactMatrix reflexive_operator(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int n) {
  const long size = tensor_rank(m.dim(), a.dim(), n);
  return operator_matrix(
      a.ring(), size, size,
      [&](long j) {
        return apply_reflexive(
            a, m,
            TensorElement::basis(a.ring(), n, m.dim(), a.dim(),
                                 decode_tensor_index(m.dim(), a.dim(), n, j)));
      },
      m.dim(), a.dim());
}

ExactMatrix cyclic_operator(const InvolutiveAlgebra& a, int n) {
  const long size = tensor_rank(a.dim(), a.dim(), n);
  return operator_matrix(
      a.ring(), size, size,
      [&](long j) {
        return apply_cyclic(a, TensorElement::basis(a.ring(), n, a.dim(), a.dim(),
                                                    decode_tensor_index(a.dim(), a.dim(), n, j)));
      },
      a.dim(), a.dim());
}

ExactMatrix cyclic_norm_operator(const InvolutiveAlgebra& a, int n) {
  const long size = tensor_rank(a.dim(), a.dim(), n);
  return operator_matrix(
      a.ring(), size, size,
      [&](long j) {
        TensorElement acc(a.ring(), n, a.dim(), a.dim());
        TensorElement power = TensorElement::basis(
            a.ring(), n, a.dim(), a.dim(), decode_tensor_index(a.dim(), a.dim(), n, j));
        for (int i = 0; i <= n; ++i) {
          acc = acc.added(power);
          power = apply_cyclic(a, power);
        }
        return acc;
      },
      a.dim(), a.dim());
}

ChainComplex hochschild_complex(const InvolutiveAlgebra& a, const InvolutiveBimodule& m, int N) {
  if (N < 0) throw IndexOutOfRange("negative truncation degree");
  std::vector<long> ranks;
  std::vector<ExactMatrix> diffs;
  for (int n = 0; n <= N; ++n) ranks.push_back(tensor_rank(m.dim(), a.dim(), n));
  for (int n = 1; n <= N; ++n) diffs.push_back(boundary_matrix(a, m, n));
  return ChainComplex(a.ring(), std::move(ranks), std::move(diffs));
}

namespace {

// First-quadrant bicomplex totalization: block p of Tot_n holds the (p, n-p)
// component; verticals stay in block p, horizontals drop to block p - 1.
ChainComplex totalize(const Ring& ring, int N, const std::function<long(int)>& rank_of,
                      const std::function<ExactMatrix(int, int)>& vertical,
                      const std::function<ExactMatrix(int, int)>& horizontal) {
  std::vector<long> tot_ranks(N + 1, 0);
  for (int n = 0; n <= N; ++n)
    for (int p = 0; p <= n; ++p) tot_ranks[n] += rank_of(n - p);

  std::vector<ExactMatrix> diffs;
  for (int n = 1; n <= N; ++n) {
    std::vector<long> src_offset(n + 1, 0), dst_offset(n, 0);
    for (int p = 1; p <= n; ++p) src_offset[p] = src_offset[p - 1] + rank_of(n - (p - 1));
    for (int p = 1; p <= n - 1; ++p) dst_offset[p] = dst_offset[p - 1] + rank_of(n - 1 - (p - 1));

    std::vector<Triplet> triplets;
    auto place = [&](const ExactMatrix& block, long row0, long col0) {
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
          if (block.at(r, c) != 0)
            triplets.push_back({static_cast<int>(row0 + r), static_cast<int>(col0 + c),
                                block.at(r, c)});
    };
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (q >= 1) place(vertical(p, q), dst_offset[p], src_offset[p]);
      if (p >= 1) place(horizontal(p, q), dst_offset[p - 1], src_offset[p]);
    }
    diffs.push_back(ExactMatrix::from_triplets(ring, static_cast<int>(tot_ranks[n - 1]),
                                               static_cast<int>(tot_ranks[n]), triplets));
  }
  return ChainComplex(ring, std::move(tot_ranks), std::move(diffs));
}

}  // namespace

ChainComplex reflexive_total_complex(const InvolutiveAlgebra& a, const InvolutiveBimodule& m,
                                     int N) {
  std::vector<ExactMatrix> b, y;
  for (int q = 0; q <= N; ++q) y.push_back(reflexive_operator(a, m, q));
  for (int q = 1; q <= N; ++q) b.push_back(boundary_matrix(a, m, q));
  auto rank_of = [&](int q) { return tensor_rank(m.dim(), a.dim(), q); };
  auto vertical = [&](int p, int q) {
    return p % 2 == 0 ? b[q - 1] : b[q - 1].scaled(-1);
  };
  auto horizontal = [&](int p, int q) {
    ExactMatrix id = ExactMatrix::identity(a.ring(), static_cast<int>(rank_of(q)));
    return p % 2 == 1 ? id.added(y[q].scaled(-1)) : id.added(y[q]);
  };
  return totalize(a.ring(), N, rank_of, vertical, horizontal);
}

ChainComplex cyclic_total_complex(const InvolutiveAlgebra& a, int N) {
  InvolutiveBimodule reg = InvolutiveBimodule::regular(a);
  std::vector<ExactMatrix> b, bprime, t, norm;
  for (int q = 0; q <= N; ++q) {
    t.push_back(cyclic_operator(a, q));
    norm.push_back(cyclic_norm_operator(a, q));
  }
  for (int q = 1; q <= N; ++q) {
    b.push_back(boundary_matrix(a, reg, q));
    bprime.push_back(boundary_prime_matrix(a, q));
  }
  auto rank_of = [&](int q) { return tensor_rank(a.dim(), a.dim(), q); };
  auto vertical = [&](int p, int q) {
    return p % 2 == 0 ? b[q - 1] : bprime[q - 1].scaled(-1);
  };
  auto horizontal = [&](int p, int q) {
    if (p % 2 == 1) {
      ExactMatrix id = ExactMatrix::identity(a.ring(), static_cast<int>(rank_of(q)));
      return id.added(t[q].scaled(-1));
    }
    return norm[q];
  };
  return totalize(a.ring(), N, rank_of, vertical, horizontal);
}

std::vector<ExactMatrix> dihedral_involution(const InvolutiveAlgebra& a, int N) {
  InvolutiveBimodule reg = InvolutiveBimodule::regular(a);
  std::vector<ExactMatrix> y, t;
  for (int q = 0; q <= N; ++q) {
    y.push_back(reflexive_operator(a, reg, q));
    t.push_back(cyclic_operator(a, q));
  }
  auto rank_of = [&](int q) { return tensor_rank(a.dim(), a.dim(), q); };
  std::vector<ExactMatrix> out;
  for (int n = 0; n <= N; ++n) {
    long total = 0;
    for (int p = 0; p <= n; ++p) total += rank_of(n - p);
    std::vector<Triplet> triplets;
    long offset = 0;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      ExactMatrix block = p % 2 == 0 ? y[q] : y[q].multiply(t[q]);
      if (((p + 1) / 2) % 2 == 1) block = block.scaled(-1);
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c)
          if (block.at(r, c) != 0)
            triplets.push_back({static_cast<int>(offset + r), static_cast<int>(offset + c),
                                block.at(r, c)});
      offset += rank_of(q);
    }
    out.push_back(ExactMatrix::from_triplets(a.ring(), static_cast<int>(total),
                                             static_cast<int>(total), triplets));
  }
  return out;
}

ChainComplex eigenspace_subcomplex(const ChainComplex& c,
                                   const std::vector<ExactMatrix>& involution, int eigenvalue) {
  if (!c.ring().is_field()) throw Error("eigenspace restriction needs field coefficients");
  if (eigenvalue != 1 && eigenvalue != -1) throw Error("eigenvalue must be +1 or -1");
  if (static_cast<int>(involution.size()) < c.top_degree() + 1)
    throw ShapeMismatch("need one involution per degree");

  std::vector<ExactMatrix> bases;
  std::vector<long> ranks;
  for (int n = 0; n <= c.top_degree(); ++n) {
    const ExactMatrix& y = involution[n];
    ExactMatrix shifted =
        y.added(ExactMatrix::identity(c.ring(), y.rows()).scaled(-eigenvalue));
    bases.push_back(kernel_basis(shifted));
    ranks.push_back(bases.back().cols());
  }
  std::vector<ExactMatrix> diffs;
  for (int n = 1; n <= c.top_degree(); ++n) {
    ExactMatrix image = c.differential(n).multiply(bases[n]);
    if (ranks[n - 1] == 0) {
      if (!image.is_zero()) throw Error("differential leaves the eigenspace");
      diffs.emplace_back(c.ring(), 0, static_cast<int>(ranks[n]));
    } else {
      diffs.push_back(solve_exact(bases[n - 1], image));
    }
  }
  return ChainComplex(c.ring(), std::move(ranks), std::move(diffs));
}

std::vector<HomologyGroup> hochschild_homology(const InvolutiveAlgebra& a,
                                               const InvolutiveBimodule& m, int N) {
  ChainComplex c = hochschild_complex(a, m, N + 1);
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= N; ++n) out.push_back(c.homology(n));
  return out;
}

std::vector<HomologyGroup> reflexive_homology(const InvolutiveAlgebra& a,
                                              const InvolutiveBimodule& m, int N) {
  ChainComplex c = reflexive_total_complex(a, m, N + 1);
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= N; ++n) out.push_back(c.homology(n));
  return out;
}

std::vector<HomologyGroup> cyclic_homology(const InvolutiveAlgebra& a, int N) {
  ChainComplex c = cyclic_total_complex(a, N + 1);
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= N; ++n) out.push_back(c.homology(n));
  return out;
}

std::vector<HomologyGroup> dihedral_homology_rational(const InvolutiveAlgebra& a, int N) {
  if (!(a.ring() == Ring::rationals()))
    throw RingNotRational("dihedral homology is computed over Q only");
  ChainComplex c = cyclic_total_complex(a, N + 1);
  std::vector<ExactMatrix> y = dihedral_involution(a, N + 1);
  // the derived signs must give a chain involution; check before restricting
  for (int n = 0; n <= N + 1; ++n) {
    if (!(y[n].multiply(y[n]) == ExactMatrix::identity(a.ring(), y[n].rows())))
      throw Error("dihedral involution does not square to the identity");
    if (n >= 1 && !(y[n - 1].multiply(c.differential(n)) == c.differential(n).multiply(y[n])))
      throw Error("dihedral involution is not a chain map");
  }
  ChainComplex invariants = eigenspace_subcomplex(c, y, +1);
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= N; ++n) out.push_back(invariants.homology(n));
  return out;
}

}  // namespace invhom
