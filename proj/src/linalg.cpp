#include "invhom/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace invhom {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(long p) {
  if (!is_prime(p)) throw Error("PrimeField modulus must be prime, got " + std::to_string(p));
  return {Kind::PrimeField, p};
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    long p = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw ParseError("bad ring name: " + std::string(text));
      p = p * 10 + (c - '0');
    }
    return prime_field(p);
  }
  throw ParseError("bad ring name: " + std::string(text) + " (expected Q, Z or F<p>)");
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p);
  }
  return "?";
}

Rat ring_normalize(const Ring& ring, const Rat& value) {
  switch (ring.kind) {
    case Ring::Kind::Rationals: {
      Rat v = value;
      v.canonicalize();
      return v;
    }
    case Ring::Kind::Integers: {
      Rat v = value;
      v.canonicalize();
      if (v.get_den() != 1) throw Error("non-integer scalar over Z: " + v.get_str());
      return v;
    }
    case Ring::Kind::PrimeField: {
      Rat v = value;
      v.canonicalize();
      Int p(ring.p);
      Int num = v.get_num() % p;
      if (num < 0) num += p;
      Int den = v.get_den() % p;
      if (den == 0) throw Error("denominator divisible by p in F" + std::to_string(ring.p));
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("no inverse mod p");
      Int rep = (num * inv) % p;
      if (rep < 0) rep += p;
      return Rat(rep);
    }
  }
  throw Error("unreachable ring kind");
}

ExactMatrix::ExactMatrix(Ring ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(Ring ring, int n) {
  ExactMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_triplets(Ring ring, int rows, int cols,
                                       const std::vector<Triplet>& entries) {
  ExactMatrix m(ring, rows, cols);
  for (const auto& t : entries) m.add_at(t.row, t.col, t.value);
  return m;
}

void ExactMatrix::set(int r, int c, const Rat& value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw IndexOutOfRange("matrix entry out of range");
  data_[index(r, c)] = ring_normalize(ring_, value);
}

void ExactMatrix::add_at(int r, int c, const Rat& value) {
  set(r, c, at(r, c) + value);
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& rhs) const {
  if (ring_ != rhs.ring_) throw ShapeMismatch("ring mismatch in matrix product");
  if (cols_ != rhs.rows_) throw ShapeMismatch("inner dimensions disagree");
  ExactMatrix out(ring_, rows_, rhs.cols_);
  // Skips zero entries of the right factor; bar-construction differentials
  // are sparse and this keeps the d.d = 0 checks cheap.
  for (int j = 0; j < rhs.cols_; ++j) {
    for (int k = 0; k < rhs.rows_; ++k) {
      const Rat& b = rhs.at(k, j);
      if (b == 0) continue;
      for (int i = 0; i < rows_; ++i) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        out.data_[out.index(i, j)] += a * b;
      }
    }
  }
  for (auto& v : out.data_) v = ring_normalize(ring_, v);
  return out;
}

ExactMatrix ExactMatrix::added(const ExactMatrix& rhs) const {
  if (ring_ != rhs.ring_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw ShapeMismatch("matrix sum shape mismatch");
  ExactMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = ring_normalize(ring_, data_[i] + rhs.data_[i]);
  return out;
}

ExactMatrix ExactMatrix::scaled(const Rat& factor) const {
  ExactMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = ring_normalize(ring_, data_[i] * factor);
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(ring_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.data_[out.index(c, r)] = at(r, c);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "[") << at(r, c).get_str();
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

namespace {

// Integer working matrix for the Smith reduction, with optional tracking of
// the column transform V and its inverse (A_original * V = A_current).
struct SnfWorkspace {
  int rows, cols;
  std::vector<Int> a;
  bool track;
  std::vector<Int> v, vinv;

  SnfWorkspace(const ExactMatrix& m, bool track_cols) : rows(m.rows()), cols(m.cols()), track(track_cols) {
    a.resize(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const Rat& x = m.at(r, c);
        if (x.get_den() != 1) throw Error("Smith normal form requires integer entries");
        a[static_cast<std::size_t>(r) * cols + c] = x.get_num();
      }
    if (track) {
      v.assign(static_cast<std::size_t>(cols) * cols, 0);
      vinv.assign(static_cast<std::size_t>(cols) * cols, 0);
      for (int i = 0; i < cols; ++i) v[static_cast<std::size_t>(i) * cols + i] = vinv[static_cast<std::size_t>(i) * cols + i] = 1;
    }
  }

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Int& vat(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  Int& viat(int r, int c) { return vinv[static_cast<std::size_t>(r) * cols + c]; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
  void add_row(int dst, int src, const Int& k) {  // row_dst += k * row_src
    if (k == 0) return;
    for (int c = 0; c < cols; ++c) at(dst, c) += k * at(src, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    if (track) {
      for (int r = 0; r < cols; ++r) std::swap(vat(r, i), vat(r, j));
      for (int c = 0; c < cols; ++c) std::swap(viat(i, c), viat(j, c));
    }
  }
  void add_col(int dst, int src, const Int& k) {  // col_dst += k * col_src
    if (k == 0) return;
    for (int r = 0; r < rows; ++r) at(r, dst) += k * at(r, src);
    if (track) {
      for (int r = 0; r < cols; ++r) vat(r, dst) += k * vat(r, src);
      // inverse op on the left: row_src -= k * row_dst
      for (int c = 0; c < cols; ++c) viat(src, c) -= k * viat(dst, c);
    }
  }

  // Full Smith reduction; returns positive invariant factors on the diagonal.
  std::vector<Int> reduce() {
    std::vector<Int> factors;
    int t = 0;
    const int bound = std::min(rows, cols);
    while (t < bound) {
      // smallest-nonzero-absolute-value pivot in the trailing submatrix
      int pr = -1, pc = -1;
      Int best;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c) {
          const Int& x = at(r, c);
          if (x == 0) continue;
          Int ax = abs(x);
          if (pr < 0 || ax < best) {
            best = ax;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) break;  // trailing submatrix vanished
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int r = t + 1; r < rows; ++r) {
          if (at(r, t) == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), at(r, t).get_mpz_t(), at(t, t).get_mpz_t());
          add_row(r, t, -q);
          if (at(r, t) != 0) {  // remainder is a smaller pivot
            swap_rows(t, r);
            clean = false;
          }
        }
        for (int c = t + 1; c < cols; ++c) {
          if (at(t, c) == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), at(t, c).get_mpz_t(), at(t, t).get_mpz_t());
          add_col(c, t, -q);
          if (at(t, c) != 0) {
            swap_cols(t, c);
            clean = false;
          }
        }
        if (!clean) continue;
        // enforce that the pivot divides the whole trailing submatrix
        for (int r = t + 1; r < rows && clean; ++r)
          for (int c = t + 1; c < cols && clean; ++c)
            if (at(r, c) % at(t, t) != 0) {
              add_row(t, r, 1);
              clean = false;
            }
      }
      if (at(t, t) < 0) negate_row(t);
      ++t;
    }
    for (int i = 0; i < t; ++i) factors.push_back(at(i, i));
    return factors;
  }
};

// Row-reduce a field matrix in place; returns pivot columns. Entries are
// assumed already normalized for the ring.
std::vector<int> row_reduce(const Ring& ring, std::vector<Rat>& a, int rows, int cols) {
  auto at = [&](int r, int c) -> Rat& { return a[static_cast<std::size_t>(r) * cols + c]; };
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int pr = -1;
    for (int r = lead; r < rows; ++r)
      if (at(r, c) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(lead, j));
    Rat inv = ring_normalize(ring, 1 / at(lead, c));
    for (int j = c; j < cols; ++j) at(lead, j) = ring_normalize(ring, at(lead, j) * inv);
    for (int r = 0; r < rows; ++r) {
      if (r == lead || at(r, c) == 0) continue;
      Rat f = at(r, c);
      for (int j = c; j < cols; ++j)
        at(r, j) = ring_normalize(ring, at(r, j) - f * at(lead, j));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

Ring field_of(const Ring& ring) {
  return ring.kind == Ring::Kind::Integers ? Ring::rationals() : ring;
}

std::vector<Rat> copy_entries(const ExactMatrix& m, const Ring& field) {
  std::vector<Rat> a(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      a[static_cast<std::size_t>(r) * m.cols() + c] = ring_normalize(field, m.at(r, c));
  return a;
}

}  // namespace

SmithResult smith_normal_form(const ExactMatrix& m) {
  if (m.ring().kind != Ring::Kind::Integers)
    throw Error("smith_normal_form requires the ring Z");
  SnfWorkspace ws(m, /*track_cols=*/false);
  SmithResult out;
  out.factors = ws.reduce();
  out.rank = static_cast<int>(out.factors.size());
  return out;
}

int rank(const ExactMatrix& m) {
  Ring field = field_of(m.ring());
  auto a = copy_entries(m, field);
  return static_cast<int>(row_reduce(field, a, m.rows(), m.cols()).size());
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  if (!m.ring().is_field()) throw Error("kernel_basis requires a field ring");
  const Ring& ring = m.ring();
  auto a = copy_entries(m, ring);
  auto pivots = row_reduce(ring, a, m.rows(), m.cols());
  std::vector<int> free_cols;
  {
    std::size_t k = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (k < pivots.size() && pivots[k] == c) {
        ++k;
        continue;
      }
      free_cols.push_back(c);
    }
  }
  ExactMatrix basis(ring, m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    basis.set(fc, static_cast<int>(j), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rat& v = a[r * m.cols() + fc];
      if (v != 0) basis.set(pivots[r], static_cast<int>(j), -v);
    }
  }
  return basis;
}

ExactMatrix integer_kernel_lattice(const ExactMatrix& m) {
  if (m.ring().kind != Ring::Kind::Integers)
    throw Error("integer_kernel_lattice requires the ring Z");
  SnfWorkspace ws(m, /*track_cols=*/true);
  auto factors = ws.reduce();
  int r = static_cast<int>(factors.size());
  ExactMatrix basis(Ring::integers(), m.cols(), m.cols() - r);
  for (int c = r; c < m.cols(); ++c)
    for (int row = 0; row < m.cols(); ++row)
      basis.set(row, c - r, Rat(ws.vat(row, c)));
  return basis;
}

ExactMatrix solve_exact(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.ring().is_field()) throw Error("solve_exact requires a field ring");
  if (a.ring() != b.ring()) throw ShapeMismatch("ring mismatch in solve");
  if (a.rows() != b.rows()) throw ShapeMismatch("row counts disagree in solve");
  const Ring& ring = a.ring();
  const int cols = a.cols() + b.cols();
  std::vector<Rat> aug(static_cast<std::size_t>(a.rows()) * cols);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug[static_cast<std::size_t>(r) * cols + c] = a.at(r, c);
    for (int c = 0; c < b.cols(); ++c)
      aug[static_cast<std::size_t>(r) * cols + a.cols() + c] = b.at(r, c);
  }
  auto pivots = row_reduce(ring, aug, a.rows(), cols);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] >= a.cols()) throw Error("inconsistent linear system in solve_exact");
  if (static_cast<int>(pivots.size()) != a.cols())
    throw Error("solve_exact requires full column rank");
  ExactMatrix x(ring, a.cols(), b.cols());
  for (int r = 0; r < a.cols(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      x.set(r, c, aug[static_cast<std::size_t>(r) * cols + a.cols() + c]);
  return x;
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << " (+) ";
    first = false;
  };
  if (ring.kind == Ring::Kind::Integers) {
    if (free_rank > 0) {
      sep();
      os << "Z^" << free_rank;
    }
    for (const auto& d : torsion) {
      sep();
      os << "Z/" << d.get_str();
    }
  } else if (free_rank > 0) {
    sep();
    os << (ring.kind == Ring::Kind::Rationals ? "Q" : "F_" + std::to_string(ring.p));
    os << "^" << free_rank;
  }
  if (first) os << "0";
  return os.str();
}

HomologyGroup homology_at(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  if (d_in.ring() != d_out.ring()) throw ShapeMismatch("ring mismatch in homology_at");
  if (d_out.cols() != d_in.rows())
    throw ShapeMismatch("homology_at: d_out has " + std::to_string(d_out.cols()) +
                        " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  if (!d_out.multiply(d_in).is_zero())
    throw CompositionNonzero("d_out . d_in is nonzero");

  const Ring& ring = d_in.ring();
  HomologyGroup h{ring, 0, {}};
  if (ring.is_field()) {
    int dim_kernel = d_out.cols() - rank(d_out);
    h.free_rank = dim_kernel - rank(d_in);
    return h;
  }

  // Over Z: express im(d_in) in coordinates of the kernel lattice of d_out,
  // then read ker/im off a Smith normal form.
  SnfWorkspace ws(d_out, /*track_cols=*/true);
  auto factors = ws.reduce();
  const int r = static_cast<int>(factors.size());
  const int n = d_out.cols();
  const int kdim = n - r;

  // y = Vinv * c for each column c of d_in; the first r coordinates must
  // vanish because d_out * c = 0 and the corresponding diagonal is nonzero.
  ExactMatrix coords(Ring::integers(), kdim, d_in.cols());
  for (int j = 0; j < d_in.cols(); ++j) {
    for (int i = 0; i < n; ++i) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) {
        const Rat& x = d_in.at(k, j);
        if (x == 0) continue;
        acc += ws.viat(i, k) * x.get_num();
      }
      if (i < r) {
        if (acc != 0) throw CompositionNonzero("image does not lie in the kernel lattice");
      } else {
        coords.set(i - r, j, Rat(acc));
      }
    }
  }
  SmithResult sm = smith_normal_form(coords);
  h.free_rank = kdim - sm.rank;
  for (const auto& d : sm.factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

}  // namespace invhom
