#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith and
// Hermite normal forms, saturated kernel bases and integer sections.

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/error.hpp"

namespace trinom {

using Int = boost::multiprecision::cpp_int;
using IntVector = std::vector<Int>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// Quotient rounded towards negative infinity; b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Row-major literal, e.g. IntMatrix{{-3, 5, 0, 0}, {-3, 0, 1, 1}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols_if_empty = 0) {
    IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<Int> col(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  // (row a, row b) <- (x row a + y row b, z row a + w row b)
  void mix_rows(std::size_t a, std::size_t b, const Int& x, const Int& y, const Int& z, const Int& w) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Int ra = (*this)(a, j), rb = (*this)(b, j);
      (*this)(a, j) = x * ra + y * rb;
      (*this)(b, j) = z * ra + w * rb;
    }
  }
  void mix_cols(std::size_t a, std::size_t b, const Int& x, const Int& y, const Int& z, const Int& w) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Int ca = (*this)(i, a), cb = (*this)(i, b);
      (*this)(i, a) = x * ca + y * cb;
      (*this)(i, b) = z * ca + w * cb;
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    std::vector<Int> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
    return y;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  IntMatrix D;
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;
};

/// g = gcd(a, b) > 0 with x a + y b = g; a, b not both zero.
inline std::array<Int, 3> extended_gcd(const Int& a, const Int& b) {
  Int r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < 0) return {Int(-r0), Int(-x0), Int(-y0)};
  return {r0, x0, y0};
}

/// Smith normal form with transforms: U * A * V == D, D diagonal with
/// nonnegative entries d_1 | d_2 | ... and zeros after position `rank`.
///
/// Entries beside the pivot are cleared with 2 x 2 unimodular steps built
/// from extended gcds, so the pivot only ever shrinks to a divisor of itself.
inline SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  SmithForm s{A, IntMatrix::identity(m), IntMatrix::identity(n), 0};
  IntMatrix& D = s.D;

  std::size_t t = 0;
  while (t < m && t < n) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi == m || abs_int(D(i, j)) < abs_int(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    D.swap_rows(t, pi);
    s.U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    s.V.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Int a = D(t, t), b = D(i, t);
        if (b % a == 0) {
          const Int q = b / a;
          D.add_row(i, t, -q);
          s.U.add_row(i, t, -q);
        } else {
          const auto [g, x, y] = extended_gcd(a, b);
          const Int bg = b / g, ag = a / g;
          D.mix_rows(t, i, x, y, -bg, ag);
          s.U.mix_rows(t, i, x, y, -bg, ag);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Int a = D(t, t), b = D(t, j);
        if (b % a == 0) {
          const Int q = b / a;
          D.add_col(j, t, -q);
          s.V.add_col(j, t, -q);
        } else {
          const auto [g, x, y] = extended_gcd(a, b);
          const Int bg = b / g, ag = a / g;
          D.mix_cols(t, j, x, y, -bg, ag);
          s.V.mix_cols(t, j, x, y, -bg, ag);
          clean = false;  // column t may have refilled below the pivot
        }
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      D.add_row(t, bad, 1);
      s.U.add_row(t, bad, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

/// Row-style Hermite normal form of the row lattice of A: nonzero rows only,
/// strictly increasing pivot columns, positive pivots, entries above each
/// pivot reduced into [0, pivot).
inline IntMatrix row_hermite_form(const IntMatrix& A) {
  IntMatrix H = A;
  const std::size_t m = H.rows(), n = H.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (H(i, c) != 0 && (best == m || abs_int(H(i, c)) < abs_int(H(best, c)))) best = i;
      if (best == m) break;
      H.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        H.add_row(i, r, -floor_div(H(i, c), H(r, c)));
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) H.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) H.add_row(i, r, -floor_div(H(i, c), H(r, c)));
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = H(i, j);
  return out;
}

/// Hermite form of the lattice spanned by the columns of A (returned as columns).
inline IntMatrix column_hermite_form(const IntMatrix& A) {
  return row_hermite_form(A.transposed()).transposed();
}

inline std::size_t rank_of(const IntMatrix& A) { return smith_normal_form(A).rank; }

/// True when the columns of F are independent and span a saturated sublattice.
inline bool is_saturated(const IntMatrix& F) {
  SmithForm s = smith_normal_form(F);
  if (s.rank != F.cols()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

/// Basis of ker(A) ∩ Z^n as columns of an n x (n - rank) matrix, in column
/// Hermite form. A must have full row rank.
inline IntMatrix kernel_basis(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A);
  if (s.rank < A.rows()) throw Error(ErrorKind::RankDeficient, "matrix rows are linearly dependent");
  const std::size_t n = A.cols();
  IntMatrix K(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) K(i, j - s.rank) = s.V(i, j);
  if (K.cols() == 0) return K;
  return column_hermite_form(K);
}

/// Deterministic integer left inverse S of F (S * F == I). Rows of S are
/// reduced modulo the integer left kernel of F using its Hermite form.
inline IntMatrix left_inverse(const IntMatrix& F) {
  const std::size_t n = F.rows(), r = F.cols();
  SmithForm s = smith_normal_form(F);
  if (s.rank != r) throw Error(ErrorKind::NotPrimitive, "columns are linearly dependent");
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) != 1)
      throw Error(ErrorKind::NotPrimitive, "column lattice is not saturated (invariant factor " +
                                               s.D(i, i).str() + ")");
  // F = U^-1 [I; 0] V^-1  =>  S = V [I 0] U
  IntMatrix top(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) top(i, j) = s.U(i, j);
  IntMatrix S = s.V * top;

  if (r < n) {
    IntMatrix H = row_hermite_form(kernel_basis(F.transposed()).transposed());
    for (std::size_t k = 0; k < H.rows(); ++k) {
      std::size_t p = 0;
      while (H(k, p) == 0) ++p;
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(S(i, p), H(k, p));
        for (std::size_t j = 0; j < n; ++j) S(i, j) -= q * H(k, j);
      }
    }
  }
  return S;
}

/// Whether x lies in the lattice generated by the columns of G.
inline bool in_lattice(const IntMatrix& G, const std::vector<Int>& x) {
  if (x.size() != G.rows()) throw Error(ErrorKind::DimensionMismatch, "lattice membership");
  SmithForm s = smith_normal_form(G);
  std::vector<Int> ux = s.U * x;
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < s.rank) {
      if (ux[i] % s.D(i, i) != 0) return false;
    } else if (ux[i] != 0) {
      return false;
    }
  }
  return true;
}

inline Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  // Bareiss fraction-free elimination
  IntMatrix M = A;
  const std::size_t n = M.rows();
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && M(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      M.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return n == 0 ? Int(1) : Int(sign * M(n - 1, n - 1));
}

}  // namespace trinom
