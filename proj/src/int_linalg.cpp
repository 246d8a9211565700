#include "bw/int_linalg.hpp"

#include <stdexcept>

namespace bw {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != m.cols_) throw std::invalid_argument("ragged row list");
    std::size_t j = 0;
    for (long long x : row) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

snf::Mat<Int> IntMatrix::to_core() const {
  snf::Mat<Int> m(rows_, cols_);
  m.e = e_;
  return m;
}

IntMatrix IntMatrix::from_core(const snf::Mat<Int>& m) {
  IntMatrix out(m.rows, m.cols);
  out.e_ = m.e;
  return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
    d.push_back(s.at(i, i));
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  auto d = snf::smith(a.to_core());
  return SmithDecomposition{IntMatrix::from_core(d.u), IntMatrix::from_core(d.s),
                            IntMatrix::from_core(d.v), d.rank};
}

AbelianGroupInvariants cokernel(const IntMatrix& a) {
  auto d = smith_normal_form(a);
  AbelianGroupInvariants inv;
  inv.free_rank = a.rows() - d.rank;
  for (const Int& x : d.diagonal())
    if (x >= 2) inv.torsion.push_back(x);
  return inv;
}

KernelResult kernel(const IntMatrix& a) {
  auto d = smith_normal_form(a);
  KernelResult k;
  k.rank = a.cols() - d.rank;
  k.basis = IntMatrix(a.cols(), k.rank);
  for (std::size_t j = 0; j < k.rank; ++j)
    for (std::size_t i = 0; i < a.cols(); ++i)
      k.basis.at(i, j) = d.v.at(i, d.rank + j);
  return k;
}

std::size_t rank(const IntMatrix& a) { return snf::smith(a.to_core()).rank; }

Int determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  return snf::determinant(a.to_core());
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Int det = determinant(a);
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor expansion: inv = adj(A)/det, integral since |det| == 1
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = a.at(r, c);
        }
        ++rr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = det == 1 ? cof : Int(-cof);
    }
  return inv;
}

AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a,
                                  const AbelianGroupInvariants& b) {
  if (a.torsion.empty() || b.torsion.empty()) {
    AbelianGroupInvariants out;
    out.free_rank = a.free_rank + b.free_rank;
    out.torsion = a.torsion.empty() ? b.torsion : a.torsion;
    return out;
  }
  // renormalize the combined torsion via the SNF of a diagonal matrix
  const std::size_t n = a.torsion.size() + b.torsion.size();
  IntMatrix diag(n, n);
  std::size_t i = 0;
  for (const Int& x : a.torsion) diag.at(i, i) = x, ++i;
  for (const Int& x : b.torsion) diag.at(i, i) = x, ++i;
  AbelianGroupInvariants out = cokernel(diag);
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

}  // namespace bw
