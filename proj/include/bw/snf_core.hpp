#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace bw::snf {

// Row-major dense matrix over an exact signed integer type Z. The reduction
// below is shared between the arbitrary-precision instantiation used by the
// library and the machine-word instantiation used by exhaustive sweeps in
// the tests (where entry growth is provably tiny).
template <class Z>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Z> e;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, Z(0)) {}

  Z& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
  const Z& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Z(1);
    return m;
  }
};

template <class Z>
inline Z zabs(const Z& a) {
  return a < Z(0) ? Z(-a) : a;
}

// Quotient q minimizing |a - q*b| (b != 0). Keeping remainders at most
// |b|/2 bounds entry growth during the reduction.
template <class Z>
inline Z div_nearest(const Z& a, const Z& b) {
  Z q = a / b;
  Z r = a - q * b;
  if (r != Z(0) && zabs(Z(r + r)) > zabs(b)) {
    if ((r > Z(0)) == (b > Z(0)))
      q += Z(1);
    else
      q -= Z(1);
  }
  return q;
}

template <class Z>
struct Decomp {
  Mat<Z> u;  // rows x rows, unimodular
  Mat<Z> s;  // rows x cols, diagonal, nonnegative, divisibility chain
  Mat<Z> v;  // cols x cols, unimodular
  std::size_t rank = 0;
};

namespace detail {

template <class Z>
void swap_rows(Mat<Z>& s, Mat<Z>& u, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
  for (std::size_t j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
}

template <class Z>
void swap_cols(Mat<Z>& s, Mat<Z>& v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
  for (std::size_t i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
}

// row a -= q * row b
template <class Z>
void row_axpy(Mat<Z>& s, Mat<Z>& u, std::size_t a, std::size_t b, const Z& q) {
  for (std::size_t j = 0; j < s.cols; ++j) s.at(a, j) -= q * s.at(b, j);
  for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) -= q * u.at(b, j);
}

// col a -= q * col b
template <class Z>
void col_axpy(Mat<Z>& s, Mat<Z>& v, std::size_t a, std::size_t b, const Z& q) {
  for (std::size_t i = 0; i < s.rows; ++i) s.at(i, a) -= q * s.at(i, b);
  for (std::size_t i = 0; i < v.rows; ++i) v.at(i, a) -= q * v.at(i, b);
}

}  // namespace detail

// Smith normal form: returns (U, S, V) with U*A*V == S, U and V unimodular,
// S diagonal with nonnegative entries d1 | d2 | ... . Pivot selection is the
// smallest nonzero absolute value (first in row-major order on ties), which
// makes the decomposition deterministic.
template <class Z>
Decomp<Z> smith(const Mat<Z>& a) {
  Decomp<Z> d;
  d.u = Mat<Z>::identity(a.rows);
  d.s = a;
  d.v = Mat<Z>::identity(a.cols);
  Mat<Z>& s = d.s;

  const std::size_t m = std::min(a.rows, a.cols);
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < s.rows; ++i)
      for (std::size_t j = t; j < s.cols; ++j)
        if (s.at(i, j) != Z(0) &&
            (!found || zabs(s.at(i, j)) < zabs(s.at(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) detail::swap_rows(s, d.u, pi, t);
    if (pj != t) detail::swap_cols(s, d.v, pj, t);

    for (;;) {
      bool stable = true;
      for (std::size_t i = t + 1; i < s.rows; ++i) {
        if (s.at(i, t) == Z(0)) continue;
        Z q = div_nearest(s.at(i, t), s.at(t, t));
        if (q != Z(0)) detail::row_axpy(s, d.u, i, t, q);
        if (s.at(i, t) != Z(0)) {
          detail::swap_rows(s, d.u, i, t);  // strictly smaller pivot
          stable = false;
        }
      }
      for (std::size_t j = t + 1; j < s.cols; ++j) {
        if (s.at(t, j) == Z(0)) continue;
        Z q = div_nearest(s.at(t, j), s.at(t, t));
        if (q != Z(0)) detail::col_axpy(s, d.v, j, t, q);
        if (s.at(t, j) != Z(0)) {
          detail::swap_cols(s, d.v, j, t);
          stable = false;
        }
      }
      if (!stable) continue;

      // Make the pivot divide every remaining entry so the diagonal comes
      // out in chain order.
      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols && divides; ++j)
          if (s.at(i, j) % s.at(t, t) != Z(0)) {
            detail::row_axpy(s, d.u, t, i, Z(-1));  // row t += row i
            divides = false;
          }
      if (divides) break;
    }
  }

  for (std::size_t t = 0; t < m; ++t) {
    if (s.at(t, t) < Z(0)) {
      for (std::size_t j = 0; j < s.cols; ++j) s.at(t, j) = -s.at(t, j);
      for (std::size_t j = 0; j < d.u.cols; ++j) d.u.at(t, j) = -d.u.at(t, j);
    }
    if (s.at(t, t) != Z(0)) ++d.rank;
  }
  return d;
}

// Fraction-free (Bareiss) determinant of a square matrix; exact over Z.
template <class Z>
Z determinant(Mat<Z> a) {
  const std::size_t n = a.rows;
  if (n == 0) return Z(1);
  Z sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == Z(0)) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == Z(0)) ++p;
      if (p == n) return Z(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace bw::snf
