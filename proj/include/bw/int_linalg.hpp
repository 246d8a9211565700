#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bw/exact.hpp"
#include "bw/snf_core.hpp"

namespace bw {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// rows == 0 or cols == 0 is allowed and represents a map to/from the
/// zero group.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  snf::Mat<Int> to_core() const;
  static IntMatrix from_core(const snf::Mat<Int>& m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

/// U*A*V == S with U, V unimodular and S diagonal, nonnegative, in
/// divisibility-chain order.
struct SmithDecomposition {
  IntMatrix u, s, v;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

/// Invariant-factor normal form of a finitely generated abelian group:
/// free rank plus torsion coefficients d1 | d2 | ... with each di >= 2.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  bool operator==(const AbelianGroupInvariants&) const = default;
};

struct KernelResult {
  std::size_t rank = 0;
  IntMatrix basis;  // cols x rank; columns span ker(A) as a direct summand
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Invariants of Z^rows / image(A).
AbelianGroupInvariants cokernel(const IntMatrix& a);

/// Basis of ker(A) in Z^cols; the columns extend to a basis of Z^cols.
KernelResult kernel(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

Int determinant(const IntMatrix& a);

/// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Invariant factors of the direct sum of two groups given in invariant
/// factor form, renormalized to a single divisibility chain.
AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a,
                                  const AbelianGroupInvariants& b);

}  // namespace bw
