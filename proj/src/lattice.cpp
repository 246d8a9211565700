#include "bw/lattice.hpp"

#include <cstddef>
#include <stdexcept>

namespace bw {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x, 1);
  return out;
}

struct Gso {
  std::vector<std::vector<Rat>> mu;  // mu[i][j], j < i
  std::vector<Rat> B;                // squared norms of the orthogonalized rows
};

Gso compute_gso(const std::vector<std::vector<Int>>& basis) {
  const std::size_t n = basis.size();
  Gso g;
  g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
  g.B.assign(n, Rat(0));
  std::vector<std::vector<Rat>> star;
  star.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> bi = to_rat(basis[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (g.B[j] == Rat(0)) throw std::invalid_argument("basis rows are dependent");
      g.mu[i][j] = dot(to_rat(basis[i]), star[j]) / g.B[j];
      for (std::size_t c = 0; c < bi.size(); ++c) bi[c] -= g.mu[i][j] * star[j][c];
    }
    g.B[i] = dot(bi, bi);
    star.push_back(std::move(bi));
  }
  return g;
}

}  // namespace

Int round_nearest(const Rat& r) {
  const Int num = r.numerator(), den = r.denominator();  // den > 0
  Int q = num / den;
  Int rem = num - q * den;
  if (rem < 0) rem = -rem;
  if (2 * rem >= den) q += (num >= 0) ? 1 : -1;
  return q;
}

void lll_reduce(std::vector<std::vector<Int>>& basis) {
  const std::size_t n = basis.size();
  if (n <= 1) return;
  const Rat delta(3, 4);

  Gso g = compute_gso(basis);
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      Int q = round_nearest(g.mu[k][j]);
      if (q != 0) {
        for (std::size_t c = 0; c < basis[k].size(); ++c)
          basis[k][c] -= q * basis[j][c];
        g = compute_gso(basis);
      }
    }
    if (g.B[k] >= (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      g = compute_gso(basis);
      k = k > 1 ? k - 1 : 1;
    }
  }
}

}  // namespace bw
