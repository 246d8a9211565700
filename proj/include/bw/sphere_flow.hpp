#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bw/errors.hpp"

namespace bw {

using Cx = std::complex<double>;
using Tangent = std::vector<Cx>;

/// The weighted Reeb field R_lambda = sum_i lambda_i (x_i d/dy_i - y_i d/dx_i)
/// on the unit sphere in C^{n+1}; its flow rotates coordinate phases.
struct WeightedFlow {
  int n = 0;
  std::vector<double> lambda;  // n + 1 positive weights

  void validate() const;
};

struct SpherePoint {
  static constexpr double kNormTol = 1e-12;
  static constexpr double kSupportTol = 1e-9;

  std::vector<Cx> z;

  /// Validates | |z|^2 - 1 | <= kNormTol.
  static SpherePoint from_components(std::vector<Cx> z);
  /// Rescales onto the sphere.
  static SpherePoint normalized(std::vector<Cx> z);
  /// j-th coordinate circle point e_j in C^dim.
  static SpherePoint coordinate(int dim, int j);

  std::vector<int> support() const;  // indices with |z_i| > kSupportTol
  double norm_error() const;
};

/// Closed-form flow: z_j -> e^{i lambda_j t} z_j.
SpherePoint flow(const WeightedFlow& w, const SpherePoint& p, double t);

Tangent reeb_field(const SpherePoint& p);                                 // i z
Tangent weighted_reeb_field(const WeightedFlow& w, const SpherePoint& p); // i lambda_j z_j
/// Generator of the j-th coordinate circle action at p.
Tangent circle_generator_field(int j, const SpherePoint& p);

/// alpha = sum_i (x_i dy_i - y_i dx_i) evaluated on a tangent vector;
/// rejects vectors that fail the tangency check |Re<z, v>| <= tangent_tol.
double alpha_eval(const SpherePoint& p, const Tangent& v, double tangent_tol = 1e-9);

/// alpha' = alpha / sum_i lambda_i |z_i|^2.
double alpha_prime_eval(const WeightedFlow& w, const SpherePoint& p, const Tangent& v,
                        double tangent_tol = 1e-9);

struct ClosureResult {
  bool closed = false;
  std::optional<double> period;
};

/// Closure test for the orbit through p: closed iff all weight ratios on the
/// support of p admit rational approximations with denominator <= denom_bound
/// within tol; the period comes from the rational normal form of the support
/// weights.
ClosureResult orbit_closure(const WeightedFlow& w, const SpherePoint& p,
                            unsigned long denom_bound, double tol);

/// Best rational approximation p/q of x with 1 <= q <= max_den (continued
/// fractions with the final semiconvergent).
std::pair<long long, long long> best_rational(double x, unsigned long max_den);

struct InvarianceReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double max_reeb_normalization_dev = 0;  // |alpha'(R_lambda) - 1|
  double max_pullback_dev = 0;            // flow invariance of alpha'
  double max_moment_dev = 0;              // |alpha(X_j) - |z_j|^2|
  double max_horizontal_dev = 0;          // alpha on the horizontal residual
};

/// Samples random sphere points/tangents and measures: alpha'(R_lambda) = 1,
/// invariance of alpha' under finite-time flow pullback, the contact moment
/// of each coordinate circle (alpha(X_j) = |z_j|^2), and alpha-horizontality
/// of X_j - alpha(X_j) R.
InvarianceReport verify_invariance(const WeightedFlow& w, int sample_count,
                                   std::uint64_t seed, double tol);

struct ClosureCensusEntry {
  std::string point;
  bool closed = false;
  std::optional<double> period;
};

struct ClosureCensus {
  std::vector<ClosureCensusEntry> entries;
  int closed_count = 0;
};

/// Closure verdicts over the n+1 coordinate circle points plus random
/// full-support points.
ClosureCensus closure_census(const WeightedFlow& w, unsigned long denom_bound, double tol,
                             int random_points, std::uint64_t seed);

}  // namespace bw
