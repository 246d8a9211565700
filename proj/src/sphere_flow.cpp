#include "bw/sphere_flow.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "bw/exact.hpp"

namespace bw {

namespace {

double sq_norm(const std::vector<Cx>& z) {
  double s = 0;
  for (const Cx& c : z) s += std::norm(c);
  return s;
}

std::vector<Cx> random_unit_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Cx> z(dim);
  double n2 = 0;
  do {
    for (auto& c : z) c = Cx(gauss(rng), gauss(rng));
    n2 = sq_norm(z);
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : z) c *= inv;
  return z;
}

// Project onto the tangent space at p: Re<z, v> = 0.
Tangent project_tangent(const SpherePoint& p, Tangent v) {
  double radial = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    radial += p.z[i].real() * v[i].real() + p.z[i].imag() * v[i].imag();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= radial * p.z[i];
  return v;
}

}  // namespace

void WeightedFlow::validate() const {
  if (n < 0) throw ValidationError("weighted flow needs n >= 0");
  if (lambda.size() != static_cast<std::size_t>(n) + 1)
    throw ValidationError("weighted flow needs n + 1 weights");
  for (double l : lambda)
    if (!(l > 0)) throw ValidationError("flow weights must be positive");
}

SpherePoint SpherePoint::from_components(std::vector<Cx> z) {
  SpherePoint p{std::move(z)};
  if (p.norm_error() > kNormTol)
    throw ValidationError("point is not on the unit sphere (|z|^2 deviation " +
                          std::to_string(p.norm_error()) + ")");
  return p;
}

SpherePoint SpherePoint::normalized(std::vector<Cx> z) {
  const double n2 = sq_norm(z);
  if (n2 <= 0) throw ValidationError("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : z) c *= inv;
  return SpherePoint{std::move(z)};
}

SpherePoint SpherePoint::coordinate(int dim, int j) {
  std::vector<Cx> z(dim, Cx(0, 0));
  z[j] = Cx(1, 0);
  return SpherePoint{std::move(z)};
}

std::vector<int> SpherePoint::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (std::abs(z[i]) > kSupportTol) s.push_back(static_cast<int>(i));
  return s;
}

double SpherePoint::norm_error() const { return std::abs(sq_norm(z) - 1.0); }

SpherePoint flow(const WeightedFlow& w, const SpherePoint& p, double t) {
  w.validate();
  std::vector<Cx> out(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j)
    out[j] = std::polar(1.0, w.lambda[j] * t) * p.z[j];
  return SpherePoint{std::move(out)};
}

Tangent reeb_field(const SpherePoint& p) {
  Tangent v(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j) v[j] = Cx(0, 1) * p.z[j];
  return v;
}

Tangent weighted_reeb_field(const WeightedFlow& w, const SpherePoint& p) {
  Tangent v(p.z.size());
  for (std::size_t j = 0; j < p.z.size(); ++j) v[j] = Cx(0, w.lambda[j]) * p.z[j];
  return v;
}

Tangent circle_generator_field(int j, const SpherePoint& p) {
  Tangent v(p.z.size(), Cx(0, 0));
  v[j] = Cx(0, 1) * p.z[j];
  return v;
}

double alpha_eval(const SpherePoint& p, const Tangent& v, double tangent_tol) {
  if (v.size() != p.z.size()) throw ValidationError("tangent vector has wrong dimension");
  double radial = 0, a = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = p.z[i].real(), y = p.z[i].imag();
    radial += x * v[i].real() + y * v[i].imag();
    a += x * v[i].imag() - y * v[i].real();  // alpha = sum (x dy - y dx)
  }
  if (std::abs(radial) > tangent_tol)
    throw ValidationError("vector is not tangent to the sphere (radial part " +
                          std::to_string(radial) + ")");
  return a;
}

double alpha_prime_eval(const WeightedFlow& w, const SpherePoint& p, const Tangent& v,
                        double tangent_tol) {
  w.validate();
  double denom = 0;
  for (std::size_t i = 0; i < p.z.size(); ++i) denom += w.lambda[i] * std::norm(p.z[i]);
  return alpha_eval(p, v, tangent_tol) / denom;
}

std::pair<long long, long long> best_rational(double x, unsigned long max_den) {
  // Continued-fraction convergents; the best approximation with bounded
  // denominator is the last convergent that fits or its largest
  // semiconvergent, whichever lands closer.
  const long long qmax = static_cast<long long>(max_den);
  long long pp = 0, qp = 1;  // convergent before last
  long long pc = 1, qc = 0;  // last convergent
  double frac = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(frac);
    if (!(fl >= -9e17 && fl <= 9e17)) break;
    const long long a = static_cast<long long>(fl);
    const long long pn = a * pc + pp, qn = a * qc + qp;
    if (qn > qmax) {
      const long long k = (qmax - qp) / qc;
      const long long sp = k * pc + pp, sq = k * qc + qp;
      if (sq >= 1 && std::abs(x - double(sp) / double(sq)) <
                         std::abs(x - double(pc) / double(qc)))
        return {sp, sq};
      break;
    }
    pp = pc;
    qp = qc;
    pc = pn;
    qc = qn;
    const double rem = frac - fl;
    if (rem < 1e-15 * std::max(1.0, std::abs(frac))) break;
    frac = 1.0 / rem;
  }
  if (qc < 1) return {static_cast<long long>(std::llround(x)), 1};
  return {pc, qc};
}

ClosureResult orbit_closure(const WeightedFlow& w, const SpherePoint& p,
                            unsigned long denom_bound, double tol) {
  w.validate();
  if (p.norm_error() > SpherePoint::kNormTol)
    throw ValidationError("orbit closure of a point off the sphere");
  const std::vector<int> supp = p.support();
  if (supp.empty()) throw ValidationError("point has empty support");

  const int j0 = supp.front();
  if (supp.size() == 1) return {true, 2.0 * std::numbers::pi / w.lambda[j0]};

  Int l = 1;
  for (std::size_t s = 1; s < supp.size(); ++s) {
    const double ratio = w.lambda[supp[s]] / w.lambda[j0];
    auto [num, den] = best_rational(ratio, denom_bound);
    if (den < 1 || std::abs(ratio - double(num) / double(den)) > tol)
      return {false, std::nullopt};
    const Int g = int_gcd(Int(num), Int(den));
    Int d = Int(den) / g;
    l = l / int_gcd(l, d) * d;  // lcm of reduced denominators
  }
  // smallest t with lambda_j t in 2 pi Z for all j in the support, treating
  // lambda_j = lambda_{j0} * p_j/q_j exactly
  const double period = 2.0 * std::numbers::pi * to_double(l) / w.lambda[j0];
  return {true, period};
}

InvarianceReport verify_invariance(const WeightedFlow& w, int sample_count,
                                   std::uint64_t seed, double tol) {
  w.validate();
  if (sample_count < 1) throw PreconditionError("sample count must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time_dist(-10.0, 10.0);
  const int dim = w.n + 1;

  InvarianceReport rep;
  rep.samples = sample_count;
  rep.seed = seed;

  for (int s = 0; s < sample_count; ++s) {
    SpherePoint p = SpherePoint::normalized(random_unit_vector(rng, dim));
    Tangent v = project_tangent(p, random_unit_vector(rng, dim));
    const double t = time_dist(rng);

    // alpha'(R_lambda) == 1
    const double a1 = alpha_prime_eval(w, p, weighted_reeb_field(w, p), tol);
    rep.max_reeb_normalization_dev = std::max(rep.max_reeb_normalization_dev,
                                              std::abs(a1 - 1.0));

    // pullback of alpha' along the flow equals alpha'
    SpherePoint q = flow(w, p, t);
    Tangent dv(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      dv[j] = std::polar(1.0, w.lambda[j] * t) * v[j];
    const double before = alpha_prime_eval(w, p, v, tol);
    const double after = alpha_prime_eval(w, q, dv, tol);
    rep.max_pullback_dev = std::max(rep.max_pullback_dev, std::abs(after - before));

    // contact moment of the coordinate circles and the horizontal split
    const Tangent r = reeb_field(p);
    for (int j = 0; j < dim; ++j) {
      Tangent xj = circle_generator_field(j, p);
      const double moment = alpha_eval(p, xj, tol);
      rep.max_moment_dev =
          std::max(rep.max_moment_dev, std::abs(moment - std::norm(p.z[j])));
      Tangent horiz(xj.size());
      for (std::size_t c = 0; c < xj.size(); ++c) horiz[c] = xj[c] - moment * r[c];
      rep.max_horizontal_dev =
          std::max(rep.max_horizontal_dev, std::abs(alpha_eval(p, horiz, tol)));
    }
  }
  return rep;
}

ClosureCensus closure_census(const WeightedFlow& w, unsigned long denom_bound, double tol,
                             int random_points, std::uint64_t seed) {
  w.validate();
  std::mt19937_64 rng(seed);
  const int dim = w.n + 1;
  ClosureCensus census;

  for (int j = 0; j < dim; ++j) {
    SpherePoint p = SpherePoint::coordinate(dim, j);
    ClosureResult r = orbit_closure(w, p, denom_bound, tol);
    census.entries.push_back({"e" + std::to_string(j + 1), r.closed, r.period});
    if (r.closed) ++census.closed_count;
  }
  for (int s = 0; s < random_points; ++s) {
    SpherePoint p = SpherePoint::normalized(random_unit_vector(rng, dim));
    double min_abs = 1.0;
    for (const Cx& c : p.z) min_abs = std::min(min_abs, std::abs(c));
    while (min_abs <= 1e-3) {  // keep the support full
      p = SpherePoint::normalized(random_unit_vector(rng, dim));
      min_abs = 1.0;
      for (const Cx& c : p.z) min_abs = std::min(min_abs, std::abs(c));
    }
    ClosureResult r = orbit_closure(w, p, denom_bound, tol);
    census.entries.push_back({"random-" + std::to_string(s + 1), r.closed, r.period});
    if (r.closed) ++census.closed_count;
  }
  return census;
}

}  // namespace bw
