#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bw/errors.hpp"
#include "bw/exact.hpp"
#include "bw/int_linalg.hpp"

namespace bw {

struct FixedPoint {
  std::string name;
  std::vector<Rat> moment;                // value of the moment map in t*, length l
  std::vector<std::vector<Int>> weights;  // isotropy weights at the point, each length l
};

/// Fixed-point data of a Hamiltonian torus action on the symplectic base,
/// with moment values normalized into the integral lattice (exact
/// rationals) and isotropy weights as integer vectors.
struct MomentData {
  int torus_rank = 0;  // l
  int base_dim = 0;    // 2n
  std::vector<FixedPoint> fixed_points;

  int half_dim() const { return base_dim / 2; }
  /// Every fixed point carries exactly n nonzero weights.
  bool isolated() const;
  void validate() const;
};

/// xi = (xi1, xi2) in t x R; xi2 multiplies the fiber direction.
struct ReebParameter {
  std::vector<double> xi1;
  double xi2 = 0;
};

struct ClosedOrbit {
  std::string fixed_point_name;
  double speed = 0;   // psi^xi(p) = phi^{xi1}(p) + xi2, positive
  double period = 0;  // 1 / speed; the fiber period is normalized to 1
};

struct ParameterCheck {
  bool positive = false;
  bool weight_generic = false;
  int closure_rank = 0;
  unsigned long relation_bound = 0;
  double tol = 0;
  std::vector<std::vector<long long>> relations;
};

/// Maximal independent set of integer relation vectors c, |c_i| <= bound,
/// with |<c, v>| <= tol * |c| * |v|. The box is scanned exhaustively in
/// lexicographic order while it is small; beyond that the search switches
/// to LLL reduction of the scaled relation lattice, which finds relations
/// with small coefficients. Deterministic for fixed inputs.
std::vector<std::vector<long long>> integer_relations(const std::vector<double>& v,
                                                      unsigned long bound, double tol);

/// Positivity of the speeds at the fixed points (the minimum of the affine
/// function over the moment polytope sits at a vertex), genericity of xi1
/// against every isotropy weight, and the closure rank of (xi1, xi2) from
/// the bounded relation search.
ParameterCheck check_reeb_parameter(const MomentData& d, const ReebParameter& xi,
                                    unsigned long relation_bound, double tol);

/// One closed Reeb orbit of the perturbed contact form per fixed point of
/// the torus action; rejects parameters failing check_reeb_parameter.
std::vector<ClosedOrbit> closed_orbit_census(const MomentData& d, const ReebParameter& xi,
                                             unsigned long relation_bound = 1000000,
                                             double tol = 1e-9);

/// A rank-k integer basis of a subtorus whose action keeps the full fixed
/// point set: the leading vector pairs nonzero with every isotropy weight,
/// found by deterministic search over the box [-bound, bound]^l.
std::vector<std::vector<Int>> subtorus_same_fixed_set(const MomentData& d, int k,
                                                      long long search_bound);

double moment_pairing(const FixedPoint& p, const std::vector<double>& xi1);

MomentData parse_moment_data(const std::string& source);
std::string serialize_moment_data(const MomentData& d);

}  // namespace bw
