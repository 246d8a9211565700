#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bw/graded.hpp"

namespace bw {

enum class Tri { yes, no, unknown };

const char* to_string(Tri t);

/// Input flags for the verdict logic. Facts the tool can compute from a
/// presentation (H^2 = Z, primitivity of the Euler class) are derived and
/// machine-checked; the rest are trusted hypotheses supplied by the caller.
struct Hypotheses {
  Tri pi1_base_trivial = Tri::unknown;
  bool h2_base_is_Z = false;
  bool euler_primitive = false;
  bool hamiltonian_circle_isolated_fixed_points = false;
  std::optional<int> fixed_point_count;
  std::optional<Int> c1_coefficient;  // c1(N) = c * x
  bool base_is_kahler = false;
};

enum class Conclusion {
  homeomorphic_to_sphere,
  integral_cohomology_sphere,
  real_cohomology_sphere_only,
  not_cohomology_sphere,
  inconclusive,
};

const char* to_string(Conclusion c);

struct JustificationStep {
  std::string step;
  bool checked = false;  // machine-checked this run, as opposed to assumed
  std::string ref;
};

struct Verdict {
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<JustificationStep> justification;
};

/// True iff the presentation is the integral cohomology ring of CP^n with x
/// as generator: every even group Z, odd groups zero, and each cup product
/// with x an isomorphism (1x1 matrix +-1) below the top degree.
bool is_integral_cpn_ring(const CupPresentation& p);

/// Rational analogue: even free ranks 1, odd free ranks 0, all cup maps
/// nonzero over Q below the top degree.
bool is_real_cpn_ring(const CupPresentation& p);

/// Simply-connectedness of the total space from the circle-bundle homotopy
/// sequence: needs H^2(N) = Z, a primitive Euler class, and either a simply
/// connected base or a Hamiltonian circle action with isolated fixed points.
/// Never concludes a nontrivial fundamental group.
Tri pi1_total_space(const Hypotheses& h);

/// Full sphere decision for the circle bundle over the presented base.
Verdict sphere_verdict(const CupPresentation& p, const Hypotheses& h);

/// The first-Chern-class shortcut: for a base with a Hamiltonian circle
/// action with exactly n+1 isolated fixed points, c1(N) = (n+1)x forces the
/// CP^n ring and hence a sphere total space. Anything else is inconclusive.
Verdict chern_criterion(int n, const Hypotheses& h);

/// Copy of h with the machine-checkable fields recomputed from p.
Hypotheses derive_hypotheses(const CupPresentation& p, Hypotheses h);

}  // namespace bw
