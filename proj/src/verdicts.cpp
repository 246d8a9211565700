#include "bw/verdicts.hpp"

#include "bw/gysin.hpp"

namespace bw {

namespace {

const AbelianGroupInvariants kZ{1, {}};

void check_fixed_point_minimum(int n, const Hypotheses& h) {
  if (h.fixed_point_count && *h.fixed_point_count < n + 1)
    throw PreconditionError(
        "a Hamiltonian circle action on a compact symplectic 2n-manifold has "
        "at least n+1 fixed points; got " +
        std::to_string(*h.fixed_point_count) + " with n = " + std::to_string(n));
}

std::string group_text(const AbelianGroupInvariants& g) {
  std::string s;
  for (std::size_t i = 0; i < g.free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
  for (const Int& t : g.torsion) s += (s.empty() ? "Z_" + t.str() : " + Z_" + t.str());
  return s.empty() ? "0" : s;
}

}  // namespace

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::homeomorphic_to_sphere: return "homeomorphic_to_sphere";
    case Conclusion::integral_cohomology_sphere: return "integral_cohomology_sphere";
    case Conclusion::real_cohomology_sphere_only: return "real_cohomology_sphere_only";
    case Conclusion::not_cohomology_sphere: return "not_cohomology_sphere";
    case Conclusion::inconclusive: return "inconclusive";
  }
  return "?";
}

bool is_integral_cpn_ring(const CupPresentation& p) {
  p.validate();
  const int n = p.half_dim();
  for (int k = 0; k <= p.dim_base; ++k) {
    const auto& g = p.groups.at(k);
    if (k % 2 == 0 && !(g == kZ)) return false;
    if (k % 2 == 1 && !g.is_zero()) return false;
  }
  for (int i = 0; i + 1 <= n; ++i) {
    IntMatrix m = p.cup_map(2 * i);
    if (m.rows() != 1 || m.cols() != 1) return false;
    if (m.at(0, 0) != 1 && m.at(0, 0) != -1) return false;
  }
  return true;
}

bool is_real_cpn_ring(const CupPresentation& p) {
  p.validate();
  const int n = p.half_dim();
  for (int k = 0; k <= p.dim_base; ++k) {
    const std::size_t r = p.groups.free_rank(k);
    if (k % 2 == 0 && r != 1) return false;
    if (k % 2 == 1 && r != 0) return false;
  }
  for (int i = 0; i + 1 <= n; ++i)
    if (p.cup_map(2 * i).is_zero()) return false;
  return true;
}

Tri pi1_total_space(const Hypotheses& h) {
  const bool base_simply_connected =
      h.pi1_base_trivial == Tri::yes || h.hamiltonian_circle_isolated_fixed_points;
  if (base_simply_connected && h.h2_base_is_Z && h.euler_primitive) return Tri::yes;
  return Tri::unknown;
}

Hypotheses derive_hypotheses(const CupPresentation& p, Hypotheses h) {
  h.h2_base_is_Z = p.groups.at(2) == kZ;
  bool primitive = false;
  try {
    primitive = is_primitive(p.euler_class_coords);
  } catch (const ValidationError&) {
    primitive = false;  // zero or missing euler class
  }
  h.euler_primitive = primitive;
  return h;
}

Verdict sphere_verdict(const CupPresentation& p, const Hypotheses& h_in) {
  p.validate();
  const int n = p.half_dim();
  check_fixed_point_minimum(n, h_in);
  const Hypotheses h = derive_hypotheses(p, h_in);

  const bool integral = is_integral_cpn_ring(p);
  const bool real = is_real_cpn_ring(p);
  const Tri pi1 = pi1_total_space(h);

  Verdict v;
  auto add = [&v](std::string step, bool checked, std::string ref) {
    v.justification.push_back({std::move(step), checked, std::move(ref)});
  };

  if (integral) {
    add("base has the integral cohomology ring of CP^" + std::to_string(n) +
            " generated by the euler class",
        true, "cup-product isomorphism test");
    add("total space has the integral cohomology ring of S^" + std::to_string(2 * n + 1),
        true, "gysin-sequence");
    if (pi1 == Tri::yes) {
      if (h.pi1_base_trivial == Tri::yes)
        add("base is simply connected", false, "hypothesis");
      else
        add("base carries a Hamiltonian circle action with isolated fixed points, "
            "hence is simply connected",
            false, "hypothesis + connectivity of the moment-map minimum");
      add("H^2 of the base is Z", true, "presentation groups");
      add("euler class is primitive", true, "gcd of coordinates");
      add("total space is simply connected", true, "homotopy sequence of the circle bundle");
      add("simply connected integral cohomology sphere is homeomorphic to the sphere",
          false, "generalized Poincare conjecture");
      v.conclusion = Conclusion::homeomorphic_to_sphere;
    } else {
      add("fundamental group of the total space not established", true,
          "insufficient hypotheses");
      v.conclusion = Conclusion::integral_cohomology_sphere;
    }
    return v;
  }

  if (real) {
    add("base has the real cohomology ring of CP^" + std::to_string(n), true,
        "rational rank test");
    add("total space has the real cohomology ring of S^" + std::to_string(2 * n + 1),
        true, "gysin-sequence");
    add("base ring is not the integral CP^" + std::to_string(n) + " ring", true,
        "cup-product isomorphism test");
    try {
      TotalSpaceCohomology tsc = total_space_cohomology(p);
      for (const auto& [deg, g] : tsc.groups.groups)
        if (!g.torsion.empty())
          add("torsion witness: H^" + std::to_string(deg) + "(M) = " + group_text(g),
              true, "gysin-sequence");
    } catch (const ValidationError&) {
      // torsion interaction in the base: integral witnesses unavailable
    }
    v.conclusion = Conclusion::real_cohomology_sphere_only;
    return v;
  }

  for (int k = 0; k <= p.dim_base; ++k) {
    const std::size_t r = p.groups.free_rank(k);
    if ((k % 2 == 0 && r != 1) || (k % 2 == 1 && r != 0)) {
      add("Betti profile of the base differs from CP^" + std::to_string(n) +
              " at degree " + std::to_string(k),
          true, "rational rank test");
      break;
    }
  }
  add("total space is not a real cohomology sphere", true, "gysin-sequence");
  v.conclusion = Conclusion::not_cohomology_sphere;
  return v;
}

Verdict chern_criterion(int n, const Hypotheses& h) {
  if (!h.c1_coefficient)
    throw PreconditionError("missing hypothesis: c1 coefficient of the base");
  if (!h.hamiltonian_circle_isolated_fixed_points)
    throw PreconditionError(
        "missing hypothesis: Hamiltonian circle action with isolated fixed points");
  if (!h.fixed_point_count)
    throw PreconditionError("missing hypothesis: fixed point count");
  check_fixed_point_minimum(n, h);
  if (*h.fixed_point_count != n + 1)
    throw PreconditionError("chern criterion needs exactly n+1 = " +
                            std::to_string(n + 1) + " fixed points; got " +
                            std::to_string(*h.fixed_point_count));

  Verdict v;
  auto add = [&v](std::string step, bool checked, std::string ref) {
    v.justification.push_back({std::move(step), checked, std::move(ref)});
  };
  add("Hamiltonian circle action with exactly " + std::to_string(n + 1) +
          " isolated fixed points",
      false, "hypothesis");
  if (*h.c1_coefficient == n + 1) {
    add("c1(N) = (n+1) x", false, "hypothesis");
    add("total Chern class of N agrees with (1+x)^" + std::to_string(n + 1), false,
        "largest-weight comparison for Hamiltonian circle actions");
    add("base has the integral cohomology ring of CP^" + std::to_string(n), false,
        "same comparison");
    add("total space is homeomorphic to S^" + std::to_string(2 * n + 1), false,
        "sphere criterion for the primitive circle bundle");
    v.conclusion = Conclusion::homeomorphic_to_sphere;
  } else {
    add("c1(N) = " + h.c1_coefficient->str() + " x differs from (n+1) x = " +
            std::to_string(n + 1) + " x",
        true, "coefficient comparison");
    add("criterion not triggered; necessity of c1 = (n+1)x is open in general",
        false, "status of the converse");
    v.conclusion = Conclusion::inconclusive;
  }
  return v;
}

}  // namespace bw
