#include "doctest.h"

#include <fstream>
#include <sstream>

#include "bw/gysin.hpp"
#include "bw/verdicts.hpp"

using namespace bw;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(BW_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CupPresentation load(const std::string& name) {
  return parse_presentation(fixture(name));
}

ASequence aseq(std::vector<long long> values) {
  std::vector<Int> v(values.begin(), values.end());
  return ASequence::from_values(std::move(v));
}

Hypotheses hamiltonian_flags() {
  Hypotheses h;
  h.hamiltonian_circle_isolated_fixed_points = true;
  return h;
}

int conclusion_order(Conclusion c) {
  switch (c) {
    case Conclusion::homeomorphic_to_sphere: return 4;
    case Conclusion::integral_cohomology_sphere: return 3;
    case Conclusion::real_cohomology_sphere_only: return 2;
    case Conclusion::inconclusive: return 1;
    case Conclusion::not_cohomology_sphere: return 0;
  }
  return -1;
}

bool justification_mentions(const Verdict& v, const std::string& text) {
  for (const auto& s : v.justification)
    if (s.step.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("integral CP^n ring test") {
  CHECK(is_integral_cpn_ring(load("cpn3.ring")));
  CHECK_FALSE(is_integral_cpn_ring(load("v5.ring")));

  CupPresentation odd;  // an odd-degree Z breaks the ring
  odd.dim_base = 2;
  odd.groups.top_degree = 2;
  odd.groups.set(0, {1, {}});
  odd.groups.set(1, {1, {}});
  odd.groups.set(2, {1, {}});
  odd.cup_x[0] = IntMatrix::from_rows({{1}});
  odd.euler_class_coords = {Int(1)};
  CHECK_FALSE(is_integral_cpn_ring(odd));
  CHECK_FALSE(is_real_cpn_ring(odd));
}

TEST_CASE("real CP^n ring test") {
  CHECK(is_real_cpn_ring(load("stiefel7.ring")));  // real sphere, not integral
  CHECK_FALSE(is_integral_cpn_ring(load("stiefel7.ring")));
  CHECK_FALSE(is_real_cpn_ring(load("gr2r6.ring")));
  CHECK(is_real_cpn_ring(load("cpn3.ring")));
}

TEST_CASE("integral ring implies real ring on the fixture corpus") {
  for (const char* name : {"cpn3.ring", "g2orbit.ring", "gr2r6.ring", "v5.ring",
                           "v22.ring", "stiefel7.ring"}) {
    CupPresentation p = load(name);
    if (is_integral_cpn_ring(p)) CHECK(is_real_cpn_ring(p));
  }
}

TEST_CASE("pi1 of the total space") {
  Hypotheses h;
  h.h2_base_is_Z = true;
  h.euler_primitive = true;
  SUBCASE("simply connected base") {
    h.pi1_base_trivial = Tri::yes;
    CHECK(pi1_total_space(h) == Tri::yes);
  }
  SUBCASE("hamiltonian route") {
    h.hamiltonian_circle_isolated_fixed_points = true;
    CHECK(pi1_total_space(h) == Tri::yes);
  }
  SUBCASE("insufficient hypotheses stay unknown") {
    CHECK(pi1_total_space(h) == Tri::unknown);
    h.pi1_base_trivial = Tri::yes;
    h.euler_primitive = false;
    CHECK(pi1_total_space(h) == Tri::unknown);
  }
}

TEST_CASE("sphere verdicts") {
  SUBCASE("CP^n with hamiltonian flags is a sphere") {
    Verdict v = sphere_verdict(load("cpn3.ring"), hamiltonian_flags());
    CHECK(v.conclusion == Conclusion::homeomorphic_to_sphere);
  }
  SUBCASE("CP^n without pi1 input stays an integral cohomology sphere") {
    Verdict v = sphere_verdict(load("cpn3.ring"), Hypotheses{});
    CHECK(v.conclusion == Conclusion::integral_cohomology_sphere);
  }
  SUBCASE("the 11-dimensional example is a real sphere only, with witnesses") {
    Verdict v = sphere_verdict(load("g2orbit.ring"), hamiltonian_flags());
    CHECK(v.conclusion == Conclusion::real_cohomology_sphere_only);
    CHECK(justification_mentions(v, "H^4(M) = Z_3"));
    CHECK(justification_mentions(v, "H^6(M) = Z_2"));
    CHECK(justification_mentions(v, "H^8(M) = Z_3"));
  }
  SUBCASE("the rank-2-middle base is not a cohomology sphere") {
    Verdict v = sphere_verdict(load("gr2r6.ring"), Hypotheses{});
    CHECK(v.conclusion == Conclusion::not_cohomology_sphere);
  }
  SUBCASE("fixed point counts below n+1 are rejected") {
    Hypotheses h = hamiltonian_flags();
    h.fixed_point_count = 2;  // n = 3 here
    CHECK_THROWS_AS(sphere_verdict(load("cpn3.ring"), h), PreconditionError);
  }
}

TEST_CASE("sphere verdict consistency with the computed cohomology") {
  for (const char* name : {"cpn3.ring", "g2orbit.ring", "gr2r6.ring", "v5.ring",
                           "v22.ring", "stiefel7.ring"}) {
    CupPresentation p = load(name);
    Verdict v = sphere_verdict(p, hamiltonian_flags());
    if (v.conclusion == Conclusion::homeomorphic_to_sphere) {
      TotalSpaceCohomology tsc = total_space_cohomology(p);
      CHECK_FALSE(tsc.has_torsion());
      for (int k = 1; k <= p.dim_base; ++k) CHECK(tsc.groups.at(k).is_zero());
    }
  }
}

TEST_CASE("strengthening hypotheses never downgrades a verdict") {
  for (const char* name : {"cpn3.ring", "g2orbit.ring", "gr2r6.ring", "v5.ring"}) {
    CupPresentation p = load(name);
    Hypotheses weak;
    Hypotheses strong;
    strong.pi1_base_trivial = Tri::yes;
    strong.hamiltonian_circle_isolated_fixed_points = true;
    const int before = conclusion_order(sphere_verdict(p, weak).conclusion);
    const int after = conclusion_order(sphere_verdict(p, strong).conclusion);
    CHECK(after >= before);
  }
}

TEST_CASE("chern criterion") {
  Hypotheses h;
  h.hamiltonian_circle_isolated_fixed_points = true;
  h.fixed_point_count = 4;
  SUBCASE("c1 = (n+1) x triggers the sphere conclusion") {
    h.c1_coefficient = Int(4);
    Verdict v = chern_criterion(3, h);
    CHECK(v.conclusion == Conclusion::homeomorphic_to_sphere);
  }
  SUBCASE("other coefficients are inconclusive") {
    h.c1_coefficient = Int(2);
    CHECK(chern_criterion(3, h).conclusion == Conclusion::inconclusive);
  }
  SUBCASE("missing hypotheses are named") {
    h.c1_coefficient = Int(4);
    h.fixed_point_count.reset();
    CHECK_THROWS_WITH_AS(chern_criterion(3, h), doctest::Contains("fixed point count"),
                         PreconditionError);
  }
  SUBCASE("too few fixed points violate the Morse-theoretic minimum") {
    h.c1_coefficient = Int(4);
    h.fixed_point_count = 3;
    CHECK_THROWS_AS(chern_criterion(3, h), PreconditionError);
  }
}

TEST_CASE("derive_hypotheses reads the machine-checkable facts off the presentation") {
  Hypotheses h = derive_hypotheses(load("cpn3.ring"), Hypotheses{});
  CHECK(h.h2_base_is_Z);
  CHECK(h.euler_primitive);

  CupPresentation imprimitive = from_a_sequence(aseq({1, 1, 1}));
  imprimitive.euler_class_coords = {Int(2)};
  Hypotheses h2 = derive_hypotheses(imprimitive, Hypotheses{});
  CHECK_FALSE(h2.euler_primitive);
}
