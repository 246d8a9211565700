#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "bw/gysin.hpp"

using namespace bw;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(BW_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ASequence aseq(std::vector<long long> values) {
  std::vector<Int> v(values.begin(), values.end());
  return ASequence::from_values(std::move(v));
}

CupPresentation cpn(int n) {
  return from_a_sequence(aseq(std::vector<long long>(n + 1, 1)));
}

// expects the groups of M to be exactly the given (degree, rank, torsion)
// triples and zero elsewhere
void expect_groups(const TotalSpaceCohomology& tsc, int top,
                   const std::map<int, AbelianGroupInvariants>& nonzero) {
  for (int k = 0; k <= top; ++k) {
    auto it = nonzero.find(k);
    if (it == nonzero.end())
      CHECK(tsc.groups.at(k).is_zero());
    else
      CHECK(tsc.groups.at(k) == it->second);
  }
}

// random torsion-free presentation with full cup data
CupPresentation random_presentation(std::mt19937& rng, int n, std::size_t max_rank,
                                    int entry_box) {
  std::uniform_int_distribution<std::size_t> rank_dist(0, max_rank);
  std::uniform_int_distribution<int> entry(-entry_box, entry_box);
  CupPresentation p;
  p.dim_base = 2 * n;
  p.groups.top_degree = p.dim_base;
  std::vector<std::size_t> ranks(2 * n + 1, 0);
  for (int k = 0; k <= 2 * n; ++k) {
    ranks[k] = rank_dist(rng);
    if (ranks[k]) p.groups.set(k, {ranks[k], {}});
  }
  for (int k = 0; k + 2 <= 2 * n; ++k) {
    if (ranks[k] == 0 || ranks[k + 2] == 0) continue;
    IntMatrix m(ranks[k + 2], ranks[k]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    p.cup_x[k] = std::move(m);
  }
  p.euler_class_coords.assign(p.groups.free_rank(2), Int(1));
  p.validate();
  return p;
}

}  // namespace

TEST_CASE("CP^n bases give sphere cohomology for the total space") {
  for (int n = 1; n <= 6; ++n) {
    TotalSpaceCohomology tsc = total_space_cohomology(cpn(n));
    expect_groups(tsc, 2 * n + 1,
                  {{0, {1, {}}}, {2 * n + 1, {1, {}}}});
  }
}

TEST_CASE("a-sequence (1,1,3,6,18,18) reproduces the degree table") {
  CupPresentation p = parse_presentation(fixture("g2orbit.ring"));
  TotalSpaceCohomology tsc = total_space_cohomology(p);
  expect_groups(tsc, 11,
                {{0, {1, {}}},
                 {4, {0, {3}}},
                 {6, {0, {2}}},
                 {8, {0, {3}}},
                 {11, {1, {}}}});
  CHECK(tsc.extension.at(4) == ExtensionFlag::zero_kernel);
  CHECK(tsc.provenance.at(4).cokernel_part == AbelianGroupInvariants{0, {3}});
}

TEST_CASE("degree-4 torsion for the two fano bases") {
  TotalSpaceCohomology v5 = total_space_cohomology(parse_presentation(fixture("v5.ring")));
  expect_groups(v5, 7, {{0, {1, {}}}, {4, {0, {5}}}, {7, {1, {}}}});
  TotalSpaceCohomology v22 =
      total_space_cohomology(parse_presentation(fixture("v22.ring")));
  expect_groups(v22, 7, {{0, {1, {}}}, {4, {0, {22}}}, {7, {1, {}}}});
}

TEST_CASE("half-jump sequences give Z_2 exactly in degree n+1") {
  for (int n : {3, 5, 7, 9}) {
    std::vector<long long> a(n + 1, 1);
    for (int i = (n + 1) / 2; i <= n; ++i) a[i] = 2;
    TotalSpaceCohomology tsc = total_space_cohomology(from_a_sequence(aseq(a)));
    expect_groups(tsc, 2 * n + 1,
                  {{0, {1, {}}}, {n + 1, {0, {2}}}, {2 * n + 1, {1, {}}}});
  }
}

TEST_CASE("betti numbers") {
  SUBCASE("CP^3 base") {
    auto b = total_space_betti(cpn(3));
    CHECK(b == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 1});
  }
  SUBCASE("rank profile 1,1,2,1,1 with unit cup ranks") {
    auto b = total_space_betti(parse_presentation(fixture("gr2r6.ring")));
    CHECK(b == std::vector<std::size_t>{1, 0, 0, 0, 1, 1, 0, 0, 0, 1});
  }
  SUBCASE("zero cup maps count ranks additively") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      CupPresentation p = random_presentation(rng, 2, 3, 0);  // all cup maps zero
      auto b = total_space_betti(p);
      for (int k = 0; k <= p.dim_base + 1; ++k)
        CHECK(b[k] == p.groups.free_rank(k) + p.groups.free_rank(k - 1));
    }
  }
}

TEST_CASE("agreement between group ranks and betti numbers on fixtures") {
  for (const char* name : {"cpn3.ring", "g2orbit.ring", "gr2r6.ring", "v5.ring",
                           "v22.ring", "stiefel7.ring"}) {
    CupPresentation p = parse_presentation(fixture(name));
    TotalSpaceCohomology tsc = total_space_cohomology(p);
    auto b = total_space_betti(p);
    for (int k = 0; k <= p.dim_base + 1; ++k)
      CHECK(tsc.groups.free_rank(k) == b[k]);
  }
}

TEST_CASE("audits hold on random torsion-free presentations") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> ndist(1, 4);
    CupPresentation p = random_presentation(rng, ndist(rng), 3, 3);
    CHECK_NOTHROW(total_space_cohomology(p));  // audits run inside
    CHECK_NOTHROW(total_space_betti(p));
  }
}

TEST_CASE("a-sequence torsion formula H^{2k}(M) = Z_{a_k/a_{k-1}}") {
  // all divisibility chains with n <= 3, a_n <= 12, checked downstream
  std::vector<std::vector<long long>> chains;
  for (long long a1 = 1; a1 <= 12; ++a1)
    for (long long a2 = a1; a2 <= 12; a2 += a1)
      for (long long a3 = a2; a3 <= 12; a3 += a2)
        chains.push_back({1, a1, a2, a3});
  for (const auto& c : chains) {
    TotalSpaceCohomology tsc = total_space_cohomology(from_a_sequence(aseq(c)));
    for (std::size_t k = 1; k < c.size(); ++k) {
      const long long ratio = c[k] / c[k - 1];
      const auto& g = tsc.groups.at(2 * static_cast<int>(k));
      if (ratio == 1)
        CHECK(g.is_zero());
      else
        CHECK(g == AbelianGroupInvariants{0, {Int(ratio)}});
    }
  }
}

TEST_CASE("non-interacting base torsion flows into the total space") {
  CupPresentation p;
  p.dim_base = 4;
  p.groups.top_degree = 4;
  p.groups.set(0, {1, {}});
  p.groups.set(2, {1, {}});
  p.groups.set(3, {0, {7}});
  p.groups.set(4, {1, {}});
  p.cup_x[0] = IntMatrix::from_rows({{1}});
  p.cup_x[2] = IntMatrix::from_rows({{0}});
  p.euler_class_coords = {Int(1)};

  TotalSpaceCohomology tsc = total_space_cohomology(p);
  // degree 3: cokernel part is the torsion of H^3(N), kernel part is free
  CHECK(tsc.groups.at(3) == AbelianGroupInvariants{1, {7}});
  CHECK(tsc.extension.at(3) == ExtensionFlag::split_forced);
  // degree 4: torsion kernel part over a nonzero cokernel is ambiguous
  CHECK(tsc.extension.at(4) == ExtensionFlag::ambiguous);
  CHECK(tsc.provenance.at(4).cokernel_part == AbelianGroupInvariants{1, {}});
  CHECK(tsc.provenance.at(4).kernel_part == AbelianGroupInvariants{0, {7}});
  CHECK(tsc.ambiguous_anywhere());
}

TEST_CASE("torsion interaction is refused") {
  CupPresentation p;
  p.dim_base = 4;
  p.groups.top_degree = 4;
  p.groups.set(0, {1, {}});
  p.groups.set(2, {1, {5}});
  p.groups.set(4, {1, {}});
  p.cup_x[0] = IntMatrix::from_rows({{1}});
  p.cup_x[2] = IntMatrix::from_rows({{1}});
  p.euler_class_coords = {Int(1)};
  CHECK_THROWS_WITH_AS(total_space_cohomology(p),
                       doctest::Contains("torsion interaction"), ValidationError);
}
