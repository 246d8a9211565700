#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bw/errors.hpp"
#include "bw/int_linalg.hpp"

namespace bw {

/// Per-degree finitely generated abelian groups. A degree absent from the
/// map is the zero group; zero groups are never stored explicitly.
struct GradedAbelianGroup {
  int top_degree = 0;
  std::map<int, AbelianGroupInvariants> groups;

  const AbelianGroupInvariants& at(int degree) const;
  std::size_t free_rank(int degree) const { return at(degree).free_rank; }
  bool has_torsion(int degree) const { return !at(degree).torsion.empty(); }
  void set(int degree, AbelianGroupInvariants g);

  bool operator==(const GradedAbelianGroup&) const = default;
};

/// The shorthand a_0 = 1, a_1, ..., a_n for a base whose degree-2k group is
/// generated by x^k / a_k.
struct ASequence {
  int n = 0;
  std::vector<Int> a;  // size n + 1, a[0] == 1, all entries >= 1

  static ASequence from_values(std::vector<Int> values);
  void validate() const;
};

/// Cohomology presentation of the base manifold: graded groups with chosen
/// bases, the matrices of cup product with the Euler class x on free parts
/// (keyed by source degree k, mapping degree k to k + 2), and the
/// coordinates of x in the degree-2 basis.
struct CupPresentation {
  int dim_base = 0;  // 2n
  GradedAbelianGroup groups;
  std::map<int, IntMatrix> cup_x;
  std::vector<Int> euler_class_coords;
  std::map<int, std::vector<std::string>> labels;

  int half_dim() const { return dim_base / 2; }

  /// Matrix of cup product out of degree k; a correctly shaped zero matrix
  /// when nothing is stored (one side is the zero group or k is out of
  /// range).
  IntMatrix cup_map(int k) const;

  void validate() const;

  /// First degree whose group has torsion while an incident cup map is
  /// nonzero; such presentations cannot feed the integral Gysin solver.
  std::optional<int> torsion_interaction_degree() const;

  bool operator==(const CupPresentation&) const = default;
};

CupPresentation parse_presentation(const std::string& source);
std::string serialize_presentation(const CupPresentation& p);

CupPresentation from_a_sequence(const ASequence& s);

/// Poincare-duality constraint a_i * a_{n-i} == a_n for 1 <= i <= n-1.
bool validate_duality(const ASequence& s);

/// True iff gcd of the entries is 1; rejects the zero vector.
bool is_primitive(const std::vector<Int>& v);

}  // namespace bw
