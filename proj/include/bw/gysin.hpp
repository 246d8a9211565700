#pragma once

#include <map>
#include <vector>

#include "bw/graded.hpp"

namespace bw {

/// How the degree-k extension 0 -> coker -> H^k(M) -> ker -> 0 was resolved.
/// A free kernel part forces the split; a torsion kernel part meeting a
/// nonzero cokernel part leaves the group undetermined and is reported as
/// ambiguous rather than silently split.
enum class ExtensionFlag { split_forced, zero_kernel, ambiguous };

const char* to_string(ExtensionFlag f);

struct DegreeParts {
  AbelianGroupInvariants cokernel_part;  // coker(cup: H^{k-2}(N) -> H^k(N))
  AbelianGroupInvariants kernel_part;    // ker(cup: H^{k-1}(N) -> H^{k+1}(N))
  bool operator==(const DegreeParts&) const = default;
};

struct TotalSpaceCohomology {
  GradedAbelianGroup groups;  // degrees 0 .. 2n+1; ambiguous degrees hold the
                              // split-extension candidate (see extension flag)
  std::map<int, ExtensionFlag> extension;
  std::map<int, DegreeParts> provenance;

  bool has_torsion() const;
  bool ambiguous_anywhere() const;
};

/// Solve the Gysin sequence of the circle bundle with Euler class x over the
/// presented base: for each degree k of the total space, the short exact
/// sequence 0 -> coker(cup x) -> H^k(M) -> ker(cup x) -> 0.
TotalSpaceCohomology total_space_cohomology(const CupPresentation& p);

/// Rational Betti numbers of the total space, indexed 0 .. 2n+1:
/// b_k(M) = corank(cup: H^{k-2} -> H^k) + nullity(cup: H^{k-1} -> H^{k+1}).
std::vector<std::size_t> total_space_betti(const CupPresentation& p);

}  // namespace bw
