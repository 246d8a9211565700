#include "bw/gysin.hpp"

#include <stdexcept>
#include <string>

namespace bw {

namespace {

std::vector<std::size_t> betti_unaudited(const CupPresentation& p) {
  const int top = p.dim_base + 1;
  std::vector<std::size_t> b(top + 1, 0);
  for (int k = 0; k <= top; ++k) {
    const std::size_t corank = p.groups.free_rank(k) - rank(p.cup_map(k - 2));
    const std::size_t nullity = p.groups.free_rank(k - 1) - rank(p.cup_map(k - 1));
    b[k] = corank + nullity;
  }
  return b;
}

// Exactness bookkeeping and the Euler-characteristic identity, checked on
// every run.
void audit_betti(const CupPresentation& p, const std::vector<std::size_t>& b) {
  const int top = p.dim_base + 1;
  long long chi = 0;
  for (int k = 0; k <= top; ++k) {
    const long long expect =
        static_cast<long long>(p.groups.free_rank(k)) - static_cast<long long>(rank(p.cup_map(k - 2))) +
        static_cast<long long>(p.groups.free_rank(k - 1)) - static_cast<long long>(rank(p.cup_map(k - 1)));
    if (expect != static_cast<long long>(b[k]))
      throw std::logic_error("gysin exactness audit failed at degree " + std::to_string(k));
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(b[k]);
  }
  if (chi != 0)
    throw std::logic_error("gysin audit failed: nonzero Euler characteristic " + std::to_string(chi));
}

}  // namespace

const char* to_string(ExtensionFlag f) {
  switch (f) {
    case ExtensionFlag::split_forced: return "split-forced";
    case ExtensionFlag::zero_kernel: return "zero-kernel";
    case ExtensionFlag::ambiguous: return "ambiguous";
  }
  return "?";
}

bool TotalSpaceCohomology::has_torsion() const {
  for (const auto& [deg, g] : groups.groups)
    if (!g.torsion.empty()) return true;
  return false;
}

bool TotalSpaceCohomology::ambiguous_anywhere() const {
  for (const auto& [deg, f] : extension)
    if (f == ExtensionFlag::ambiguous) return true;
  return false;
}

TotalSpaceCohomology total_space_cohomology(const CupPresentation& p) {
  p.validate();
  if (auto deg = p.torsion_interaction_degree())
    throw ValidationError(
        "unsupported torsion interaction at degree " + std::to_string(*deg) +
        ": the group has torsion and an incident cup map is nonzero");

  const int top = p.dim_base + 1;
  TotalSpaceCohomology out;
  out.groups.top_degree = top;

  for (int k = 0; k <= top; ++k) {
    AbelianGroupInvariants coker = cokernel(p.cup_map(k - 2));
    const auto& base_k = p.groups.at(k);
    if (!base_k.torsion.empty()) coker.torsion = base_k.torsion;  // incoming map is zero here

    AbelianGroupInvariants kern{kernel(p.cup_map(k - 1)).rank, {}};
    const auto& base_km1 = p.groups.at(k - 1);
    if (!base_km1.torsion.empty()) kern.torsion = base_km1.torsion;  // outgoing map is zero here

    if (coker.is_zero() && kern.is_zero()) continue;

    ExtensionFlag flag;
    AbelianGroupInvariants group;
    if (kern.is_zero()) {
      flag = ExtensionFlag::zero_kernel;
      group = coker;
    } else if (kern.is_free()) {
      flag = ExtensionFlag::split_forced;  // free quotient splits the sequence
      group = direct_sum(coker, kern);
    } else if (coker.is_zero()) {
      flag = ExtensionFlag::split_forced;  // trivial extension of the kernel part
      group = kern;
    } else {
      flag = ExtensionFlag::ambiguous;  // torsion kernel over a nonzero cokernel
      group = direct_sum(coker, kern);  // split candidate, not asserted
    }
    out.groups.set(k, group);
    out.extension[k] = flag;
    out.provenance[k] = DegreeParts{std::move(coker), std::move(kern)};
  }

  const auto b = betti_unaudited(p);
  audit_betti(p, b);
  for (int k = 0; k <= top; ++k) {
    auto it = out.extension.find(k);
    if (it != out.extension.end() && it->second == ExtensionFlag::ambiguous) continue;
    if (out.groups.free_rank(k) != b[k])
      throw std::logic_error("gysin audit failed: group rank and Betti number disagree at degree " +
                             std::to_string(k));
  }

  if (p.groups.at(0) == AbelianGroupInvariants{1, {}} &&
      p.groups.at(p.dim_base) == AbelianGroupInvariants{1, {}}) {
    if (!(out.groups.at(0) == AbelianGroupInvariants{1, {}}) ||
        !(out.groups.at(top) == AbelianGroupInvariants{1, {}}))
      throw std::logic_error("gysin audit failed: H^0(M) or H^top(M) is not Z over a connected closed base");
  }
  return out;
}

std::vector<std::size_t> total_space_betti(const CupPresentation& p) {
  p.validate();
  auto b = betti_unaudited(p);
  audit_betti(p, b);
  return b;
}

}  // namespace bw
