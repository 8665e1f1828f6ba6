#pragma once

// Standard parabolic descriptors over a root system: the Levi root set, the
// unipotent-radical root set Psi(P_u), the generic centralizer root set Gamma,
// and the dimension bookkeeping used by the inequality suites.

#include <bitset>
#include <cstdint>
#include <vector>

#include "wcl/root_system.hpp"

namespace wcl {

// Subsets of the positive roots, indexed positive-locally:
// local k <-> global first_positive() + k.
constexpr int kMaxPositiveRoots = 128;
using PosBits = std::bitset<kMaxPositiveRoots>;

struct RootSubset {
  const RootSystem* system = nullptr;
  PosBits members;

  int size() const { return static_cast<int>(members.count()); }
  bool contains(int local) const { return members.test(local); }
  std::vector<int> locals() const {
    std::vector<int> out;
    for (int i = 0; i < system->num_positive(); ++i)
      if (members.test(i)) out.push_back(i);
    return out;
  }
};

inline bool is_closed(const RootSubset& s) {
  const RootSystem& rs = *s.system;
  int base = rs.first_positive();
  auto loc = s.locals();
  for (int a : loc)
    for (int b : loc) {
      int sum = rs.sum(base + a, base + b);
      if (sum >= 0 && !s.members.test(sum - base)) return false;
    }
  return true;
}

struct ParabolicDescriptor {
  const RootSystem* system = nullptr;
  std::uint32_t j_mask = 0;      // bit i set <=> alpha_{i+1} in J
  RootSubset psi_l_pos;          // positive roots supported on J
  RootSubset psi_pu;             // Psi+ \ psi_l_pos
  RootSubset gamma_generic;      // Gamma in generic characteristic
  int dim_pu = 0;
  int dim_l = 0;
  int dim_p = 0;
  int dim_b = 0;
  int dim_g = 0;

  std::vector<int> levi_simples() const {
    std::vector<int> out;
    for (int i = 0; i < system->rank(); ++i)
      if (j_mask >> i & 1) out.push_back(i);
    return out;
  }
};

// Simple roots of P_u, i.e. Pi \ J; these generate P_u as a normal subgroup.
inline std::vector<int> radical_root_generators(const ParabolicDescriptor& pd) {
  std::vector<int> out;
  for (int i = 0; i < pd.system->rank(); ++i)
    if (!(pd.j_mask >> i & 1)) out.push_back(i);
  return out;
}

inline RootSubset centralizer_roots_generic(const RootSystem& rs, const RootSubset& psi_pu) {
  RootSubset gamma;
  gamma.system = &rs;
  int base = rs.first_positive();
  auto pu = psi_pu.locals();
  for (int g : pu) {
    bool central = true;
    for (int b : pu) {
      if (rs.sum(base + g, base + b) >= 0) {
        central = false;
        break;
      }
    }
    if (central) gamma.members.set(g);
  }
  return gamma;
}

inline ParabolicDescriptor parabolic(const RootSystem& rs, std::uint32_t j_mask) {
  ParabolicDescriptor pd;
  pd.system = &rs;
  pd.j_mask = j_mask;
  pd.psi_l_pos.system = &rs;
  pd.psi_pu.system = &rs;
  int base = rs.first_positive();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const auto& c = rs.root(base + k).coeffs;
    bool in_levi = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] != 0 && !(j_mask >> i & 1)) {
        in_levi = false;
        break;
      }
    if (in_levi)
      pd.psi_l_pos.members.set(k);
    else
      pd.psi_pu.members.set(k);
  }
  pd.gamma_generic = centralizer_roots_generic(rs, pd.psi_pu);
  pd.dim_pu = pd.psi_pu.size();
  pd.dim_l = 2 * pd.psi_l_pos.size() + rs.rank();
  pd.dim_p = pd.dim_l + pd.dim_pu;
  pd.dim_b = rs.dim_b();
  pd.dim_g = rs.dim_g();
  return pd;
}

inline std::vector<int> very_bad_primes(char type) {
  switch (type) {
    case 'B':
    case 'C':
    case 'F':
      return {2};
    case 'G':
      return {2, 3};
    default:
      return {};
  }
}

}  // namespace wcl
