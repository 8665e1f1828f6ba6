#pragma once

// Subgroup machinery on an enumerated MatrixGroup: canonical subgroup handles,
// conjugation orbits with hashed dedup, weak closure, the subgroup lattice of
// U, and the named subgroups the verification suites need (parabolic radicals,
// regular unipotent elements, the small-field extra subgroup).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "wcl/matrix_group.hpp"
#include "wcl/parabolic.hpp"

namespace wcl {

struct SubgroupHandle {
  std::vector<int> elems;  // sorted element indices; the canonical form
  std::vector<int> gens;   // small generating set

  int order() const { return static_cast<int>(elems.size()); }
  bool operator==(const SubgroupHandle& o) const { return elems == o.elems; }
  bool contains(int idx) const {
    return std::binary_search(elems.begin(), elems.end(), idx);
  }
};

namespace detail {

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

inline std::vector<int> element_closure(const MatrixGroup& g, const std::vector<int>& seeds) {
  std::vector<char> inset(g.size(), 0);
  std::vector<int> work;
  inset[g.identity()] = 1;
  work.push_back(g.identity());
  for (int s : seeds)
    if (!inset[s]) {
      inset[s] = 1;
      work.push_back(s);
    }
  std::size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    for (int s : seeds) {
      int y = g.mul(x, s);
      if (!inset[y]) {
        inset[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

inline std::vector<int> small_generating_set(const MatrixGroup& g, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> have = {g.identity()};
  for (int e : elems) {
    if (std::binary_search(have.begin(), have.end(), e)) continue;
    gens.push_back(e);
    have = element_closure(g, gens);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

inline SubgroupHandle subgroup_from_elements(const MatrixGroup& g, std::vector<int> elems) {
  SubgroupHandle h;
  std::sort(elems.begin(), elems.end());
  h.elems = std::move(elems);
  h.gens = small_generating_set(g, h.elems);
  return h;
}

inline SubgroupHandle subgroup_closure(const MatrixGroup& g, const std::vector<int>& seeds) {
  SubgroupHandle h;
  h.elems = element_closure(g, seeds);
  h.gens = small_generating_set(g, h.elems);
  return h;
}

inline SubgroupHandle trivial_subgroup(const MatrixGroup& g) {
  return SubgroupHandle{{g.identity()}, {}};
}

inline SubgroupHandle u_subgroup(const MatrixGroup& g) {
  return subgroup_from_elements(g, g.u_set());
}

inline SubgroupHandle conjugate_subgroup(const MatrixGroup& g, const SubgroupHandle& h, int by) {
  SubgroupHandle out;
  out.elems.reserve(h.elems.size());
  for (int e : h.elems) out.elems.push_back(g.conj(e, by));
  std::sort(out.elems.begin(), out.elems.end());
  for (int e : h.gens) out.gens.push_back(g.conj(e, by));
  return out;
}

constexpr long long kOrbitCap = 1000000;

// Walks the conjugation orbit of x; visit(member) returning false stops the
// walk early. Members arrive as sorted element-index vectors.
template <typename Visit>
void conjugation_orbit(const MatrixGroup& g, const SubgroupHandle& x, Visit visit) {
  std::unordered_set<std::vector<int>, detail::IntVecHash> seen;
  std::vector<std::vector<int>> queue;
  seen.insert(x.elems);
  queue.push_back(x.elems);
  if (!visit(queue.front())) return;
  std::size_t head = 0;
  while (head < queue.size()) {
    std::vector<int> cur = queue[head++];
    for (std::size_t k = 0; k < g.generators().size(); ++k) {
      const auto& perm = g.conj_perm(k);
      std::vector<int> img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = perm[cur[i]];
      std::sort(img.begin(), img.end());
      if (seen.count(img)) continue;
      if (static_cast<long long>(seen.size()) >= kOrbitCap)
        throw std::runtime_error("conjugation orbit exceeded cap");
      seen.insert(img);
      if (!visit(img)) return;
      queue.push_back(img);
    }
  }
}

// H is the only G-conjugate of itself contained in U.
inline bool is_weakly_closed(const MatrixGroup& g, const SubgroupHandle& x) {
  bool ok = true;
  conjugation_orbit(g, x, [&](const std::vector<int>& member) {
    if (member == x.elems) return true;
    for (int e : member)
      if (!g.in_u(e)) return true;  // conjugate left U; keep walking
    ok = false;
    return false;
  });
  return ok;
}

inline SubgroupHandle normalizer(const MatrixGroup& g, const SubgroupHandle& x) {
  std::vector<char> inx(g.size(), 0);
  for (int e : x.elems) inx[e] = 1;
  std::vector<int> members;
  for (int n = 0; n < g.size(); ++n) {
    bool ok = true;
    for (int s : x.gens)
      if (!inx[g.conj(s, n)]) {
        ok = false;
        break;
      }
    if (ok) members.push_back(n);
  }
  return subgroup_from_elements(g, std::move(members));
}

inline SubgroupHandle centralizer(const MatrixGroup& g, const SubgroupHandle& x) {
  std::vector<int> members;
  for (int n = 0; n < g.size(); ++n) {
    bool ok = true;
    for (int s : x.gens)
      if (g.mul(n, s) != g.mul(s, n)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(n);
  }
  return subgroup_from_elements(g, std::move(members));
}

inline bool normalized_by(const MatrixGroup& g, const SubgroupHandle& x,
                          const std::vector<int>& set) {
  std::vector<char> inx(g.size(), 0);
  for (int e : x.elems) inx[e] = 1;
  for (int n : set)
    for (int s : x.gens)
      if (!inx[g.conj(s, n)]) return false;
  return true;
}

// Coset-counting test: P = N_G(X), count the fixed points of X on G/P. For a
// subgroup moved inside U by U itself the count criterion does not apply, but
// such a subgroup is never weakly closed, so the answer is false outright.
inline bool is_weakly_closed_via_fixed_point(const MatrixGroup& g, const SubgroupHandle& x,
                                             int* fixed_count = nullptr) {
  if (!normalized_by(g, x, g.u_set())) {
    if (fixed_count) *fixed_count = -1;
    return false;
  }
  SubgroupHandle p = normalizer(g, x);
  std::vector<char> inp(g.size(), 0);
  for (int e : p.elems) inp[e] = 1;
  std::vector<char> visited(g.size(), 0);
  int count = 0;
  for (int rep = 0; rep < g.size(); ++rep) {
    if (visited[rep]) continue;
    for (int e : p.elems) visited[g.mul(rep, e)] = 1;
    bool fixed = true;
    for (int s : x.gens)
      if (!inp[g.conj(s, rep)]) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  if (fixed_count) *fixed_count = count;
  return count == 1;
}

// Smallest weakly closed subgroup of U containing x: generated by all the
// conjugates of x that lie inside U.
inline SubgroupHandle weak_closure(const MatrixGroup& g, const SubgroupHandle& x) {
  std::vector<int> seeds;
  conjugation_orbit(g, x, [&](const std::vector<int>& member) {
    for (int e : member)
      if (!g.in_u(e)) return true;
    seeds.insert(seeds.end(), member.begin(), member.end());
    return true;
  });
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return subgroup_closure(g, seeds);
}

// All subgroups of U, found as a closure fixpoint: start from the trivial
// subgroup and repeatedly extend by one U-element (one representative per
// coset). Requires |U| <= 128.
inline std::vector<SubgroupHandle> subgroups_of_u(const MatrixGroup& g) {
  const auto& u = g.u_set();
  const int nu = static_cast<int>(u.size());
  if (nu > 128) throw std::runtime_error("subgroup enumeration supports |U| <= 128");
  std::vector<int> local_of(g.size(), -1);
  for (int i = 0; i < nu; ++i) local_of[u[i]] = i;
  std::vector<std::vector<uint8_t>> table(nu, std::vector<uint8_t>(nu));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      int m = g.mul(u[i], u[j]);
      table[i][j] = static_cast<uint8_t>(local_of[m]);
    }
  int id_local = local_of[g.identity()];

  struct Bits {
    std::uint64_t lo = 0, hi = 0;
    bool test(int i) const { return i < 64 ? (lo >> i & 1) : (hi >> (i - 64) & 1); }
    void set(int i) {
      if (i < 64) lo |= 1ull << i;
      else hi |= 1ull << (i - 64);
    }
    bool operator==(const Bits& o) const { return lo == o.lo && hi == o.hi; }
  };
  struct BitsHash {
    std::size_t operator()(const Bits& b) const {
      return std::hash<std::uint64_t>()(b.lo * 0x9e3779b97f4a7c15ull ^ b.hi);
    }
  };

  auto close = [&](std::vector<int> members, Bits bits, int extra) {
    if (!bits.test(extra)) {
      bits.set(extra);
      members.push_back(extra);
    }
    // grow until closed under the table
    while (true) {
      bool grew = false;
      std::size_t n0 = members.size();
      for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j) {
          int pr = table[members[i]][members[j]];
          if (!bits.test(pr)) {
            bits.set(pr);
            members.push_back(pr);
            grew = true;
          }
        }
      if (!grew) break;
    }
    std::sort(members.begin(), members.end());
    return std::make_pair(std::move(members), bits);
  };

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<std::pair<std::vector<int>, Bits>> queue;
  {
    Bits b;
    b.set(id_local);
    seen.insert(b);
    queue.emplace_back(std::vector<int>{id_local}, b);
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    auto [members, bits] = queue[head++];
    std::vector<char> covered(nu, 0);
    for (int m : members) covered[m] = 1;
    for (int gl = 0; gl < nu; ++gl) {
      if (covered[gl]) continue;
      // mark the whole coset H*gl: any representative extends to the same K
      for (int m : members) covered[table[m][gl]] = 1;
      auto [k_members, k_bits] = close(members, bits, gl);
      if (seen.insert(k_bits).second) queue.emplace_back(std::move(k_members), k_bits);
    }
  }

  std::vector<SubgroupHandle> out;
  out.reserve(queue.size());
  for (auto& [members, bits] : queue) {
    std::vector<int> globals;
    globals.reserve(members.size());
    for (int m : members) globals.push_back(u[m]);
    out.push_back(subgroup_from_elements(g, std::move(globals)));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

inline std::vector<SubgroupHandle> enumerate_weakly_closed(const MatrixGroup& g) {
  std::vector<SubgroupHandle> out;
  for (auto& h : subgroups_of_u(g))
    if (is_weakly_closed(g, h)) out.push_back(std::move(h));
  return out;
}

// <x_gamma(t) : gamma in Psi(P_u)> for the standard parabolic given by J.
inline SubgroupHandle parabolic_radical(const MatrixGroup& g, std::uint32_t j_mask) {
  const RootSystem* rs = g.root_system();
  if (!rs) throw std::invalid_argument("parabolic radicals need a split group");
  auto pd = parabolic(*rs, j_mask);
  std::vector<int> seeds;
  int base = rs->first_positive();
  for (int loc : pd.psi_pu.locals())
    for (int t = 1; t < g.field().q(); ++t) seeds.push_back(g.root_element(base + loc, t));
  return subgroup_closure(g, seeds);
}

// u = prod over simple roots of x_alpha(1); checked to lie in exactly one
// conjugate of U.
inline int regular_unipotent(const MatrixGroup& g) {
  const RootSystem* rs = g.root_system();
  if (!rs) throw std::invalid_argument("regular unipotent element needs a split group");
  int u = g.identity();
  for (int i = 0; i < rs->rank(); ++i) u = g.mul(u, g.root_element(rs->simple_root(i), 1));
  int containing = 0;
  conjugation_orbit(g, u_subgroup(g), [&](const std::vector<int>& member) {
    if (std::binary_search(member.begin(), member.end(), u)) ++containing;
    return true;
  });
  if (containing != 1)
    throw std::logic_error("regular unipotent candidate lies in " + std::to_string(containing) +
                           " Borel subgroups");
  return u;
}

// X = <u, Y> with u regular unipotent and Y generated by the root subgroups of
// the non-simple positive roots. Only meaningful over F_2 in rank 2.
inline SubgroupHandle example_extra_subgroup(const MatrixGroup& g) {
  const RootSystem* rs = g.root_system();
  if (!rs || g.field().q() != 2 || rs->rank() != 2)
    throw std::invalid_argument("the extra subgroup construction needs a split rank-2 group over F_2");
  std::vector<int> seeds;
  int base = rs->first_positive();
  for (int k = 0; k < rs->num_positive(); ++k) {
    int global = base + k;
    if (rs->height(global) == 1) continue;  // skip the simple roots
    for (int t = 1; t < g.field().q(); ++t) seeds.push_back(g.root_element(global, t));
  }
  seeds.push_back(regular_unipotent(g));
  SubgroupHandle x = subgroup_closure(g, seeds);
  if (!is_weakly_closed(g, x)) throw std::logic_error("extra subgroup is not weakly closed");
  for (std::uint32_t j = 0; j < (1u << rs->rank()); ++j)
    if (x == parabolic_radical(g, j))
      throw std::logic_error("extra subgroup equals a parabolic radical");
  return x;
}

// Solves the group-side commutator relation [x_a(t), x_b(u)] =
// prod x_{ia+jb}(c_ij t^i u^j) by exhausting coefficient assignments over F_q;
// returns the c_ij in (i+j, i) term order. Split kinds only.
inline std::vector<std::pair<std::pair<int, int>, int>> solve_group_commutator(
    const MatrixGroup& g, int a_global, int b_global) {
  const RootSystem& rs = *g.root_system();
  std::vector<std::pair<int, int>> terms;
  std::vector<int> term_roots;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      std::vector<int> c(rs.rank());
      for (int k = 0; k < rs.rank(); ++k)
        c[k] = i * rs.root(a_global).coeffs[k] + j * rs.root(b_global).coeffs[k];
      auto idx = rs.index_of(c);
      if (idx) {
        terms.emplace_back(i, j);
        term_roots.push_back(*idx);
      }
    }
  // sort by (i+j, i)
  std::vector<int> ord(terms.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
  std::sort(ord.begin(), ord.end(), [&](int x, int y) {
    auto kx = std::make_pair(terms[x].first + terms[x].second, terms[x].first);
    auto ky = std::make_pair(terms[y].first + terms[y].second, terms[y].first);
    return kx < ky;
  });

  const GaloisField& f = g.field();
  int q = f.q();
  int m = static_cast<int>(terms.size());
  std::vector<int> assign(m, 0);
  std::vector<std::pair<std::pair<int, int>, int>> result;
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= q;
  int found = 0;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < m; ++i) {
      assign[i] = static_cast<int>(c % q);
      c /= q;
    }
    bool ok = true;
    for (int t = 0; t < q && ok; ++t)
      for (int u = 0; u < q && ok; ++u) {
        int xa = g.root_element(a_global, t), xb = g.root_element(b_global, u);
        int lhs = g.mul(g.mul(g.mul(xa, xb), g.inv(xa)), g.inv(xb));
        int rhs = g.identity();
        for (int oi : ord) {
          auto [i, j] = terms[oi];
          int arg = assign[oi];
          for (int k = 0; k < i; ++k) arg = f.mul(arg, t);
          for (int k = 0; k < j; ++k) arg = f.mul(arg, u);
          rhs = g.mul(rhs, g.root_element(term_roots[oi], arg));
        }
        if (lhs != rhs) ok = false;
      }
    if (ok) {
      ++found;
      result.clear();
      for (int oi : ord) result.emplace_back(terms[oi], assign[oi]);
    }
  }
  if (found != 1)
    throw std::logic_error("group commutator solution not unique (" + std::to_string(found) + ")");
  return result;
}

}  // namespace wcl
