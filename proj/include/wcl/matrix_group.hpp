#pragma once

// Concrete finite matrix groups over small fields: SL_n(q) for n <= 4,
// Sp_4(q) with the antidiagonal symplectic form (so B is upper triangular),
// and SU_3(q0) over F_{q0^2} as the stabilizer of the antidiagonal Hermitian
// form. Groups are fully enumerated; elements are addressed by their index in
// the canonical (byte-sorted) element table.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcl/finite_field.hpp"
#include "wcl/root_system.hpp"

namespace wcl {

struct Mat {
  int n = 0;
  std::array<uint8_t, 16> a{};  // row-major

  int at(int r, int c) const { return a[r * n + c]; }
  void set(int r, int c, int v) { a[r * n + c] = static_cast<uint8_t>(v); }

  // 4 bits per entry; q <= 9 < 16 and n^2 <= 16
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = n * n - 1; i >= 0; --i) k = (k << 4) | a[i];
    return k;
  }
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
};

inline Mat mat_identity(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

inline Mat mat_mul(const GaloisField& f, const Mat& x, const Mat& y) {
  Mat out;
  out.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      int acc = 0;
      for (int k = 0; k < x.n; ++k) acc = f.add(acc, f.mul(x.at(i, k), y.at(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

inline Mat mat_inverse(const GaloisField& f, const Mat& x) {
  int n = x.n;
  // Gauss-Jordan on [x | I]
  std::array<std::array<int, 8>, 4> w{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w[i][j] = x.at(i, j);
      w[i][n + j] = (i == j) ? 1 : 0;
    }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (w[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(w[col], w[piv]);
    int inv = f.inv(w[col][col]);
    for (int j = 0; j < 2 * n; ++j) w[col][j] = f.mul(w[col][j], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col || w[r][col] == 0) continue;
      int c0 = w[r][col];
      for (int j = 0; j < 2 * n; ++j) w[r][j] = f.sub(w[r][j], f.mul(c0, w[col][j]));
    }
  }
  Mat out;
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, w[i][n + j]);
  return out;
}

inline int mat_det(const GaloisField& f, Mat x) {
  int n = x.n, det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (x.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        int t = x.at(col, j);
        x.set(col, j, x.at(piv, j));
        x.set(piv, j, t);
      }
      det = f.neg(det);
    }
    det = f.mul(det, x.at(col, col));
    int inv = f.inv(x.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (x.at(r, col) == 0) continue;
      int c0 = f.mul(x.at(r, col), inv);
      for (int j = col; j < n; ++j) x.set(r, j, f.sub(x.at(r, j), f.mul(c0, x.at(col, j))));
    }
  }
  return det;
}

enum class GroupKind { SL, Sp4, SU3 };

inline std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SL: return "SL";
    case GroupKind::Sp4: return "Sp4";
    case GroupKind::SU3: return "SU3";
  }
  return "?";
}

class MatrixGroup {
 public:
  // q is the defining field size for SL/Sp4 and q0 for SU3 (built over F_{q0^2}).
  static MatrixGroup build(GroupKind kind, int q, int dim = 0, long long cap = 1000000);

  GroupKind kind() const { return kind_; }
  int q() const { return q_; }
  int dim() const { return dim_; }
  const GaloisField& field() const { return field_; }
  const RootSystem* root_system() const { return rs_ ? &*rs_ : nullptr; }
  std::string name() const {
    if (kind_ == GroupKind::SL) return "SL" + std::to_string(dim_) + "(" + std::to_string(q_) + ")";
    return kind_name(kind_) + "(" + std::to_string(q_) + ")";
  }

  int size() const { return static_cast<int>(elements_.size()); }
  const Mat& element(int idx) const { return elements_[idx]; }
  int index_of(const Mat& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) throw std::logic_error("element not in group");
    return it->second;
  }
  int identity() const { return id_; }
  int mul(int i, int j) const { return index_of(mat_mul(field_, elements_[i], elements_[j])); }
  int inv(int i) const { return inv_[i]; }
  // x^g = g^-1 x g
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }

  const std::vector<int>& generators() const { return generators_; }
  // Conjugation permutation by generator #k: perm[i] = index of element_i ^ gen_k.
  const std::vector<int>& conj_perm(int k) const { return conj_perm_[k]; }

  // x_gamma(t) for split kinds; gamma is a global root index.
  int root_element(int root_global, int t) const {
    auto it = root_elem_.find(root_global);
    if (it == root_elem_.end()) throw std::invalid_argument("no such root subgroup");
    return it->second[t];
  }
  std::vector<int> root_subgroup(int root_global) const {
    std::vector<int> out;
    for (int t = 0; t < field_.q(); ++t) out.push_back(root_element(root_global, t));
    std::sort(out.begin(), out.end());
    return out;
  }
  bool has_root_subgroups() const { return !root_elem_.empty(); }

  const std::vector<int>& u_set() const { return u_; }          // sorted
  bool in_u(int idx) const { return in_u_[idx]; }
  const std::vector<int>& torus() const { return torus_; }
  const std::vector<int>& borel() const { return borel_; }
  const std::vector<int>& center() const { return center_; }
  const std::vector<int>& center_of_u() const { return z_of_u_; }

  // Element label for reports: "x[coeffs](t)" for root elements, else "g<idx>".
  std::string label(int idx) const {
    auto it = labels_.find(idx);
    if (it != labels_.end()) return it->second;
    return "g" + std::to_string(idx);
  }

 private:
  GroupKind kind_ = GroupKind::SL;
  int q_ = 0;
  int dim_ = 0;
  GaloisField field_{2};
  std::optional<RootSystem> rs_;
  std::vector<Mat> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> inv_;
  int id_ = 0;
  std::vector<int> generators_;
  std::vector<std::vector<int>> conj_perm_;
  std::unordered_map<int, std::vector<int>> root_elem_;  // root -> per t element index
  std::vector<int> u_, torus_, borel_, center_, z_of_u_;
  std::vector<char> in_u_;
  std::unordered_map<int, std::string> labels_;

  static long long sl_order(int n, long long q) {
    long long o = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    for (int k = 2; k <= n; ++k) {
      long long qk = 1;
      for (int i = 0; i < k; ++i) qk *= q;
      o *= (qk - 1);
    }
    return o;
  }
  static long long sp4_order(long long q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }
  static long long su3_order(long long q0) {
    return q0 * q0 * q0 * (q0 * q0 - 1) * (q0 * q0 * q0 + 1);
  }

  void enumerate(const std::vector<Mat>& gens, long long cap);
  void finish_structure(const std::vector<Mat>& u_seed);
};

namespace detail {

// Sp4 root element patterns for the antidiagonal form
// J[0][3]=1, J[1][2]=1, J[2][1]=-1, J[3][0]=-1.
// Bourbaki C2: alpha1 = e1-e2 (short), alpha2 = 2e2 (long).
inline Mat sp4_root_matrix(const GaloisField& f, const std::vector<int>& coeffs, int t) {
  Mat m = mat_identity(4);
  int c1 = coeffs[0], c2 = coeffs[1];
  auto set2 = [&](int r1, int col1, int v1, int r2, int col2, int v2) {
    m.set(r1, col1, v1);
    if (r2 >= 0) m.set(r2, col2, v2);
  };
  if (c1 == 1 && c2 == 0) set2(0, 1, t, 2, 3, f.neg(t));
  else if (c1 == -1 && c2 == 0) set2(1, 0, t, 3, 2, f.neg(t));
  else if (c1 == 0 && c2 == 1) set2(1, 2, t, -1, 0, 0);
  else if (c1 == 0 && c2 == -1) set2(2, 1, t, -1, 0, 0);
  else if (c1 == 1 && c2 == 1) set2(0, 2, t, 1, 3, t);
  else if (c1 == -1 && c2 == -1) set2(2, 0, t, 3, 1, t);
  else if (c1 == 2 && c2 == 1) set2(0, 3, t, -1, 0, 0);
  else if (c1 == -2 && c2 == -1) set2(3, 0, t, -1, 0, 0);
  else throw std::logic_error("not a C2 root");
  return m;
}

inline bool sp4_form_ok(const GaloisField& f, const Mat& m) {
  // A^T J A == J
  static const int J[4][4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int acc = 0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          if (J[k][l] == 0) continue;
          int v = f.mul(m.at(k, i), m.at(l, j));
          acc = J[k][l] > 0 ? f.add(acc, v) : f.sub(acc, v);
        }
      int want = (i + j == 3) ? (i < j ? 1 : f.neg(1)) : 0;
      if (acc != want) return false;
    }
  return true;
}

inline bool su3_form_ok(const GaloisField& f, const Mat& m) {
  // sigma(A)^T J A == J with J antidiagonal ones, sigma = q0-power Frobenius
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int acc = 0;
      for (int k = 0; k < 3; ++k) {
        // (sigma(A)^T J A)_{ij} = sum_k sigma(A_{ki}) * A_{(2-k) j}
        acc = f.add(acc, f.mul(f.frob(m.at(k, i)), m.at(2 - k, j)));
      }
      int want = (i + j == 2) ? 1 : 0;
      if (acc != want) return false;
    }
  return true;
}

}  // namespace detail

inline void MatrixGroup::enumerate(const std::vector<Mat>& gens, long long cap) {
  std::vector<Mat> pool;
  std::unordered_map<std::uint64_t, int> seen;
  Mat id = mat_identity(dim_);
  pool.push_back(id);
  seen[id.key()] = 0;
  std::vector<int> queue = {0};
  std::size_t head = 0;
  while (head < queue.size()) {
    Mat cur = pool[queue[head++]];
    for (const Mat& g : gens) {
      Mat nxt = mat_mul(field_, cur, g);
      auto k = nxt.key();
      if (seen.count(k)) continue;
      if (static_cast<long long>(pool.size()) >= cap)
        throw std::runtime_error("element cap " + std::to_string(cap) + " exceeded");
      seen[k] = static_cast<int>(pool.size());
      queue.push_back(static_cast<int>(pool.size()));
      pool.push_back(nxt);
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
  elements_ = std::move(pool);
  index_.clear();
  for (int i = 0; i < size(); ++i) index_[elements_[i].key()] = i;
  id_ = index_of(mat_identity(dim_));
  inv_.resize(size());
  for (int i = 0; i < size(); ++i) inv_[i] = index_of(mat_inverse(field_, elements_[i]));
}

inline void MatrixGroup::finish_structure(const std::vector<Mat>& u_seed) {
  // U: closure of the seed (positive root elements / scanned unitriangulars)
  {
    std::vector<int> seeds;
    for (const Mat& m : u_seed) seeds.push_back(index_of(m));
    std::vector<char> inset(size(), 0);
    std::vector<int> work;
    inset[id_] = 1;
    work.push_back(id_);
    for (int s : seeds)
      if (!inset[s]) { inset[s] = 1; work.push_back(s); }
    std::size_t head = 0;
    while (head < work.size()) {
      int x = work[head++];
      for (int s : seeds) {
        int y = mul(x, s);
        if (!inset[y]) { inset[y] = 1; work.push_back(y); }
      }
    }
    u_.clear();
    for (int i = 0; i < size(); ++i)
      if (inset[i]) u_.push_back(i);
    in_u_ = std::move(inset);
  }
  // torus: diagonal members
  torus_.clear();
  for (int i = 0; i < size(); ++i) {
    bool diag = true;
    const Mat& m = elements_[i];
    for (int r = 0; r < dim_ && diag; ++r)
      for (int c = 0; c < dim_; ++c)
        if (r != c && m.at(r, c) != 0) { diag = false; break; }
    if (diag) torus_.push_back(i);
  }
  // B = T U (product set)
  {
    std::vector<char> inb(size(), 0);
    for (int t : torus_)
      for (int u : u_) inb[mul(t, u)] = 1;
    borel_.clear();
    for (int i = 0; i < size(); ++i)
      if (inb[i]) borel_.push_back(i);
  }
  // center: commutes with every generator
  center_.clear();
  for (int i = 0; i < size(); ++i) {
    bool ok = true;
    for (int g : generators_)
      if (mul(i, g) != mul(g, i)) { ok = false; break; }
    if (ok) center_.push_back(i);
  }
  // center of U
  z_of_u_.clear();
  for (int z : u_) {
    bool ok = true;
    for (int u : u_)
      if (mul(z, u) != mul(u, z)) { ok = false; break; }
    if (ok) z_of_u_.push_back(z);
  }
  // conjugation permutations for the generators
  conj_perm_.assign(generators_.size(), {});
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    auto& perm = conj_perm_[k];
    perm.resize(size());
    int g = generators_[k], gi = inv_[g];
    for (int i = 0; i < size(); ++i) perm[i] = mul(mul(gi, i), g);
  }
}

inline MatrixGroup MatrixGroup::build(GroupKind kind, int q, int dim, long long cap) {
  MatrixGroup g;
  g.kind_ = kind;
  g.q_ = q;
  long long expected = 0;

  if (kind == GroupKind::SL) {
    if (!((dim == 2 && q >= 2 && q <= 5) || (dim == 3 && (q == 2 || q == 3)) ||
          (dim == 4 && q == 2)))
      throw std::invalid_argument(
          "supported SL instances: SL2(q<=5), SL3(q in {2,3}), SL4(2)");
    g.dim_ = dim;
    g.field_ = GaloisField(q);
    g.rs_ = RootSystem::build('A', dim - 1);
    expected = sl_order(dim, q);
  } else if (kind == GroupKind::Sp4) {
    if (q != 2 && q != 3) throw std::invalid_argument("supported Sp4 instances: q in {2,3}");
    g.dim_ = 4;
    g.field_ = GaloisField(q);
    g.rs_ = RootSystem::build('C', 2);
    expected = sp4_order(q);
  } else {
    if (q != 2 && q != 3) throw std::invalid_argument("supported SU3 instances: q0 in {2,3}");
    g.dim_ = 3;
    g.field_ = GaloisField(q * q);
    expected = su3_order(q);
  }
  if (expected > cap)
    throw std::runtime_error("group order " + std::to_string(expected) + " exceeds cap " +
                             std::to_string(cap));

  std::vector<Mat> gens;
  std::vector<Mat> u_seed;

  if (kind == GroupKind::SL) {
    const RootSystem& rs = *g.rs_;
    auto root_mat = [&](int root, int t) {
      const auto& c = rs.root(root).coeffs;
      int lo = -1, hi = -1;
      bool negv = false;
      for (int i = 0; i < rs.rank(); ++i)
        if (c[i] != 0) {
          if (lo < 0) lo = i;
          hi = i;
          negv = c[i] < 0;
        }
      Mat m = mat_identity(dim);
      if (!negv)
        m.set(lo, hi + 1, t);
      else
        m.set(hi + 1, lo, t);
      return m;
    };
    for (int r = 0; r < rs.num_roots(); ++r) {
      auto& per_t = g.root_elem_[r];
      per_t.assign(g.field_.q(), -1);
      if (rs.is_positive(r))
        for (int t = 1; t < q; ++t) u_seed.push_back(root_mat(r, t));
    }
    for (int i = 0; i < rs.rank(); ++i)
      for (int t = 1; t < q; ++t) {
        gens.push_back(root_mat(rs.simple_root(i), t));
        gens.push_back(root_mat(rs.negative(rs.simple_root(i)), t));
      }
    g.generators_.clear();
    g.enumerate(gens, cap);
    for (int r = 0; r < rs.num_roots(); ++r)
      for (int t = 0; t < q; ++t) g.root_elem_[r][t] = g.index_of(root_mat(r, t));
  } else if (kind == GroupKind::Sp4) {
    const RootSystem& rs = *g.rs_;
    for (int r = 0; r < rs.num_roots(); ++r) {
      g.root_elem_[r].assign(q, -1);
      for (int t = 1; t < q; ++t) {
        Mat m = detail::sp4_root_matrix(g.field_, rs.root(r).coeffs, t);
        if (!detail::sp4_form_ok(g.field_, m))
          throw std::logic_error("Sp4 root matrix violates the symplectic form");
        gens.push_back(m);
        if (rs.is_positive(r)) u_seed.push_back(m);
      }
    }
    g.enumerate(gens, cap);
    for (int r = 0; r < rs.num_roots(); ++r)
      for (int t = 0; t < q; ++t)
        g.root_elem_[r][t] = g.index_of(detail::sp4_root_matrix(g.field_, rs.root(r).coeffs, t));
  } else {
    // SU3: scan the unitriangular unitary matrices for U and its transpose
    // side, plus the diagonal torus; the closure is the whole group.
    const GaloisField& f = g.field_;
    int Q = f.q();
    for (int a = 0; a < Q; ++a)
      for (int b = 0; b < Q; ++b)
        for (int c = 0; c < Q; ++c) {
          Mat up = mat_identity(3);
          up.set(0, 1, a); up.set(0, 2, b); up.set(1, 2, c);
          if (detail::su3_form_ok(f, up) && mat_det(f, up) == 1) {
            u_seed.push_back(up);
            gens.push_back(up);
          }
          Mat lo = mat_identity(3);
          lo.set(1, 0, a); lo.set(2, 0, b); lo.set(2, 1, c);
          if (detail::su3_form_ok(f, lo) && mat_det(f, lo) == 1) gens.push_back(lo);
        }
    for (int a = 1; a < Q; ++a)
      for (int b = 1; b < Q; ++b)
        for (int c = 1; c < Q; ++c) {
          Mat d = mat_identity(3);
          d.set(0, 0, a); d.set(1, 1, b); d.set(2, 2, c);
          if (detail::su3_form_ok(f, d) && mat_det(f, d) == 1) gens.push_back(d);
        }
    g.enumerate(gens, cap);
  }

  if (g.size() != expected)
    throw std::logic_error(g.name() + ": enumerated order " + std::to_string(g.size()) +
                           " != " + std::to_string(expected));

  // record generator indices and labels
  g.generators_.clear();
  for (const Mat& m : gens) {
    int idx = g.index_of(m);
    bool dup = false;
    for (int e : g.generators_)
      if (e == idx) { dup = true; break; }
    if (!dup && idx != g.id_) g.generators_.push_back(idx);
  }
  if (g.rs_) {
    for (auto& [root, per_t] : g.root_elem_)
      for (int t = 1; t < g.field_.q(); ++t) {
        std::string lbl = "x[";
        const auto& c = g.rs_->root(root).coeffs;
        for (std::size_t i = 0; i < c.size(); ++i)
          lbl += (i ? "," : "") + std::to_string(c[i]);
        lbl += "](" + std::to_string(t) + ")";
        g.labels_[per_t[t]] = lbl;
      }
  }
  g.finish_structure(u_seed);

  // sanity on |U|
  long long uexp = 1;
  if (kind == GroupKind::SU3) {
    uexp = static_cast<long long>(q) * q * q;
  } else {
    for (int i = 0; i < g.rs_->num_positive(); ++i) uexp *= q;
  }
  if (static_cast<long long>(g.u_.size()) != uexp)
    throw std::logic_error(g.name() + ": |U| = " + std::to_string(g.u_.size()) +
                           " != " + std::to_string(uexp));
  return g;
}

}  // namespace wcl
