#pragma once

// Irreducible root systems of types A..G as exact integer combinatorics.
// Roots are stored as coefficient vectors over the simple-root basis; the
// only geometric input is the Cartan matrix, so everything stays in Z.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcl {

struct Root {
  std::vector<int> coeffs;  // over the simple roots, Bourbaki numbering
  int height = 0;           // sum of coefficients
};

// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_j,alpha_i)/(alpha_i,alpha_i),
// 0-based rows/columns.
class RootSystem {
 public:
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  // Roots are sorted by (height, lex); negatives occupy [0, n+), positives
  // [n+, 2n+). Simple root i sits somewhere in the height-1 block.
  const Root& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return roots_[idx].height > 0; }
  int height(int idx) const { return roots_[idx].height; }
  int first_positive() const { return num_positive(); }

  int simple_root(int i) const { return simple_[i]; }         // global index
  int highest_root() const { return highest_; }
  int negative(int idx) const { return negative_[idx]; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  std::optional<int> index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const std::vector<int>& coeffs) const { return index_.count(coeffs) != 0; }

  // Index of gamma+delta, or -1 when the sum is not a root.
  int sum(int i, int j) const { return sum_[i][j]; }

  // <gamma, alpha_i^vee>; the reflection s_i acts as gamma - pairing * alpha_i.
  int pairing(int root_idx, int simple_i) const {
    const auto& c = roots_[root_idx].coeffs;
    long acc = 0;
    for (int j = 0; j < rank_; ++j) acc += static_cast<long>(c[j]) * cartan_[simple_i][j];
    return static_cast<int>(acc);
  }

  int reflect(int root_idx, int simple_i) const {
    std::vector<int> c = roots_[root_idx].coeffs;
    int n = pairing(root_idx, simple_i);
    c[simple_i] -= n;
    auto it = index_.find(c);
    if (it == index_.end()) throw std::logic_error("reflection left the root system");
    return it->second;
  }

  // W-invariant form normalized so short simple roots have (a,a) = 2.
  long form(int i, int j) const {
    const auto& a = roots_[i].coeffs;
    const auto& b = roots_[j].coeffs;
    long acc = 0;
    for (int r = 0; r < rank_; ++r)
      for (int s = 0; s < rank_; ++s)
        acc += static_cast<long>(a[r]) * d_[r] * cartan_[r][s] * b[s];
    return acc;
  }
  long length_sq(int idx) const { return form(idx, idx); }
  long simple_d(int i) const { return d_[i]; }  // (alpha_i,alpha_i)/2

  int dim_g() const { return num_roots() + rank_; }
  int dim_b() const { return num_positive() + rank_; }

 private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<long> d_;
  std::vector<Root> roots_;                 // sorted by (height, lex)
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_;
  std::vector<int> negative_;
  std::vector<std::vector<int>> sum_;
  int highest_ = -1;
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(char type, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case 'F':
      edge(0, 1); edge(1, 2); edge(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument("unknown type");
  }
  return a;
}

inline std::vector<long> simple_lengths(char type, int n) {
  std::vector<long> d(n, 1);
  switch (type) {
    case 'B': for (int i = 0; i + 1 < n; ++i) d[i] = 2; break;
    case 'C': d[n - 1] = 2; break;
    case 'F': d[0] = d[1] = 2; break;
    case 'G': d[1] = 3; break;
    default: break;
  }
  return d;
}

}  // namespace detail

inline RootSystem RootSystem::build(char type, int rank) {
  static const std::map<char, std::pair<int, int>> admissible = {
      {'A', {1, 8}}, {'B', {2, 8}}, {'C', {2, 8}}, {'D', {3, 8}},
      {'E', {6, 8}}, {'F', {4, 4}}, {'G', {2, 2}}};
  auto it = admissible.find(type);
  if (it == admissible.end())
    throw std::invalid_argument("type must be one of A,B,C,D,E,F,G");
  if (rank < it->second.first || rank > it->second.second)
    throw std::invalid_argument(std::string("type ") + type + " requires rank in [" +
                                std::to_string(it->second.first) + "," +
                                std::to_string(it->second.second) + "]");

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = detail::cartan_matrix(type, rank);
  rs.d_ = detail::simple_lengths(type, rank);

  // Close the simple roots under simple reflections. The W-orbit of the base
  // is the whole system, and W is generated by the s_i.
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen[e] = true;
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<int> c = work.back();
    work.pop_back();
    for (int i = 0; i < rank; ++i) {
      long n = 0;
      for (int j = 0; j < rank; ++j) n += static_cast<long>(c[j]) * rs.cartan_[i][j];
      std::vector<int> r = c;
      r[i] -= static_cast<int>(n);
      if (!seen.count(r)) {
        seen[r] = true;
        work.push_back(r);
      }
    }
  }

  for (auto& [c, _] : seen) {
    Root r;
    r.coeffs = c;
    r.height = 0;
    for (int v : c) r.height += v;
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  for (int i = 0; i < rs.num_roots(); ++i) rs.index_[rs.roots_[i].coeffs] = i;

  rs.simple_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    rs.simple_[i] = rs.index_.at(e);
  }
  rs.negative_.resize(rs.num_roots());
  for (int i = 0; i < rs.num_roots(); ++i) {
    std::vector<int> m = rs.roots_[i].coeffs;
    for (int& v : m) v = -v;
    rs.negative_[i] = rs.index_.at(m);
  }
  rs.highest_ = rs.num_roots() - 1;
  if (rs.num_roots() >= 2 &&
      rs.roots_[rs.highest_].height == rs.roots_[rs.highest_ - 1].height)
    throw std::logic_error("highest root is not unique; system not irreducible?");

  int m = rs.num_roots();
  rs.sum_.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> s = rs.roots_[i].coeffs;
      for (int k = 0; k < rank; ++k) s[k] += rs.roots_[j].coeffs[k];
      auto f = rs.index_.find(s);
      if (f != rs.index_.end()) rs.sum_[i][j] = f->second;
    }
  return rs;
}

}  // namespace wcl
