#include "doctest.h"

#include "euclidean_oracle.hpp"
#include "wcl/root_system.hpp"

#include <set>

using wcl::RootSystem;

namespace {

std::vector<std::pair<char, int>> all_supported() {
  std::vector<std::pair<char, int>> out;
  for (int r = 1; r <= 8; ++r) out.emplace_back('A', r);
  for (int r = 2; r <= 8; ++r) out.emplace_back('B', r);
  for (int r = 2; r <= 8; ++r) out.emplace_back('C', r);
  for (int r = 3; r <= 8; ++r) out.emplace_back('D', r);
  for (int r = 6; r <= 8; ++r) out.emplace_back('E', r);
  out.emplace_back('F', 4);
  out.emplace_back('G', 2);
  return out;
}

}  // namespace

TEST_CASE("A2 positive roots and highest root") {
  auto rs = RootSystem::build('A', 2);
  CHECK(rs.num_roots() == 6);
  CHECK(rs.num_positive() == 3);
  CHECK(rs.is_root({1, 0}));
  CHECK(rs.is_root({0, 1}));
  CHECK(rs.is_root({1, 1}));
  CHECK_FALSE(rs.is_root({2, 1}));
  CHECK(rs.root(rs.highest_root()).coeffs == std::vector<int>{1, 1});
}

TEST_CASE("G2 count and highest root, alpha1 short") {
  auto rs = RootSystem::build('G', 2);
  CHECK(rs.num_positive() == 6);
  CHECK(rs.root(rs.highest_root()).coeffs == std::vector<int>{3, 2});
  CHECK(rs.length_sq(rs.simple_root(0)) < rs.length_sq(rs.simple_root(1)));
}

TEST_CASE("E8 count and dimensions") {
  auto rs = RootSystem::build('E', 8);
  CHECK(rs.num_roots() == 240);
  CHECK(rs.dim_g() == 248);
  CHECK(rs.dim_b() == 128);
}

TEST_CASE("invalid types and ranks are rejected with the admissible range") {
  CHECK_THROWS_AS(RootSystem::build('Z', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('A', 9), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('D', 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build('G', 3), std::invalid_argument);
  try {
    RootSystem::build('B', 1);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("[2,8]") != std::string::npos);
  }
}

TEST_CASE("root sums") {
  auto a2 = RootSystem::build('A', 2);
  int a1 = a2.simple_root(0), al2 = a2.simple_root(1);
  int s = a2.sum(a1, al2);
  REQUIRE(s >= 0);
  CHECK(a2.root(s).coeffs == std::vector<int>{1, 1});
  CHECK(a2.sum(s, al2) == -1);  // alpha1 + 2 alpha2 is not a root

  auto b2 = RootSystem::build('B', 2);
  int bs = b2.sum(b2.simple_root(1), *b2.index_of({1, 1}));
  REQUIRE(bs >= 0);
  CHECK(b2.root(bs).coeffs == std::vector<int>{1, 2});
}

TEST_CASE("simple reflections") {
  auto a2 = RootSystem::build('A', 2);
  int a1 = a2.simple_root(0), al2 = a2.simple_root(1);
  CHECK(a2.reflect(a1, 0) == a2.negative(a1));
  CHECK(a2.root(a2.reflect(al2, 0)).coeffs == std::vector<int>{1, 1});

  auto g2 = RootSystem::build('G', 2);
  int r = *g2.index_of({3, 1});
  CHECK(g2.root(g2.reflect(r, 1)).coeffs == std::vector<int>{3, 2});
}

TEST_CASE("reflection closure and the permutation of the other positive roots") {
  for (auto [t, r] : all_supported()) {
    auto rs = RootSystem::build(t, r);
    for (int i = 0; i < r; ++i) {
      std::set<int> image;
      int moved_to_negative = 0;
      for (int k = rs.first_positive(); k < rs.num_roots(); ++k) {
        int img = rs.reflect(k, i);  // throws if it leaves the system
        CHECK(rs.reflect(img, i) == k);
        if (k == rs.simple_root(i)) {
          CHECK(img == rs.negative(k));
          continue;
        }
        CHECK(rs.is_positive(img));
        image.insert(img);
        (void)moved_to_negative;
      }
      CHECK(static_cast<int>(image.size()) == rs.num_positive() - 1);
    }
  }
}

TEST_CASE("height characterizes positivity and simple roots have height 1") {
  for (auto [t, r] : all_supported()) {
    auto rs = RootSystem::build(t, r);
    for (int k = 0; k < rs.num_roots(); ++k)
      CHECK(rs.is_positive(k) == (rs.height(k) > 0));
    for (int i = 0; i < r; ++i) CHECK(rs.height(rs.simple_root(i)) == 1);
    CHECK(rs.num_roots() % 2 == 0);
  }
}

TEST_CASE("root counts match the classical formulas") {
  auto count = [](char t, int r) -> int {
    switch (t) {
      case 'A': return r * (r + 1);
      case 'B':
      case 'C': return 2 * r * r;
      case 'D': return 2 * r * (r - 1);
      case 'E': return r == 6 ? 72 : (r == 7 ? 126 : 240);
      case 'F': return 48;
      default: return 12;
    }
  };
  for (auto [t, r] : all_supported()) {
    auto rs = RootSystem::build(t, r);
    CHECK(rs.num_roots() == count(t, r));
  }
}

TEST_CASE("agreement with the Euclidean model") {
  for (auto [t, r] : all_supported()) {
    auto rs = RootSystem::build(t, r);
    auto model = euclid::build(t, r);
    REQUIRE(static_cast<int>(model.roots.size()) == rs.num_roots());

    // identical coefficient sets, and identical membership of pairwise sums
    std::set<std::vector<int>> impl_set, euclid_set;
    std::map<std::vector<int>, euclid::Vec> by_coeffs;
    for (int k = 0; k < rs.num_roots(); ++k) impl_set.insert(rs.root(k).coeffs);
    for (const auto& v : model.roots) {
      auto c = euclid::coefficients(model, v);
      euclid_set.insert(c);
      by_coeffs[c] = v;
    }
    CHECK(impl_set == euclid_set);

    // reflections agree
    for (int k = 0; k < rs.num_roots(); ++k)
      for (int i = 0; i < r; ++i) {
        auto ev = euclid::reflect(by_coeffs.at(rs.root(k).coeffs), model.simples[i]);
        CHECK(euclid::coefficients(model, ev) == rs.root(rs.reflect(k, i)).coeffs);
      }

    // sums agree (additively closed in the same places)
    for (int a = 0; a < rs.num_roots(); ++a)
      for (int b = 0; b < rs.num_roots(); ++b) {
        euclid::Vec sum = by_coeffs.at(rs.root(a).coeffs);
        const auto& vb = by_coeffs.at(rs.root(b).coeffs);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vb[i];
        CHECK((rs.sum(a, b) >= 0) == (model.roots.count(sum) != 0));
      }
  }
}
