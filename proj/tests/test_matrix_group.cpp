#include "doctest.h"

#include "wcl/chevalley.hpp"
#include "wcl/weak_closure.hpp"

using namespace wcl;

TEST_CASE("group orders and named subgroup orders") {
  struct Row { GroupKind k; int q, dim; int order, u, t, z, zu; };
  const Row rows[] = {
      {GroupKind::SL, 2, 2, 6, 2, 1, 1, 2},     {GroupKind::SL, 3, 2, 24, 3, 2, 2, 3},
      {GroupKind::SL, 4, 2, 60, 4, 3, 1, 4},    {GroupKind::SL, 5, 2, 120, 5, 4, 2, 5},
      {GroupKind::SL, 2, 3, 168, 8, 1, 1, 2},   {GroupKind::SL, 3, 3, 5616, 27, 4, 1, 3},
      {GroupKind::Sp4, 2, 0, 720, 16, 1, 1, 4}, {GroupKind::Sp4, 3, 0, 51840, 81, 4, 2, 3},
      {GroupKind::SU3, 2, 0, 216, 8, 3, 3, 2},  {GroupKind::SU3, 3, 0, 6048, 27, 8, 1, 3},
  };
  for (const auto& r : rows) {
    auto g = MatrixGroup::build(r.k, r.q, r.dim);
    CHECK(g.size() == r.order);
    CHECK(static_cast<int>(g.u_set().size()) == r.u);
    CHECK(static_cast<int>(g.torus().size()) == r.t);
    CHECK(static_cast<int>(g.center().size()) == r.z);
    CHECK(static_cast<int>(g.center_of_u().size()) == r.zu);
    CHECK(static_cast<int>(g.borel().size()) ==
          static_cast<int>(g.torus().size()) * static_cast<int>(g.u_set().size()));
  }
}

TEST_CASE("SL4(2) builds with the classical order") {
  auto g = MatrixGroup::build(GroupKind::SL, 2, 4);
  CHECK(g.size() == 20160);
  CHECK(g.u_set().size() == 64);
}

TEST_CASE("unsupported instances and caps are refused") {
  CHECK_THROWS(MatrixGroup::build(GroupKind::SL, 7, 2));
  CHECK_THROWS(MatrixGroup::build(GroupKind::SL, 4, 3));
  CHECK_THROWS(MatrixGroup::build(GroupKind::SL, 3, 4));
  CHECK_THROWS(MatrixGroup::build(GroupKind::Sp4, 4));
  CHECK_THROWS(MatrixGroup::build(GroupKind::SU3, 4));
  CHECK_THROWS_AS(MatrixGroup::build(GroupKind::Sp4, 3, 0, 10000), std::runtime_error);
}

TEST_CASE("root subgroups are one-parameter: x(t) x(u) = x(t+u)") {
  for (auto [k, q, dim] : {std::tuple<GroupKind, int, int>{GroupKind::SL, 3, 3},
                           {GroupKind::SL, 2, 3},
                           {GroupKind::Sp4, 2, 0},
                           {GroupKind::Sp4, 3, 0},
                           {GroupKind::SL, 4, 2}}) {
    auto g = MatrixGroup::build(k, q, dim);
    const auto& f = g.field();
    const RootSystem& rs = *g.root_system();
    for (int r = 0; r < rs.num_roots(); ++r)
      for (int t = 0; t < f.q(); ++t)
        for (int u = 0; u < f.q(); ++u)
          CHECK(g.mul(g.root_element(r, t), g.root_element(r, u)) ==
                g.root_element(r, f.add(t, u)));
  }
}

TEST_CASE("matrix commutator relations match the Chevalley table up to sign") {
  for (auto [k, q, dim] : {std::tuple<GroupKind, int, int>{GroupKind::SL, 2, 3},
                           {GroupKind::SL, 3, 3},
                           {GroupKind::Sp4, 2, 0},
                           {GroupKind::Sp4, 3, 0}}) {
    auto g = MatrixGroup::build(k, q, dim);
    const RootSystem& rs = *g.root_system();
    ChevalleyBasis cb(rs);
    int p = g.field().p();
    int base = rs.first_positive();
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        if (a == b) continue;
        auto solved = solve_group_commutator(g, base + a, base + b);
        const auto& table = cb.commutator_coeffs(a, b);
        REQUIRE(solved.size() == table.size());
        for (std::size_t i = 0; i < solved.size(); ++i) {
          CHECK(solved[i].first.first == table[i].i);
          CHECK(solved[i].first.second == table[i].j);
          int want_pos = static_cast<int>(((table[i].coeff % p) + p) % p);
          int want_neg = (p - want_pos) % p;
          CHECK((solved[i].second == want_pos || solved[i].second == want_neg));
        }
      }
  }
}

TEST_CASE("B is the normalizer of U") {
  for (auto [k, q, dim] : {std::tuple<GroupKind, int, int>{GroupKind::SL, 3, 3},
                           {GroupKind::SL, 2, 3},
                           {GroupKind::Sp4, 2, 0},
                           {GroupKind::SU3, 2, 0},
                           {GroupKind::SU3, 3, 0}}) {
    auto g = MatrixGroup::build(k, q, dim);
    auto n = normalizer(g, u_subgroup(g));
    CHECK(n.elems == g.borel());
  }
}

TEST_CASE("the torus normalizes every root subgroup") {
  auto g = MatrixGroup::build(GroupKind::SL, 3, 3);
  const RootSystem& rs = *g.root_system();
  for (int r = 0; r < rs.num_roots(); ++r) {
    auto h = subgroup_from_elements(g, g.root_subgroup(r));
    CHECK(normalized_by(g, h, g.torus()));
  }
}

TEST_CASE("regular unipotent elements") {
  auto sl32 = MatrixGroup::build(GroupKind::SL, 2, 3);
  int u = regular_unipotent(sl32);  // validates the unique-Borel property
  int ord = 1, x = u;
  while (x != sl32.identity()) {
    x = sl32.mul(x, u);
    ++ord;
  }
  CHECK(ord == 4);

  auto sl25 = MatrixGroup::build(GroupKind::SL, 5, 2);
  CHECK_NOTHROW(regular_unipotent(sl25));
  auto sp42 = MatrixGroup::build(GroupKind::Sp4, 2);
  CHECK_NOTHROW(regular_unipotent(sp42));
}
