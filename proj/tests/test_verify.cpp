#include "doctest.h"

#include "wcl/verify.hpp"

using namespace wcl;

TEST_CASE("p2: dim P_u + dim C_G(P_u) <= dim B for every proper J") {
  auto a2 = check_p2('A', 2);
  CHECK(a2.verdict);
  REQUIRE(a2.records.size() == 3);
  for (const auto& r : a2.records)
    if (r.label == "{1}") {
      CHECK(r.lhs == 4);
      CHECK(r.rhs == 5);
    }
  auto e8 = check_p2('E', 8);
  CHECK(e8.verdict);
  CHECK(e8.records.size() == 255);
}

TEST_CASE("richardson: dim P_u + dim C_G(P_u) <= dim P") {
  auto a2 = check_richardson('A', 2);
  CHECK(a2.verdict);
  for (const auto& r : a2.records)
    if (r.label == "{1}") {
      CHECK(r.lhs == 4);
      CHECK(r.rhs == 6);
    }
  CHECK(check_richardson('F', 4).verdict);
}

TEST_CASE("2F boundary table") {
  // equality exactly at J={} for (B2,2), (C2,2), (G2,3); strict at (G2,2)
  for (auto [t, p] : {std::pair<char, int>{'B', 2}, {'C', 2}}) {
    auto rep = check_2F(t, 2, p);
    CHECK(rep.verdict);
    REQUIRE(rep.expected_boundaries == std::vector<std::string>{"{}"});
    for (const auto& r : rep.records)
      if (r.label == "{}") {
        CHECK(r.lhs == 10);
        CHECK(r.rhs == 10);
      } else {
        CHECK(r.lhs < r.rhs);
      }
  }
  auto g3 = check_2F('G', 2, 3);
  CHECK(g3.verdict);
  for (const auto& r : g3.records)
    if (r.label == "{}") {
      CHECK(r.lhs == 14);
      CHECK(r.rhs == 14);
      CHECK(r.boundary);
    }
  auto g2 = check_2F('G', 2, 2);
  CHECK(g2.verdict);
  CHECK(g2.expected_boundaries.empty());
  for (const auto& r : g2.records) CHECK(r.lhs < r.rhs);  // strict, Gamma mod 2 is a line
}

TEST_CASE("2F is strict for every rank >= 3 type at its very bad primes") {
  for (auto [t, r] : {std::pair<char, int>{'B', 3}, {'B', 8}, {'C', 5}, {'F', 4}}) {
    for (int p : very_bad_primes(t)) {
      auto rep = check_2F(t, r, p);
      CHECK(rep.verdict);
      CHECK(rep.expected_boundaries.empty());
      for (const auto& rec : rep.records) CHECK(rec.lhs < rec.rhs);
    }
  }
  CHECK(check_2F('A', 3, 0).verdict);
  CHECK(check_2F('D', 5, 0).verdict);
}

TEST_CASE("2F_lie at good primes: strict and equal to Gamma") {
  for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'A', 4}, {'B', 2}, {'C', 3}, {'G', 2}}) {
    for (int p : {5, 7}) {
      auto rep = check_2F_lie(t, r, p);
      CHECK(rep.verdict);
      CHECK_FALSE(rep.observational);
      for (const auto& rec : rep.records) CHECK(rec.note.find("DEVIATION") == std::string::npos);
    }
  }
}

TEST_CASE("2F_lie at very bad primes is observational and reports the deviation") {
  auto rep = check_2F_lie('B', 2, 2);
  CHECK(rep.observational);
  CHECK(rep.verdict);  // observational runs always report
  bool deviation_at_borel = false;
  for (const auto& r : rep.records)
    if (r.label == "{}" && r.note.find("DEVIATION") != std::string::npos) deviation_at_borel = true;
  CHECK(deviation_at_borel);
  CHECK_THROWS_AS(check_2F_lie('B', 5, 2), std::invalid_argument);
}

TEST_CASE("r2F dimension windows") {
  auto a2 = r2F_window('A', 2);
  CHECK(a2.low == 7);
  CHECK(a2.high == 16);
  CHECK(a2.f_v_u == 7);
  auto e8 = r2F_window('E', 8);
  CHECK(e8.low == 241);
  CHECK(e8.high == 496);
  auto a1 = r2F_window('A', 1);
  CHECK(a1.low == 3);
  CHECK(a1.high == 6);
  CHECK_FALSE(a1.note.empty());
}

TEST_CASE("dagger field condition") {
  CHECK(dagger_holds('A', 2, 3));
  CHECK_FALSE(dagger_holds('A', 2, 2));
  CHECK_FALSE(dagger_holds('A', 2, 4));
  CHECK_FALSE(dagger_holds('A', 3, 3));
  CHECK(dagger_holds('A', 4, 3));
  CHECK_FALSE(dagger_holds('C', 2, 3));
  CHECK(dagger_holds('C', 2, 4));
}

TEST_CASE("finite suites") {
  auto sl33 = verify_finite_suite(GroupKind::SL, 3, 3);
  CHECK(sl33.verdict);
  bool exact_seen = false;
  for (const auto& r : sl33.records)
    if (r.label == "classification-exact") {
      exact_seen = true;
      CHECK(r.lhs == 4);
    }
  CHECK(exact_seen);

  auto sl32 = verify_finite_suite(GroupKind::SL, 2, 3);
  CHECK(sl32.verdict);
  bool extra_seen = false;
  for (const auto& r : sl32.records)
    if (r.label == "extra-weakly-closed-beyond-radicals") {
      extra_seen = true;
      CHECK(r.lhs == 5);
    }
  CHECK(extra_seen);

  CHECK(verify_finite_suite(GroupKind::Sp4, 2).verdict);
  CHECK(verify_finite_suite(GroupKind::Sp4, 3).verdict);
  CHECK(verify_finite_suite(GroupKind::SU3, 2).verdict);
  CHECK(verify_finite_suite(GroupKind::SU3, 3).verdict);
  CHECK(verify_finite_suite(GroupKind::SL, 4, 2).verdict);
  CHECK(verify_finite_suite(GroupKind::SL, 2, 4).verdict);
}

TEST_CASE("reports finalize as documented") {
  InequalityReport rep;
  rep.check = "demo";
  rep.expected_boundaries = {"{}"};
  CheckRecord a{"{}", 5, 5, true, false, false, ""};
  CheckRecord b{"{1}", 3, 5, true, false, false, ""};
  rep.records = {a, b};
  rep.finalize();
  CHECK(rep.verdict);  // boundary equality + strict elsewhere
  rep.records[0].lhs = 4;  // boundary no longer exact
  rep.finalize();
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("run_all is deterministic across thread counts at small rank") {
  auto a = run_all(3, 1);
  auto b = run_all(3, 4);
  CHECK(a.to_json().dump(2) == b.to_json().dump(2));
  CHECK(a.all_ok());
}
