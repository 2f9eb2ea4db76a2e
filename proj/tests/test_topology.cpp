#include <doctest.h>

#include <algorithm>

#include "wcurve/topology.hpp"

using namespace wcurve;

TEST_CASE("invariants of W_44") {
  auto comps = compute_invariants(discriminant_split(44));
  REQUIRE(comps.size() == 1);
  const auto& c = comps[0];
  CHECK(c.spin == -1);
  REQUIRE(c.genus.has_value());
  CHECK(*c.genus == 1);
  CHECK(c.e2 == 3);
  REQUIRE(c.cusps.has_value());
  CHECK(*c.cusps == 9);
  CHECK(c.chi == Rational(-21, 2));
}

TEST_CASE("split invariants of W_17") {
  auto comps = compute_invariants(discriminant_split(17));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].spin == 0);
  CHECK(comps[1].spin == 1);
  CHECK(comps[0].e2 + comps[1].e2 == 2);
  CHECK(comps[0].chi + comps[1].chi == Rational(-3));
}

TEST_CASE("square D leaves genus and cusps unset") {
  auto comps = compute_invariants(discriminant_split(36));
  REQUIRE(comps.size() == 1);
  CHECK_FALSE(comps[0].genus.has_value());
  CHECK_FALSE(comps[0].cusps.has_value());
  CHECK(comps[0].e2 == 0);  // 36 = 4 mod 16
}

TEST_CASE("genus is a non-negative integer for all non-square D <= 2000") {
  for (std::int64_t d = 5; d <= 2000; ++d) {
    if (!is_valid_discriminant(d)) continue;
    if (discriminant_split(d).is_square) continue;
    for (const auto& c : compute_invariants(discriminant_split(d))) {
      REQUIRE(c.genus.has_value());
      CHECK(*c.genus >= 0);
    }
  }
}

TEST_CASE("bounds hold on a sample of discriminants") {
  for (std::int64_t d : {5LL, 8LL, 44LL, 76LL, 81LL, 225LL, 997LL * 4,
                         1997LL, 2000LL}) {
    if (!is_valid_discriminant(d)) continue;
    for (const auto& check : check_bounds(discriminant_split(d)))
      CHECK_MESSAGE(check.holds, check.name, " at D=", d, ": ", check.detail);
  }
}

TEST_CASE("genus zero classification up to 1000") {
  auto ref = load_table_b(default_data_dir() + "/table_b.csv");
  auto got = genus_zero_components(1000, ref);
  std::vector<std::pair<std::int64_t, int>> expected;
  for (std::int64_t d = 5; d <= 41; ++d) {
    if (!is_valid_discriminant(d)) continue;
    if (((d % 8) + 8) % 8 == 1 && d > 9) {
      expected.push_back({d, 0});
      expected.push_back({d, 1});
    } else {
      expected.push_back({d, -1});
    }
  }
  expected.push_back({49, 0});
  expected.push_back({49, 1});
  expected.push_back({81, 1});
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(got.size() == 26);
}

TEST_CASE("verify against the bundled tables") {
  VerifyReport rep = verify_reference_tables(default_data_dir());
  for (const auto& m : rep.mismatches) MESSAGE(m);
  CHECK(rep.ok());
  CHECK(rep.b_rows == 142);
  CHECK(rep.c_rows == 23);
}
