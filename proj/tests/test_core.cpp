#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eadm/core.hpp"

#include "support.hpp"

#include <stdexcept>
#include <vector>

using namespace eadm;

TEST_CASE("options validate their shape") {
  CHECK_THROWS_AS(Option(std::vector<Rational>{}), std::invalid_argument);
  Option u{1, -3, 1};
  CHECK(u.size() == 3);
  CHECK(u[1] == -3);
  CHECK(Option::zeros(2) == Option{0, 0});
  CHECK(Option::ones(2) == Option{1, 1});
}

TEST_CASE("option arithmetic is componentwise and exact") {
  Option a{1, -3, 1};
  Option b{1, 1, -2};
  CHECK(a - b == Option{0, -4, 3});
  CHECK(a + b == Option{2, -2, -1});
  CHECK(Rational(1, 2) * a == Option{Rational(1, 2), Rational(-3, 2), Rational(1, 2)});
  CHECK_THROWS_AS((a + Option{1, 2}), DimensionMismatch);
  CHECK_THROWS_AS((a - Option{1, 2}), DimensionMismatch);
}

TEST_CASE("option entries are canonicalised on construction") {
  // Two-argument rationals are not reduced by the underlying library;
  // exact equality relies on the constructor doing so.
  Option u{Rational(12, 20), Rational(6, 10)};
  CHECK(u[0] == u[1]);
  CHECK(u[0].get_num() == 3);
  CHECK(u[0].get_den() == 5);
}

TEST_CASE("option sets deduplicate and keep insertion order") {
  Option a{1, 0};
  Option b{0, 1};
  OptionSet s{a, b, a};
  CHECK(s.size() == 2);
  CHECK(s[0] == a);
  CHECK(s[1] == b);
  CHECK(s.contains(a));
  CHECK_FALSE(s.contains(Option{2, 2}));
  CHECK(s.dimension() == 2);
}

TEST_CASE("option set equality ignores order") {
  Option a{1, 0};
  Option b{0, 1};
  CHECK(OptionSet{a, b} == OptionSet{b, a});
  CHECK_FALSE(OptionSet{a} == OptionSet{a, b});
  CHECK(OptionSet{a}.union_with(OptionSet{b, a}) == OptionSet{a, b});
}

TEST_CASE("option sets reject empty and ragged input") {
  CHECK_THROWS_AS(OptionSet(std::vector<Option>{}), std::invalid_argument);
  CHECK_THROWS_AS((OptionSet{Option{1, 2}, Option{1, 2, 3}}), DimensionMismatch);
}

TEST_CASE("multi-member option sets survive construction intact") {
  // All members must stay comparable against the first one even though
  // construction moves elements out of the input vector.
  OptionSet s{Option{1, 2, 3}, Option{4, 5, 6}, Option{7, 8, 9}};
  CHECK(s.size() == 3);
  for (const Option& m : s) {
    CHECK(m.size() == 3);
  }
}

TEST_CASE("mass functions check nonnegativity and total mass") {
  CHECK_THROWS_AS(MassFunction({Rational(1, 2), Rational(1, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(MassFunction({Rational(3, 2), Rational(-1, 2)}), std::invalid_argument);
  MassFunction p{Rational(12, 20), Rational(3, 20), Rational(5, 20)};
  CHECK(p.size() == 3);
  CHECK(p[0] == Rational(3, 5));  // canonicalised
  CHECK(MassFunction::uniform(4)[3] == Rational(1, 4));
  CHECK(MassFunction::uniform(1)[0] == 1);
}

TEST_CASE("assessments demand disjoint sides per pair") {
  Option a{1, 0};
  Option b{0, 1};
  CHECK_THROWS_AS(Assessment({AssessmentPair{OptionSet{a}, OptionSet{a}}}), std::invalid_argument);
  Assessment fine({AssessmentPair{OptionSet{a}, OptionSet{b}}});
  CHECK(fine.size() == 1);
  CHECK(fine.dimension() == 2);
  CHECK(Assessment().dimension() == std::nullopt);
  // The same option may appear across different pairs.
  Assessment two({AssessmentPair{OptionSet{a}, OptionSet{b}},
                  AssessmentPair{OptionSet{b}, OptionSet{a}}});
  CHECK(two.size() == 2);
}

TEST_CASE("expectation is the exact inner product") {
  MassFunction p{Rational(3, 5), Rational(3, 20), Rational(1, 4)};
  CHECK(expectation(p, Option{1, 1, 1}) == 1);
  CHECK(expectation(p, Option{0, 0, 0}) == 0);
  CHECK(expectation(p, Option{1, -3, 1}) == Rational(3, 5) - Rational(9, 20) + Rational(1, 4));
  CHECK_THROWS_AS(expectation(p, Option{1, 2}), DimensionMismatch);
}

TEST_CASE("choice_by_mass returns every maximiser") {
  MassFunction p = MassFunction::uniform(2);
  Option a{1, 0};
  Option b{0, 1};
  Option c{0, 0};
  CHECK(choice_by_mass(p, OptionSet{a, b, c}) == OptionSet{a, b});
  MassFunction skew{Rational(9, 10), Rational(1, 10)};
  CHECK(choice_by_mass(skew, OptionSet{a, b, c}) == OptionSet{a});
}

TEST_CASE("credal membership demands strict wins for every rejection") {
  // Three-outcome worked example: two reject statements.
  Option v1{-1, 2, -2}, v2{-2, 2, -1}, v3{0, 3, -11}, v4{0, -7, -1};
  Option v5{2, 5, -9}, v6{0, -2, -1};
  Assessment assessment({AssessmentPair{OptionSet{v1}, OptionSet{v2, v3, v4}},
                         AssessmentPair{OptionSet{v5, v6}, OptionSet{v1}}});

  MassFunction p1{Rational(3, 5), Rational(3, 20), Rational(1, 4)};
  MassFunction p2{Rational(3, 5), Rational(1, 5), Rational(1, 5)};
  CHECK(credal_member(p1, assessment));
  CHECK(credal_member(p2, assessment));

  // The uniform mass function ties v1 against v2 (difference (1,0,-1) has
  // zero expectation), so the strict requirement fails.
  CHECK_FALSE(credal_member(MassFunction::uniform(3), assessment));

  CHECK(credal_member(MassFunction::uniform(3), Assessment()));
}

TEST_CASE("credal membership equals rejection-avoidance of the maximiser set") {
  auto rng = testutil::make_rng(20250825);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 4);
    Assessment assessment = testutil::random_assessment(rng, n, 3, 3);
    // Random grid-free mass function with small denominators.
    std::vector<Rational> probs(n, Rational(0));
    unsigned long left = 12;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      unsigned long take = rng() % (left + 1);
      probs[k] = Rational(take, 12);
      left -= take;
    }
    probs[n - 1] = Rational(left, 12);
    MassFunction p(std::move(probs));

    bool expected = true;
    for (const auto& pair : assessment) {
      OptionSet pool = pair.keep.union_with(pair.reject);
      OptionSet best = choice_by_mass(p, pool);
      for (const auto& w : pair.reject) {
        if (best.contains(w)) {
          expected = false;
        }
      }
    }
    CHECK(credal_member(p, assessment) == expected);
  }
}
