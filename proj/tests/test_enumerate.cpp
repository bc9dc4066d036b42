#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cbp4/enumerate.hpp"
#include "oracles.hpp"

using cbp4::CandidateSolution;
using cbp4::Int;
using cbp4::Rational;
using cbp4::ScrollCurveClass;

namespace {

// Candidates as comparable tuples (d, delta, g, pi, p1, p2).
cbp4::oracle::Tuples tuples_of(const std::vector<CandidateSolution>& cs) {
  cbp4::oracle::Tuples out;
  for (const auto& c : cs) {
    cbp4::oracle::Tuple t{c.d, c.delta, c.g, c.pi, 0, 0};
    if (c.scroll) {
      t[4] = c.scroll->alpha;
      t[5] = c.scroll->beta;
    } else if (!c.branch.empty()) {
      t[4] = c.branch.front().second;
      if (c.branch.size() > 1) t[5] = c.branch[1].second;
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

cbp4::oracle::Tuples sorted(cbp4::oracle::Tuples t) {
  std::sort(t.begin(), t.end());
  return t;
}

void require_emission_invariants(const std::vector<CandidateSolution>& cs) {
  for (const auto& c : cs) {
    REQUIRE(c.invariants().holds_all());
    REQUIRE(cbp4::singular_fiber_count(c.d, c.delta) >= 0);
  }
}

}  // namespace

TEST_CASE("scroll classes validate their coefficient constraints") {
  CHECK(ScrollCurveClass{3, 2, -2}.valid());
  CHECK_FALSE(ScrollCurveClass{3, 2, -3}.valid());
  CHECK(ScrollCurveClass{4, 2, -4}.valid());
  CHECK_FALSE(ScrollCurveClass{4, 2, -5}.valid());
  CHECK_FALSE(ScrollCurveClass{5, 1, 0}.valid());
  CHECK_FALSE(ScrollCurveClass{3, -1, 5}.valid());
  CHECK_FALSE(ScrollCurveClass{3, 0, 0}.valid());  // delta must be >= 1
  CHECK(ScrollCurveClass{4, 3, -1}.delta() == 11);
}

TEST_CASE("adjunction genus on scrolls keeps the two formulas apart") {
  CHECK(cbp4::scroll_genus({4, 3, -1}) == Rational(8));   // 2g-2 = 36-18-6+2
  CHECK(cbp4::scroll_genus({4, 6, 2}) == Rational(65));   // 2g-2 = 144-36+24-4
  CHECK(cbp4::scroll_genus({3, 1, 0}) == Rational(0));    // 2g-2 = 3-5
  CHECK(cbp4::scroll_genus({3, 2, -1}) == Rational(1));  // 2g-2 = 12-10-4+2 = 0
  CHECK(cbp4::scroll_genus({4, 1, 3}) == Rational(0));   // alpha = 1 classes are rational
  CHECK_THROWS_AS(cbp4::scroll_genus({5, 1, 1}), std::domain_error);
}

TEST_CASE("cubic scroll enumeration is empty") {
  CHECK(cbp4::enumerate_cubic_scroll().empty());
  CHECK(cbp4::enumerate_cubic_scroll(4, 31).empty());
  CHECK(cbp4::enumerate_cubic_scroll(4, 3).empty());  // degenerate range
}

TEST_CASE("cubic scroll is already empty with only the double point relation") {
  CHECK(cbp4::oracle::scroll_box(3, 4, 31, 0).empty());
}

TEST_CASE("quartic scroll enumeration finds exactly 3E - F and 6E + 2F") {
  const auto survivors = cbp4::enumerate_quartic_scroll();
  REQUIRE(survivors.size() == 2);

  CHECK(survivors[0].d == 15);
  CHECK(survivors[0].delta == 11);
  CHECK(survivors[0].g == 8);
  CHECK(survivors[0].pi == 19);
  REQUIRE(survivors[0].scroll.has_value());
  CHECK(survivors[0].scroll->alpha == 3);
  CHECK(survivors[0].scroll->beta == -1);

  CHECK(survivors[1].d == 36);
  CHECK(survivors[1].delta == 26);
  CHECK(survivors[1].g == 65);
  CHECK(survivors[1].pi == 139);
  REQUIRE(survivors[1].scroll.has_value());
  CHECK(survivors[1].scroll->alpha == 6);
  CHECK(survivors[1].scroll->beta == 2);

  require_emission_invariants(survivors);
  CHECK(cbp4::singular_fiber_count(15, 11) == 1);
  CHECK(cbp4::singular_fiber_count(36, 26) == 4);

  // no rational or elliptic class gets through the filters here
  for (const auto& c : survivors) CHECK_FALSE(c.forwarded_to_endgame());
}

TEST_CASE("veronese enumeration is empty") {
  const auto survivors = cbp4::enumerate_veronese();
  CHECK(survivors.empty());
  // a = 4 gives (g, delta) = (3, 8), and d(d - 9) = 16 has no integer root
  CHECK(cbp4::solve_degree(3, 8).empty());
  // a = 2 is the conic-image case: g = 0 with delta = 4 fails linear
  // normality and is the endgame's business, not a Veronese survivor
  CHECK_FALSE(cbp4::check_linear_normality(0, 4));
}

TEST_CASE("elliptic cone: survivors exist only for alpha = 1") {
  const auto survivors = cbp4::enumerate_elliptic_cone();
  REQUIRE(survivors.size() == 1);
  const auto& c = survivors[0];
  CHECK(c.d == 8);
  CHECK(c.delta == 4);
  CHECK(c.g == 1);
  CHECK(c.pi == 5);
  CHECK(c.forwarded_to_endgame());
  REQUIRE(c.branch.size() == 2);
  CHECK(c.branch[0] == std::pair<std::string, Int>{"alpha", 1});
  CHECK(c.branch[1] == std::pair<std::string, Int>{"vertex_offset", 0});
  for (const auto& s : survivors) {
    REQUIRE(!s.branch.empty());
    CHECK(s.branch.front().second == 1);  // alpha
  }
  // alpha = 2 off-vertex branch: (g, delta) = (5, 8), discriminant 273
  CHECK(cbp4::solve_degree(5, 8).empty());
  require_emission_invariants(survivors);
}

TEST_CASE("cone case: odd branch dies, even branch is the square family") {
  const auto cone = cbp4::enumerate_cone_case();
  CHECK(cone.survivors_odd.empty());
  REQUIRE(cone.survivors_even.size() == 14);
  for (const auto& c : cone.survivors_even) {
    REQUIRE(c.delta % 2 == 0);
    REQUIRE(c.d == 2 * c.delta);
    REQUIRE(c.g == (c.delta - 2) * (c.delta - 2) / 4);
    // the family attains the space-curve genus bound exactly
    REQUIRE(c.g == cbp4::castelnuovo_bound(c.delta, 3));
  }
  CHECK(cone.survivors_even.front().d == 8);
  CHECK(cone.survivors_even.front().delta == 4);
  CHECK(cone.survivors_even.front().g == 1);
  CHECK(cone.survivors_even.front().pi == 5);
  require_emission_invariants(cone.survivors_even);

  // delta = 4, d = 9 branch: 2g - 2 = 8 - 6 - 1 = 1 is odd, so no candidate
  const Rational odd_tg = Rational(4 * 4, 2) - Rational(3 * 4, 2) - Rational(1);
  CHECK(odd_tg == Rational(1));
  for (const auto& c : cone.survivors_odd) REQUIRE(c.delta != 4);
}

TEST_CASE("p5 span enumeration is empty") {
  CHECK(cbp4::enumerate_p5_span().empty());
  CHECK(cbp4::enumerate_p5_span(11).empty());
  // intermediate (g, delta) = (6, 10): d(d - 9) = 60 has no integer root
  CHECK(cbp4::solve_degree(6, 10).empty());
  CHECK_THROWS_AS(cbp4::enumerate_p5_span(13), std::domain_error);
}

TEST_CASE("endgame leaves (4,2,0,1), (5,2,0,2), (8,4,1,5)") {
  const auto survivors = cbp4::enumerate_endgame();
  REQUIRE(tuples_of(survivors) == cbp4::oracle::Tuples{{4, 2, 0, 1, 0, 0},
                                                       {5, 2, 0, 2, 0, 0},
                                                       {8, 4, 1, 5, 0, 0}});
  require_emission_invariants(survivors);
  // g = 0 forces delta <= 2; delta = 3 dies on linear normality
  CHECK_FALSE(cbp4::check_linear_normality(0, 3));
  // g = 1, delta = 5: discriminant of d^2 - 9d + 10 is 41, not a square
  CHECK(cbp4::solve_degree(1, 5).empty());
}

TEST_CASE("every enumerator matches its brute-force oracle exactly") {
  using namespace cbp4::oracle;
  CHECK(tuples_of(cbp4::enumerate_cubic_scroll()) == sorted(scroll_box(3, 4, 31, kScrollStages)));
  CHECK(tuples_of(cbp4::enumerate_quartic_scroll()) == sorted(scroll_box(4, 4, 31, kScrollStages)));
  CHECK(tuples_of(cbp4::enumerate_veronese()) == sorted(veronese_box(31, kScrollStages)));
  CHECK(tuples_of(cbp4::enumerate_elliptic_cone()) ==
        sorted(elliptic_cone_box(31, kScrollStages)));
  const auto cone = cbp4::enumerate_cone_case();
  CHECK(tuples_of(cone.survivors_even) == sorted(cone_box(31, false, kConeStages)));
  CHECK(tuples_of(cone.survivors_odd) == sorted(cone_box(31, true, kConeStages)));
  CHECK(tuples_of(cbp4::enumerate_p5_span()) == sorted(p5_box(11, 1 + kScrollStages)));
  CHECK(tuples_of(cbp4::enumerate_endgame()) == sorted(endgame_box(kScrollStages)));
}

TEST_CASE("oracle filter stages only ever shrink the survivor sets") {
  using namespace cbp4::oracle;
  for (int stage = 0; stage < kScrollStages; ++stage) {
    REQUIRE(scroll_box(4, 4, 31, stage).size() >= scroll_box(4, 4, 31, stage + 1).size());
    REQUIRE(veronese_box(31, stage).size() >= veronese_box(31, stage + 1).size());
    REQUIRE(elliptic_cone_box(31, stage).size() >= elliptic_cone_box(31, stage + 1).size());
    REQUIRE(endgame_box(stage).size() >= endgame_box(stage + 1).size());
  }
  for (int stage = 0; stage < kConeStages; ++stage) {
    REQUIRE(cone_box(31, false, stage).size() >= cone_box(31, false, stage + 1).size());
    REQUIRE(cone_box(31, true, stage).size() >= cone_box(31, true, stage + 1).size());
  }
}

TEST_CASE("survivors past the certified delta range are flagged") {
  const auto cone = cbp4::enumerate_cone_case(35);
  REQUIRE(cone.survivors_even.size() == 16);
  for (const auto& c : cone.survivors_even) {
    REQUIRE(c.outside_certified_region == (c.delta > 31));
  }
  CHECK(cone.survivors_even[14].delta == 32);
  CHECK(cone.survivors_even[14].outside_certified_region);
  CHECK(cone.survivors_even[15].delta == 34);

  // the scrolls stay empty (quartic: unchanged) well past the certified cap
  CHECK(cbp4::enumerate_cubic_scroll(4, 40).empty());
  CHECK(cbp4::enumerate_quartic_scroll(4, 40).size() == 2);
}
