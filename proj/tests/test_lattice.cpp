#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cbp4/lattice.hpp"

using cbp4::DivisorClass;
using cbp4::Int;
using cbp4::Rational;
using cbp4::SurfaceLattice;

namespace {
const DivisorClass H{1, 0};
const DivisorClass f{0, 1};
}  // namespace

TEST_CASE("pairing on span(H, f)") {
  const SurfaceLattice L{15, 19};
  CHECK(L.intersect(H, H) == 15);
  CHECK(L.intersect(H, f) == 2);
  CHECK(L.intersect(f, f) == 0);
  CHECK(L.intersect({1, -3}, {1, -3}) == 3);  // 15 - 12
}

TEST_CASE("canonical functional K.H = 2pi - 2 - d, K.f = -2") {
  const SurfaceLattice L{15, 19};
  CHECK(L.k_dot(H) == 21);
  CHECK(L.k_dot(f) == -2);
  CHECK(L.k_dot({1, -3}) == 27);
}

TEST_CASE("adjunction genus") {
  const SurfaceLattice L{15, 19};
  CHECK(L.arithmetic_genus(H) == Rational(19));
  CHECK(L.arithmetic_genus(f) == Rational(0));
  CHECK(L.arithmetic_genus({1, -3}) == Rational(16));
}

TEST_CASE("H and f pin the canonical functional for every (d, pi)") {
  for (Int d = 1; d <= 100; ++d) {
    for (Int pi = 0; pi <= 200; ++pi) {
      const SurfaceLattice L{d, pi};
      REQUIRE(L.arithmetic_genus(H) == Rational(pi));
      REQUIRE(L.arithmetic_genus(f) == Rational(0));
    }
  }
}

TEST_CASE("pairing is bilinear and symmetric") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Int> small(-9, 9);
  std::uniform_int_distribution<Int> surf(1, 60);
  for (int i = 0; i < 2000; ++i) {
    const SurfaceLattice L{surf(rng), small(rng) + 10};
    const DivisorClass x{small(rng), small(rng)};
    const DivisorClass y{small(rng), small(rng)};
    const DivisorClass z{small(rng), small(rng)};
    const Int s = small(rng);
    REQUIRE(L.intersect(x, y) == L.intersect(y, x));
    const DivisorClass sy_plus_z{s * y.a + z.a, s * y.b + z.b};
    REQUIRE(L.intersect(x, sy_plus_z) == s * L.intersect(x, y) + L.intersect(x, z));
    REQUIRE(L.k_dot(sy_plus_z) == s * L.k_dot(y) + L.k_dot(z));
  }
}

// Removing k fiber conics from a hyperplane section drops the arithmetic
// genus by exactly k: (H - kf)^2 = d - 4k and K.(H - kf) = K.H + 2k, so
// p_a(H - kf) = pi - k. Checked on both routes.
TEST_CASE("genus decomposition of H - k*f") {
  for (const auto& [d, pi] : {std::pair<Int, Int>{15, 19}, {36, 139}}) {
    const SurfaceLattice L{d, pi};
    for (Int k = 0; k <= 6; ++k) {
      const DivisorClass A{1, -k};
      const Rational via_pairing = L.arithmetic_genus(A);
      const Rational via_expansion =
          Rational(1) + Rational((d - 4 * k) + (2 * pi - 2 - d + 2 * k), 2);
      REQUIRE(via_pairing == via_expansion);
      REQUIRE(L.arithmetic_genus(H) - via_pairing == Rational(k));
    }
  }
}

TEST_CASE("residual curve records") {
  CHECK(SurfaceLattice{15, 19}.residual_curve(3) == cbp4::ResidualCurve{9, 16});
  CHECK(SurfaceLattice{36, 139}.residual_curve(6) == cbp4::ResidualCurve{24, 133});
  CHECK(SurfaceLattice{15, 19}.residual_curve(0) == cbp4::ResidualCurve{15, 19});
  const SurfaceLattice L{15, 19};
  CHECK_THROWS_AS(L.residual_curve(-1), std::domain_error);
  CHECK_THROWS_AS(L.residual_curve(8), std::domain_error);
}

TEST_CASE("residual genus is always pi - k on this lattice") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> surf(2, 80);
  std::uniform_int_distribution<Int> genus(0, 150);
  for (int i = 0; i < 500; ++i) {
    const Int d = surf(rng);
    const Int pi = genus(rng);
    const SurfaceLattice L{d, pi};
    for (Int k = 0; 2 * k <= d; ++k) {
      const auto rc = L.residual_curve(k);
      REQUIRE(rc.degree == d - 2 * k);
      REQUIRE(rc.p_a == pi - k);
    }
  }
}

TEST_CASE("residual curves beat the space-curve genus bound") {
  CHECK(cbp4::residual_impossible(9, 16));    // bound is 12
  CHECK(cbp4::residual_impossible(24, 133));  // bound is 121
  CHECK_FALSE(cbp4::residual_impossible(9, 12));
  CHECK_FALSE(cbp4::residual_impossible(24, 121));
  CHECK_THROWS_AS(cbp4::residual_impossible(2, 0), std::domain_error);
}
