#pragma once

// Exhaustive enumerators for the case analysis. Each one walks a finite
// parameter box, derives (g, delta) from the case geometry, and keeps the
// candidates surviving the invariant relations and filters. Candidates
// with g <= 1 (rational or elliptic C_V) are not closed inside a geometric
// branch; they carry a forwarded flag and are resolved by the endgame.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbp4/degree_bound.hpp"
#include "cbp4/invariants.hpp"

namespace cbp4 {

// Certified search region: d <= 42 and delta <= 31 = floor(3*42/4). The
// enumerators accept wider ranges for experimentation, but survivors above
// the certified delta are flagged.
inline constexpr Int kCertifiedDegreeMax = 42;
inline constexpr Int kCertifiedDeltaMax = 31;

// Enumeration starts at delta = 4: quadric (delta = 2) and cubic
// (delta = 3) hypersurfaces are handled by classification, and delta = 1
// would make V a hyperplane and S degenerate.
inline constexpr Int kDefaultDeltaMin = 4;

// Numerical class alpha*E + beta*F of C_V on a rational scroll of degree 3
// (in P^4) or 4 (in P^5), E a hyperplane section and F a ruling line.
struct ScrollCurveClass {
  Int scroll_degree = 3;
  Int alpha = 0;
  Int beta = 0;

  Int delta() const { return scroll_degree * alpha + beta; }

  bool valid() const {
    if (scroll_degree != 3 && scroll_degree != 4) return false;
    if (alpha < 0) return false;
    if (scroll_degree == 3 && beta < -alpha) return false;
    if (scroll_degree == 4 && beta < -2 * alpha) return false;
    return delta() >= 1;
  }

  friend bool operator==(const ScrollCurveClass&, const ScrollCurveClass&) = default;
};

// Adjunction genus of the class. The two scroll degrees keep their own
// verbatim formulas:
//   degree 3:  2g - 2 = 3a^2 - 5a + 2ab - 2b
//   degree 4:  2g - 2 = 4a^2 - 6a + 2ab - 2b
inline Rational scroll_genus(const ScrollCurveClass& c) {
  if (!c.valid()) throw std::domain_error("cbp4: invalid scroll curve class");
  const Int a = c.alpha;
  const Int b = c.beta;
  Int two_g_minus_2 = 0;
  if (c.scroll_degree == 3) {
    two_g_minus_2 = 3 * a * a - 5 * a + 2 * a * b - 2 * b;
  } else {
    two_g_minus_2 = 4 * a * a - 6 * a + 2 * a * b - 2 * b;
  }
  return Rational(1) + Rational(two_g_minus_2, 2);
}

struct CandidateSolution {
  Int d = 0;
  Int delta = 0;
  Int g = 0;
  Int pi = 0;
  std::string provenance;
  std::optional<ScrollCurveClass> scroll;
  std::vector<std::pair<std::string, Int>> branch;
  bool outside_certified_region = false;

  // Rational or elliptic C_V is resolved uniformly by the endgame.
  bool forwarded_to_endgame() const { return g <= 1; }

  ConicBundleInvariants invariants() const { return {d, delta, g, pi}; }

  friend bool operator==(const CandidateSolution&, const CandidateSolution&) = default;
};

namespace detail {

inline void check_emission(const CandidateSolution& c) {
  if (!c.invariants().holds_all() || singular_fiber_count(c.d, c.delta) < 0)
    throw std::logic_error("cbp4: enumerator emitted an inconsistent candidate");
}

// Shared filter chain: delta >= 2, linear normality, then every positive
// degree solving relation (c) under 3d >= 4*delta and d <= degree_cap.
inline std::vector<CandidateSolution> admissible_candidates(
    Int g, Int delta, std::string_view provenance, std::optional<ScrollCurveClass> scroll,
    std::vector<std::pair<std::string, Int>> branch, Int degree_cap = kCertifiedDegreeMax) {
  std::vector<CandidateSolution> out;
  if (g < 0 || delta < 2) return out;
  if (!check_linear_normality(g, delta)) return out;
  for (Int d : solve_degree(g, delta, degree_cap)) {
    CandidateSolution c{d,      delta,  g, sectional_genus(d, g, delta), std::string(provenance),
                        scroll, branch, delta > kCertifiedDeltaMax};
    check_emission(c);
    out.push_back(std::move(c));
  }
  return out;
}

// Integer value of a rational genus, absent when non-integral.
inline std::optional<Int> integral_genus(const Rational& g) {
  if (!g.is_integer()) return std::nullopt;
  return g.num();
}

}  // namespace detail

inline std::vector<CandidateSolution> enumerate_scroll(Int scroll_degree, Int delta_min,
                                                       Int delta_max) {
  std::vector<CandidateSolution> out;
  const Int e = scroll_degree;
  const Int lo = std::max<Int>(delta_min, 1);
  for (Int alpha = 0; 2 * alpha <= delta_max; ++alpha) {
    const Int beta_floor = (e == 3) ? -alpha : -2 * alpha;
    for (Int beta = std::max(beta_floor, lo - e * alpha); e * alpha + beta <= delta_max; ++beta) {
      const ScrollCurveClass cls{e, alpha, beta};
      const auto g = detail::integral_genus(scroll_genus(cls));
      if (!g || *g < 0) continue;
      const char* provenance = (e == 3) ? "cubic-scroll" : "quartic-scroll";
      for (auto& c : detail::admissible_candidates(*g, cls.delta(), provenance, cls, {}))
        out.push_back(std::move(c));
    }
  }
  return out;
}

// C_V on a cubic scroll in P^4; no class in the certified range survives.
inline std::vector<CandidateSolution> enumerate_cubic_scroll(Int delta_min = kDefaultDeltaMin,
                                                             Int delta_max = kCertifiedDeltaMax) {
  return enumerate_scroll(3, delta_min, delta_max);
}

// C_V on a rational quartic scroll in P^5; exactly 3E - F and 6E + 2F
// survive, handed on to the residual-curve computations.
inline std::vector<CandidateSolution> enumerate_quartic_scroll(Int delta_min = kDefaultDeltaMin,
                                                               Int delta_max = kCertifiedDeltaMax) {
  return enumerate_scroll(4, delta_min, delta_max);
}

// C_V a plane curve of degree a embedded by conics (Veronese surface in
// P^5): delta = 2a, 2g - 2 = a(a - 3). Empty in the certified range.
inline std::vector<CandidateSolution> enumerate_veronese(Int delta_max = kCertifiedDeltaMax) {
  std::vector<CandidateSolution> out;
  for (Int a = 2; 2 * a <= delta_max; ++a) {
    const auto g = detail::integral_genus(Rational(1) + Rational(a * (a - 3), 2));
    if (!g || *g < 0) continue;
    for (auto& c : detail::admissible_candidates(*g, 2 * a, "veronese", std::nullopt, {{"a", a}}))
      out.push_back(std::move(c));
  }
  return out;
}

// V a cone over an elliptic quartic curve: delta = 4*alpha + 1 with
// 2g - 2 = 2(2*alpha + 1)(alpha - 1) when C_V meets the vertex, or
// delta = 4*alpha with 2g - 2 = 4*alpha(alpha - 1) when it does not.
// Only alpha = 1 (elliptic C_V) survives, forwarded to the endgame.
inline std::vector<CandidateSolution> enumerate_elliptic_cone(Int delta_max = kCertifiedDeltaMax) {
  std::vector<CandidateSolution> out;
  for (Int alpha = 1; 4 * alpha <= delta_max; ++alpha) {
    const struct {
      Int delta;
      Int two_g_minus_2;
    } branches[] = {{4 * alpha + 1, 2 * (2 * alpha + 1) * (alpha - 1)},
                    {4 * alpha, 4 * alpha * (alpha - 1)}};
    for (const auto& br : branches) {
      if (br.delta > delta_max) continue;
      const auto g = detail::integral_genus(Rational(1) + Rational(br.two_g_minus_2, 2));
      if (!g || *g < 0) continue;
      for (auto& c : detail::admissible_candidates(
               *g, br.delta, "elliptic-cone", std::nullopt,
               {{"alpha", alpha}, {"vertex_offset", br.delta - 4 * alpha}}))
        out.push_back(std::move(c));
    }
  }
  return out;
}

struct ConeCaseResult {
  std::vector<CandidateSolution> survivors_even;  // d = 2*delta
  std::vector<CandidateSolution> survivors_odd;   // d = 2*delta + 1
  friend bool operator==(const ConeCaseResult&, const ConeCaseResult&) = default;
};

// V a cone: the contracted class forces 0 <= d - 2*delta <= 1, and
// relation (c) then pins the genus per branch:
//   d = 2*delta:      2g - 2 = delta^2/2 - 2*delta
//   d = 2*delta + 1:  2g - 2 = delta^2/2 - 3*delta/2 - 1
// Filters: integral g >= 0, linear normality, the quadratic genus lower
// bound, and the space-curve and plane-curve genus caps. The odd branch
// dies; the even branch leaves the family g = (delta-2)^2/4, which attains
// the space-curve bound exactly and is closed geometrically, not here.
inline ConeCaseResult enumerate_cone_case(Int delta_max = kCertifiedDeltaMax) {
  ConeCaseResult out;
  for (Int delta = 3; delta <= delta_max; ++delta) {
    const struct {
      Int d;
      Rational two_g_minus_2;
      std::vector<CandidateSolution>& sink;
    } branches[] = {
        {2 * delta, Rational(delta * delta, 2) - Rational(2 * delta), out.survivors_even},
        {2 * delta + 1, Rational(delta * delta, 2) - Rational(3 * delta, 2) - Rational(1),
         out.survivors_odd},
    };
    for (const auto& br : branches) {
      const auto g = detail::integral_genus(Rational(1) + br.two_g_minus_2 / Rational(2));
      if (!g || *g < 0) continue;
      if (singular_fiber_count(br.d, delta) < 0) continue;
      if (!check_linear_normality(*g, delta)) continue;
      if (!check_genus_lower_bound(*g, delta)) continue;
      if (*g > castelnuovo_bound(delta, 3)) continue;
      if (*g > plane_curve_genus(delta)) continue;
      CandidateSolution c{br.d,
                          delta,
                          *g,
                          sectional_genus(br.d, *g, delta),
                          br.d == 2 * delta ? "cone-even" : "cone-odd",
                          std::nullopt,
                          {{"vertex_offset", br.d - 2 * delta}},
                          delta > kCertifiedDeltaMax};
      detail::check_emission(c);
      br.sink.push_back(std::move(c));
    }
  }
  return out;
}

// C_V spanning P^5 on no quartic surface: genus window 2..floor of the P^5
// bound, intersected with the quadratic genus lower bound. Empty; together
// with the bound delta <= 11 this forces delta >= 12, a contradiction.
inline std::vector<CandidateSolution> enumerate_p5_span(Int delta_max = 11) {
  if (delta_max > 11)
    throw std::domain_error("cbp4: enumerate_p5_span beyond the delta <= 11 window");
  std::vector<CandidateSolution> out;
  for (Int delta = 5; delta <= delta_max; ++delta) {
    const Int g_cap = harris_p5_bound(delta).floor();
    for (Int g = 2; g <= g_cap; ++g) {
      if (!check_genus_lower_bound(g, delta)) continue;
      for (auto& c : detail::admissible_candidates(g, delta, "p5-span", std::nullopt, {}))
        out.push_back(std::move(c));
    }
  }
  return out;
}

// Rational or elliptic C_V: linear normality forces delta <= 2 when g = 0
// and delta <= 5 when g = 1; relation (c) then leaves exactly
// (4,2,0,1), (5,2,0,2) and (8,4,1,5).
inline std::vector<CandidateSolution> enumerate_endgame() {
  std::vector<CandidateSolution> out;
  for (Int g = 0; g <= 1; ++g) {
    for (Int delta = 2; delta <= 5; ++delta) {
      for (auto& c : detail::admissible_candidates(g, delta, "endgame", std::nullopt, {}))
        out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace cbp4
