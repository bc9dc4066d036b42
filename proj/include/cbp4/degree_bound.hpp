#pragma once

// Degree bound for the conic bundle when S lies on no cubic hypersurface.
// Three cases by the least degree of a hypersurface containing S (none of
// degree <= 5 / a quintic but no quartic / a quartic), each combining a
// Gruson-Peskine genus bound, relation (d), and a cubic inequality in d
// with an auxiliary nonnegative integer gamma. Everything is an exact
// rational scan over a bounded range; the outcomes are d <= 40 / 30 / 42,
// so d <= 42 overall and delta <= floor(3d/4) <= 31.

#include <algorithm>

#include "cbp4/genus_bounds.hpp"
#include "cbp4/rational.hpp"

namespace cbp4 {

// Case hypotheses gate when each branch applies; below the thresholds the
// surface lies on a quartic or quintic handled by the other branches, or on
// a cubic, which is excluded by classification.
inline constexpr Int kCase1MinDegree = 26;  // case 1 assumes d > 25
inline constexpr Int kCase2MinDegree = 18;  // case 2 assumes d > 17
inline constexpr Int kCase3MinDegree = 11;  // case 3 assumes d > 10
inline constexpr Int kScanLimit = 200;      // inert: any limit >= 48 gives the same maxima

struct Case2Analysis {
  Int a_priori_max = 0;
  Int gamma_max = 0;
  Int max_degree = 0;
  friend bool operator==(const Case2Analysis&, const Case2Analysis&) = default;
};

struct GlobalBounds {
  Int d_max = 0;
  Int delta_max = 0;
  friend bool operator==(const GlobalBounds&, const GlobalBounds&) = default;
};

// d, its residue to the next multiple of 5 (quintic case) or 4 (quartic
// case), and the largest admissible gamma at this d.
struct GammaDatum {
  Int d = 0;
  Int r = 0;
  Int gamma_max = 0;
  friend bool operator==(const GammaDatum&, const GammaDatum&) = default;
};

// One side-by-side evaluation of a bounded-surface inequality: the cubic
// lhs in d must stay below chi + gamma^2/2 + a linear gamma term.
struct BFInequality {
  enum class Case { quintic, quartic };
  Case case_tag = Case::quintic;
  Rational lhs;
  Rational rhs;
  bool feasible() const { return lhs <= rhs; }
};

// Case 1 feasibility: pi - 1 = d^2/8 - d/8 - 3*delta/4 >= d^2/8 - d/8 - 9d/16
// (using delta <= 3d/4) must stay below the s=6 space-curve bound d^2/12 + d.
inline bool case1_feasible(Int d) {
  const Rational lhs = Rational(d * d, 8) - Rational(d, 8) - Rational(9 * d, 16);
  return lhs <= gp_bound(d, 6);
}

// Largest d > 25 passing case1_feasible; evaluates to 40.
inline Int case1_max_degree(Int scan_limit = kScanLimit) {
  Int best = 0;
  for (Int d = kCase1MinDegree; d <= scan_limit; ++d) {
    if (case1_feasible(d)) best = d;
  }
  return best;
}

// gamma <= d(95 - 2d)/80, from the s=5 bound combined with relation (d)
// and delta <= 3d/4.
inline Rational gamma_bound_quintic(Int d) {
  if (d < 1) throw std::domain_error("cbp4: gamma_bound_quintic needs d >= 1");
  return Rational(d * (95 - 2 * d), 80);
}

inline GammaDatum gamma_datum_quintic(Int d) {
  return {d, residue_to_multiple(d, 5), gamma_bound_quintic(d).floor()};
}

// Intermediate gamma cap in the quartic case: gamma <= d/8 + 3*delta/4 <= 11d/16.
inline Rational gamma_cap_quartic(Int d) {
  if (d < 1) throw std::domain_error("cbp4: gamma_cap_quartic needs d >= 1");
  return Rational(11 * d, 16);
}

inline GammaDatum gamma_datum_quartic(Int d) {
  return {d, residue_to_multiple(d, 4), gamma_cap_quartic(d).floor()};
}

// Quintic case: d^3/150 - d/6 <= chi + gamma^2/2 + gamma(d/5 + 5/2).
inline BFInequality bf_quintic(Int d, const Rational& gamma, const Rational& chi) {
  BFInequality q;
  q.case_tag = BFInequality::Case::quintic;
  q.lhs = Rational(d * d * d, 150) - Rational(d, 6);
  q.rhs = chi + gamma * gamma / Rational(2) + gamma * (Rational(d, 5) + Rational(5, 2));
  return q;
}

// Quartic case: d^3/96 - d^2/16 - d/24 + 5/4 <= chi + gamma^2/2 + gamma(d/4 + 3/2).
inline BFInequality bf_quartic(Int d, const Rational& gamma, const Rational& chi) {
  BFInequality q;
  q.case_tag = BFInequality::Case::quartic;
  q.lhs = Rational(d * d * d, 96) - Rational(d * d, 16) - Rational(d, 24) + Rational(5, 4);
  q.rhs = chi + gamma * gamma / Rational(2) + gamma * (Rational(d, 4) + Rational(3, 2));
  return q;
}

// chi(O_S) = 1 - g = -d^2/16 + 9d/16 - delta/8 <= -d^2/16 + 9d/16, by
// relation (c) with delta >= 0.
inline Rational chi_upper_bound(Int d) { return Rational(-d * d + 9 * d, 16); }

// Case 2 feasibility at the maximal gamma = 14:
// d^3/150 - d/6 <= -d^2/16 + 9d/16 + 14d/5 + 133.
inline bool case2_feasible(Int d) { return bf_quintic(d, Rational(14), chi_upper_bound(d)).feasible(); }

// a_priori_max: largest d with gamma_bound_quintic >= 0 (47).
// gamma_max: max of floor(gamma_bound_quintic) over 18 <= d <= 47 (14).
// max_degree: largest d in 18..47 passing case2_feasible (30).
inline Case2Analysis case2_analysis(Int scan_limit = kScanLimit) {
  Case2Analysis out;
  for (Int d = 1; d <= scan_limit; ++d) {
    if (gamma_bound_quintic(d) >= Rational(0)) out.a_priori_max = d;
  }
  out.gamma_max = gamma_bound_quintic(kCase2MinDegree).floor();
  for (Int d = kCase2MinDegree; d <= out.a_priori_max; ++d) {
    out.gamma_max = std::max(out.gamma_max, gamma_bound_quintic(d).floor());
    if (case2_feasible(d)) out.max_degree = d;
  }
  return out;
}

// The quartic-case inequality after substituting chi <= -d^2/16 + 9d/16 and
// gamma <= 11d/16: d^3/96 - 209 d^2/512 - 157 d/96 + 5/4, feasible iff <= 0.
inline Rational case3_polynomial(Int d) {
  return Rational(d * d * d, 96) - Rational(209 * d * d, 512) - Rational(157 * d, 96) +
         Rational(5, 4);
}

inline bool case3_feasible(Int d) { return case3_polynomial(d) <= Rational(0); }

// Largest d > 10 with case3_polynomial(d) <= 0; evaluates to 42.
inline Int case3_max_degree(Int scan_limit = kScanLimit) {
  Int best = 0;
  for (Int d = kCase3MinDegree; d <= scan_limit; ++d) {
    if (case3_feasible(d)) best = d;
  }
  return best;
}

// d <= 42 over all three cases; delta <= floor(3*42/4) = 31.
inline GlobalBounds global_bounds() {
  const Int d_max = std::max({case1_max_degree(), case2_analysis().max_degree, case3_max_degree(),
                              kCase1MinDegree - 1, kCase2MinDegree - 1, kCase3MinDegree - 1});
  return {d_max, Rational(3 * d_max, 4).floor()};
}

}  // namespace cbp4
