#pragma once

// Genus bounds for projective curves: the classical Castelnuovo bound in
// P^r, two quadratic Harris-type bounds for curves in P^6 and P^5, the
// Gruson-Peskine space-curve bounds with residue correction, and the plane
// curve genus. Bounds are exact rationals; callers floor when comparing to
// an integer genus.

#include "cbp4/rational.hpp"

namespace cbp4 {

struct CastelnuovoAuxiliaries {
  Int m = 0;        // floor((delta-1)/(r-1))
  Int epsilon = 0;  // delta-1 - m*(r-1), in [0, r-2]
};

inline CastelnuovoAuxiliaries castelnuovo_auxiliaries(Int delta, Int r) {
  if (r < 2) throw std::domain_error("cbp4: castelnuovo ambient dimension < 2");
  if (delta < r) throw std::domain_error("cbp4: degenerate span (delta < r)");
  const Int m = (delta - 1) / (r - 1);
  return {m, delta - 1 - m * (r - 1)};
}

// Maximal genus of a nondegenerate degree-delta curve in P^r:
// m(m-1)/2 * (r-1) + m*epsilon. For r = 2 this is (delta-1)(delta-2)/2.
inline Int castelnuovo_bound(Int delta, Int r) {
  const auto [m, eps] = castelnuovo_auxiliaries(delta, r);
  return checked_add(checked_mul(checked_mul(m, m - 1) / 2, r - 1), checked_mul(m, eps));
}

// (delta^2 - 7*delta + 12)/10, the quadratic genus bound for curves
// spanning P^6.
inline Rational harris_p6_bound(Int delta) {
  if (delta < 6) throw std::domain_error("cbp4: harris_p6_bound needs delta >= 6");
  return Rational(delta * delta - 7 * delta + 12, 10);
}

// (delta^2 - 5*delta + 10)/10, the genus bound for curves spanning P^5 not
// lying on a surface of degree 4.
inline Rational harris_p5_bound(Int delta) {
  if (delta < 5) throw std::domain_error("cbp4: harris_p5_bound needs delta >= 5");
  return Rational(delta * delta - 5 * delta + 10, 10);
}

// Residue r with 0 <= r < mod and d + r == 0 (mod mod).
inline Int residue_to_multiple(Int d, Int mod) { return (mod - d % mod) % mod; }

// Maximum of pi - 1 for a space curve of degree d not on a surface of
// degree < s:
//   s=6:  d^2/12 + d
//   s=5:  d^2/10 + d/2 - 2r(5-r)/5,  d + r == 0 (mod 5)
//   s=4:  d^2/8 - 3r(4-r)/8,         d + r == 0 (mod 4)
inline Rational gp_bound(Int d, Int s) {
  if (d < 1) throw std::domain_error("cbp4: gp_bound needs d >= 1");
  switch (s) {
    case 6:
      return Rational(d * d, 12) + Rational(d);
    case 5: {
      const Int r = residue_to_multiple(d, 5);
      return Rational(d * d, 10) + Rational(d, 2) - Rational(2 * r * (5 - r), 5);
    }
    case 4: {
      const Int r = residue_to_multiple(d, 4);
      return Rational(d * d, 8) - Rational(3 * r * (4 - r), 8);
    }
    default:
      throw std::domain_error("cbp4: gp_bound defined for s in {4,5,6}");
  }
}

// (delta-1)(delta-2)/2.
inline Int plane_curve_genus(Int delta) {
  if (delta < 1) throw std::domain_error("cbp4: plane_curve_genus needs delta >= 1");
  return checked_mul(delta - 1, delta - 2) / 2;
}

// Feasibility of a degree-delta conic-bundle curve spanning P^6: the P^6
// genus bound must not fall below the quadratic genus lower bound
// g >= delta^2/9 - 5*delta/8 + 1. Cleared of denominators:
// 36(delta^2 - 7*delta + 12) >= 40*delta^2 - 225*delta + 360.
inline bool p6_span_feasible(Int delta) {
  if (delta < 1) throw std::domain_error("cbp4: p6_span_feasible needs delta >= 1");
  return 36 * (delta * delta - 7 * delta + 12) >= 40 * delta * delta - 225 * delta + 360;
}

// Same comparison against the P^5 off-quartic bound:
// 36*delta^2 - 180*delta + 360 >= 40*delta^2 - 225*delta + 360,
// equivalently 4*delta^2 <= 45*delta.
inline bool p5_off_quartic_feasible(Int delta) {
  if (delta < 1) throw std::domain_error("cbp4: p5_off_quartic_feasible needs delta >= 1");
  return 36 * delta * delta - 180 * delta + 360 >= 40 * delta * delta - 225 * delta + 360;
}

}  // namespace cbp4
