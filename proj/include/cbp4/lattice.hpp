#pragma once

// Intersection theory on the rank-2 sublattice span(H, f) of a conic
// bundle S of degree d and sectional genus pi: H^2 = d, H.f = 2, f^2 = 0
// (every fiber is a conic in a plane). The canonical class enters only as
// the linear functional K.H = 2*pi - 2 - d, K.f = -2; it is never given
// coordinates in span(H, f), since Pic(S) may be larger.

#include "cbp4/genus_bounds.hpp"
#include "cbp4/rational.hpp"

namespace cbp4 {

// a*H + b*f. The degree of the class is a*d + 2b.
struct DivisorClass {
  Int a = 0;
  Int b = 0;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct ResidualCurve {
  Int degree = 0;
  Int p_a = 0;
  friend bool operator==(const ResidualCurve&, const ResidualCurve&) = default;
};

struct SurfaceLattice {
  Int d = 0;   // H.H
  Int pi = 0;  // sectional genus, fixing K.H

  Int intersect(const DivisorClass& x, const DivisorClass& y) const {
    return checked_add(checked_mul(checked_mul(x.a, y.a), d),
                       2 * checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)));
  }

  Int k_dot(const DivisorClass& x) const {
    return checked_add(checked_mul(x.a, 2 * pi - 2 - d), -2 * x.b);
  }

  // Adjunction: 1 + (x^2 + K.x)/2. Non-integral values are meaningful (the
  // class is not an honest curve), so the result stays rational.
  Rational arithmetic_genus(const DivisorClass& x) const {
    return Rational(1) + Rational(checked_add(intersect(x, x), k_dot(x)), 2);
  }

  // The residual class A = H - k*f of a hyperplane section containing k
  // fiber conics: degree d - 2k and integral arithmetic genus.
  ResidualCurve residual_curve(Int k) const {
    if (k < 0) throw std::domain_error("cbp4: residual_curve needs k >= 0");
    if (2 * k > d) throw std::domain_error("cbp4: residual_curve needs 2k <= d");
    const DivisorClass a{1, -k};
    const Rational p_a = arithmetic_genus(a);
    if (!p_a.is_integer())
      throw std::domain_error("cbp4: residual class with non-integral genus");
    return {d - 2 * k, p_a.num()};
  }
};

// A degree-(d-2k) curve in a hyperplane P^3 cannot exceed the Castelnuovo
// space-curve genus bound.
inline bool residual_impossible(Int degree, Int p_a) {
  if (degree < 3) throw std::domain_error("cbp4: residual_impossible needs degree >= 3");
  return p_a > castelnuovo_bound(degree, 3);
}

}  // namespace cbp4
