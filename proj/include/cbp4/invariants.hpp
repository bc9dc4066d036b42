#pragma once

// Numerical invariants of a smooth conic bundle S in P^4: degree d of S,
// degree delta of the plane-family curve C_V (= degree of the swept
// hypersurface V), genus g of C_V, sectional genus pi of S, and the
// relations tying them together:
//
//   (a) 3d >= 4*delta                 (singular fibers are counted by 3d - 4*delta)
//   (b) pi - 1 = d + 2g - 2 - delta   (adjunction on the plane fibration)
//   (c) d^2 - 9d - 8(2g-2) + 2*delta = 0   (double point formula in P^4)
//   (d) 8(pi - 1) = d^2 - d - 6*delta      (follows from (b) and (c))
//   linear normality: delta <= 2 + 3g
//
// All checks clear denominators and compare 64-bit integers exactly.

#include <optional>
#include <set>

#include "cbp4/rational.hpp"

namespace cbp4 {

// pi - 1 = d + 2g - 2 - delta, solved for pi.
inline Int sectional_genus(Int d, Int g, Int delta) {
  if (d < 1 || g < 0 || delta < 1) throw std::domain_error("cbp4: sectional_genus preconditions");
  return 1 + d + 2 * g - 2 - delta;
}

// Exact value of d^2 - 9d - 8(2g-2) + 2*delta; zero means the double point
// formula is satisfied.
inline Int double_point_residual(Int d, Int g, Int delta) {
  return checked_add(checked_sub(checked_mul(d, d), 9 * d),
                     checked_add(checked_mul(-8, 2 * g - 2), 2 * delta));
}

// 3d - 4*delta; an admissible conic bundle needs this >= 0. The count is
// enforced as nonnegative, not strictly positive.
inline Int singular_fiber_count(Int d, Int delta) { return 3 * d - 4 * delta; }

// delta <= 2 + 3g (linear normality of V, via Riemann-Roch).
inline bool check_linear_normality(Int g, Int delta) {
  if (g < 0) throw std::domain_error("cbp4: check_linear_normality preconditions");
  return delta <= 2 + 3 * g;
}

// delta <= 3, or g - 1 >= delta^2/9 - 5*delta/8; cleared of denominators:
// 72(g-1) >= 8*delta^2 - 45*delta.
inline bool check_genus_lower_bound(Int g, Int delta) {
  if (g < 0 || delta < 1) throw std::domain_error("cbp4: check_genus_lower_bound preconditions");
  return delta <= 3 || 72 * (g - 1) >= 8 * delta * delta - 45 * delta;
}

// Positive degrees d solving relation (c) for the given (g, delta), subject
// to 3d >= 4*delta and an optional upper cap. Solved by exact discriminant
// test on d^2 - 9d + (2*delta - 16g + 16) = 0, not by scanning.
inline std::set<Int> solve_degree(Int g, Int delta, std::optional<Int> d_max = std::nullopt) {
  if (g < 0 || delta < 1) throw std::domain_error("cbp4: solve_degree preconditions");
  std::set<Int> out;
  const Rational b(-9);
  const Rational c(2 * delta - 16 * g + 16);
  for (Int d : integer_roots_monic_quadratic(b, c)) {
    if (d <= 0) continue;
    if (3 * d < 4 * delta) continue;
    if (d_max && d > *d_max) continue;
    out.insert(d);
  }
  return out;
}

struct ConicBundleInvariants {
  Int d = 0;
  Int delta = 0;
  Int g = 0;
  Int pi = 0;

  bool fiber_count_nonnegative() const { return 3 * d >= 4 * delta; }           // (a)
  bool adjunction_relation() const { return pi - 1 == d + 2 * g - 2 - delta; }  // (b)
  bool double_point_formula() const { return double_point_residual(d, g, delta) == 0; }  // (c)
  bool degree_identity() const {                                                // (d)
    return 8 * (pi - 1) == checked_sub(checked_mul(d, d), d) - 6 * delta;
  }
  bool linear_normality() const { return check_linear_normality(g, delta); }

  // Relations (a)-(d); linear normality is an independent filter.
  bool holds_core() const {
    return fiber_count_nonnegative() && adjunction_relation() && double_point_formula() &&
           degree_identity();
  }
  bool holds_all() const { return holds_core() && linear_normality(); }

  friend bool operator==(const ConicBundleInvariants&, const ConicBundleInvariants&) = default;
};

// chi(O_S) = 1 - g for a conic bundle over a genus-g curve.
struct EulerCharacteristic {
  Int chi = 1;
  static EulerCharacteristic from_genus(Int g) { return {1 - g}; }
  friend bool operator==(const EulerCharacteristic&, const EulerCharacteristic&) = default;
};

}  // namespace cbp4
