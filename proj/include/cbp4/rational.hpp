#pragma once

// Exact 64-bit integer and rational arithmetic. Overflow is a checked
// error (std::overflow_error), never silent wraparound.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace cbp4 {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cbp4: add overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cbp4: sub overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cbp4: mul overflow");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Exact rational number, always reduced with positive denominator, so
// equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int numerator) : num_(numerator), den_(1) {}  // NOLINT: implicit by design
  Rational(Int numerator, Int denominator) : num_(numerator), den_(denominator) { normalize(); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // Greatest integer <= *this.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  Rational operator-() const { return Rational(checked_neg(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("cbp4: rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  // Cross-multiplication in 128 bits; int64 products cannot overflow there.
  static int cmp(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("cbp4: zero denominator");
    if (num_ == std::numeric_limits<Int>::min() || den_ == std::numeric_limits<Int>::min())
      throw std::overflow_error("cbp4: rational component at INT64_MIN");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Int floor_rational(const Rational& q) { return q.floor(); }

// r iff r*r == n exactly, absent otherwise. n < 0 is a contract violation.
inline std::optional<Int> exact_isqrt(Int n) {
  if (n < 0) throw std::domain_error("cbp4: exact_isqrt of negative");
  auto sq = [](Int r) { return static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(r); };
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && sq(r) > static_cast<unsigned __int128>(n)) --r;
  while (sq(r + 1) <= static_cast<unsigned __int128>(n)) ++r;
  if (sq(r) == static_cast<unsigned __int128>(n)) return r;
  return std::nullopt;
}

// All integer solutions of x^2 + b*x + c = 0, by exact discriminant test.
// A reduced rational b^2 - 4c is a perfect square iff numerator and
// denominator both are.
inline std::set<Int> integer_roots_monic_quadratic(const Rational& b, const Rational& c) {
  std::set<Int> roots;
  const Rational disc = b * b - Rational(4) * c;
  if (disc < Rational(0)) return roots;
  const auto sqrt_num = exact_isqrt(disc.num());
  const auto sqrt_den = exact_isqrt(disc.den());
  if (!sqrt_num || !sqrt_den) return roots;
  const Rational s(*sqrt_num, *sqrt_den);
  for (const Rational& x : {(-b + s) / Rational(2), (-b - s) / Rational(2)}) {
    if (x.is_integer()) roots.insert(x.num());
  }
  return roots;
}

}  // namespace cbp4
