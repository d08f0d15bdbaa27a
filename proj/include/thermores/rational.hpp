#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thermores {

/// Exact arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (GMP canonical form).
class Rat {
 public:
  Rat() = default;

  template <std::signed_integral I>
  Rat(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rat(I value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// num/den, reduced. Throws Error(InvalidArgument) when den == 0.
  Rat(long num, long den);

  explicit Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed).
  /// Throws Error(ParseError) on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

  std::string str() const;
  double to_double() const;
  /// Natural log in double precision; the argument stays exact until the
  /// final conversion so huge numerators/denominators do not overflow.
  double log() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rat abs() const;
  Rat reciprocal() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Best rational approximation of x with denominator <= max_denominator
/// (continued fractions with semiconvergents).
Rat best_rational_approximation(double x, std::uint64_t max_denominator);

}  // namespace thermores
