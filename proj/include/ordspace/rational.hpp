#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ordspace {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP so arithmetic never overflows.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Parses "p", "p/q" or "-p/q" (decimal). Throws ParseError.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  /// Integer power; negative exponents invert. Throws DivisionByZeroError for 0^-k.
  Rational pow(std::int64_t exponent) const;
  Rational abs() const;
  Rational inverse() const;
  mpz_class floor() const;
  mpz_class ceil() const;

  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Midpoint of two rationals.
Rational midpoint(const Rational& a, const Rational& b);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace ordspace
