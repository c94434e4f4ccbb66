#include "ordspace/rational.hpp"

#include <cctype>
#include <ostream>

#include "ordspace/error.hpp"

namespace ordspace {

namespace {

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_size(p)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_sgn(p) < 0) h = ~h;
  for (std::size_t i = 0; i < mpz_size(p); ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

bool parse_integer(std::string_view text, std::size_t offset, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("invalid digit in rational '" + std::string(text) + "'", offset + j);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational", 0);
  auto slash = text.find('/');
  mpz_class num, den = 1;
  if (!parse_integer(text.substr(0, slash), 0, num)) throw ParseError("malformed numerator", 0);
  if (slash != std::string_view::npos) {
    auto rest = text.substr(slash + 1);
    if (rest.empty() || rest[0] == '-' || rest[0] == '+' || !parse_integer(rest, slash + 1, den)) {
      throw ParseError("malformed denominator", slash + 1);
    }
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  }
  return Rational(num, den);
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0 && is_zero()) throw DivisionByZeroError("zero raised to a negative power");
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  return exponent < 0 ? Rational(d, n) : Rational(n, d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  return Rational(den(), num());
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::hash() const { return hash_mpz(num()) * 31 + hash_mpz(den()); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace ordspace
