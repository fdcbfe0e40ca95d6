#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Thin value wrapper around boost's cpp_rational; the wrapper
/// exposes plain (non-expression-template) operators so it can serve as an
/// Eigen scalar type.
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                  // NOLINT: implicit by design
  Rational(long long n) : v_(n) {}            // NOLINT: implicit by design
  explicit Rational(const BigInt& n) : v_(n) {}
  explicit Rational(Backend v) : v_(std::move(v)) {}

  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    v_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }
  bool is_positive() const { return v_ > 0; }
  int sign() const { return v_.sign(); }

  /// Reduced textual form: "p/q", or just "p" when the value is integral.
  std::string str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
  }

  /// Parses "p" or "p/q" (optional leading '-'); empty on malformed input.
  static std::optional<Rational> parse(std::string_view text);

  /// Truncated decimal expansion with `digits` fractional digits.
  /// Rendering only; never feeds back into computation.
  std::string decimal(int digits) const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail("DivisionByZero", "rational division by zero");
    return Rational(Backend(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(Backend(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return a.v_ < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  Backend v_;
};

/// a^e with exact arithmetic; 0^0 = 1, negative exponents invert.
Rational pow(const Rational& base, long exponent);

BigInt factorial(int n);
BigInt int_pow(const BigInt& base, unsigned exponent);

/// The integer value when the rational is integral, empty otherwise.
std::optional<BigInt> to_integer(const Rational& r);

inline std::optional<Rational> Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
  }
  bool neg = !num.empty() && num.front() == '-';
  if (neg) num.remove_prefix(1);
  if (!digits(num)) return std::nullopt;
  BigInt p{std::string(num)};
  if (neg) p = -p;
  BigInt q = den.empty() ? BigInt(1) : BigInt(std::string(den));
  if (q == 0) return std::nullopt;
  return Rational(p, q);
}

inline std::string Rational::decimal(int digits) const {
  BigInt n = num();
  BigInt d = den();
  std::string out;
  if (n < 0) {
    out += '-';
    n = -n;
  }
  out += BigInt(n / d).str();
  if (digits <= 0) return out;
  out += '.';
  BigInt rem = n % d;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += BigInt(rem / d).str();
    rem %= d;
  }
  return out;
}

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1);
  Rational b = base;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::optional<BigInt> to_integer(const Rational& r) {
  if (!r.is_integer()) return std::nullopt;
  return r.num();
}

}  // namespace arbor

namespace Eigen {

template <>
struct NumTraits<arbor::Rational> : GenericNumTraits<arbor::Rational> {
  using Real = arbor::Rational;
  using NonInteger = arbor::Rational;
  using Nested = arbor::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static int digits10() { return 0; }
};

}  // namespace Eigen
