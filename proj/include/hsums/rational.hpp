#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsums/errors.hpp"

namespace hsums {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact fraction with arbitrary-size integer parts. Always reduced, denominator
// positive. Arithmetic cannot overflow.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    value_ = BigRational(num, den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return den() == 1; }
  bool is_negative() const { return value_ < 0; }

  Rational operator-() const { return Rational(-value_); }
  Rational operator+(const Rational& o) const { return Rational(value_ + o.value_); }
  Rational operator-(const Rational& o) const { return Rational(value_ - o.value_); }
  Rational operator*(const Rational& o) const { return Rational(value_ * o.value_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    return Rational(value_ / o.value_);
  }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }

  double to_double() const { return value_.convert_to<double>(); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
  }

  // Exact n^e for integer n (e >= 0).
  static Rational pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  }

 private:
  explicit Rational(BigRational v) : value_(std::move(v)) {}
  BigRational value_;
};

}  // namespace hsums
