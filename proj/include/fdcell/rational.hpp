#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fdcell {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Arithmetic never rounds; comparisons agree with the real
/// value. Denominators grow as needed (arbitrary-precision integers), so
/// grid sweeps over antenna/user counts need no overflow analysis.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q" in lowest terms, e.g. "5/2", "0/1".
  std::string to_fraction_string() const {
    return num_.str() + "/" + den_.str();
  }

  /// Fixed-point decimal with `places` digits, rounded half away from zero.
  /// Rounding is done in exact integer arithmetic.
  std::string to_decimal_string(int places = 6) const {
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    BigInt mag = boost::multiprecision::abs(num_) * scale;
    BigInt q = mag / den_;
    BigInt r = mag % den_;
    if (2 * r >= den_) ++q;
    BigInt whole = q / scale;
    BigInt frac = q % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), places - static_cast<int>(fs.size()), '0');
    std::string out = whole.str() + "." + fs;
    if (num_ < 0 && q != 0) out.insert(out.begin(), '-');
    return out;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_fraction_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

/// Factory matching the (numerator, positive denominator) contract.
inline Rational rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// max(0, r)
inline Rational clamp_nonnegative(const Rational& r) {
  return r.is_negative() ? Rational(0) : r;
}

}  // namespace fdcell
