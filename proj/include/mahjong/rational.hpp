#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace mahjong {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Decimal strings are produced only on request; nothing is
// ever stored as floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  static Rational integer(BigInt v) { return Rational(std::move(v), 1); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) {
    a += b;
    return a;
  }

  friend bool operator==(const Rational&, const Rational&) = default;

  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  // Decimal rendering rounded half-even to `places` fractional digits.
  std::string decimal(int places) const {
    if (places < 0) throw std::invalid_argument("decimal places must be non-negative");
    const bool neg = num_ < 0;
    BigInt scaled = neg ? BigInt(-num_) : num_;
    for (int i = 0; i < places; ++i) scaled *= 10;
    BigInt q = scaled / den_;
    const BigInt twice_rem = (scaled - q * den_) * 2;
    if (twice_rem > den_ || (twice_rem == den_ && (q & 1) != 0)) ++q;
    std::string digits = q.str();
    if (static_cast<int>(digits.size()) < places + 1)
      digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    std::string out;
    if (neg && q != 0) out += '-';
    out.append(digits, 0, digits.size() - places);
    if (places > 0) {
      out += '.';
      out.append(digits, digits.size() - places, std::string::npos);
    }
    return out;
  }

  double to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      num_ = -num_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace mahjong
