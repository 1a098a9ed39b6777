#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padeint {

// Exact rational on 128-bit integers. Large enough for every quantity the
// scheme tables need up to order parameter 16 ((2M)! / M! and the 2^-k force
// weights); construction beyond that range must be rejected by the caller.
class Rational {
public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(Int n, Int d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  std::string str() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }

  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Build digits from the magnitude; negate digit-wise to survive INT128_MIN.
    std::string s;
    while (v != 0) {
      int d = static_cast<int>(v % 10);
      v /= 10;
      s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  }

private:
  static Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Int g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  Int num_;
  Int den_;
};

}  // namespace padeint
