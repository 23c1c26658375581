#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperconv {

// Exact rational on int64 with __int128 intermediates. Values in this
// project stay tiny (parameter tensors, census counts), so overflow is a
// bug, not an expected condition; it throws.
class rat {
 public:
  constexpr rat() = default;
  constexpr rat(long long value) : num_(value), den_(1) {}
  rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return double(num_) / double(den_); }

  // "3/2" or plain "3"; used in reports, so the format is stable.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend rat operator+(const rat& a, const rat& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend rat operator-(const rat& a, const rat& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend rat operator*(const rat& a, const rat& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend rat operator/(const rat& a, const rat& b) {
    if (b.num_ == 0) throw std::domain_error("rat: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  rat operator-() const { return rat(-num_, den_); }

  rat& operator+=(const rat& o) { return *this = *this + o; }
  rat& operator-=(const rat& o) { return *this = *this - o; }
  rat& operator*=(const rat& o) { return *this = *this * o; }
  rat& operator/=(const rat& o) { return *this = *this / o; }

  friend bool operator==(const rat& a, const rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const rat& a, const rat& b) { return !(b < a); }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }
  friend bool operator>=(const rat& a, const rat& b) { return !(a < b); }

  static rat pow(const rat& base, int e) {
    rat r(1);
    rat b = e >= 0 ? base : rat(1) / base;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
  }

 private:
  using i128 = __int128;

  static rat from_i128(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    rat r;
    r.num_ = checked_cast(num);
    r.den_ = checked_cast(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static long long checked_cast(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rat: value exceeds 64-bit range");
    return (long long)v;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace hyperconv
