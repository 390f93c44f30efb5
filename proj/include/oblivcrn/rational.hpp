#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obliv {

// Exact rational over long long, kept in lowest terms with positive
// denominator.  All funcspec arithmetic goes through this type; no
// floating point is used anywhere in evaluation or validation.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value (floor toward minus infinity).
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  // Integer value; throws if the rational is not an integer.
  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(-num_, den_); }

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
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

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

  // Lowest-terms string: "3/2", "-1/2", integers as "7".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "a" or "a/b" with optional leading minus.
  static Rational parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("bad rational '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    try {
      if (slash == std::string_view::npos) {
        size_t used = 0;
        long long n = std::stoll(std::string(s), &used);
        if (used != s.size()) bad();
        return Rational(n);
      }
      std::string ns(s.substr(0, slash)), ds(s.substr(slash + 1));
      if (ns.empty() || ds.empty()) bad();
      size_t un = 0, ud = 0;
      long long n = std::stoll(ns, &un);
      long long d = std::stoll(ds, &ud);
      if (un != ns.size() || ud != ds.size()) bad();
      return Rational(n, d);
    } catch (const std::invalid_argument&) {
      bad();
    } catch (const std::out_of_range&) {
      bad();
    }
    return Rational();  // unreachable
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_;
  long long den_;
};

}  // namespace obliv
