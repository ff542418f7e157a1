#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relcomm {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  BigInt const& num() const noexcept { return num_; }
  BigInt const& den() const noexcept { return den_; }

  // "num/den", always with the denominator (so 1 prints as "1/1").
  std::string str() const;
  // Inverse of str(); also accepts a bare integer.
  static Rat parse(std::string const& text);

  friend Rat operator+(Rat const& a, Rat const& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(Rat const& a, Rat const& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(Rat const& a, Rat const& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(Rat const& a, Rat const& b);

  friend bool operator==(Rat const& a, Rat const& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(Rat const& a, Rat const& b) {
    BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, Rat const& r) { return os << r.str(); }

 private:
  BigInt num_, den_;
};

}  // namespace relcomm
