#include "relcomm/rational.hpp"

#include "relcomm/errors.hpp"

namespace relcomm {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InputError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rat operator/(Rat const& a, Rat const& b) {
  if (b.num_ == 0) throw InputError("division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rat::str() const { return num_.str() + "/" + den_.str(); }

Rat Rat::parse(std::string const& text) {
  auto slash = text.find('/');
  auto valid = [](std::string const& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string n = text.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(n) || !valid(d)) throw InputError("malformed rational '" + text + "'");
  return Rat(BigInt(n), BigInt(d));
}

}  // namespace relcomm
