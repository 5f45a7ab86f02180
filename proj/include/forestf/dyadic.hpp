#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace forestf {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational numerator / 2^exponent, canonical with an odd
// numerator or exponent zero. Closed under +, -, * and multiplication by
// powers of two; numerators are arbitrary precision.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long value) : num_(value) {}  // NOLINT: implicit by design
  Dyadic(BigInt numerator, int exponent);

  const BigInt& numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_ == 0; }

  Dyadic operator-() const;
  Dyadic times_pow2(int k) const;  // value * 2^k, k of either sign

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  // "p/2^k" for non-integers, plain decimal otherwise.
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_ = 0;
  int exp_ = 0;
};

}  // namespace forestf
