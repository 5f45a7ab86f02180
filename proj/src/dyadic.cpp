#include "forestf/dyadic.hpp"

#include <algorithm>

namespace forestf {

Dyadic::Dyadic(BigInt numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --exp_;
  }
  if (exp_ < 0) {
    num_ <<= -exp_;
    exp_ = 0;
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.num_ = -out.num_;
  return out;
}

Dyadic Dyadic::times_pow2(int k) const { return Dyadic(num_, exp_ - k); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int exp = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (exp - a.exp_)) + (b.num_ << (exp - b.exp_)), exp);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  int exp = std::max(a.exp_, b.exp_);
  return (a.num_ << (exp - a.exp_)) < (b.num_ << (exp - b.exp_));
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace forestf
