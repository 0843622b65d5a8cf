#pragma once

#include <gmpxx.h>

#include <string>

namespace flagcurv {

// Element of Q(i). Both parts are kept canonical (lowest terms, positive
// denominator) by mpq_class as long as constructors canonicalize.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational from_fraction(long num, long den);
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }
  GaussianRational operator+(const GaussianRational& o) const {
    return {mpq_class(re_ + o.re_), mpq_class(im_ + o.im_)};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {mpq_class(re_ - o.re_), mpq_class(im_ - o.im_)};
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return {mpq_class(re_ * o.re_ - im_ * o.im_), mpq_class(re_ * o.im_ + im_ * o.re_)};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  GaussianRational conjugate() const { return {re_, mpq_class(-im_)}; }
  GaussianRational inverse() const;

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

 private:
  mpq_class re_, im_;
};

}  // namespace flagcurv
