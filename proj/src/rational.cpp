#include "flagcurv/rational.hpp"

#include "flagcurv/errors.hpp"

namespace flagcurv {

GaussianRational GaussianRational::from_fraction(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational literal with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q, mpq_class(0));
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(i)");
  mpq_class n(re_ * re_ + im_ * im_);
  return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  return *this * o.inverse();
}

}  // namespace flagcurv
