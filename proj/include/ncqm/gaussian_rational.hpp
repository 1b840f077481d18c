#ifndef NCQM_GAUSSIAN_RATIONAL_HPP
#define NCQM_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <string>

#include "ncqm/errors.hpp"

namespace ncqm::sym {

// Exact complex number a + b*i with arbitrary-precision rational a, b.
// This is the ground field of every symbolic computation here; no
// floating point enters until a caller asks for eval().
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational rational(long num, unsigned long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q, mpq_class(0));
  }
  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  GaussianRational operator+(const GaussianRational& o) const {
    return GaussianRational(re_ + o.re_, im_ + o.im_);
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return GaussianRational(re_ - o.re_, im_ - o.im_);
  }
  GaussianRational operator*(const GaussianRational& o) const {
    return GaussianRational(re_ * o.re_ - im_ * o.im_,
                            re_ * o.im_ + im_ * o.re_);
  }
  GaussianRational operator/(const GaussianRational& o) const {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    if (n == 0) throw DomainError("division by zero coefficient");
    return GaussianRational((re_ * o.re_ + im_ * o.im_) / n,
                            (im_ * o.re_ - re_ * o.im_) / n);
  }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  bool operator==(const GaussianRational& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  // "3/2", "i", "-2*i", "(1+i)"; the mixed case carries its own parens so
  // callers can splice it into products without ambiguity.
  std::string to_string() const;

 private:
  mpq_class re_, im_;
};

}  // namespace ncqm::sym

#endif
