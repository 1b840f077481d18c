#ifndef NCQM_SCALAR_HPP
#define NCQM_SCALAR_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "ncqm/param_poly.hpp"

namespace ncqm::sym {

struct Bindings;

// Scalar of the operator algebra: an element of the coefficient field
//
//   Q(i)(hbar,eta,theta,mu,omega)[xi,sigma] /
//       (xi^2 - 1/(1 + theta*eta/(4 hbar^2)),  sigma^2 - mu*omega/(2 hbar))
//
// stored as four rational-function components indexed by (xi, sigma)
// parity.  The square-reduction rules are applied on every multiply, so
// stored xi/sigma exponents are only ever 0 or 1.
class Scalar {
 public:
  Scalar() = default;  // zero
  explicit Scalar(ParamRat base);
  explicit Scalar(GaussianRational c) : Scalar(ParamRat::constant(std::move(c))) {}

  static Scalar zero() { return {}; }
  static Scalar one() { return Scalar(GaussianRational(1)); }
  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar rational(long num, unsigned long den = 1) {
    return Scalar(GaussianRational::rational(num, den));
  }
  static Scalar symbol(Param s) { return Scalar(ParamRat::symbol(s)); }
  static Scalar xi();
  static Scalar sigma();

  // Reduction targets: xi^2 = 4 hbar^2 / (4 hbar^2 + theta*eta),
  // sigma^2 = mu*omega / (2 hbar).
  static const ParamRat& xi_squared();
  static const ParamRat& sigma_squared();

  const ParamRat& component(int xi_parity, int sigma_parity) const {
    return c_[xi_parity][sigma_parity];
  }

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar conj() const;

  Scalar substitute(const Bindings& b) const;

  // Numeric value with the roots evaluated as positive reals from the
  // same point; parameters are exact rationals, roots are doubles.
  std::complex<double> eval(
      const std::array<GaussianRational, kNumParams>& point) const;

  std::string to_string() const;

 private:
  static Scalar from_component(int xp, int sp, ParamRat r);
  // c_[xi parity][sigma parity]
  std::array<std::array<ParamRat, 2>, 2> c_{};
};

// Values the parser/CLI may bind; xi and sigma are the two formal roots.
struct Bindings {
  std::array<std::optional<Scalar>, kNumParams> params;
  std::optional<Scalar> xi;
  std::optional<Scalar> sigma;
  bool empty() const;
};

}  // namespace ncqm::sym

#endif
