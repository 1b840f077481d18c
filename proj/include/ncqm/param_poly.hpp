#ifndef NCQM_PARAM_POLY_HPP
#define NCQM_PARAM_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ncqm/gaussian_rational.hpp"

namespace ncqm::sym {

// Parameter symbols of the deformed algebra, in canonical order.
enum class Param : int { Hbar = 0, Eta = 1, Theta = 2, Mu = 3, Omega = 4 };
inline constexpr int kNumParams = 5;
inline constexpr const char* kParamNames[kNumParams] = {"hbar", "eta", "theta",
                                                        "mu", "omega"};

using ParamExp = std::array<std::uint16_t, kNumParams>;

// Graded lexicographic order; total degree first, then lex.
struct GrlexLess {
  bool operator()(const ParamExp& a, const ParamExp& b) const {
    unsigned ta = 0, tb = 0;
    for (int k = 0; k < kNumParams; ++k) {
      ta += a[k];
      tb += b[k];
    }
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

// Multivariate polynomial in (hbar, eta, theta, mu, omega) over the
// Gaussian rationals.  Stored sparse and canonical: no zero coefficients.
class ParamPoly {
 public:
  using TermMap = std::map<ParamExp, GaussianRational, GrlexLess>;

  ParamPoly() = default;
  static ParamPoly constant(GaussianRational c);
  static ParamPoly one() { return constant(GaussianRational(1)); }
  static ParamPoly symbol(Param s, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant term view; zero polynomial reads as 0.
  GaussianRational constant_value() const;

  const TermMap& terms() const { return terms_; }
  unsigned total_degree() const;
  unsigned degree_in(Param s) const;
  bool contains(Param s) const { return degree_in(s) > 0; }

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const GaussianRational& c) const;
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  ParamPoly pow(unsigned e) const;

  // Leading term under grlex.
  const ParamExp& leading_exponents() const;
  const GaussianRational& leading_coeff() const;

  // Exact division; nullopt when the divisor does not divide *this.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  // Monic GCD (leading coefficient 1 under grlex); gcd(0,0) = 0.
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  GaussianRational eval(const std::array<GaussianRational, kNumParams>& point) const;

  std::string to_string() const;

  void add_term(const ParamExp& e, const GaussianRational& c);

 private:
  // Content/primitive-part machinery for the recursive PRS gcd.
  static ParamPoly gcd_impl(const ParamPoly& a, const ParamPoly& b);
  ParamPoly content_in(Param v) const;
  ParamPoly leading_coeff_in(Param v) const;  // coefficient of v^deg_v
  static ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, Param v);
  ParamPoly monic() const;

  TermMap terms_;
};

// Rational function num/den over ParamPoly, kept canonical:
//   - zero is 0/1
//   - gcd(num, den) = 1
//   - den is monic under grlex
class ParamRat {
 public:
  ParamRat() : num_(), den_(ParamPoly::one()) {}
  ParamRat(ParamPoly num, ParamPoly den);
  explicit ParamRat(ParamPoly num) : num_(std::move(num)), den_(ParamPoly::one()) {}
  static ParamRat constant(GaussianRational c) {
    return ParamRat(ParamPoly::constant(std::move(c)));
  }
  static ParamRat one() { return constant(GaussianRational(1)); }
  static ParamRat symbol(Param s) { return ParamRat(ParamPoly::symbol(s)); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  ParamRat operator-() const;
  ParamRat operator+(const ParamRat& o) const;
  ParamRat operator-(const ParamRat& o) const;
  ParamRat operator*(const ParamRat& o) const;
  ParamRat operator/(const ParamRat& o) const;
  ParamRat inverse() const;
  bool operator==(const ParamRat& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const ParamRat& o) const { return !(*this == o); }

  // Complex conjugation of all coefficients (the parameters are real).
  ParamRat conj() const;

  GaussianRational eval(const std::array<GaussianRational, kNumParams>& point) const;

  // (re, im) split with a real denominator, for machine-readable output.
  std::pair<std::string, std::string> re_im_strings() const;

  std::string to_string() const;

 private:
  void normalize();
  ParamPoly num_, den_;
};

}  // namespace ncqm::sym

#endif
