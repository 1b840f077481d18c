#include "ncqm/scalar.hpp"

#include <cmath>
#include <sstream>

namespace ncqm::sym {

bool Bindings::empty() const {
  if (xi || sigma) return false;
  for (const auto& p : params)
    if (p) return false;
  return true;
}

Scalar::Scalar(ParamRat base) { c_[0][0] = std::move(base); }

Scalar Scalar::from_component(int xp, int sp, ParamRat r) {
  Scalar s;
  s.c_[xp][sp] = std::move(r);
  return s;
}

Scalar Scalar::xi() { return from_component(1, 0, ParamRat::one()); }
Scalar Scalar::sigma() { return from_component(0, 1, ParamRat::one()); }

const ParamRat& Scalar::xi_squared() {
  // 1 / (1 + theta*eta/(4 hbar^2)) = 4 hbar^2 / (4 hbar^2 + theta*eta)
  static const ParamRat v = [] {
    ParamPoly h2 = ParamPoly::symbol(Param::Hbar, 2) * GaussianRational(4);
    ParamPoly den = h2 + ParamPoly::symbol(Param::Theta) * ParamPoly::symbol(Param::Eta);
    return ParamRat(h2, den);
  }();
  return v;
}

const ParamRat& Scalar::sigma_squared() {
  static const ParamRat v = [] {
    ParamPoly num = ParamPoly::symbol(Param::Mu) * ParamPoly::symbol(Param::Omega);
    ParamPoly den = ParamPoly::symbol(Param::Hbar) * GaussianRational(2);
    return ParamRat(std::move(num), std::move(den));
  }();
  return v;
}

bool Scalar::is_zero() const {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (!c_[a][b].is_zero()) return false;
  return true;
}

bool Scalar::operator==(const Scalar& o) const {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (c_[a][b] != o.c_[a][b]) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.c_[a][b] = -c_[a][b];
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.c_[a][b] = c_[a][b] + o.c_[a][b];
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.c_[a][b] = c_[a][b] - o.c_[a][b];
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (c_[a][b].is_zero()) continue;
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          if (o.c_[p][q].is_zero()) continue;
          ParamRat v = c_[a][b] * o.c_[p][q];
          if (a + p == 2) v = v * xi_squared();
          if (b + q == 2) v = v * sigma_squared();
          int xp = (a + p) % 2, sp = (b + q) % 2;
          r.c_[xp][sp] = r.c_[xp][sp] + v;
        }
      }
    }
  }
  return r;
}

Scalar Scalar::conj() const {
  // xi and sigma are real roots; conjugation only touches coefficients.
  Scalar r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.c_[a][b] = c_[a][b].conj();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  // Norm down the two-step extension tower: first sigma, then xi.
  Scalar sconj;  // sigma -> -sigma
  for (int a = 0; a < 2; ++a) {
    sconj.c_[a][0] = c_[a][0];
    sconj.c_[a][1] = -c_[a][1];
  }
  Scalar n1 = *this * sconj;  // sigma-parity 0: E + F*xi
  Scalar xconj;               // xi -> -xi applied to n1
  xconj.c_[0][0] = n1.c_[0][0];
  xconj.c_[1][0] = -n1.c_[1][0];
  Scalar n2 = n1 * xconj;  // base-field element
  const ParamRat& base = n2.c_[0][0];
  if (base.is_zero()) throw DomainError("scalar is not invertible");
  ParamRat ib = base.inverse();
  Scalar r = sconj * xconj;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.c_[a][b] = r.c_[a][b] * ib;
  return r;
}

namespace {

// Polynomial evaluated in the Scalar ring (needed once bindings may
// send parameters to arbitrary scalars).
Scalar eval_poly_as_scalar(const ParamPoly& p,
                           const std::array<Scalar, kNumParams>& values) {
  Scalar acc;
  for (const auto& [e, c] : p.terms()) {
    Scalar t{c};
    for (int k = 0; k < kNumParams; ++k)
      for (unsigned q = 0; q < e[k]; ++q) t = t * values[k];
    acc = acc + t;
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(const Bindings& b) const {
  if (b.empty()) return *this;
  bool any_param = false;
  std::array<Scalar, kNumParams> values;
  for (int k = 0; k < kNumParams; ++k) {
    if (b.params[k]) {
      values[k] = *b.params[k];
      any_param = true;
    } else {
      values[k] = Scalar::symbol(static_cast<Param>(k));
    }
  }
  const Scalar xi_val = b.xi ? *b.xi : Scalar::xi();
  const Scalar sigma_val = b.sigma ? *b.sigma : Scalar::sigma();

  Scalar acc;
  for (int a = 0; a < 2; ++a) {
    for (int s = 0; s < 2; ++s) {
      const ParamRat& comp = c_[a][s];
      if (comp.is_zero()) continue;
      Scalar value;
      if (!any_param) {
        value = Scalar(comp);
      } else {
        Scalar num = eval_poly_as_scalar(comp.num(), values);
        Scalar den = eval_poly_as_scalar(comp.den(), values);
        if (den.is_zero())
          throw DomainError("denominator vanishes under binding: " +
                            comp.den().to_string());
        value = num * den.inverse();
      }
      if (a) value = value * xi_val;
      if (s) value = value * sigma_val;
      acc = acc + value;
    }
  }
  return acc;
}

std::complex<double> Scalar::eval(
    const std::array<GaussianRational, kNumParams>& point) const {
  const double hbar = point[0].to_complex().real();
  const double eta = point[1].to_complex().real();
  const double theta = point[2].to_complex().real();
  const double mu = point[3].to_complex().real();
  const double omega = point[4].to_complex().real();
  const double xi_val = 1.0 / std::sqrt(1.0 + theta * eta / (4.0 * hbar * hbar));
  const double sigma_val = std::sqrt(mu * omega / (2.0 * hbar));
  std::complex<double> acc = 0.0;
  const double roots[2][2] = {{1.0, sigma_val}, {xi_val, xi_val * sigma_val}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (!c_[a][b].is_zero())
        acc += c_[a][b].eval(point).to_complex() * roots[a][b];
  return acc;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* suffix[2][2] = {{"", "*sigma"}, {"*xi", "*xi*sigma"}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const ParamRat& comp = c_[a][b];
      if (comp.is_zero()) continue;
      std::string base = comp.to_string();
      std::string piece;
      if (a == 0 && b == 0) {
        piece = base;
      } else if (comp.is_one()) {
        piece = std::string(suffix[a][b]).substr(1);  // drop leading '*'
      } else {
        bool needs_parens = comp.den().is_one() && comp.num().terms().size() > 1;
        piece = (needs_parens ? "(" + base + ")" : base) + suffix[a][b];
      }
      if (first) {
        os << piece;
        first = false;
      } else {
        os << " + " << piece;
      }
    }
  }
  return os.str();
}

}  // namespace ncqm::sym
