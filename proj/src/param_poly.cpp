#include "ncqm/param_poly.hpp"

#include <sstream>

namespace ncqm::sym {

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  if (im_ == 0) return re_.get_str();
  if (re_ == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string s = "(" + re_.get_str();
  if (im_ > 0) {
    s += "+";
    s += (im_ == 1) ? "i" : im_.get_str() + "*i";
  } else {
    mpq_class m = -im_;
    s += "-";
    s += (m == 1) ? "i" : m.get_str() + "*i";
  }
  return s + ")";
}

ParamPoly ParamPoly::constant(GaussianRational c) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_.emplace(ParamExp{}, std::move(c));
  return p;
}

ParamPoly ParamPoly::symbol(Param s, unsigned power) {
  if (power == 0) return one();
  ParamPoly p;
  ParamExp e{};
  e[static_cast<int>(s)] = static_cast<std::uint16_t>(power);
  p.terms_.emplace(e, GaussianRational(1));
  return p;
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ParamExp{};
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ParamExp{} &&
         terms_.begin()->second.is_one();
}

GaussianRational ParamPoly::constant_value() const {
  auto it = terms_.find(ParamExp{});
  return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned ParamPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const ParamExp& e = terms_.rbegin()->first;  // grlex max has max degree
  unsigned t = 0;
  for (int k = 0; k < kNumParams; ++k) t += e[k];
  return t;
}

unsigned ParamPoly::degree_in(Param s) const {
  unsigned d = 0;
  const int k = static_cast<int>(s);
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[k]);
  return d;
}

void ParamPoly::add_term(const ParamExp& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
  ParamPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ParamExp e;
      for (int k = 0; k < kNumParams; ++k)
        e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator*(const GaussianRational& c) const {
  if (c.is_zero()) return {};
  ParamPoly r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
  ParamPoly r = one();
  for (unsigned k = 0; k < e; ++k) r = r * (*this);
  return r;
}

const ParamExp& ParamPoly::leading_exponents() const {
  return terms_.rbegin()->first;
}

const GaussianRational& ParamPoly::leading_coeff() const {
  return terms_.rbegin()->second;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  ParamPoly rem = *this;
  ParamPoly quot;
  const ParamExp& de = divisor.leading_exponents();
  const GaussianRational& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const ParamExp& re = rem.leading_exponents();
    ParamExp qe;
    for (int k = 0; k < kNumParams; ++k) {
      if (re[k] < de[k]) return std::nullopt;
      qe[k] = static_cast<std::uint16_t>(re[k] - de[k]);
    }
    GaussianRational qc = rem.leading_coeff() / dc;
    ParamPoly mono;
    mono.terms_.emplace(qe, qc);
    quot = quot + mono;
    rem = rem - mono * divisor;
  }
  return quot;
}

ParamPoly ParamPoly::leading_coeff_in(Param v) const {
  const int k = static_cast<int>(v);
  unsigned d = degree_in(v);
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[k] == d) {
      ParamExp e2 = e;
      e2[k] = 0;
      r.add_term(e2, c);
    }
  }
  return r;
}

ParamPoly ParamPoly::content_in(Param v) const {
  const int k = static_cast<int>(v);
  // gcd over the coefficient polynomials of each power of v
  std::map<unsigned, ParamPoly> coefs;
  for (const auto& [e, c] : terms_) {
    ParamExp e2 = e;
    unsigned p = e2[k];
    e2[k] = 0;
    coefs[p].add_term(e2, c);
  }
  ParamPoly g;
  for (auto& [p, poly] : coefs) g = gcd_impl(g, poly);
  return g;
}

ParamPoly ParamPoly::pseudo_remainder(ParamPoly a, const ParamPoly& b, Param v) {
  const int k = static_cast<int>(v);
  const unsigned db = b.degree_in(v);
  const ParamPoly lb = b.leading_coeff_in(v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const unsigned da = a.degree_in(v);
    ParamPoly la = a.leading_coeff_in(v);
    ParamPoly shift = ParamPoly::symbol(v, da - db);
    a = a * lb - la * shift * b;
    if (!a.is_zero() && a.degree_in(v) >= da && da >= db && da > 0) {
      // degree must strictly decrease; guards against a logic error
      throw Error(ErrorCode::Internal, "pseudo-division failed to reduce");
    }
  }
  return a;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return {};
  return *this * (GaussianRational(1) / leading_coeff());
}

ParamPoly ParamPoly::gcd_impl(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return one();
  Param v = Param::Hbar;
  for (int k = 0; k < kNumParams; ++k) {
    if (a.degree_in(static_cast<Param>(k)) > 0 ||
        b.degree_in(static_cast<Param>(k)) > 0) {
      v = static_cast<Param>(k);
      break;
    }
  }
  const unsigned da = a.degree_in(v), db = b.degree_in(v);
  if (da == 0) return gcd_impl(a, b.content_in(v));
  if (db == 0) return gcd_impl(a.content_in(v), b);

  ParamPoly ca = a.content_in(v), cb = b.content_in(v);
  ParamPoly cg = gcd_impl(ca, cb);
  ParamPoly A = *a.divide_exact(ca);
  ParamPoly B = *b.divide_exact(cb);
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (!B.is_zero()) {
    ParamPoly R = pseudo_remainder(A, B, v);
    A = B;
    if (R.is_zero()) {
      B = R;
    } else {
      B = *R.divide_exact(R.content_in(v));
    }
  }
  return cg * A;
}

ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
  return gcd_impl(a, b).monic();
}

GaussianRational ParamPoly::eval(
    const std::array<GaussianRational, kNumParams>& point) const {
  GaussianRational acc;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (int k = 0; k < kNumParams; ++k)
      for (unsigned p = 0; p < e[k]; ++p) t *= point[k];
    acc += t;
  }
  return acc;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // grlex-descending
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string word;
    for (int k = 0; k < kNumParams; ++k) {
      if (e[k] == 0) continue;
      if (!word.empty()) word += "*";
      word += kParamNames[k];
      if (e[k] > 1) word += "^" + std::to_string(e[k]);
    }
    std::string cs = c.to_string();
    std::string piece;
    if (word.empty()) {
      piece = cs;
    } else if (c.is_one()) {
      piece = word;
    } else if ((-c).is_one()) {
      piece = "-" + word;
    } else {
      piece = cs + "*" + word;
    }
    if (first) {
      os << piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      os << " - " << piece.substr(1);
    } else {
      os << " + " << piece;
    }
  }
  return os.str();
}

ParamRat::ParamRat(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator polynomial");
  normalize();
}

void ParamRat::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly::one();
    return;
  }
  if (!den_.is_one()) {
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
    GaussianRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
      GaussianRational inv = GaussianRational(1) / lc;
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  }
}

ParamRat ParamRat::operator-() const {
  ParamRat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ParamRat ParamRat::operator+(const ParamRat& o) const {
  return ParamRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamRat ParamRat::operator-(const ParamRat& o) const {
  return ParamRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

ParamRat ParamRat::operator*(const ParamRat& o) const {
  return ParamRat(num_ * o.num_, den_ * o.den_);
}

ParamRat ParamRat::operator/(const ParamRat& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return ParamRat(num_ * o.den_, den_ * o.num_);
}

ParamRat ParamRat::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return ParamRat(den_, num_);
}

ParamRat ParamRat::conj() const {
  ParamPoly n, d;
  for (const auto& [e, c] : num_.terms()) n.add_term(e, c.conj());
  for (const auto& [e, c] : den_.terms()) d.add_term(e, c.conj());
  return ParamRat(std::move(n), std::move(d));
}

GaussianRational ParamRat::eval(
    const std::array<GaussianRational, kNumParams>& point) const {
  GaussianRational d = den_.eval(point);
  if (d.is_zero())
    throw DomainError("denominator vanishes at the given point: " +
                      den_.to_string());
  return num_.eval(point) / d;
}

std::pair<std::string, std::string> ParamRat::re_im_strings() const {
  // Realify the denominator when needed so the split is well defined.
  ParamPoly num = num_, den = den_;
  bool den_real = true;
  for (const auto& [e, c] : den.terms())
    if (!c.is_real()) den_real = false;
  if (!den_real) {
    ParamPoly dc;
    for (const auto& [e, c] : den.terms()) dc.add_term(e, c.conj());
    num = num * dc;
    den = den * dc;
  }
  ParamPoly re, im;
  for (const auto& [e, c] : num.terms()) {
    re.add_term(e, GaussianRational(c.re(), mpq_class(0)));
    im.add_term(e, GaussianRational(c.im(), mpq_class(0)));
  }
  auto wrap = [&](const ParamPoly& p) -> std::string {
    if (p.is_zero()) return "0";
    if (den.is_one()) return p.to_string();
    return "(" + p.to_string() + ")/(" + den.to_string() + ")";
  };
  return {wrap(re), wrap(im)};
}

std::string ParamRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ncqm::sym
