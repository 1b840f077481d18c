#include "ncqm/operator_poly.hpp"

#include <sstream>

namespace ncqm::sym {

namespace {
const char* kGenNames[4] = {"x1", "x2", "p1", "p2"};
}

std::string OpMono::to_string() const {
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += kGenNames[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

OpPoly OpPoly::scalar(Scalar s) {
  OpPoly p;
  if (!s.is_zero()) p.terms_.emplace(OpMono{}, std::move(s));
  return p;
}

OpPoly OpPoly::monomial(OpMono m, Scalar s) {
  OpPoly p;
  if (!s.is_zero()) p.terms_.emplace(m, std::move(s));
  return p;
}

unsigned OpPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, s] : terms_) d = std::max(d, m.total());
  return d;
}

std::optional<Scalar> OpPoly::as_scalar() const {
  if (terms_.empty()) return Scalar::zero();
  if (terms_.size() == 1 && terms_.begin()->first == OpMono{})
    return terms_.begin()->second;
  return std::nullopt;
}

void OpPoly::add_term(const OpMono& m, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, s);
  if (!inserted) {
    it->second = it->second + s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpPoly OpPoly::operator-() const {
  OpPoly r;
  for (const auto& [m, s] : terms_) r.terms_.emplace(m, -s);
  return r;
}

OpPoly OpPoly::operator+(const OpPoly& o) const {
  OpPoly r = *this;
  for (const auto& [m, s] : o.terms_) r.add_term(m, s);
  return r;
}

OpPoly OpPoly::operator-(const OpPoly& o) const {
  OpPoly r = *this;
  for (const auto& [m, s] : o.terms_) r.add_term(m, -s);
  return r;
}

OpPoly OpPoly::scale(const Scalar& s) const {
  OpPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

namespace {

// k! * C(n,k) * C(m,k) as an exact rational
GaussianRational pairing_count(unsigned n, unsigned m, unsigned k) {
  mpz_class v = 1;
  for (unsigned j = 0; j < k; ++j) {
    v *= (n - j);
    v *= (m - j);
  }
  mpz_class kf = 1;
  for (unsigned j = 2; j <= k; ++j) kf *= j;
  mpq_class q(v, kf);
  q.canonicalize();
  return GaussianRational(q, mpq_class(0));
}

// (-i)^k
GaussianRational minus_i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational(mpq_class(0), mpq_class(-1));
    case 2: return GaussianRational(-1);
    default: return GaussianRational(mpq_class(0), mpq_class(1));
  }
}

}  // namespace

OpPoly normal_order_product(const OpMono& m1, const OpMono& m2) {
  if (m1.total() + m2.total() > kMaxOperatorDegree)
    throw ResourceError("operator product exceeds total degree " +
                        std::to_string(kMaxOperatorDegree));
  // Move p1^c1 past x1^a2 and p2^d1 past x2^b2; the cross pairs commute.
  const unsigned a1 = m1.e[0], b1 = m1.e[1], c1 = m1.e[2], d1 = m1.e[3];
  const unsigned a2 = m2.e[0], b2 = m2.e[1], c2 = m2.e[2], d2 = m2.e[3];
  OpPoly out;
  for (unsigned k = 0; k <= std::min(c1, a2); ++k) {
    for (unsigned l = 0; l <= std::min(d1, b2); ++l) {
      GaussianRational coeff = pairing_count(c1, a2, k) *
                               pairing_count(d1, b2, l) * minus_i_pow(k + l);
      OpMono m;
      m.e[0] = std::uint16_t(a1 + a2 - k);
      m.e[1] = std::uint16_t(b1 + b2 - l);
      m.e[2] = std::uint16_t(c1 + c2 - k);
      m.e[3] = std::uint16_t(d1 + d2 - l);
      Scalar s = Scalar(ParamRat(
          ParamPoly::symbol(Param::Hbar, k + l) * coeff, ParamPoly::one()));
      out.add_term(m, s);
    }
  }
  return out;
}

OpPoly OpPoly::operator*(const OpPoly& o) const {
  OpPoly r;
  for (const auto& [ma, sa] : terms_) {
    for (const auto& [mb, sb] : o.terms_) {
      OpPoly base = normal_order_product(ma, mb);
      Scalar w = sa * sb;
      for (const auto& [m, s] : base.terms()) r.add_term(m, s * w);
    }
  }
  return r;
}

OpPoly OpPoly::pow(unsigned k) const {
  OpPoly r = OpPoly::one();
  for (unsigned j = 0; j < k; ++j) r = r * (*this);
  return r;
}

OpPoly OpPoly::substitute(const Bindings& b) const {
  OpPoly r;
  for (const auto& [m, s] : terms_) r.add_term(m, s.substitute(b));
  return r;
}

OpPoly OpPoly::generator(Generator g) {
  using S = Scalar;
  const Scalar half_eta =
      S::symbol(Param::Eta) *
      S(ParamRat(ParamPoly::constant(GaussianRational::rational(1, 2)),
                 ParamPoly::symbol(Param::Hbar)));
  const Scalar half_theta =
      S::symbol(Param::Theta) *
      S(ParamRat(ParamPoly::constant(GaussianRational::rational(1, 2)),
                 ParamPoly::symbol(Param::Hbar)));
  const Scalar inv_mw = S(ParamRat(
      ParamPoly::one(),
      ParamPoly::symbol(Param::Mu) * ParamPoly::symbol(Param::Omega)));
  switch (g) {
    case Generator::X1: return monomial(OpMono::x1());
    case Generator::X2: return monomial(OpMono::x2());
    case Generator::P1: return monomial(OpMono::p1());
    case Generator::P2: return monomial(OpMono::p2());
    // tp_i = xi (p_i + eta eps_ij x_j / (2 hbar)), eps_12 = -eps_21 = 1
    case Generator::TP1:
      return (monomial(OpMono::p1()) + monomial(OpMono::x2(), half_eta))
          .scale(S::xi());
    case Generator::TP2:
      return (monomial(OpMono::p2()) - monomial(OpMono::x1(), half_eta))
          .scale(S::xi());
    // tx_i = xi (x_i - theta eps_ij p_j / (2 hbar))
    case Generator::TX1:
      return (monomial(OpMono::x1()) - monomial(OpMono::p2(), half_theta))
          .scale(S::xi());
    case Generator::TX2:
      return (monomial(OpMono::x2()) + monomial(OpMono::p1(), half_theta))
          .scale(S::xi());
    // a_i^dag = sigma (tx_i - i tp_i/(mu omega)), sigma^2 = mu omega/(2 hbar)
    case Generator::A1Dag:
      return (generator(Generator::TX1) -
              generator(Generator::TP1).scale(S::i() * inv_mw))
          .scale(S::sigma());
    case Generator::A2Dag:
      return (generator(Generator::TX2) -
              generator(Generator::TP2).scale(S::i() * inv_mw))
          .scale(S::sigma());
    case Generator::A1:
      return (generator(Generator::TX1) +
              generator(Generator::TP1).scale(S::i() * inv_mw))
          .scale(S::sigma());
    case Generator::A2:
      return (generator(Generator::TX2) +
              generator(Generator::TP2).scale(S::i() * inv_mw))
          .scale(S::sigma());
  }
  throw Error(ErrorCode::Internal, "unreachable generator kind");
}

std::string OpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, s] = *it;
    std::string word = (m == OpMono{}) ? "" : m.to_string();
    std::string coeff = s.to_string();
    std::string piece;
    if (word.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = word;
    } else if (coeff == "-1") {
      piece = "-" + word;
    } else {
      bool atomic = coeff.find(" + ") == std::string::npos &&
                    coeff.find(" - ") == std::string::npos;
      piece = (atomic ? coeff : "(" + coeff + ")") + "*" + word;
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

}  // namespace ncqm::sym
