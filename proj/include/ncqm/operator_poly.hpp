#ifndef NCQM_OPERATOR_POLY_HPP
#define NCQM_OPERATOR_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncqm/scalar.hpp"

namespace ncqm::sym {

// Total degree cap for operator polynomials.  Products that would exceed
// it are refused with a ResourceError instead of silently blowing up.
inline constexpr unsigned kMaxOperatorDegree = 16;

// Normal-ordered word x1^a x2^b p1^c p2^d.  The order convention is fixed
// globally: position generators left of momentum generators, index 1
// before index 2.
struct OpMono {
  std::array<std::uint16_t, 4> e{};  // exponents of x1, x2, p1, p2

  unsigned total() const {
    return unsigned(e[0]) + unsigned(e[1]) + unsigned(e[2]) + unsigned(e[3]);
  }
  bool operator==(const OpMono& o) const { return e == o.e; }
  static OpMono x1(unsigned k = 1) { return OpMono{{std::uint16_t(k), 0, 0, 0}}; }
  static OpMono x2(unsigned k = 1) { return OpMono{{0, std::uint16_t(k), 0, 0}}; }
  static OpMono p1(unsigned k = 1) { return OpMono{{0, 0, std::uint16_t(k), 0}}; }
  static OpMono p2(unsigned k = 1) { return OpMono{{0, 0, 0, std::uint16_t(k)}}; }
  std::string to_string() const;
};

struct OpMonoLess {
  bool operator()(const OpMono& a, const OpMono& b) const {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    return a.e < b.e;
  }
};

enum class Generator {
  X1, X2, P1, P2,           // canonical phase-space generators
  TX1, TX2, TP1, TP2,       // Bopp-shifted (tilde) generators
  A1, A2, A1Dag, A2Dag,     // ladder operators of the shifted oscillator
};

// Operator polynomial in normal-ordered form: finite Scalar-weighted sum
// of OpMono words.  All arithmetic keeps the representation canonical
// (no zero coefficients, words normal-ordered).
class OpPoly {
 public:
  using TermMap = std::map<OpMono, Scalar, OpMonoLess>;

  OpPoly() = default;
  static OpPoly zero() { return {}; }
  static OpPoly one() { return scalar(Scalar::one()); }
  static OpPoly scalar(Scalar s);
  static OpPoly monomial(OpMono m, Scalar s = Scalar::one());
  // Tilde and ladder kinds expand into the base generators.
  static OpPoly generator(Generator g);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  // Scalar content when the polynomial has no generator part.
  std::optional<Scalar> as_scalar() const;

  OpPoly operator-() const;
  OpPoly operator+(const OpPoly& o) const;
  OpPoly operator-(const OpPoly& o) const;
  OpPoly operator*(const OpPoly& o) const;
  OpPoly scale(const Scalar& s) const;
  OpPoly pow(unsigned k) const;
  bool operator==(const OpPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const OpPoly& o) const { return !(*this == o); }

  OpPoly substitute(const Bindings& b) const;

  std::string to_string() const;

  void add_term(const OpMono& m, const Scalar& s);

 private:
  TermMap terms_;
};

// Normal-ordered expansion of the concatenated word m1*m2, rewriting
// p_i x_i -> x_i p_i - i*hbar.  Coefficients involve only hbar and i.
OpPoly normal_order_product(const OpMono& m1, const OpMono& m2);

inline OpPoly commutator(const OpPoly& a, const OpPoly& b) {
  return a * b - b * a;
}

}  // namespace ncqm::sym

#endif
