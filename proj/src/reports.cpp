#include "ncqm/reports.hpp"

#include <random>

namespace ncqm::sym {

namespace {

Scalar i_hbar() { return Scalar::i() * Scalar::symbol(Param::Hbar); }

Scalar i_xi2_times(Param p) {
  return Scalar::i() * Scalar::xi() * Scalar::xi() * Scalar::symbol(p);
}

}  // namespace

std::vector<AlgebraCheck> verify_deformed_algebra(const Bindings& b) {
  const OpPoly tx1 = OpPoly::generator(Generator::TX1).substitute(b);
  const OpPoly tx2 = OpPoly::generator(Generator::TX2).substitute(b);
  const OpPoly tp1 = OpPoly::generator(Generator::TP1).substitute(b);
  const OpPoly tp2 = OpPoly::generator(Generator::TP2).substitute(b);

  struct Item {
    const char* name;
    const char* label;
    const OpPoly *lhs, *rhs;
    Scalar target;
  };
  const Scalar zero = Scalar::zero();
  const std::vector<Item> items = {
      {"[tx1,tp1]", "i*hbar", &tx1, &tp1, i_hbar()},
      {"[tx1,tp2]", "0", &tx1, &tp2, zero},
      {"[tx2,tp2]", "i*hbar", &tx2, &tp2, i_hbar()},
      {"[tp1,tp1]", "0", &tp1, &tp1, zero},
      {"[tp1,tp2]", "i*xi^2*eta", &tp1, &tp2, i_xi2_times(Param::Eta)},
      {"[tp2,tp2]", "0", &tp2, &tp2, zero},
      {"[tx1,tx1]", "0", &tx1, &tx1, zero},
      {"[tx1,tx2]", "i*xi^2*theta", &tx1, &tx2, i_xi2_times(Param::Theta)},
      {"[tx2,tx2]", "0", &tx2, &tx2, zero},
  };

  std::vector<AlgebraCheck> out;
  out.reserve(items.size());
  for (const auto& it : items) {
    OpPoly comm = commutator(*it.lhs, *it.rhs);
    OpPoly target = OpPoly::scalar(it.target.substitute(b));
    OpPoly residual = comm - target;
    AlgebraCheck chk;
    chk.name = it.name;
    chk.target_label = it.label;
    chk.computed = comm.to_string();
    chk.target = target.to_string();
    chk.residual = residual.to_string();
    chk.exact_zero = residual.is_zero();
    out.push_back(std::move(chk));
  }
  return out;
}

namespace {

// theta -> eta/(mu*omega)^2
Bindings bose_condition_binding() {
  Bindings b;
  ParamPoly mw2 = (ParamPoly::symbol(Param::Mu) * ParamPoly::symbol(Param::Omega)).pow(2);
  b.params[static_cast<int>(Param::Theta)] =
      Scalar(ParamRat(ParamPoly::symbol(Param::Eta), mw2));
  return b;
}

mpq_class random_positive_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 12);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

BoseConditionReport derive_bose_condition(int random_trials, unsigned seed) {
  BoseConditionReport rep;

  const OpPoly a1 = OpPoly::generator(Generator::A1);
  const OpPoly a2 = OpPoly::generator(Generator::A2);
  const OpPoly a1d = OpPoly::generator(Generator::A1Dag);
  const OpPoly a2d = OpPoly::generator(Generator::A2Dag);

  struct Pair {
    const char* name;
    const OpPoly *a, *b;
  };
  const std::vector<Pair> pairs = {
      {"[a1,a1]", &a1, &a1},     {"[a1,a2]", &a1, &a2},
      {"[a2,a2]", &a2, &a2},     {"[a1d,a1d]", &a1d, &a1d},
      {"[a1d,a2d]", &a1d, &a2d}, {"[a2d,a2d]", &a2d, &a2d},
      {"[a1,a1d]", &a1, &a1d},   {"[a1,a2d]", &a1, &a2d},
      {"[a2,a1d]", &a2, &a1d},   {"[a2,a2d]", &a2, &a2d},
  };
  OpPoly raising_pair;
  OpPoly mixed_offdiag;
  for (const auto& p : pairs) {
    OpPoly c = commutator(*p.a, *p.b);
    rep.commutators.push_back({p.name, c.to_string(), c.is_zero()});
    if (std::string(p.name) == "[a1d,a2d]") raising_pair = c;
    if (std::string(p.name) == "[a1,a2d]") mixed_offdiag = c;
  }

  auto factor_scalar = raising_pair.as_scalar();
  rep.factor_is_scalar = factor_scalar.has_value();
  if (!rep.factor_is_scalar) return rep;
  const Scalar factor = *factor_scalar;
  rep.factor = factor.to_string();

  // The commutator reduces to xi/sigma parity (0,0); its numerator must
  // carry the factor (mu*omega)^2*theta - eta.
  ParamPoly prop = (ParamPoly::symbol(Param::Mu) * ParamPoly::symbol(Param::Omega)).pow(2) *
                       ParamPoly::symbol(Param::Theta) -
                   ParamPoly::symbol(Param::Eta);
  rep.proportional_to = prop.to_string();
  const ParamRat& base = factor.component(0, 0);
  bool pure_base = !base.is_zero();
  for (int a = 0; a < 2 && pure_base; ++a)
    for (int s = 0; s < 2; ++s)
      if ((a || s) && !factor.component(a, s).is_zero()) pure_base = false;
  if (pure_base) {
    if (auto cof = base.num().divide_exact(prop)) {
      rep.proportionality_exact = true;
      rep.cofactor = ParamRat(*cof, base.den()).to_string();
    }
  }

  rep.vanishes_on_condition =
      factor.substitute(bose_condition_binding()).is_zero();

  Bindings theta0;
  theta0.params[static_cast<int>(Param::Theta)] = Scalar::zero();
  Scalar at_theta0 = factor.substitute(theta0);
  rep.nonzero_when_theta_zero = !at_theta0.is_zero();
  rep.theta_zero_value = at_theta0.to_string();

  // Exact-rational sampling off the condition: the factor never vanishes.
  std::mt19937 rng(seed);
  rep.offcondition_trials = random_trials;
  for (int t = 0; t < random_trials; ++t) {
    std::array<GaussianRational, kNumParams> point;
    mpq_class eta, theta, mu, omega;
    while (true) {
      point[0] = GaussianRational(random_positive_rational(rng), mpq_class(0));
      eta = random_positive_rational(rng);
      theta = random_positive_rational(rng);
      mu = random_positive_rational(rng);
      omega = random_positive_rational(rng);
      if (theta != eta / (mu * omega * mu * omega)) break;
    }
    point[1] = GaussianRational(eta, mpq_class(0));
    point[2] = GaussianRational(theta, mpq_class(0));
    point[3] = GaussianRational(mu, mpq_class(0));
    point[4] = GaussianRational(omega, mpq_class(0));
    GaussianRational v00 = base.eval(point);
    if (!v00.is_zero()) ++rep.offcondition_nonzero;
  }

  // Forms usually quoted for this algebra, rebuilt exactly and compared.
  // Quoted [a1, a2dag] off-diagonal: i xi^-2 mu omega theta (eps_12 = 1).
  Scalar quoted_mixed =
      Scalar::i() * Scalar(Scalar::xi_squared().inverse()) *
      Scalar::symbol(Param::Mu) * Scalar::symbol(Param::Omega) *
      Scalar::symbol(Param::Theta);
  // Quoted [a1dag, a2dag]: i xi mu omega (theta - eta/(mu omega)^2) / (2 hbar).
  Scalar quoted_raising =
      Scalar::i() * Scalar::xi() * Scalar::symbol(Param::Mu) *
      Scalar::symbol(Param::Omega) *
      (Scalar::symbol(Param::Theta) -
       Scalar::symbol(Param::Eta) *
           Scalar(ParamRat(ParamPoly::one(),
                           (ParamPoly::symbol(Param::Mu) *
                            ParamPoly::symbol(Param::Omega)).pow(2)))) *
      Scalar(ParamRat(ParamPoly::constant(GaussianRational::rational(1, 2)),
                      ParamPoly::symbol(Param::Hbar)));

  auto mixed_scalar = mixed_offdiag.as_scalar();
  rep.mixed_offdiag_computed = mixed_offdiag.to_string();
  rep.mixed_offdiag_quoted = quoted_mixed.to_string();
  rep.mixed_offdiag_agrees =
      mixed_scalar.has_value() && (*mixed_scalar == quoted_mixed);
  rep.raising_pair_computed = raising_pair.to_string();
  rep.raising_pair_quoted = quoted_raising.to_string();
  rep.raising_pair_agrees = (factor == quoted_raising);

  return rep;
}

}  // namespace ncqm::sym
