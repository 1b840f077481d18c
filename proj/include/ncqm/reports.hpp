#ifndef NCQM_REPORTS_HPP
#define NCQM_REPORTS_HPP

#include <string>
#include <vector>

#include "ncqm/operator_poly.hpp"

namespace ncqm::sym {

// One verified identity of the deformed algebra.
struct AlgebraCheck {
  std::string name;          // e.g. "[tx1,tp1]"
  std::string target_label;  // e.g. "i*hbar"
  std::string computed;      // canonical engine form
  std::string target;        // canonical target form
  std::string residual;      // canonical computed - target
  bool exact_zero = false;
};

// The nine component checks of the deformed commutator algebra
//   [tx_i, tp_j] = i hbar delta_ij
//   [tp_i, tp_j] = i xi^2 eta eps_ij
//   [tx_i, tx_j] = i xi^2 theta eps_ij
// over the index set (i,j) in {(1,1),(1,2),(2,2)} per family; the (2,1)
// components follow by antisymmetry.  Bindings are applied to generators
// and targets alike, so e.g. {theta->0, xi->1} checks the reduced algebra.
std::vector<AlgebraCheck> verify_deformed_algebra(const Bindings& b = {});

struct LadderCommutator {
  std::string name;
  std::string value;
  bool zero = false;
};

// Consistency of Bose statistics for the shifted ladder operators.
struct BoseConditionReport {
  std::vector<LadderCommutator> commutators;

  // scalar value of [a1dag, a2dag] and its factorization
  std::string factor;
  std::string proportional_to;
  std::string cofactor;
  bool factor_is_scalar = false;
  bool proportionality_exact = false;

  bool vanishes_on_condition = false;   // under theta -> eta/(mu omega)^2
  bool nonzero_when_theta_zero = false; // case with commuting positions
  std::string theta_zero_value;

  int offcondition_trials = 0;
  int offcondition_nonzero = 0;

  // engine results next to the forms usually quoted for this algebra
  std::string mixed_offdiag_computed;  // [a1, a2dag]
  std::string mixed_offdiag_quoted;
  bool mixed_offdiag_agrees = false;
  std::string raising_pair_computed;  // [a1dag, a2dag]
  std::string raising_pair_quoted;
  bool raising_pair_agrees = false;
};

BoseConditionReport derive_bose_condition(int random_trials = 50,
                                          unsigned seed = 0x5eedu);

}  // namespace ncqm::sym

#endif
