#pragma once

// The metacyclic model F_Q^x ⋊ <pi> of the division-algebra units
// (pi x pi^{-1} = x^q, pi^n central) and its d-dimensional tame
// representation tau built from a regular character theta of F_{q^d}^x.
//
// Basis convention: x.e_i = theta~^{q^i}(x) e_i, and
//   pi: e_i -> e_{i-1} (i >= 1),  e_0 -> lambda e_{d-1},
// so that pi^d = lambda and pi U(x) pi^{-1} = U(x^q), with
//   lambda = theta(-1)^{m+1} theta(pi_F).

#include "tjm/characters.hpp"
#include "tjm/cyclotomic.hpp"
#include "tjm/finite_field.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace tjm {

/// zeta_order^exponent
struct RootOfUnity {
  std::uint32_t order = 1;
  std::int64_t exponent = 0;
};

/// lcm(p, q^d - 1, order of theta_pi): the field all values live in.
std::uint32_t global_order(const FieldTower& tower, const RootOfUnity& theta_pi);

class DivisionParams {
 public:
  /// Throws PreconditionError when theta_exponent is not regular.
  DivisionParams(std::shared_ptr<const FieldTower> tower, std::int64_t theta_exponent, RootOfUnity theta_pi);

  const FieldTower& tower() const { return *tower_; }
  std::shared_ptr<const FieldTower> tower_ptr() const { return tower_; }
  const MultChar& theta() const { return theta_; }
  /// theta o Nr_{F_Q/F_{q^d}} on the top level.
  const MultChar& theta_tilde() const { return theta_tilde_; }
  const RootOfUnity& theta_pi() const { return theta_pi_; }
  std::uint32_t L() const { return L_; }

  /// zeta_order^k as an exponent of zeta_L.
  std::uint32_t root(std::uint32_t order, std::int64_t k) const;
  std::uint32_t theta_pi_exponent() const { return root(theta_pi_.order, theta_pi_.exponent); }
  /// theta(-1)
  std::uint32_t theta_minus_one() const;
  std::uint32_t lambda_exponent() const { return lambda_; }
  /// Exponent of theta~^{q^i}(x), x a unit of the top level.
  std::uint32_t theta_tilde_exponent(const FqElem& x, std::int64_t i) const;

 private:
  std::shared_ptr<const FieldTower> tower_;
  MultChar theta_;
  MultChar theta_tilde_;
  RootOfUnity theta_pi_;
  std::uint32_t L_;
  std::uint32_t lambda_;
};

/// x pi^j with x a unit of the top level and j >= 0.
struct DxElement {
  FqElem x;
  std::int64_t j = 0;

  /// (x, j)(x', j') = (x x'^{q^j}, j + j')
  DxElement operator*(const DxElement& h) const;
  DxElement pow(std::int64_t e) const;
};

/// Every element of the finite quotient: x in F_Q^x (canonical order), 0 <= j < n.
std::vector<DxElement> enumerate_dx(const FieldTower& tower);

class TameRep {
 public:
  explicit TameRep(DivisionParams params);

  const DivisionParams& params() const { return params_; }
  const FieldTower& tower() const { return params_.tower(); }
  std::uint32_t dim() const { return d_; }
  std::uint32_t L() const { return params_.L(); }

  std::uint32_t unit_exponent(const FqElem& x, std::uint32_t i) const { return params_.theta_tilde_exponent(x, i); }
  Matrix<RootSum> unit_action(const FqElem& x) const;
  const Matrix<RootSum>& pi_action() const { return pi_powers_[1]; }
  /// pi^j for 0 <= j <= 2n.
  const Matrix<RootSum>& pi_power(std::int64_t j) const;
  /// U(x) pi^j
  Matrix<RootSum> action(const DxElement& g) const;
  RootSum trace(const DxElement& g) const;

  struct Invariants {
    bool twist = true;         // pi U(x) = U(x^q) pi
    bool pi_power_d = true;    // pi^d = lambda
    bool pi_power_n = true;    // pi^n = lambda^m
    bool distinct = true;      // theta~^{q^i} pairwise distinct
    bool all() const { return twist && pi_power_d && pi_power_n && distinct; }
  };
  /// exhaustive = every unit; otherwise the generator only.
  Invariants check_invariants(bool exhaustive) const;

 private:
  DivisionParams params_;
  std::uint32_t d_;
  std::vector<Matrix<RootSum>> pi_powers_;
};

inline RootSum tau_trace(const TameRep& tau, const DxElement& g) { return tau.trace(g); }

struct ExtSquareTraces {
  RootSum basis;     // trace on the e_i ∧ e_j basis
  RootSum identity;  // (tr(g)^2 - tr(g^2)) / 2
};
ExtSquareTraces ext_square_traces(const TameRep& tau, const DxElement& g);
/// Both methods, reduced; throws std::logic_error if they disagree.
CycNum ext_square_trace(const TameRep& tau, const DxElement& g);

/// Exponent of (theta o Nr)(x, j) = theta(Nr_{F_Q/F_q} x) (theta((-1)^{n+1}) theta(pi_F))^j.
std::uint32_t norm_character(const DivisionParams& params, const DxElement& g);
/// Exponent of mu_z(x, j) = z^j.
std::uint32_t mu_character(const DivisionParams& params, std::uint32_t z_exponent, const DxElement& g);
/// Central character of tau read off its matrices, composed with the
/// reduced norm: omega(Nr x) (omega((-1)^{n+1}) omega(pi_F))^j.
std::uint32_t omega_norm_character(const TameRep& tau, const DxElement& g);

/// W_y = span{e_i ⊗ e_{i+y}} as a representation of the torus-with-twist
/// group; generators (gamma, 1), (1, gamma), pi. swapped = W_y^s.
std::vector<Matrix<CycNum>> w_space_generators(const TameRep& tau, std::int64_t y, bool swapped);

struct MackeyResult {
  std::size_t direct = 0;    // dim Hom(W_y, W_y')
  std::size_t twisted = 0;   // dim Hom(W_y, W_y'^s)
  std::size_t swap_matches_negation = 0;  // dim Hom(W_{-y'}, W_y'^s)
  std::size_t total() const { return direct + twisted; }
};
MackeyResult mackey_hom_dim(const TameRep& tau, std::int64_t y, std::int64_t y2);

}  // namespace tjm
