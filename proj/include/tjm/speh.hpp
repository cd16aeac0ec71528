#pragma once

// The finite principal-series model Ind_B^G(tau_1 ⊗ tau_2) restricted to
// characters: one induced block per pair (i, j) with block character
//   chi_ij([[a, *], [0, e]]) = theta~_1^{q^i}(a) theta~_2^{q^j}(e),
// functions stored on the coset representatives 1, s n_x; G acts by right
// translation. The pi-twist Theta sends block (i, j) to (i-1, j-1) through
// the structure constants of tau_1(pi) ⊗ tau_2(pi) and precomposition with
// the inverse entrywise Frobenius.

#include "tjm/depthzero.hpp"
#include "tjm/gl2.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tjm {

class PSModel {
 public:
  PSModel(TameRep tau1, TameRep tau2);

  const TameRep& left() const { return tau1_; }
  const TameRep& right() const { return tau2_; }
  const FieldTower& tower() const { return tau1_.tower(); }
  const CosetSpace& cosets() const { return cosets_; }
  std::uint32_t L() const { return tau1_.L(); }
  std::uint32_t d1() const { return tau1_.dim(); }
  std::uint32_t d2() const { return tau2_.dim(); }
  std::uint32_t block_count() const { return d1() * d2(); }
  std::uint32_t block_index(std::int64_t i, std::int64_t j) const;
  std::pair<std::uint32_t, std::uint32_t> block_pair(std::uint32_t block) const { return {block / d2(), block % d2()}; }
  /// Length of one block, Q + 1.
  std::uint32_t block_size() const { return cosets_.size(); }
  std::uint32_t dimension() const { return block_count() * block_size(); }
  /// Same character on both factors.
  bool diagonal() const;

  /// Exponent of chi_block(b) for upper-triangular b.
  std::uint32_t block_character(std::uint32_t block, const Mat2& b) const;

  /// rep_k g = b_k rep_{k'} for every coset k.
  std::vector<CosetSpace::Located> translate(const Mat2& g) const;
  /// Value of a block-local function at an arbitrary group element.
  RootSum evaluate(std::uint32_t block, const Vector<RootSum>& local, const Mat2& g) const;
  /// Right translation on one block.
  Vector<RootSum> act_block(std::uint32_t block, const Mat2& g, const Vector<RootSum>& local) const;
  /// Right translation on the whole model.
  Vector<RootSum> act(const Mat2& g, const Vector<RootSum>& v) const;
  /// The pi-twist.
  Vector<RootSum> theta(const Vector<RootSum>& v) const;
  /// tau_1(pi) ⊗ tau_2(pi) on the block labels.
  const Matrix<RootSum>& structure_constants() const { return structure_; }

  Vector<RootSum> block_of(const Vector<RootSum>& v, std::uint32_t block) const {
    return v.segment(static_cast<Eigen::Index>(block) * block_size(), block_size());
  }
  Vector<RootSum> embed_block(std::uint32_t block, const Vector<RootSum>& local) const;

 private:
  TameRep tau1_;
  TameRep tau2_;
  CosetSpace cosets_;
  Matrix<RootSum> structure_;
  std::vector<CosetSpace::Located> inverse_frobenius_;
};

/// Per-block data of the psi_0-averaging projector P = Q^{-1} sum_u psi_0(u)^{-1} rho(n_u).
struct ProjectorCheck {
  bool monomial = true;       // every nonzero entry of Q P is a root of unity
  bool idempotent = false;    // P^2 = P
  bool rank_one = false;      // P = w r^T with P != 0
  bool image_whittaker = false;  // image spanned by the normalized Whittaker vector
  bool eigen_equation = false;   // rho(n_u) W = psi_0(u) W for all u
  std::uint32_t rank() const { return rank_one ? 1 : 0; }
  bool ok() const { return monomial && idempotent && rank_one && image_whittaker && eigen_equation; }
};

class WhittakerSpace {
 public:
  explicit WhittakerSpace(const PSModel& model);

  const PSModel& model() const { return *model_; }
  /// W(1) = 0, W(s n_x) = psi_0(x).
  const Vector<RootSum>& whittaker_vector() const { return whittaker_; }
  const std::vector<ProjectorCheck>& projector_checks() const { return checks_; }
  std::uint32_t dimension() const;

  /// Rank of P on the determinant line of a diagonal block (0 expected).
  std::optional<std::uint32_t> det_line_rank(std::uint32_t block) const;

  /// Theta on the Whittaker basis: column b holds Theta W_b.
  const Matrix<RootSum>& theta_matrix() const { return theta_matrix_; }
  /// Theta W_b = c W_{b'} verified on every block.
  bool theta_monomial() const { return theta_monomial_; }
  const Matrix<RootSum>& theta_power(std::int64_t j) const;
  /// Exponent of the scalar by which diag(x, x) acts on W_b.
  std::uint32_t unit_exponent(std::uint32_t block, const FqElem& x) const;
  /// diag(x, x) W_b = chi_b(x) W_b verified on the generator.
  bool unit_eigen() const { return unit_eigen_; }

  /// Trace of (x, j) on the whole space.
  RootSum dx_character(const DxElement& g) const;
  /// Trace of (x, j) on E_y = span{W_{i, i+y}} (d1 = d2).
  RootSum orbit_character(std::int64_t y, const DxElement& g) const;

 private:
  ProjectorCheck check_projector(std::uint32_t block);

  const PSModel* model_;
  Vector<RootSum> whittaker_;
  std::vector<std::int64_t> whittaker_exp_;
  std::vector<ProjectorCheck> checks_;
  std::vector<std::vector<std::int64_t>> projector_exp_;  // per block, (Q+1)^2 exponents of Q P, -1 for zero
  std::uint32_t pivot_ = 0;  // coset of s
  Matrix<RootSum> theta_matrix_;
  std::vector<Matrix<RootSum>> theta_powers_;
  bool theta_monomial_ = true;
  bool unit_eigen_ = true;
};

/// T(phi)(k) = C chi(diag(1,-1)) sum_y phi(s n_y F(k)) on the block
/// Ind(theta~^q ⊗ theta~) of a d = 2 model with tau_1 = tau_2, where F is the
/// entrywise Frobenius and C = theta(-1)^{m+1} theta(pi_F) / q^m.
class IntertwiningT {
 public:
  explicit IntertwiningT(const PSModel& model);

  std::uint32_t block() const { return block_; }
  /// C chi(diag(1, -1))
  const CycNum& scalar() const { return scalar_; }
  /// C
  const CycNum& paper_constant() const { return constant_; }

  /// (T phi)(g) / scalar() at an arbitrary group element.
  RootSum apply_at(const Vector<RootSum>& phi, const Mat2& g) const;
  /// (T phi)(g)(b k) = chi(b) (T phi)(k) for the Borel generators and all k,
  /// for each given test vector.
  bool block_stable(const std::vector<Vector<RootSum>>& tests) const;

  struct PowerResult {
    bool scalar = false;
    CycNum value;  // the scalar, including scalar()^{2m}
  };
  PowerResult power_2m() const;

  struct EigenResult {
    bool eigenvector = false;
    CycNum eigenvalue;  // including scalar()
  };
  EigenResult eigen_on(const Vector<RootSum>& w) const;

 private:
  struct Term {
    std::uint32_t row;
    std::uint32_t col;
    std::uint32_t exponent;
  };
  std::vector<RootCounts> apply_counts(const std::vector<RootCounts>& v) const;

  const PSModel* model_;
  std::uint32_t block_;
  CycNum constant_;
  CycNum scalar_;
  std::vector<Term> terms_;
};

}  // namespace tjm
