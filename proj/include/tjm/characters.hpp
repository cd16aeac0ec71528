#pragma once

// Multiplicative and additive characters of the tower levels, Gauss sums and
// the two Gauss-sum identities used by the quadratic case.

#include "tjm/cyclotomic.hpp"
#include "tjm/finite_field.hpp"

#include <cstdint>
#include <stdexcept>

namespace tjm {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// chi(gamma_k) = zeta_{q^k-1}^e on the level-k units.
class MultChar {
 public:
  MultChar(const FieldTower& tower, std::uint32_t level, std::int64_t exponent);

  const FieldTower& tower() const { return *tower_; }
  std::uint32_t level() const { return level_; }
  /// Exponent reduced to [0, modulus).
  std::uint64_t exponent() const { return exponent_; }
  /// q^k - 1.
  std::uint64_t modulus() const { return modulus_; }
  /// Multiplicative order of the character.
  std::uint64_t order() const;
  bool is_trivial() const { return exponent_ == 0; }

  /// Exponent k with chi(x) = zeta_L^k. The order of chi must divide L.
  std::uint32_t value_exponent(const FqElem& x, std::uint32_t L) const;
  CycNum operator()(const FqElem& x, std::uint32_t L) const;

  MultChar pow(std::int64_t k) const { return MultChar(*tower_, level_, static_cast<std::int64_t>(exponent_) * k); }
  /// chi^{q^i}
  MultChar frobenius(std::int64_t i) const;
  MultChar operator*(const MultChar& other) const;

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.tower_ == b.tower_ && a.level_ == b.level_ && a.exponent_ == b.exponent_;
  }

 private:
  const FieldTower* tower_;
  std::uint32_t level_;
  std::uint64_t modulus_;
  std::uint64_t exponent_;
};

/// psi(x) = zeta_p^{Tr_{F/F_p}(x)} on a level; equals psi_{F_q} o Tr with
/// psi_{F_q} = psi_{F_p} o Tr_{F_q/F_p}.
class AddChar {
 public:
  AddChar(const FieldTower& tower, std::uint32_t level);

  const FieldTower& tower() const { return *tower_; }
  std::uint32_t level() const { return level_; }
  std::uint32_t value_exponent(const FqElem& x, std::uint32_t L) const;
  CycNum operator()(const FqElem& x, std::uint32_t L) const;

 private:
  const FieldTower* tower_;
  std::uint32_t level_;
};

/// e q^i != e (mod q^d - 1) for 0 < i < d.
bool is_regular_exponent(std::uint64_t q, std::uint32_t d, std::int64_t e);
bool is_regular(const MultChar& theta, std::uint32_t d);

/// theta o Nr_{F_{q^to}/F_{q^from}}; exponent e (q^to-1)/(q^from-1).
MultChar norm_inflate(const MultChar& theta, std::uint32_t to_level);

/// Smallest order in which the Gauss sum of (chi, psi) lives: lcm(p, ord chi).
std::uint32_t gauss_order(const MultChar& chi);
/// sum over units x of chi(x) psi(x) as integer counts of zeta_L powers.
RootCounts gauss_sum_counts(const MultChar& chi, const AddChar& psi, std::uint32_t L);
/// L = 0 selects gauss_order(chi).
CycNum gauss_sum(const MultChar& chi, const AddChar& psi, std::uint32_t L = 0);

/// Sum of chi over all units, exactly.
CycNum character_sum(const MultChar& chi, std::uint32_t L = 0);
/// Sum of psi over the whole level, exactly.
CycNum character_sum(const AddChar& psi);

struct GaussLemmaResult {
  CycNum gauss;            // G(theta^{q-1}, psi o Tr) by enumeration
  CycNum expected;         // q theta(-1)
  bool x0_trace_zero;      // gamma^{(q+1)/2} has trace 0 to F_q
  bool trace_zero_coset;   // trace-zero units form one coset of F_q^x
  bool holds() const { return x0_trace_zero && trace_zero_coset && gauss == expected; }
};

/// theta is a regular character on the level-2 field of the tower.
GaussLemmaResult verify_gauss_lemma(const MultChar& theta);

struct HasseDavenportResult {
  CycNum lifted;       // G(theta~^{q-1}, psi_0) over F_{q^{2m}}
  CycNum base_power;   // (-1)^{m+1} G(theta^{q-1}, psi o Tr)^m
  CycNum closed_form;  // (-1)^{m+1} q^m theta(-1)^m
  bool holds() const { return lifted == base_power && lifted == closed_form; }
};

/// theta regular on level 2 of a tower with d = 2 and n = 2m.
HasseDavenportResult verify_hasse_davenport(const MultChar& theta);

}  // namespace tjm
