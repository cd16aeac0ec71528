#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_L).
//
// Three representations live here:
//
//   CycNum     canonical element of Q[x]/(Phi_L(x)), stored as the nonzero
//              coordinates on the power basis 1, x, ..., x^{phi(L)-1}.
//              Equality of two values of the same order is coefficient
//              equality.
//
//   RootSum    formal sum  sum_k r_k zeta_L^k  in the group ring Q[Z/L].
//              Products and root-of-unity twists are exponent arithmetic;
//              reduce() maps the group ring homomorphically onto CycNum.
//
//   RootCounts dense integer counts over the L exponents, used by tight
//              enumeration loops (Gauss sums, operator powers).
//
// Values of different orders combine in Q(zeta_lcm).

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tjm {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint32_t euler_phi(std::uint32_t n);
std::vector<std::uint32_t> prime_factors(std::uint64_t n);

/// Euclidean residue of k modulo n (n > 0).
inline std::int64_t mod_floor(std::int64_t k, std::int64_t n) {
  const std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

/// Phi_L and the reductions x^k mod Phi_L for 0 <= k < L. Built once per
/// order and shared process-wide; never mutated after construction.
struct CyclotomicTables {
  using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  std::uint32_t order = 1;
  std::uint32_t degree = 1;
  std::vector<std::int64_t> polynomial;  // Phi_L, low to high, monic
  std::vector<SparseRow> powers;         // powers[k] = x^k mod Phi_L
};

const CyclotomicTables& cyclotomic_tables(std::uint32_t order);

class CycNum {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  CycNum() = default;
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  static CycNum root_of_unity(std::uint32_t order, std::int64_t k);
  /// Builds from a full coordinate vector of length phi(order).
  static CycNum from_coefficients(std::uint32_t order, std::span<const Rational> coeffs);

  std::uint32_t order() const { return order_; }
  std::uint32_t degree() const;
  /// Dense coordinates on the power basis, length phi(order).
  std::vector<Rational> coefficients() const;
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Value of a rational element; throws if not rational.
  Rational rational_value() const;

  /// Image in Q(zeta_{new_order}); new_order must be a multiple of order().
  CycNum embed(std::uint32_t new_order) const;
  /// Complex conjugation zeta -> zeta^{-1}.
  CycNum conj() const;
  /// Galois automorphism zeta -> zeta^a, gcd(a, order) = 1.
  CycNum galois(std::int64_t a) const;
  CycNum inv() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs) { return *this *= rhs.inv(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Compact human-readable form, e.g. "[24] 1 - 1/2*z^3".
  std::string to_string() const;

 private:
  friend class RootSum;
  friend class RootCounts;
  CycNum(std::uint32_t order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {}

  std::uint32_t order_ = 1;
  std::vector<Term> terms_;  // sorted by index, nonzero coefficients
};

CycNum pow(const CycNum& base, std::int64_t exponent);
std::ostream& operator<<(std::ostream& os, const CycNum& value);

class RootSum {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  RootSum() = default;
  RootSum(long value);  // NOLINT(google-explicit-constructor)
  RootSum(const Rational& value);  // NOLINT(google-explicit-constructor)

  static RootSum root(std::uint32_t order, std::int64_t k);
  static RootSum monomial(std::uint32_t order, std::int64_t k, const Rational& coeff);
  static RootSum from_cycnum(const CycNum& value);

  std::uint32_t order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool structurally_zero() const { return terms_.empty(); }

  RootSum embed(std::uint32_t new_order) const;
  /// Multiplies by zeta_order^k.
  RootSum times_root(std::int64_t k) const;
  RootSum conj() const;
  CycNum reduce() const;

  RootSum operator-() const;
  RootSum& operator+=(const RootSum& rhs);
  RootSum& operator-=(const RootSum& rhs);
  RootSum& operator*=(const RootSum& rhs) { return *this = *this * rhs; }
  RootSum& operator/=(const Rational& rhs);

  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
  friend RootSum operator*(const RootSum& a, const RootSum& b);
  friend RootSum operator/(RootSum a, const Rational& b) { return a /= b; }
  /// Equality as elements of Q(zeta), not of the group ring.
  friend bool operator==(const RootSum& a, const RootSum& b);
  friend bool operator!=(const RootSum& a, const RootSum& b) { return !(a == b); }

 private:
  RootSum(std::uint32_t order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {}
  static std::vector<Term> normalize(std::uint32_t order, std::vector<Term> raw);

  std::uint32_t order_ = 1;
  std::vector<Term> terms_;  // sorted exponents, sign-folded into [0, L/2) for even L
};

class RootCounts {
 public:
  explicit RootCounts(std::uint32_t order) : order_(order), counts_(order, 0) {}

  std::uint32_t order() const { return order_; }
  std::int64_t operator[](std::uint32_t k) const { return counts_[k]; }
  void add(std::int64_t k, std::int64_t count = 1);
  /// this += zeta^k * other
  void add_rotated(const RootCounts& other, std::int64_t k);
  void clear() { std::fill(counts_.begin(), counts_.end(), 0); }
  bool structurally_zero() const;
  /// If every nonzero count sits on one exponent, returns that exponent.
  std::optional<std::uint32_t> single_exponent() const;

  friend RootCounts operator*(const RootCounts& a, const RootCounts& b);
  RootCounts conj() const;
  CycNum reduce() const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> counts_;
};

}  // namespace tjm

namespace Eigen {

template <>
struct NumTraits<tjm::CycNum> : GenericNumTraits<tjm::CycNum> {
  using Real = tjm::CycNum;
  using NonInteger = tjm::CycNum;
  using Literal = tjm::CycNum;
  using Nested = tjm::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<tjm::RootSum> : GenericNumTraits<tjm::RootSum> {
  using Real = tjm::RootSum;
  using NonInteger = tjm::RootSum;
  using Literal = tjm::RootSum;
  using Nested = tjm::RootSum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 5,
    AddCost = 20,
    MulCost = 40
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tjm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// If v is structurally a single root of unity zeta_L^k, returns k in [0, L).
std::optional<std::uint32_t> root_exponent(const RootSum& v);

/// Entrywise reduction of a group-ring matrix to canonical cyclotomic form.
Matrix<CycNum> reduce(const Matrix<RootSum>& m);

}  // namespace tjm
