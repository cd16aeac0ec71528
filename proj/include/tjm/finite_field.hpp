#pragma once

// Finite fields F_p[x]/(P) with discrete-log representation, and the tower
// F_q ⊆ F_{q^d} ⊆ F_{q^n} (q = p^f) with norm-compatible generators.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tjm {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense polynomial over F_p, coefficients low to high in [0, p).
using FpPoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Rabin's test: P monic of degree >= 1 is irreducible over F_p.
bool is_irreducible(const FpPoly& poly, std::uint32_t p);

/// Lexicographically smallest monic primitive polynomial of the given degree,
/// comparing coefficients from x^{deg-1} down to x^0 in balanced-residue
/// order -(p-1)/2, ..., (p-1)/2.
FpPoly smallest_primitive_polynomial(std::uint32_t p, std::uint32_t degree);

/// "x^2 + 2*x + 2" style rendering, coefficients in [0, p).
std::string poly_to_string(const FpPoly& poly);

/// The field F_p[x]/(P). Nonzero elements are stored by their discrete log
/// to a fixed generator; zero is the log -1.
class GaloisField {
 public:
  using Rep = std::int32_t;
  static constexpr Rep kZero = -1;

  /// P must be monic and irreducible. The generator is x mod P if that is
  /// primitive, otherwise the primitive element with the smallest index.
  GaloisField(std::uint32_t p, FpPoly poly);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t units() const { return size_ - 1; }
  const FpPoly& polynomial() const { return poly_; }
  /// Coordinates of the chosen generator on the power basis.
  FpPoly generator_coords() const { return coords(units() > 1 ? 1 : 0); }

  Rep add(Rep a, Rep b) const;
  Rep neg(Rep a) const { return a == kZero || p_ == 2 ? a : wrap(std::int64_t{a} + half_); }
  Rep sub(Rep a, Rep b) const { return add(a, neg(b)); }
  Rep mul(Rep a, Rep b) const { return a == kZero || b == kZero ? kZero : wrap(std::int64_t{a} + b); }
  Rep inv(Rep a) const;
  Rep pow(Rep a, std::int64_t e) const;
  /// x -> x^{p^i}
  Rep frobenius_p(Rep a, std::int64_t i) const;

  /// Power-basis coordinates, low to high, length degree().
  FpPoly coords(Rep a) const;
  Rep from_coords(const FpPoly& c) const;
  /// Index sum_i c_i p^i of the coordinate vector.
  std::uint32_t index_of(Rep a) const { return a == kZero ? 0 : exp_[a]; }
  Rep from_index(std::uint32_t idx) const { return log_[idx]; }
  /// Image of an F_p integer.
  Rep from_int(std::int64_t v) const;
  /// Tr_{F/F_p}(a) as an integer in [0, p).
  std::uint32_t absolute_trace(Rep a) const { return a == kZero ? 0 : abs_trace_[a]; }

 private:
  Rep wrap(std::int64_t e) const { return static_cast<Rep>(((e % units()) + units()) % units()); }

  std::uint32_t p_;
  std::uint32_t degree_;
  std::uint32_t size_;
  std::int64_t half_;
  FpPoly poly_;
  std::vector<std::uint32_t> exp_;  // log -> index
  std::vector<Rep> log_;            // index -> log
  std::vector<Rep> zech_;           // k -> log(1 + g^k)
  std::vector<std::uint32_t> abs_trace_;
};

class FieldTower;

/// Element of one level F_{q^k} of a tower.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const FieldTower* tower, std::uint32_t level, GaloisField::Rep rep)
      : tower_(tower), level_(level), rep_(rep) {}

  const FieldTower& tower() const { return *tower_; }
  std::uint32_t level() const { return level_; }
  GaloisField::Rep rep() const { return rep_; }
  bool is_zero() const { return rep_ == GaloisField::kZero; }
  bool is_one() const { return rep_ == 0; }
  const GaloisField& field() const;

  FqElem operator+(const FqElem& b) const;
  FqElem operator-(const FqElem& b) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& b) const;
  FqElem operator/(const FqElem& b) const;
  FqElem inv() const;
  FqElem pow(std::int64_t e) const;
  FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
  FqElem& operator*=(const FqElem& b) { return *this = *this * b; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.tower_ == b.tower_ && a.level_ == b.level_ && a.rep_ == b.rep_;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  const FieldTower* tower_ = nullptr;
  std::uint32_t level_ = 0;
  GaloisField::Rep rep_ = GaloisField::kZero;
};

/// The tower F_q ⊆ F_{q^d} ⊆ F_{q^n}. The top field is F_p[x]/(P_n) with
/// generator gamma_n; level k uses gamma_k = gamma_n^{(Q-1)/(q^k-1)} and the
/// minimal polynomial of gamma_k as its defining polynomial, so the norm of
/// gamma_n to any level is that level's generator.
class FieldTower {
 public:
  struct Params {
    std::uint32_t p = 3;
    std::uint32_t f = 1;
    std::uint32_t n = 2;
    std::uint32_t d = 2;
    std::optional<FpPoly> poly_n;  // optional user-supplied top polynomial
  };

  static std::shared_ptr<const FieldTower> build(const Params& params);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t m() const { return n_ / d_; }
  /// Q = q^n, the size of the top field.
  std::uint32_t Q() const { return size(n_); }
  /// q^k for a level k.
  std::uint32_t size(std::uint32_t level) const;
  /// Levels present, ascending (a subset of {1, d, n}).
  std::vector<std::uint32_t> levels() const;
  const GaloisField& field(std::uint32_t level) const;

  FqElem zero(std::uint32_t level) const { return FqElem(this, level, GaloisField::kZero); }
  FqElem one(std::uint32_t level) const { return FqElem(this, level, 0); }
  /// Fixed generator gamma_k of F_{q^k}^x.
  FqElem generator(std::uint32_t level) const { return FqElem(this, level, field(level).units() > 1 ? 1 : 0); }
  FqElem from_int(std::uint32_t level, std::int64_t v) const;
  /// gamma_k^e for e in [0, q^k-1); the zero element for e = q^k-1. This is the
  /// canonical enumeration order of a level.
  FqElem element(std::uint32_t level, std::uint32_t idx) const;

  /// x^{q^i} (relative to F_q).
  FqElem frobenius(const FqElem& x, std::int64_t i) const;
  /// Inclusion of a smaller level into a larger one.
  FqElem embed(const FqElem& x, std::uint32_t target) const;
  /// Whether x lies in the subfield of the given level.
  bool in_subfield(const FqElem& x, std::uint32_t target) const;
  /// Preimage of x under embed; x must lie in the subfield.
  FqElem restrict(const FqElem& x, std::uint32_t target) const;
  FqElem trace_to(const FqElem& x, std::uint32_t target) const;
  FqElem norm_to(const FqElem& x, std::uint32_t target) const;

 private:
  FieldTower() = default;
  void check_pair(std::uint32_t from, std::uint32_t to) const;

  std::uint32_t p_ = 0, f_ = 0, q_ = 0, n_ = 0, d_ = 0;
  std::map<std::uint32_t, std::unique_ptr<GaloisField>> fields_;
};

}  // namespace tjm
