#pragma once

// GL_2 over the top field of a tower: matrices, Bruhat cells relative to the
// upper Borel, entrywise Frobenius and the coset space B\G.

#include "tjm/finite_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tjm {

/// [[a, b], [c, e]]
struct Mat2 {
  FqElem a, b, c, e;

  static Mat2 identity(const FieldTower& tower);
  /// s = antidiag(1, 1)
  static Mat2 weyl(const FieldTower& tower);
  /// n_x = [[1, x], [0, 1]]
  static Mat2 unipotent(const FqElem& x);
  static Mat2 diag(const FqElem& x, const FqElem& y);
  /// [[1, 0], [c, 1]]
  static Mat2 lower(const FqElem& c);

  FqElem det() const { return a * e - b * c; }
  bool is_upper() const { return c.is_zero(); }
  Mat2 inv() const;
  Mat2 operator*(const Mat2& h) const;
  friend bool operator==(const Mat2& g, const Mat2& h) { return g.a == h.a && g.b == h.b && g.c == h.c && g.e == h.e; }
  friend bool operator!=(const Mat2& g, const Mat2& h) { return !(g == h); }

  std::string to_string() const;
};

/// Entrywise x -> x^{q^i}.
Mat2 frobenius_conj(const Mat2& g, std::int64_t i);

struct BruhatForm {
  enum class Cell { kBorel, kBig };
  Cell cell;
  Mat2 b;    // upper triangular
  FqElem x;  // defined for the big cell: g = b s n_x
};

BruhatForm bruhat_decompose(const Mat2& g);
Mat2 recompose(const BruhatForm& form);

/// All n_u, u in F_Q, ordered gamma^0, ..., gamma^{Q-2}, 0.
std::vector<Mat2> enumerate_unipotent(const FieldTower& tower);

/// Right cosets B\G with representatives 1 (index 0) and s n_x
/// (index 1 + idx(x), idx the canonical enumeration index of x).
class CosetSpace {
 public:
  explicit CosetSpace(const FieldTower& tower);

  const FieldTower& tower() const { return *tower_; }
  std::uint32_t size() const { return size_; }
  const Mat2& rep(std::uint32_t k) const { return reps_[k]; }
  std::uint32_t index_of_x(const FqElem& x) const;
  /// The element x of the representative s n_x (k >= 1).
  FqElem x_of(std::uint32_t k) const;

  struct Located {
    std::uint32_t coset;
    Mat2 b;  // g = b * rep(coset)
  };
  Located locate(const Mat2& g) const;

 private:
  const FieldTower* tower_;
  std::uint32_t size_;
  std::vector<Mat2> reps_;
};

}  // namespace tjm
