#pragma once

// Floating-point and brute-force oracles shared by the unit tests. They are
// deliberately independent of the exact engine.

#include "tjm/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline std::complex<double> zeta(std::uint32_t order, std::int64_t k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

/// Numerical value of an exact cyclotomic number from its power-basis coordinates.
inline std::complex<double> numeric(const tjm::CycNum& v) {
  std::complex<double> out = 0;
  const auto coeffs = v.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k].convert_to<double>() * zeta(v.order(), static_cast<std::int64_t>(k));
  return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// Naive arithmetic in F_p[x]/(P), coefficients low to high.
struct NaiveField {
  std::uint32_t p;
  std::vector<std::uint32_t> poly;  // monic

  std::size_t degree() const { return poly.size() - 1; }

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint64_t> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t k = prod.size(); k-- > degree();) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= degree(); ++i) prod[k - degree() + i] = (prod[k - degree() + i] + (p - c) * poly[i]) % p;
    }
    std::vector<std::uint32_t> out(degree(), 0);
    for (std::size_t i = 0; i < degree(); ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  }

  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> out(degree(), 0);
    for (std::size_t i = 0; i < degree(); ++i) out[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    return out;
  }

  std::vector<std::uint32_t> pow(std::vector<std::uint32_t> a, std::uint64_t e) const {
    std::vector<std::uint32_t> r(degree(), 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::vector<std::uint32_t> pad(std::vector<std::uint32_t> a) const {
    a.resize(degree(), 0);
    return a;
  }
};

}  // namespace oracle
