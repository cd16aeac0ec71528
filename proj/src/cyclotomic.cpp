#include "tjm/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tjm {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: int64 overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: int64 overflow");
  return r;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_L = prod_{e | L} (x^e - 1)^{mu(L/e)}; multiply the numerator factors
// first, then divide out the denominator ones exactly.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order) {
  std::vector<std::uint32_t> up, down;
  for (std::uint32_t e = 1; e <= order; ++e) {
    if (order % e != 0) continue;
    const int mu = moebius(order / e);
    if (mu == 1) up.push_back(e);
    if (mu == -1) down.push_back(e);
  }
  std::vector<std::int64_t> poly{1};
  for (std::uint32_t e : up) {
    std::vector<std::int64_t> next(poly.size() + e, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + e] = checked_add(next[i + e], poly[i]);
      next[i] = checked_add(next[i], -poly[i]);
    }
    poly = std::move(next);
  }
  for (std::uint32_t e : down) {
    // divide by x^e - 1: q_i = p_{i+e} + q_{i+e}, read from the top
    const std::size_t deg = poly.size() - 1;
    std::vector<std::int64_t> quot(deg - e + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      std::int64_t v = poly[i + e];
      if (i + e < quot.size()) v = checked_add(v, quot[i + e]);
      quot[i] = v;
    }
    poly = std::move(quot);
  }
  return poly;
}

std::unique_ptr<CyclotomicTables> build_tables(std::uint32_t order) {
  auto t = std::make_unique<CyclotomicTables>();
  t->order = order;
  t->polynomial = cyclotomic_polynomial(order);
  t->degree = static_cast<std::uint32_t>(t->polynomial.size() - 1);
  const std::uint32_t phi = t->degree;
  t->powers.resize(order);
  std::vector<std::int64_t> cur(phi, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    auto& row = t->powers[k];
    for (std::uint32_t i = 0; i < phi; ++i)
      if (cur[i] != 0) row.emplace_back(i, cur[i]);
    const std::int64_t top = cur[phi - 1];
    for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::uint32_t i = 0; i < phi; ++i)
        cur[i] = checked_add(cur[i], -checked_mul(top, t->polynomial[i]));
  }
  return t;
}

const CyclotomicTables& tables_for(std::uint32_t order) {
  thread_local std::uint32_t last_order = 0;
  thread_local const CyclotomicTables* last = nullptr;
  if (order != last_order) {
    last = &cyclotomic_tables(order);
    last_order = order;
  }
  return *last;
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) {
  if (a == b) return a;
  const std::uint64_t l = lcm_u64(a, b);
  if (l > 1'000'000) throw std::overflow_error("cyclotomic: common order too large");
  return static_cast<std::uint32_t>(l);
}

// Dense Rational accumulator over the power basis.
std::vector<CycNum::Term> sparse_from_dense(std::vector<Rational>& dense) {
  std::vector<CycNum::Term> out;
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(i, std::move(dense[i]));
  return out;
}

void accumulate_row(std::vector<Rational>& dense, const CyclotomicTables::SparseRow& row,
                    const Rational& c) {
  for (const auto& [idx, v] : row) {
    if (v == 1)
      dense[idx] += c;
    else if (v == -1)
      dense[idx] -= c;
    else
      dense[idx] += c * Rational(v);
  }
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

const CyclotomicTables& cyclotomic_tables(std::uint32_t order) {
  if (order == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  if (order > 100'000) throw std::invalid_argument("cyclotomic: order too large for table build");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicTables>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(order);
  if (it == registry.end()) it = registry.emplace(order, build_tables(order)).first;
  return *it->second;
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(long value) {
  if (value != 0) terms_.emplace_back(0, Rational(value));
}

CycNum::CycNum(const Rational& value) {
  if (value != 0) terms_.emplace_back(0, value);
}

CycNum CycNum::root_of_unity(std::uint32_t order, std::int64_t k) {
  const auto& t = tables_for(order);
  std::vector<Term> terms;
  for (const auto& [idx, v] : t.powers[mod_floor(k, order)]) terms.emplace_back(idx, Rational(v));
  return CycNum(order, std::move(terms));
}

CycNum CycNum::from_coefficients(std::uint32_t order, std::span<const Rational> coeffs) {
  const auto& t = tables_for(order);
  if (coeffs.size() != t.degree)
    throw std::invalid_argument("CycNum: coefficient count must equal phi(order)");
  std::vector<Term> terms;
  for (std::uint32_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.emplace_back(i, coeffs[i]);
  return CycNum(order, std::move(terms));
}

std::uint32_t CycNum::degree() const { return tables_for(order_).degree; }

std::vector<Rational> CycNum::coefficients() const {
  std::vector<Rational> dense(degree());
  for (const auto& [idx, c] : terms_) dense[idx] = c;
  return dense;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycNum: value is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

CycNum CycNum::embed(std::uint32_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::invalid_argument("CycNum::embed: order must divide target");
  if (is_rational()) return CycNum(new_order, terms_);
  const auto& t = tables_for(new_order);
  const std::uint32_t stride = new_order / order_;
  std::vector<Rational> dense(t.degree);
  for (const auto& [idx, c] : terms_) accumulate_row(dense, t.powers[idx * stride], c);
  return CycNum(new_order, sparse_from_dense(dense));
}

CycNum CycNum::galois(std::int64_t a) const {
  if (is_rational()) return *this;
  if (gcd_u64(static_cast<std::uint64_t>(mod_floor(a, order_)), order_) != 1)
    throw std::invalid_argument("CycNum::galois: exponent must be a unit");
  const auto& t = tables_for(order_);
  std::vector<Rational> dense(t.degree);
  for (const auto& [idx, c] : terms_) accumulate_row(dense, t.powers[mod_floor(a * idx, order_)], c);
  return CycNum(order_, sparse_from_dense(dense));
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("CycNum::inv: division by zero");
  if (is_rational()) return CycNum(order_, {{0, 1 / terms_[0].second}});
  if (terms_.size() == 1) {
    CycNum r = root_of_unity(order_, -static_cast<std::int64_t>(terms_[0].first));
    for (auto& [idx, c] : r.terms_) c /= terms_[0].second;
    return r;
  }
  // a * conj(a) rational covers every rational multiple of a root of unity
  CycNum c = conj();
  CycNum norm = *this * c;
  if (norm.is_rational()) {
    const Rational n = norm.rational_value();
    for (auto& [idx, v] : c.terms_) v /= n;
    return c;
  }
  // General case: solve (multiplication-by-a) v = e_0 over Q.
  const auto& t = tables_for(order_);
  const std::uint32_t phi = t.degree;
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  CycNum col = *this;
  const CycNum x = root_of_unity(order_, 1);
  for (std::uint32_t j = 0; j < phi; ++j) {
    for (const auto& [idx, v] : col.terms_) m[idx][j] = v;
    col = col * x;
  }
  m[0][phi] = 1;
  for (std::uint32_t c0 = 0; c0 < phi; ++c0) {
    std::uint32_t piv = c0;
    while (piv < phi && m[piv][c0] == 0) ++piv;
    if (piv == phi) throw std::logic_error("CycNum::inv: singular multiplication matrix");
    std::swap(m[piv], m[c0]);
    const Rational p = m[c0][c0];
    for (std::uint32_t j = c0; j <= phi; ++j) m[c0][j] /= p;
    for (std::uint32_t r = 0; r < phi; ++r) {
      if (r == c0 || m[r][c0] == 0) continue;
      const Rational f = m[r][c0];
      for (std::uint32_t j = c0; j <= phi; ++j)
        if (m[c0][j] != 0) m[r][j] -= f * m[c0][j];
    }
  }
  std::vector<Term> terms;
  for (std::uint32_t i = 0; i < phi; ++i)
    if (m[i][phi] != 0) terms.emplace_back(i, m[i][phi]);
  return CycNum(order_, std::move(terms));
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& [idx, c] : r.terms_) c = -c;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
  const std::uint32_t order = common_order(order_, rhs.order_);
  const CycNum a = embed(order);
  const CycNum b = rhs.embed(order);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  order_ = order;
  terms_ = std::move(out);
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) { return *this += -rhs; }

CycNum& CycNum::operator*=(const CycNum& rhs) { return *this = *this * rhs; }

CycNum operator*(const CycNum& lhs, const CycNum& rhs) {
  const std::uint32_t order = common_order(lhs.order_, rhs.order_);
  if (lhs.is_zero() || rhs.is_zero()) return CycNum(order, {});
  if (lhs.is_rational() || rhs.is_rational()) {
    const bool left_rational = lhs.is_rational();
    const Rational s = left_rational ? lhs.terms_[0].second : rhs.terms_[0].second;
    CycNum r = (left_rational ? rhs : lhs).embed(order);
    for (auto& [idx, c] : r.terms_) c *= s;
    return r;
  }
  const CycNum a = lhs.embed(order);
  const CycNum b = rhs.embed(order);
  const auto& t = tables_for(order);
  const std::uint32_t phi = t.degree;
  std::vector<Rational> prod(2 * phi - 1);
  for (const auto& [i, ci] : a.terms_)
    for (const auto& [j, cj] : b.terms_) prod[i + j] += ci * cj;
  std::vector<Rational> dense(phi);
  for (std::uint32_t k = 0; k < phi; ++k) dense[k] = std::move(prod[k]);
  for (std::uint32_t k = phi; k < prod.size(); ++k)
    if (prod[k] != 0) accumulate_row(dense, t.powers[k % order], prod[k]);
  return CycNum(order, sparse_from_dense(dense));
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  const std::uint32_t order = common_order(a.order_, b.order_);
  return a.embed(order).terms_ == b.embed(order).terms_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  os << '[' << order_ << "] ";
  if (terms_.empty()) {
    os << '0';
    return os.str();
  }
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    Rational mag = c;
    if (!first) os << (c < 0 ? " - " : " + ");
    if (!first && c < 0) mag = -c;
    if (idx == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'z';
      if (idx != 1) os << '^' << idx;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& value) { return os << value.to_string(); }

CycNum pow(const CycNum& base, std::int64_t exponent) {
  if (exponent < 0) return pow(base.inv(), -exponent);
  CycNum result(1L);
  CycNum b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result.embed(static_cast<std::uint32_t>(lcm_u64(result.order(), base.order())));
}

// ---------------------------------------------------------------------------
// RootSum

RootSum::RootSum(long value) {
  if (value != 0) terms_.emplace_back(0, Rational(value));
}

RootSum::RootSum(const Rational& value) {
  if (value != 0) terms_.emplace_back(0, value);
}

std::vector<RootSum::Term> RootSum::normalize(std::uint32_t order, std::vector<Term> raw) {
  const bool fold = order % 2 == 0;
  const std::uint32_t half = order / 2;
  for (auto& [k, c] : raw) {
    k %= order;
    if (fold && k >= half) {
      k -= half;
      c = -c;
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& term : raw) {
    if (!out.empty() && out.back().first == term.first)
      out.back().second += term.second;
    else
      out.push_back(std::move(term));
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  return out;
}

RootSum RootSum::root(std::uint32_t order, std::int64_t k) { return monomial(order, k, Rational(1)); }

RootSum RootSum::monomial(std::uint32_t order, std::int64_t k, const Rational& coeff) {
  if (order == 0) throw std::invalid_argument("RootSum: order must be positive");
  if (coeff == 0) return RootSum(order, {});
  std::vector<Term> t;
  t.emplace_back(static_cast<std::uint32_t>(mod_floor(k, order)), coeff);
  return RootSum(order, normalize(order, std::move(t)));
}

RootSum RootSum::from_cycnum(const CycNum& value) {
  return RootSum(value.order(), normalize(value.order(), value.terms()));
}

RootSum RootSum::embed(std::uint32_t new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::invalid_argument("RootSum::embed: order must divide target");
  const std::uint32_t stride = new_order / order_;
  std::vector<Term> t = terms_;
  for (auto& [k, c] : t) k *= stride;
  return RootSum(new_order, normalize(new_order, std::move(t)));
}

RootSum RootSum::times_root(std::int64_t k) const {
  std::vector<Term> t = terms_;
  const std::int64_t shift = mod_floor(k, order_);
  for (auto& [e, c] : t) e = static_cast<std::uint32_t>((e + shift) % order_);
  return RootSum(order_, normalize(order_, std::move(t)));
}

RootSum RootSum::conj() const {
  std::vector<Term> t = terms_;
  for (auto& [e, c] : t) e = static_cast<std::uint32_t>((order_ - e) % order_);
  return RootSum(order_, normalize(order_, std::move(t)));
}

CycNum RootSum::reduce() const {
  if (terms_.empty()) return CycNum(order_, {});
  const auto& t = tables_for(order_);
  // Integer fast path: common denominator, int64 accumulation.
  bool integral = true;
  Integer den = 1;
  for (const auto& [k, c] : terms_) den = boost::multiprecision::lcm(den, denominator(c));
  std::vector<std::int64_t> acc(t.degree, 0);
  try {
    if (den > Integer(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("den");
    for (const auto& [k, c] : terms_) {
      const Integer scaled = numerator(c) * (den / denominator(c));
      if (abs(scaled) > Integer(std::numeric_limits<std::int64_t>::max())) throw std::overflow_error("num");
      const std::int64_t s = scaled.convert_to<std::int64_t>();
      for (const auto& [idx, v] : t.powers[k]) acc[idx] = checked_add(acc[idx], checked_mul(s, v));
    }
  } catch (const std::overflow_error&) {
    integral = false;
  }
  if (integral) {
    std::vector<CycNum::Term> out;
    for (std::uint32_t i = 0; i < t.degree; ++i)
      if (acc[i] != 0) out.emplace_back(i, Rational(Integer(acc[i]), den));
    return CycNum(order_, std::move(out));
  }
  std::vector<Rational> dense(t.degree);
  for (const auto& [k, c] : terms_) accumulate_row(dense, t.powers[k], c);
  return CycNum(order_, sparse_from_dense(dense));
}

RootSum RootSum::operator-() const {
  RootSum r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

RootSum& RootSum::operator+=(const RootSum& rhs) {
  if (rhs.terms_.empty() && order_ % rhs.order_ == 0) return *this;
  const std::uint32_t order = common_order(order_, rhs.order_);
  if (order != order_) *this = embed(order);
  const RootSum b = rhs.embed(order);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& rhs) { return *this += -rhs; }

RootSum& RootSum::operator/=(const Rational& rhs) {
  if (rhs == 0) throw DivisionByZero("RootSum: division by zero");
  for (auto& [k, c] : terms_) c /= rhs;
  return *this;
}

RootSum operator*(const RootSum& lhs, const RootSum& rhs) {
  const std::uint32_t order = common_order(lhs.order_, rhs.order_);
  if (lhs.terms_.empty() || rhs.terms_.empty()) return RootSum(order, {});
  const RootSum a = lhs.embed(order);
  const RootSum b = rhs.embed(order);
  std::vector<RootSum::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [i, ci] : a.terms_)
    for (const auto& [j, cj] : b.terms_) raw.emplace_back((i + j) % order, ci * cj);
  return RootSum(order, RootSum::normalize(order, std::move(raw)));
}

bool operator==(const RootSum& a, const RootSum& b) {
  if (a.order_ == b.order_ && a.terms_ == b.terms_) return true;
  return a.reduce() == b.reduce();
}

// ---------------------------------------------------------------------------
// RootCounts

void RootCounts::add(std::int64_t k, std::int64_t count) {
  auto& slot = counts_[mod_floor(k, order_)];
  slot = checked_add(slot, count);
}

void RootCounts::add_rotated(const RootCounts& other, std::int64_t k) {
  if (other.order_ != order_) throw std::invalid_argument("RootCounts: order mismatch");
  const std::uint32_t shift = static_cast<std::uint32_t>(mod_floor(k, order_));
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (other.counts_[i] == 0) continue;
    std::uint32_t j = i + shift;
    if (j >= order_) j -= order_;
    counts_[j] = checked_add(counts_[j], other.counts_[i]);
  }
}

bool RootCounts::structurally_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<std::uint32_t> RootCounts::single_exponent() const {
  std::optional<std::uint32_t> found;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (counts_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

RootCounts operator*(const RootCounts& a, const RootCounts& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("RootCounts: order mismatch");
  RootCounts out(a.order_);
  for (std::uint32_t i = 0; i < a.order_; ++i) {
    if (a.counts_[i] == 0) continue;
    for (std::uint32_t j = 0; j < b.order_; ++j) {
      if (b.counts_[j] == 0) continue;
      std::uint32_t k = i + j;
      if (k >= a.order_) k -= a.order_;
      out.counts_[k] = checked_add(out.counts_[k], checked_mul(a.counts_[i], b.counts_[j]));
    }
  }
  return out;
}

RootCounts RootCounts::conj() const {
  RootCounts out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out.counts_[(order_ - i) % order_] = counts_[i];
  return out;
}

CycNum RootCounts::reduce() const {
  const auto& t = tables_for(order_);
  std::vector<std::int64_t> acc(t.degree, 0);
  for (std::uint32_t k = 0; k < order_; ++k) {
    if (counts_[k] == 0) continue;
    for (const auto& [idx, v] : t.powers[k]) acc[idx] = checked_add(acc[idx], checked_mul(counts_[k], v));
  }
  std::vector<CycNum::Term> out;
  for (std::uint32_t i = 0; i < t.degree; ++i)
    if (acc[i] != 0) out.emplace_back(i, Rational(acc[i]));
  return CycNum(order_, std::move(out));
}

std::optional<std::uint32_t> root_exponent(const RootSum& v) {
  if (v.terms().size() != 1) return std::nullopt;
  const auto& [k, c] = v.terms().front();
  if (c == 1) return k;
  if (c == -1 && v.order() % 2 == 0) return k + v.order() / 2;
  return std::nullopt;
}

Matrix<CycNum> reduce(const Matrix<RootSum>& m) {
  Matrix<CycNum> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).reduce();
  return out;
}

}  // namespace tjm
