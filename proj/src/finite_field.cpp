#include "tjm/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace tjm {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 22;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_mod(FpPoly a, const FpPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = ipow(m.back(), p - 2) % p;
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    trim(a);
  }
  return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

FpPoly poly_powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
  FpPoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint32_t digits_to_index(const FpPoly& c, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

FpPoly index_to_digits(std::uint32_t idx, std::uint32_t p, std::uint32_t degree) {
  FpPoly c(degree, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

// Multiplies the coordinate vector c by x modulo the monic poly, in place.
void times_x(FpPoly& c, const FpPoly& poly, std::uint32_t p) {
  const std::size_t deg = c.size();
  const std::uint32_t top = c[deg - 1];
  for (std::size_t i = deg - 1; i > 0; --i) c[i] = c[i - 1];
  c[0] = 0;
  if (top != 0)
    for (std::size_t i = 0; i < deg; ++i)
      c[i] = static_cast<std::uint32_t>((c[i] + std::uint64_t{p - top} * poly[i]) % p);
}

std::uint64_t checked_size(std::uint32_t p, std::uint64_t degree) {
  std::uint64_t s = 1;
  for (std::uint64_t i = 0; i < degree; ++i) {
    s *= p;
    if (s > kMaxFieldSize) throw FieldError("field of size " + std::to_string(p) + "^" +
                                            std::to_string(degree) + " is too large");
  }
  return s;
}

bool x_is_primitive(const FpPoly& poly, std::uint32_t p) {
  const std::uint32_t degree = static_cast<std::uint32_t>(poly.size() - 1);
  if (poly[0] == 0) return false;
  const std::uint64_t units = checked_size(p, degree) - 1;
  FpPoly cur(degree, 0);
  cur[0] = 1;
  for (std::uint64_t k = 1; k <= units; ++k) {
    times_x(cur, poly, p);
    const bool is_one = cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](auto v) { return v == 0; });
    if (is_one) return k == units;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_irreducible(const FpPoly& poly, std::uint32_t p) {
  FpPoly P = poly;
  trim(P);
  if (P.size() < 2 || P.back() != 1) return false;
  const std::uint32_t degree = static_cast<std::uint32_t>(P.size() - 1);
  const FpPoly x{0, 1};
  // x^{p^k} mod P by repeated p-th powers
  auto frob = [&](std::uint32_t k) {
    FpPoly r = poly_mod(x, P, p);
    for (std::uint32_t i = 0; i < k; ++i) r = poly_powmod(r, p, P, p);
    return r;
  };
  auto minus_x = [&](FpPoly r) {
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] + p - 1) % p;
    return poly_mod(std::move(r), P, p);
  };
  if (!minus_x(frob(degree)).empty()) return false;
  for (std::uint32_t r = 2; r <= degree; ++r) {
    if (degree % r != 0 || !is_prime(r)) continue;
    const FpPoly g = poly_gcd(P, minus_x(frob(degree / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly smallest_primitive_polynomial(std::uint32_t p, std::uint32_t degree) {
  checked_size(p, degree);
  const std::int64_t h = (p - 1) / 2;
  // digit[i] is the balanced position of the coefficient of x^i
  std::vector<std::uint32_t> digit(degree, 0);
  while (true) {
    FpPoly poly(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i)
      poly[i] = static_cast<std::uint32_t>(((std::int64_t{digit[i]} - h) % p + p) % p);
    poly[degree] = 1;
    if (x_is_primitive(poly, p)) return poly;
    std::uint32_t i = 0;
    while (i < degree && ++digit[i] == p) digit[i++] = 0;
    if (i == degree) break;
  }
  throw FieldError("no primitive polynomial found");
}

std::string poly_to_string(const FpPoly& poly) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = poly.size(); i-- > 0;) {
    if (poly[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || poly[i] != 1) os << poly[i];
    if (i > 0) {
      if (poly[i] != 1) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// GaloisField

GaloisField::GaloisField(std::uint32_t p, FpPoly poly) : p_(p), poly_(std::move(poly)) {
  if (!is_prime(p)) throw FieldError("characteristic must be prime");
  trim(poly_);
  if (poly_.size() < 2 || poly_.back() != 1) throw FieldError("defining polynomial must be monic of degree >= 1");
  for (auto c : poly_)
    if (c >= p) throw FieldError("polynomial coefficients must lie in [0, p)");
  if (!is_irreducible(poly_, p)) throw FieldError("defining polynomial " + poly_to_string(poly_) + " is reducible");
  degree_ = static_cast<std::uint32_t>(poly_.size() - 1);
  size_ = static_cast<std::uint32_t>(checked_size(p, degree_));
  half_ = units() / 2;

  // generator: x mod P when primitive, else the smallest-index primitive element
  FpPoly gen(degree_, 0);
  if (degree_ == 1) {
    gen[0] = (p - poly_[0]) % p;
  } else {
    gen[1] = 1;
  }
  auto mul_coords = [&](const FpPoly& a, const FpPoly& b) {
    FpPoly r = poly_mulmod(a, b, poly_, p_);
    r.resize(degree_, 0);
    return r;
  };
  auto order_is_full = [&](const FpPoly& g) {
    FpPoly cur(degree_, 0);
    cur[0] = 1;
    for (std::uint32_t k = 1; k <= units(); ++k) {
      cur = mul_coords(cur, g);
      if (digits_to_index(cur, p_) == 1) return k == units();
    }
    return false;
  };
  if (!order_is_full(gen)) {
    bool found = false;
    for (std::uint32_t idx = 2; idx < size_ && !found; ++idx) {
      gen = index_to_digits(idx, p_, degree_);
      found = order_is_full(gen);
    }
    if (!found) throw FieldError("no primitive element");
  }

  exp_.resize(units());
  log_.assign(size_, kZero);
  FpPoly cur(degree_, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < units(); ++k) {
    const std::uint32_t idx = digits_to_index(cur, p_);
    exp_[k] = idx;
    log_[idx] = static_cast<Rep>(k);
    cur = mul_coords(cur, gen);
  }

  zech_.resize(units());
  for (std::uint32_t k = 0; k < units(); ++k) {
    const std::uint32_t idx = exp_[k];
    const std::uint32_t c0 = idx % p_;
    zech_[k] = log_[idx - c0 + (c0 + 1) % p_];
  }

  abs_trace_.resize(units());
  for (std::uint32_t k = 0; k < units(); ++k) {
    Rep t = kZero;
    for (std::uint32_t i = 0; i < degree_; ++i) t = add(t, frobenius_p(static_cast<Rep>(k), i));
    const std::uint32_t idx = index_of(t);
    if (idx >= p_) throw std::logic_error("absolute trace left the prime field");
    abs_trace_[k] = idx;
  }
}

GaloisField::Rep GaloisField::add(Rep a, Rep b) const {
  if (a == kZero) return b;
  if (b == kZero) return a;
  const Rep z = zech_[wrap(std::int64_t{b} - a)];
  return z == kZero ? kZero : wrap(std::int64_t{a} + z);
}

GaloisField::Rep GaloisField::inv(Rep a) const {
  if (a == kZero) throw std::domain_error("inverse of zero in a finite field");
  return wrap(-std::int64_t{a});
}

GaloisField::Rep GaloisField::pow(Rep a, std::int64_t e) const {
  if (a == kZero) {
    if (e < 0) throw std::domain_error("negative power of zero in a finite field");
    return e == 0 ? 0 : kZero;
  }
  const std::int64_t u = units();
  return wrap(static_cast<std::int64_t>((static_cast<__int128>(a) * (e % u)) % u));
}

GaloisField::Rep GaloisField::frobenius_p(Rep a, std::int64_t i) const {
  if (a == kZero) return a;
  const std::int64_t k = ((i % degree_) + degree_) % degree_;
  std::int64_t e = a;
  for (std::int64_t j = 0; j < k; ++j) e = e * p_ % units();
  return static_cast<Rep>(e);
}

FpPoly GaloisField::coords(Rep a) const { return index_to_digits(index_of(a), p_, degree_); }

GaloisField::Rep GaloisField::from_coords(const FpPoly& c) const {
  if (c.size() > degree_) throw FieldError("coordinate vector too long");
  FpPoly r = c;
  for (auto& v : r) v %= p_;
  return log_[digits_to_index(r, p_)];
}

GaloisField::Rep GaloisField::from_int(std::int64_t v) const {
  const std::int64_t r = ((v % p_) + p_) % p_;
  return log_[static_cast<std::uint32_t>(r)];
}

// ---------------------------------------------------------------------------
// FqElem

const GaloisField& FqElem::field() const { return tower_->field(level_); }

namespace {
void same_field(const FqElem& a, const FqElem& b) {
  if (&a.tower() != &b.tower() || a.level() != b.level())
    throw FieldError("finite field operands live in different fields");
}
}  // namespace

FqElem FqElem::operator+(const FqElem& b) const {
  same_field(*this, b);
  return FqElem(tower_, level_, field().add(rep_, b.rep_));
}

FqElem FqElem::operator-(const FqElem& b) const {
  same_field(*this, b);
  return FqElem(tower_, level_, field().sub(rep_, b.rep_));
}

FqElem FqElem::operator-() const { return FqElem(tower_, level_, field().neg(rep_)); }

FqElem FqElem::operator*(const FqElem& b) const {
  same_field(*this, b);
  return FqElem(tower_, level_, field().mul(rep_, b.rep_));
}

FqElem FqElem::operator/(const FqElem& b) const { return *this * b.inv(); }

FqElem FqElem::inv() const { return FqElem(tower_, level_, field().inv(rep_)); }

FqElem FqElem::pow(std::int64_t e) const { return FqElem(tower_, level_, field().pow(rep_, e)); }

std::string FqElem::to_string() const { return poly_to_string(field().coords(rep_)); }

// ---------------------------------------------------------------------------
// FieldTower

std::shared_ptr<const FieldTower> FieldTower::build(const Params& params) {
  if (!is_prime(params.p) || params.p == 2) throw FieldError("p must be an odd prime");
  if (params.f == 0 || params.n == 0 || params.d == 0) throw FieldError("f, n and d must be positive");
  if (params.n % params.d != 0) throw FieldError("d must divide n");
  const std::uint64_t top_degree = std::uint64_t{params.f} * params.n;
  checked_size(params.p, top_degree);

  std::shared_ptr<FieldTower> tower(new FieldTower());
  tower->p_ = params.p;
  tower->f_ = params.f;
  tower->q_ = static_cast<std::uint32_t>(ipow(params.p, params.f));
  tower->n_ = params.n;
  tower->d_ = params.d;

  FpPoly top_poly;
  if (params.poly_n) {
    top_poly = *params.poly_n;
    trim(top_poly);
    if (top_poly.size() != top_degree + 1)
      throw FieldError("poly_n must have degree f*n = " + std::to_string(top_degree));
  } else {
    top_poly = smallest_primitive_polynomial(params.p, static_cast<std::uint32_t>(top_degree));
  }
  auto top = std::make_unique<GaloisField>(params.p, top_poly);
  const std::uint64_t Q1 = top->units();

  for (std::uint32_t k : {std::uint32_t{1}, params.d}) {
    if (k == params.n || tower->fields_.count(k)) continue;
    const std::uint64_t t = Q1 / (ipow(tower->q_, k) - 1);
    const std::uint32_t deg = params.f * k;
    // minimal polynomial of gamma_n^t over F_p: product over its p-power conjugates
    std::vector<GaloisField::Rep> coeffs{0};
    for (std::uint32_t i = 0; i < deg; ++i) {
      const GaloisField::Rep root = top->frobenius_p(static_cast<GaloisField::Rep>(t), i);
      std::vector<GaloisField::Rep> next(coeffs.size() + 1, GaloisField::kZero);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        next[j + 1] = top->add(next[j + 1], coeffs[j]);
        next[j] = top->sub(next[j], top->mul(root, coeffs[j]));
      }
      coeffs = std::move(next);
    }
    FpPoly poly(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const std::uint32_t idx = top->index_of(coeffs[j]);
      if (idx >= params.p) throw std::logic_error("minimal polynomial has coefficients outside F_p");
      poly[j] = idx;
    }
    auto field = std::make_unique<GaloisField>(params.p, poly);
    const FpPoly x_coords = [&] {
      FpPoly c(deg, 0);
      if (deg == 1)
        c[0] = (params.p - poly[0]) % params.p;
      else
        c[1] = 1;
      return c;
    }();
    if (field->generator_coords() != x_coords) throw std::logic_error("subfield generator is not x");
    tower->fields_.emplace(k, std::move(field));
  }
  tower->fields_.emplace(params.n, std::move(top));
  return tower;
}

std::uint32_t FieldTower::size(std::uint32_t level) const { return static_cast<std::uint32_t>(ipow(q_, level)); }

std::vector<std::uint32_t> FieldTower::levels() const {
  std::vector<std::uint32_t> out;
  for (const auto& [k, f] : fields_) out.push_back(k);
  return out;
}

const GaloisField& FieldTower::field(std::uint32_t level) const {
  auto it = fields_.find(level);
  if (it == fields_.end()) throw FieldError("no tower level " + std::to_string(level));
  return *it->second;
}

FqElem FieldTower::from_int(std::uint32_t level, std::int64_t v) const {
  return FqElem(this, level, field(level).from_int(v));
}

FqElem FieldTower::element(std::uint32_t level, std::uint32_t idx) const {
  const std::uint32_t units = field(level).units();
  if (idx > units) throw FieldError("element index out of range");
  return FqElem(this, level, idx == units ? GaloisField::kZero : static_cast<GaloisField::Rep>(idx));
}

FqElem FieldTower::frobenius(const FqElem& x, std::int64_t i) const {
  return FqElem(this, x.level(), field(x.level()).frobenius_p(x.rep(), std::int64_t{f_} * i));
}

void FieldTower::check_pair(std::uint32_t from, std::uint32_t to) const {
  field(from);
  field(to);
  if (from % to != 0 && to % from != 0) throw FieldError("levels are not nested");
}

FqElem FieldTower::embed(const FqElem& x, std::uint32_t target) const {
  check_pair(x.level(), target);
  if (target % x.level() != 0) throw FieldError("embedding must go to a larger level");
  if (x.is_zero()) return zero(target);
  const std::int64_t t = (size(target) - 1) / (size(x.level()) - 1);
  return FqElem(this, target, static_cast<GaloisField::Rep>(x.rep() * t));
}

bool FieldTower::in_subfield(const FqElem& x, std::uint32_t target) const {
  check_pair(x.level(), target);
  if (x.level() % target != 0) throw FieldError("subfield level must divide the element level");
  if (x.is_zero()) return true;
  const std::int64_t t = (size(x.level()) - 1) / (size(target) - 1);
  return x.rep() % t == 0;
}

FqElem FieldTower::restrict(const FqElem& x, std::uint32_t target) const {
  if (!in_subfield(x, target)) throw FieldError("element does not lie in the requested subfield");
  if (x.is_zero()) return zero(target);
  const std::int64_t t = (size(x.level()) - 1) / (size(target) - 1);
  return FqElem(this, target, static_cast<GaloisField::Rep>(x.rep() / t));
}

FqElem FieldTower::trace_to(const FqElem& x, std::uint32_t target) const {
  check_pair(x.level(), target);
  if (x.level() % target != 0) throw FieldError("trace target must divide the element level");
  FqElem s = zero(x.level());
  for (std::uint32_t i = 0; i < x.level() / target; ++i) s += frobenius(x, std::int64_t{target} * i);
  return restrict(s, target);
}

FqElem FieldTower::norm_to(const FqElem& x, std::uint32_t target) const {
  check_pair(x.level(), target);
  if (x.level() % target != 0) throw FieldError("norm target must divide the element level");
  FqElem s = one(x.level());
  for (std::uint32_t i = 0; i < x.level() / target; ++i) s *= frobenius(x, std::int64_t{target} * i);
  return restrict(s, target);
}

}  // namespace tjm
