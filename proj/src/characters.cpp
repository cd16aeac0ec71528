#include "tjm/characters.hpp"

namespace tjm {

namespace {

std::uint64_t mod_u(std::int64_t e, std::uint64_t m) {
  const std::int64_t r = e % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

void require_level(const FqElem& x, const FieldTower& tower, std::uint32_t level) {
  if (&x.tower() != &tower || x.level() != level)
    throw FieldError("character evaluated outside its field");
}

}  // namespace

// ---------------------------------------------------------------------------
// MultChar

MultChar::MultChar(const FieldTower& tower, std::uint32_t level, std::int64_t exponent)
    : tower_(&tower), level_(level), modulus_(tower.field(level).units()), exponent_(mod_u(exponent, modulus_)) {}

std::uint64_t MultChar::order() const { return modulus_ / gcd_u64(exponent_, modulus_); }

std::uint32_t MultChar::value_exponent(const FqElem& x, std::uint32_t L) const {
  require_level(x, *tower_, level_);
  if (x.is_zero()) throw std::domain_error("multiplicative character evaluated at 0");
  const std::uint64_t ord = order();
  if (L % ord != 0) throw std::invalid_argument("character values do not lie in the requested cyclotomic field");
  const std::uint64_t g = modulus_ / ord;
  const std::uint64_t k = static_cast<std::uint64_t>(static_cast<unsigned __int128>(exponent_) * x.rep() % modulus_);
  return static_cast<std::uint32_t>((k / g) * (L / ord) % L);
}

CycNum MultChar::operator()(const FqElem& x, std::uint32_t L) const {
  return CycNum::root_of_unity(L, value_exponent(x, L));
}

MultChar MultChar::frobenius(std::int64_t i) const {
  const std::uint64_t q = tower_->q();
  const std::int64_t k = ((i % level_) + level_) % level_;
  std::uint64_t e = exponent_;
  for (std::int64_t j = 0; j < k; ++j) e = e * q % modulus_;
  return MultChar(*tower_, level_, static_cast<std::int64_t>(e));
}

MultChar MultChar::operator*(const MultChar& other) const {
  if (other.tower_ != tower_ || other.level_ != level_) throw FieldError("character product across levels");
  return MultChar(*tower_, level_, static_cast<std::int64_t>((exponent_ + other.exponent_) % modulus_));
}

// ---------------------------------------------------------------------------
// AddChar

AddChar::AddChar(const FieldTower& tower, std::uint32_t level) : tower_(&tower), level_(level) { tower.field(level); }

std::uint32_t AddChar::value_exponent(const FqElem& x, std::uint32_t L) const {
  require_level(x, *tower_, level_);
  const std::uint32_t p = tower_->p();
  if (L % p != 0) throw std::invalid_argument("additive character values need p | L");
  return x.field().absolute_trace(x.rep()) * (L / p);
}

CycNum AddChar::operator()(const FqElem& x, std::uint32_t L) const {
  return CycNum::root_of_unity(L, value_exponent(x, L));
}

// ---------------------------------------------------------------------------

bool is_regular_exponent(std::uint64_t q, std::uint32_t d, std::int64_t e) {
  std::uint64_t qd = 1;
  for (std::uint32_t i = 0; i < d; ++i) qd *= q;
  const std::uint64_t m = qd - 1;
  if (m == 0) return true;
  const std::uint64_t base = mod_u(e, m);
  std::uint64_t cur = base;
  for (std::uint32_t i = 1; i < d; ++i) {
    cur = cur * q % m;
    if (cur == base) return false;
  }
  return true;
}

bool is_regular(const MultChar& theta, std::uint32_t d) {
  if (theta.level() != d) throw FieldError("regularity is tested on the level-d field");
  return is_regular_exponent(theta.tower().q(), d, static_cast<std::int64_t>(theta.exponent()));
}

MultChar norm_inflate(const MultChar& theta, std::uint32_t to_level) {
  if (to_level % theta.level() != 0) throw FieldError("norm inflation needs the source level to divide the target");
  const FieldTower& tower = theta.tower();
  const std::uint64_t factor = (std::uint64_t{tower.size(to_level)} - 1) / (tower.size(theta.level()) - 1);
  const std::uint64_t modulus = tower.field(to_level).units();
  const std::uint64_t e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(theta.exponent()) * factor % modulus);
  return MultChar(tower, to_level, static_cast<std::int64_t>(e));
}

std::uint32_t gauss_order(const MultChar& chi) {
  return static_cast<std::uint32_t>(lcm_u64(chi.tower().p(), chi.order()));
}

RootCounts gauss_sum_counts(const MultChar& chi, const AddChar& psi, std::uint32_t L) {
  if (chi.level() != psi.level() || &chi.tower() != &psi.tower()) throw FieldError("Gauss sum across levels");
  const FieldTower& tower = chi.tower();
  RootCounts counts(L);
  const std::uint32_t units = tower.field(chi.level()).units();
  for (std::uint32_t k = 0; k < units; ++k) {
    const FqElem x = tower.element(chi.level(), k);
    counts.add(std::int64_t{chi.value_exponent(x, L)} + psi.value_exponent(x, L));
  }
  return counts;
}

CycNum gauss_sum(const MultChar& chi, const AddChar& psi, std::uint32_t L) {
  if (L == 0) L = gauss_order(chi);
  return gauss_sum_counts(chi, psi, L).reduce();
}

CycNum character_sum(const MultChar& chi, std::uint32_t L) {
  if (L == 0) L = static_cast<std::uint32_t>(chi.order());
  RootCounts counts(L);
  const std::uint32_t units = chi.tower().field(chi.level()).units();
  for (std::uint32_t k = 0; k < units; ++k) counts.add(chi.value_exponent(chi.tower().element(chi.level(), k), L));
  return counts.reduce();
}

CycNum character_sum(const AddChar& psi) {
  const std::uint32_t p = psi.tower().p();
  RootCounts counts(p);
  const std::uint32_t size = psi.tower().field(psi.level()).size();
  for (std::uint32_t k = 0; k < size; ++k) counts.add(psi.value_exponent(psi.tower().element(psi.level(), k), p));
  return counts.reduce();
}

GaussLemmaResult verify_gauss_lemma(const MultChar& theta) {
  const FieldTower& tower = theta.tower();
  if (theta.level() != 2) throw PreconditionError("the Gauss-sum lemma needs theta on the quadratic extension");
  if (!is_regular(theta, 2)) throw PreconditionError("theta is not regular (theta = theta^q)");
  const std::uint64_t q = tower.q();
  const std::uint32_t L = static_cast<std::uint32_t>(lcm_u64(tower.p(), theta.modulus()));
  const AddChar psi(tower, 2);

  GaussLemmaResult r;
  r.gauss = gauss_sum(theta.pow(static_cast<std::int64_t>(q) - 1), psi, L);
  r.expected = CycNum(static_cast<long>(q)) * theta(tower.from_int(2, -1), L);

  const FqElem x0 = tower.generator(2).pow(static_cast<std::int64_t>((q + 1) / 2));
  r.x0_trace_zero = tower.trace_to(x0, 1).is_zero();
  std::uint64_t count = 0;
  bool in_coset = true;
  for (std::uint32_t k = 0; k < tower.field(2).units(); ++k) {
    const FqElem x = tower.element(2, k);
    if (!tower.trace_to(x, 1).is_zero()) continue;
    ++count;
    in_coset = in_coset && tower.in_subfield(x / x0, 1);
  }
  r.trace_zero_coset = in_coset && count == q - 1;
  return r;
}

HasseDavenportResult verify_hasse_davenport(const MultChar& theta) {
  const FieldTower& tower = theta.tower();
  if (tower.d() != 2 || theta.level() != 2) throw PreconditionError("Hasse-Davenport check needs d = 2 and theta on level 2");
  if (!is_regular(theta, 2)) throw PreconditionError("theta is not regular (theta = theta^q)");
  const std::int64_t m = tower.m();
  const std::int64_t q = tower.q();
  const std::uint32_t L = static_cast<std::uint32_t>(lcm_u64(tower.p(), theta.modulus()));
  const CycNum sign((m + 1) % 2 == 0 ? 1L : -1L);

  const MultChar lifted = norm_inflate(theta, tower.n());
  HasseDavenportResult r;
  r.lifted = gauss_sum(lifted.pow(q - 1), AddChar(tower, tower.n()), L);
  r.base_power = sign * pow(gauss_sum(theta.pow(q - 1), AddChar(tower, 2), L), m);
  r.closed_form = sign * pow(CycNum(static_cast<long>(q)), m) * pow(theta(tower.from_int(2, -1), L), m);
  return r;
}

}  // namespace tjm
