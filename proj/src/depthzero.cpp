#include "tjm/depthzero.hpp"

#include "tjm/exact_linalg.hpp"

namespace tjm {

namespace {

std::uint32_t mod_u32(std::int64_t k, std::uint32_t L) { return static_cast<std::uint32_t>(mod_floor(k, L)); }

bool equal_matrices(const Matrix<RootSum>& a, const Matrix<RootSum>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::uint32_t scalar_exponent(const Matrix<RootSum>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if ((i == j && m(i, j) != m(0, 0)) || (i != j && !m(i, j).reduce().is_zero()))
        throw std::logic_error("central element does not act by a scalar");
  const auto k = root_exponent(m(0, 0));
  if (!k) throw std::logic_error("central character value is not a root of unity");
  return *k;
}

}  // namespace

std::uint32_t global_order(const FieldTower& tower, const RootOfUnity& theta_pi) {
  if (theta_pi.order == 0) throw PreconditionError("theta_pi order must be positive");
  const std::uint64_t pi_order = theta_pi.order / gcd_u64(static_cast<std::uint64_t>(mod_floor(theta_pi.exponent, theta_pi.order)), theta_pi.order);
  const std::uint64_t L = lcm_u64(lcm_u64(tower.p(), tower.size(tower.d()) - 1), pi_order);
  if (L > 100'000) throw PreconditionError("cyclotomic order " + std::to_string(L) + " is too large");
  return static_cast<std::uint32_t>(L);
}

// ---------------------------------------------------------------------------
// DivisionParams

DivisionParams::DivisionParams(std::shared_ptr<const FieldTower> tower, std::int64_t theta_exponent, RootOfUnity theta_pi)
    : tower_(std::move(tower)),
      theta_(*tower_, tower_->d(), theta_exponent),
      theta_tilde_(norm_inflate(theta_, tower_->n())),
      theta_pi_(theta_pi),
      L_(global_order(*tower_, theta_pi)) {
  if (!is_regular(theta_, tower_->d()))
    throw PreconditionError("theta exponent " + std::to_string(theta_exponent) + " is not regular for q = " +
                            std::to_string(tower_->q()) + ", d = " + std::to_string(tower_->d()));
  lambda_ = mod_u32(std::int64_t{tower_->m() + 1} * theta_minus_one() + theta_pi_exponent(), L_);
}

std::uint32_t DivisionParams::root(std::uint32_t order, std::int64_t k) const {
  const std::uint64_t reduced = order / gcd_u64(static_cast<std::uint64_t>(mod_floor(k, order)), order);
  if (L_ % reduced != 0) throw std::invalid_argument("root of unity outside the global cyclotomic field");
  const std::uint64_t g = order / reduced;
  return mod_u32(mod_floor(k, order) / static_cast<std::int64_t>(g) * static_cast<std::int64_t>(L_ / reduced), L_);
}

std::uint32_t DivisionParams::theta_minus_one() const {
  return theta_.value_exponent(tower_->from_int(tower_->d(), -1), L_);
}

std::uint32_t DivisionParams::theta_tilde_exponent(const FqElem& x, std::int64_t i) const {
  return theta_tilde_.frobenius(i).value_exponent(x, L_);
}

// ---------------------------------------------------------------------------
// DxElement

DxElement DxElement::operator*(const DxElement& h) const {
  return {x * x.tower().frobenius(h.x, j), j + h.j};
}

DxElement DxElement::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative power in the division-algebra model");
  DxElement r{x.tower().one(x.level()), 0};
  for (std::int64_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::vector<DxElement> enumerate_dx(const FieldTower& tower) {
  std::vector<DxElement> out;
  const std::uint32_t units = tower.Q() - 1;
  out.reserve(static_cast<std::size_t>(units) * tower.n());
  for (std::uint32_t j = 0; j < tower.n(); ++j)
    for (std::uint32_t k = 0; k < units; ++k) out.push_back({tower.element(tower.n(), k), j});
  return out;
}

// ---------------------------------------------------------------------------
// TameRep

TameRep::TameRep(DivisionParams params) : params_(std::move(params)), d_(params_.tower().d()) {
  const std::uint32_t L = params_.L();
  Matrix<RootSum> pi = Matrix<RootSum>::Zero(d_, d_);
  for (std::uint32_t i = 1; i < d_; ++i) pi(i - 1, i) = RootSum::root(L, 0);
  pi(d_ - 1, 0) = RootSum::root(L, params_.lambda_exponent());
  pi_powers_.push_back(Matrix<RootSum>::Identity(d_, d_));
  for (std::uint32_t j = 1; j <= 2 * params_.tower().n(); ++j) pi_powers_.push_back(pi_powers_.back() * pi);
}

Matrix<RootSum> TameRep::unit_action(const FqElem& x) const {
  Matrix<RootSum> u = Matrix<RootSum>::Zero(d_, d_);
  for (std::uint32_t i = 0; i < d_; ++i) u(i, i) = RootSum::root(L(), unit_exponent(x, i));
  return u;
}

const Matrix<RootSum>& TameRep::pi_power(std::int64_t j) const {
  if (j < 0 || j >= static_cast<std::int64_t>(pi_powers_.size())) throw std::out_of_range("pi power out of range");
  return pi_powers_[static_cast<std::size_t>(j)];
}

Matrix<RootSum> TameRep::action(const DxElement& g) const { return unit_action(g.x) * pi_power(g.j); }

RootSum TameRep::trace(const DxElement& g) const {
  const Matrix<RootSum>& pj = pi_power(g.j);
  RootSum t;
  for (std::uint32_t i = 0; i < d_; ++i)
    if (!pj(i, i).structurally_zero()) t += RootSum::root(L(), unit_exponent(g.x, i)) * pj(i, i);
  return t;
}

TameRep::Invariants TameRep::check_invariants(bool exhaustive) const {
  Invariants inv;
  const FieldTower& t = tower();
  const std::uint32_t n = t.n();
  const std::uint32_t count = exhaustive ? t.Q() - 1 : 1;
  for (std::uint32_t k = 0; k < count && inv.twist; ++k) {
    const FqElem x = exhaustive ? t.element(n, k) : t.generator(n);
    inv.twist = equal_matrices(pi_action() * unit_action(x), unit_action(t.frobenius(x, 1)) * pi_action());
  }
  const Matrix<RootSum> id = Matrix<RootSum>::Identity(d_, d_);
  inv.pi_power_d = equal_matrices(pi_power(d_), RootSum::root(L(), params_.lambda_exponent()) * id);
  inv.pi_power_n = equal_matrices(pi_power(n), RootSum::root(L(), std::int64_t{params_.lambda_exponent()} * t.m()) * id);
  for (std::uint32_t i = 0; i < d_; ++i)
    for (std::uint32_t j = i + 1; j < d_; ++j)
      if (params_.theta_tilde().frobenius(i) == params_.theta_tilde().frobenius(j)) inv.distinct = false;
  return inv;
}

// ---------------------------------------------------------------------------

ExtSquareTraces ext_square_traces(const TameRep& tau, const DxElement& g) {
  if (tau.dim() < 2) throw std::invalid_argument("exterior square needs dimension >= 2");
  const Matrix<RootSum> A = tau.action(g);
  const Eigen::Index d = A.rows();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> basis;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) basis.emplace_back(i, j);
  const Eigen::Index N = static_cast<Eigen::Index>(basis.size());
  Matrix<RootSum> wedge(N, N);
  for (Eigen::Index r = 0; r < N; ++r) {
    const auto [k, l] = basis[r];
    for (Eigen::Index c = 0; c < N; ++c) {
      const auto [i, j] = basis[c];
      wedge(r, c) = A(k, i) * A(l, j) - A(l, i) * A(k, j);
    }
  }
  ExtSquareTraces out;
  for (Eigen::Index r = 0; r < N; ++r) out.basis += wedge(r, r);
  const RootSum t1 = tau.trace(g);
  out.identity = (t1 * t1 - tau.trace(g * g)) / Rational(2);
  return out;
}

CycNum ext_square_trace(const TameRep& tau, const DxElement& g) {
  const ExtSquareTraces t = ext_square_traces(tau, g);
  const CycNum a = t.basis.reduce();
  if (a != t.identity.reduce()) throw std::logic_error("exterior-square trace methods disagree");
  return a;
}

std::uint32_t norm_character(const DivisionParams& params, const DxElement& g) {
  const FieldTower& t = params.tower();
  const std::uint32_t d = t.d();
  const FqElem norm = t.embed(t.norm_to(g.x, 1), d);
  const std::int64_t unit = params.theta().value_exponent(norm, params.L());
  const FqElem sign = t.from_int(d, t.n() % 2 == 1 ? 1 : -1);
  const std::int64_t at_pi = std::int64_t{params.theta().value_exponent(sign, params.L())} + params.theta_pi_exponent();
  return mod_u32(unit + g.j * at_pi, params.L());
}

std::uint32_t mu_character(const DivisionParams& params, std::uint32_t z_exponent, const DxElement& g) {
  return mod_u32(std::int64_t{z_exponent} * g.j, params.L());
}

std::uint32_t omega_norm_character(const TameRep& tau, const DxElement& g) {
  const FieldTower& t = tau.tower();
  const std::uint32_t n = t.n();
  const FqElem norm = t.embed(t.norm_to(g.x, 1), n);
  const std::int64_t unit = scalar_exponent(tau.action({norm, 0}));
  const FqElem sign = t.from_int(n, n % 2 == 1 ? 1 : -1);
  const std::int64_t at_pi = std::int64_t{scalar_exponent(tau.action({sign, 0}))} + scalar_exponent(tau.pi_power(n));
  return mod_u32(unit + g.j * at_pi, tau.L());
}

std::vector<Matrix<CycNum>> w_space_generators(const TameRep& tau, std::int64_t y, bool swapped) {
  const std::uint32_t d = tau.dim();
  const FieldTower& t = tau.tower();
  const FqElem g = t.generator(t.n());
  const std::int64_t yy = mod_floor(y, d);
  Matrix<CycNum> first = Matrix<CycNum>::Zero(d, d);
  Matrix<CycNum> second = Matrix<CycNum>::Zero(d, d);
  Matrix<CycNum> pi = Matrix<CycNum>::Zero(d, d);
  const Matrix<RootSum>& P = tau.pi_action();
  for (std::uint32_t i = 0; i < d; ++i) {
    const std::int64_t iy = mod_floor(i + yy, d);
    const CycNum left = CycNum::root_of_unity(tau.L(), tau.unit_exponent(g, i));
    const CycNum right = CycNum::root_of_unity(tau.L(), tau.unit_exponent(g, static_cast<std::uint32_t>(iy)));
    first(i, i) = swapped ? right : left;
    second(i, i) = swapped ? left : right;
    for (std::uint32_t a = 0; a < d; ++a) {
      const RootSum c = P(a, i) * P(mod_floor(a + yy, d), iy);
      if (!c.structurally_zero()) pi(a, i) = c.reduce();
    }
  }
  return {first, second, pi};
}

MackeyResult mackey_hom_dim(const TameRep& tau, std::int64_t y, std::int64_t y2) {
  const auto V = w_space_generators(tau, y, false);
  MackeyResult r;
  r.direct = intertwiner_dimension(V, w_space_generators(tau, y2, false));
  r.twisted = intertwiner_dimension(V, w_space_generators(tau, y2, true));
  r.swap_matches_negation = intertwiner_dimension(w_space_generators(tau, -y2, false), w_space_generators(tau, y2, true));
  return r;
}

}  // namespace tjm
