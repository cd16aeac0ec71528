#include "tjm/speh.hpp"

#include "tjm/exact_linalg.hpp"

#include <algorithm>
#include <tuple>

namespace tjm {

namespace {

std::uint32_t mod_u32(std::int64_t k, std::uint32_t L) { return static_cast<std::uint32_t>(mod_floor(k, L)); }

/// A single root of unity zeta_L^k equal to c, if any.
std::optional<std::uint32_t> root_of(const CycNum& c, std::uint32_t L) {
  if (c.is_zero()) return std::nullopt;
  for (std::uint32_t k = 0; k < L; ++k)
    if (c == CycNum::root_of_unity(L, k)) return k;
  return std::nullopt;
}

bool equal_vectors(const Vector<RootSum>& a, const Vector<RootSum>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::vector<Mat2> borel_generators(const FieldTower& t) {
  const std::uint32_t n = t.n();
  return {Mat2::diag(t.generator(n), t.one(n)), Mat2::diag(t.one(n), t.generator(n)), Mat2::unipotent(t.one(n))};
}

}  // namespace

// ---------------------------------------------------------------------------
// PSModel

PSModel::PSModel(TameRep tau1, TameRep tau2)
    : tau1_(std::move(tau1)), tau2_(std::move(tau2)), cosets_(tau1_.tower()) {
  if (&tau1_.tower() != &tau2_.tower() || tau1_.L() != tau2_.L())
    throw std::invalid_argument("principal-series factors live over different towers");
  structure_ = kronecker(tau1_.pi_action(), tau2_.pi_action());
  for (std::uint32_t k = 0; k < cosets_.size(); ++k)
    inverse_frobenius_.push_back(cosets_.locate(frobenius_conj(cosets_.rep(k), -1)));
}

std::uint32_t PSModel::block_index(std::int64_t i, std::int64_t j) const {
  return static_cast<std::uint32_t>(mod_floor(i, d1()) * d2() + mod_floor(j, d2()));
}

bool PSModel::diagonal() const {
  const DivisionParams& a = tau1_.params();
  const DivisionParams& b = tau2_.params();
  return a.theta() == b.theta() && a.theta_pi_exponent() == b.theta_pi_exponent();
}

std::uint32_t PSModel::block_character(std::uint32_t block, const Mat2& b) const {
  if (!b.is_upper()) throw std::invalid_argument("block character of a non-Borel element");
  const auto [i, j] = block_pair(block);
  return mod_u32(std::int64_t{tau1_.unit_exponent(b.a, i)} + tau2_.unit_exponent(b.e, j), L());
}

std::vector<CosetSpace::Located> PSModel::translate(const Mat2& g) const {
  std::vector<CosetSpace::Located> out;
  out.reserve(cosets_.size());
  for (std::uint32_t k = 0; k < cosets_.size(); ++k) out.push_back(cosets_.locate(cosets_.rep(k) * g));
  return out;
}

RootSum PSModel::evaluate(std::uint32_t block, const Vector<RootSum>& local, const Mat2& g) const {
  const CosetSpace::Located at = cosets_.locate(g);
  return RootSum::root(L(), block_character(block, at.b)) * local(at.coset);
}

Vector<RootSum> PSModel::act_block(std::uint32_t block, const Mat2& g, const Vector<RootSum>& local) const {
  const auto moved = translate(g);
  Vector<RootSum> out(block_size());
  for (std::uint32_t k = 0; k < block_size(); ++k)
    out(k) = RootSum::root(L(), block_character(block, moved[k].b)) * local(moved[k].coset);
  return out;
}

Vector<RootSum> PSModel::act(const Mat2& g, const Vector<RootSum>& v) const {
  const auto moved = translate(g);
  Vector<RootSum> out(dimension());
  for (std::uint32_t blk = 0; blk < block_count(); ++blk) {
    const Eigen::Index base = static_cast<Eigen::Index>(blk) * block_size();
    for (std::uint32_t k = 0; k < block_size(); ++k)
      out(base + k) = RootSum::root(L(), block_character(blk, moved[k].b)) * v(base + moved[k].coset);
  }
  return out;
}

Vector<RootSum> PSModel::theta(const Vector<RootSum>& v) const {
  Vector<RootSum> out = Vector<RootSum>::Zero(dimension());
  for (std::uint32_t target = 0; target < block_count(); ++target) {
    const Eigen::Index tbase = static_cast<Eigen::Index>(target) * block_size();
    for (std::uint32_t source = 0; source < block_count(); ++source) {
      const RootSum& a = structure_(target, source);
      if (a.structurally_zero()) continue;
      const Eigen::Index sbase = static_cast<Eigen::Index>(source) * block_size();
      for (std::uint32_t k = 0; k < block_size(); ++k) {
        const auto& at = inverse_frobenius_[k];
        const RootSum value = v(sbase + at.coset);
        if (value.structurally_zero()) continue;
        out(tbase + k) += a * RootSum::root(L(), block_character(source, at.b)) * value;
      }
    }
  }
  return out;
}

Vector<RootSum> PSModel::embed_block(std::uint32_t block, const Vector<RootSum>& local) const {
  Vector<RootSum> out = Vector<RootSum>::Zero(dimension());
  out.segment(static_cast<Eigen::Index>(block) * block_size(), block_size()) = local;
  return out;
}

// ---------------------------------------------------------------------------
// WhittakerSpace

WhittakerSpace::WhittakerSpace(const PSModel& model) : model_(&model) {
  const FieldTower& t = model.tower();
  const CosetSpace& cs = model.cosets();
  const AddChar psi(t, t.n());
  const std::uint32_t L = model.L();
  pivot_ = 1 + cs.index_of_x(t.zero(t.n()));

  whittaker_ = Vector<RootSum>::Zero(cs.size());
  whittaker_exp_.assign(cs.size(), -1);
  for (std::uint32_t k = 1; k < cs.size(); ++k) {
    whittaker_exp_[k] = psi.value_exponent(cs.x_of(k), L);
    whittaker_(k) = RootSum::root(L, whittaker_exp_[k]);
  }

  for (std::uint32_t b = 0; b < model.block_count(); ++b) checks_.push_back(check_projector(b));

  const std::uint32_t N = model.block_count();
  theta_matrix_ = Matrix<RootSum>::Zero(N, N);
  for (std::uint32_t b = 0; b < N; ++b) {
    const Vector<RootSum> image = model.theta(model.embed_block(b, whittaker_));
    for (std::uint32_t target = 0; target < N; ++target) {
      const Vector<RootSum> seg = model.block_of(image, target);
      const RootSum c = seg(pivot_);
      if (!equal_vectors(seg, c * whittaker_)) theta_monomial_ = false;
      if (!c.reduce().is_zero()) theta_matrix_(target, b) = c;
    }
  }
  theta_powers_.push_back(Matrix<RootSum>::Identity(N, N));
  for (std::uint32_t j = 1; j <= 2 * t.n(); ++j) theta_powers_.push_back(theta_powers_.back() * theta_matrix_);

  const FqElem g = t.generator(t.n());
  const Mat2 central = Mat2::diag(g, g);
  for (std::uint32_t b = 0; b < N && unit_eigen_; ++b)
    unit_eigen_ = equal_vectors(model.act_block(b, central, whittaker_), RootSum::root(L, unit_exponent(b, g)) * whittaker_);
}

ProjectorCheck WhittakerSpace::check_projector(std::uint32_t block) {
  const PSModel& model = *model_;
  const FieldTower& t = model.tower();
  const std::uint32_t L = model.L();
  const std::uint32_t S = model.block_size();
  const std::uint32_t Q = t.Q();
  const AddChar psi(t, t.n());
  ProjectorCheck check;

  // Q P = sum_u psi(u)^{-1} rho(n_u); (rho(n_u) phi)(k) = chi(b_k) phi(k')
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> raw;
  raw.reserve(static_cast<std::size_t>(S) * Q);
  std::vector<std::int64_t> psi_exp(Q);
  for (std::uint32_t ui = 0; ui < Q; ++ui) {
    const FqElem u = t.element(t.n(), ui);
    psi_exp[ui] = psi.value_exponent(u, L);
    const auto moved = model.translate(Mat2::unipotent(u));
    for (std::uint32_t k = 0; k < S; ++k)
      raw.emplace_back(k, moved[k].coset, mod_u32(std::int64_t{model.block_character(block, moved[k].b)} - psi_exp[ui], L));
  }
  std::sort(raw.begin(), raw.end());

  std::vector<std::int64_t> E(static_cast<std::size_t>(S) * S, -1);
  auto at = [&](std::uint32_t a, std::uint32_t b) -> std::int64_t& { return E[static_cast<std::size_t>(a) * S + b]; };
  for (std::size_t lo = 0; lo < raw.size();) {
    std::size_t hi = lo + 1;
    while (hi < raw.size() && std::get<0>(raw[hi]) == std::get<0>(raw[lo]) && std::get<1>(raw[hi]) == std::get<1>(raw[lo])) ++hi;
    const auto [a, b, e] = raw[lo];
    if (hi - lo == 1) {
      at(a, b) = e;
    } else {
      RootCounts acc(L);
      for (std::size_t i = lo; i < hi; ++i) acc.add(std::get<2>(raw[i]));
      const CycNum value = acc.reduce();
      if (!value.is_zero()) {
        const auto k = root_of(value, L);
        if (k)
          at(a, b) = *k;
        else
          check.monomial = false;
      }
    }
    lo = hi;
  }
  projector_exp_.push_back(E);
  if (!check.monomial) return check;

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows(S);
  for (std::uint32_t a = 0; a < S; ++a)
    for (std::uint32_t b = 0; b < S; ++b)
      if (at(a, b) >= 0) rows[a].emplace_back(b, static_cast<std::uint32_t>(at(a, b)));

  // (Q P)^2 = Q (Q P)
  check.idempotent = true;
  for (std::uint32_t a = 0; a < S && check.idempotent; ++a) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> products;
    for (const auto& [c, e1] : rows[a])
      for (const auto& [b, e2] : rows[c]) products.emplace_back(b, (e1 + e2) % L);
    std::sort(products.begin(), products.end());
    std::vector<bool> seen(S, false);
    for (std::size_t lo = 0; lo < products.size() && check.idempotent;) {
      std::size_t hi = lo;
      bool uniform = true;
      while (hi < products.size() && products[hi].first == products[lo].first) {
        uniform = uniform && products[hi].second == products[lo].second;
        ++hi;
      }
      const std::uint32_t b = products[lo].first;
      seen[b] = true;
      const std::int64_t want = at(a, b);
      if (uniform && hi - lo == Q) {
        check.idempotent = want == products[lo].second;
      } else {
        RootCounts acc(L);
        for (std::size_t i = lo; i < hi; ++i) acc.add(products[i].second);
        const CycNum expected = want < 0 ? CycNum(0L) : CycNum(static_cast<long>(Q)) * CycNum::root_of_unity(L, want);
        check.idempotent = acc.reduce() == expected;
      }
      lo = hi;
    }
    for (std::uint32_t b = 0; b < S && check.idempotent; ++b)
      if (!seen[b] && at(a, b) >= 0) check.idempotent = false;
  }

  // rank one through the pivot (s, s)
  const std::uint32_t s = pivot_;
  const std::int64_t pss = at(s, s);
  check.rank_one = pss >= 0;
  for (std::uint32_t a = 0; a < S && check.rank_one; ++a)
    for (std::uint32_t b = 0; b < S && check.rank_one; ++b) {
      const std::int64_t ab = at(a, b), as = at(a, s), sb = at(s, b);
      const bool nonzero = as >= 0 && sb >= 0;
      if ((ab >= 0) != nonzero) check.rank_one = false;
      else if (nonzero && mod_floor(ab + pss - as - sb, L) != 0) check.rank_one = false;
    }

  // column s is the normalized Whittaker vector
  check.image_whittaker = pss >= 0;
  for (std::uint32_t a = 0; a < S && check.image_whittaker; ++a) {
    const std::int64_t as = at(a, s);
    if ((as >= 0) != (whittaker_exp_[a] >= 0)) check.image_whittaker = false;
    else if (as >= 0 && mod_floor(as - pss - whittaker_exp_[a], L) != 0) check.image_whittaker = false;
  }

  // rho(n_u) W = psi(u) W
  check.eigen_equation = true;
  for (std::uint32_t ui = 0; ui < Q && check.eigen_equation; ++ui) {
    const auto moved = model.translate(Mat2::unipotent(t.element(t.n(), ui)));
    for (std::uint32_t k = 0; k < S && check.eigen_equation; ++k) {
      const std::int64_t src = whittaker_exp_[moved[k].coset];
      if ((src >= 0) != (whittaker_exp_[k] >= 0)) check.eigen_equation = false;
      else if (src >= 0 && mod_floor(model.block_character(block, moved[k].b) + src - psi_exp[ui] - whittaker_exp_[k], L) != 0)
        check.eigen_equation = false;
    }
  }
  return check;
}

std::uint32_t WhittakerSpace::dimension() const {
  std::uint32_t r = 0;
  for (const auto& c : checks_) r += c.ok() ? c.rank() : 0;
  return r;
}

std::optional<std::uint32_t> WhittakerSpace::det_line_rank(std::uint32_t block) const {
  const PSModel& model = *model_;
  const auto [i, j] = model.block_pair(block);
  if (!model.diagonal() || i != j || !checks_[block].monomial) return std::nullopt;
  const FieldTower& t = model.tower();
  const CosetSpace& cs = model.cosets();
  const std::uint32_t L = model.L();
  const std::uint32_t S = model.block_size();
  const TameRep& tau = model.left();

  Vector<RootSum> delta(S);
  for (std::uint32_t k = 0; k < S; ++k) delta(k) = RootSum::root(L, tau.unit_exponent(cs.rep(k).det(), i));
  std::vector<Mat2> gens = borel_generators(t);
  gens.push_back(Mat2::weyl(t));
  for (const Mat2& g : gens)
    if (!equal_vectors(model.act_block(block, g, delta), RootSum::root(L, tau.unit_exponent(g.det(), i)) * delta))
      return std::nullopt;

  const std::vector<std::int64_t>& E = projector_exp_[block];
  for (std::uint32_t a = 0; a < S; ++a) {
    RootCounts acc(L);
    for (std::uint32_t c = 0; c < S; ++c) {
      const std::int64_t e = E[static_cast<std::size_t>(a) * S + c];
      if (e >= 0) acc.add(e + tau.unit_exponent(cs.rep(c).det(), i));
    }
    if (!acc.reduce().is_zero()) return 1;
  }
  return 0;
}

const Matrix<RootSum>& WhittakerSpace::theta_power(std::int64_t j) const {
  if (j < 0 || j >= static_cast<std::int64_t>(theta_powers_.size())) throw std::out_of_range("Theta power out of range");
  return theta_powers_[static_cast<std::size_t>(j)];
}

std::uint32_t WhittakerSpace::unit_exponent(std::uint32_t block, const FqElem& x) const {
  return model_->block_character(block, Mat2::diag(x, x));
}

RootSum WhittakerSpace::dx_character(const DxElement& g) const {
  const Matrix<RootSum>& P = theta_power(g.j);
  RootSum out;
  for (std::uint32_t b = 0; b < model_->block_count(); ++b)
    if (!P(b, b).structurally_zero()) out += RootSum::root(model_->L(), unit_exponent(b, g.x)) * P(b, b);
  return out;
}

RootSum WhittakerSpace::orbit_character(std::int64_t y, const DxElement& g) const {
  if (model_->d1() != model_->d2()) throw std::invalid_argument("orbit spaces need equal degrees");
  const Matrix<RootSum>& P = theta_power(g.j);
  RootSum out;
  for (std::uint32_t i = 0; i < model_->d1(); ++i) {
    const std::uint32_t b = model_->block_index(i, static_cast<std::int64_t>(i) + y);
    if (!P(b, b).structurally_zero()) out += RootSum::root(model_->L(), unit_exponent(b, g.x)) * P(b, b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntertwiningT

IntertwiningT::IntertwiningT(const PSModel& model) : model_(&model) {
  if (model.d1() != 2 || model.d2() != 2 || !model.diagonal())
    throw PreconditionError("the operator T needs d = 2 and equal factors");
  const FieldTower& t = model.tower();
  const DivisionParams& params = model.left().params();
  const std::uint32_t L = model.L();
  const std::uint32_t n = t.n();
  block_ = model.block_index(1, 0);

  const std::int64_t lambda = std::int64_t{t.m() + 1} * params.theta_minus_one() + params.theta_pi_exponent();
  Rational qm = 1;
  for (std::uint32_t i = 0; i < t.m(); ++i) qm *= t.q();
  constant_ = CycNum::root_of_unity(L, lambda) * CycNum(Rational(1) / qm);
  const Mat2 sign = Mat2::diag(t.one(n), t.from_int(n, -1));
  scalar_ = constant_ * CycNum::root_of_unity(L, model.block_character(block_, sign));

  const CosetSpace& cs = model.cosets();
  const Mat2 s = Mat2::weyl(t);
  for (std::uint32_t k = 0; k < cs.size(); ++k) {
    const Mat2 fk = frobenius_conj(cs.rep(k), 1);
    for (std::uint32_t yi = 0; yi < t.Q(); ++yi) {
      const auto at = cs.locate(s * Mat2::unipotent(t.element(n, yi)) * fk);
      terms_.push_back({k, at.coset, model.block_character(block_, at.b)});
    }
  }
}

RootSum IntertwiningT::apply_at(const Vector<RootSum>& phi, const Mat2& g) const {
  const FieldTower& t = model_->tower();
  const Mat2 s = Mat2::weyl(t);
  const Mat2 fg = frobenius_conj(g, 1);
  RootSum out;
  for (std::uint32_t yi = 0; yi < t.Q(); ++yi)
    out += model_->evaluate(block_, phi, s * Mat2::unipotent(t.element(t.n(), yi)) * fg);
  return out;
}

bool IntertwiningT::block_stable(const std::vector<Vector<RootSum>>& tests) const {
  const CosetSpace& cs = model_->cosets();
  for (const Mat2& b : borel_generators(model_->tower())) {
    const RootSum chi = RootSum::root(model_->L(), model_->block_character(block_, b));
    for (const auto& phi : tests)
      for (std::uint32_t k = 0; k < cs.size(); ++k)
        if (apply_at(phi, b * cs.rep(k)) != chi * apply_at(phi, cs.rep(k))) return false;
  }
  return true;
}

std::vector<RootCounts> IntertwiningT::apply_counts(const std::vector<RootCounts>& v) const {
  std::vector<RootCounts> out(v.size(), RootCounts(model_->L()));
  std::vector<bool> live(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) live[i] = !v[i].structurally_zero();
  for (const Term& term : terms_)
    if (live[term.col]) out[term.row].add_rotated(v[term.col], term.exponent);
  return out;
}

IntertwiningT::PowerResult IntertwiningT::power_2m() const {
  const std::uint32_t S = model_->block_size();
  const std::uint32_t L = model_->L();
  const std::uint32_t steps = 2 * model_->tower().m();
  PowerResult result;
  result.scalar = true;
  std::optional<CycNum> diagonal;
  for (std::uint32_t r = 0; r < S && result.scalar; ++r) {
    std::vector<RootCounts> v(S, RootCounts(L));
    v[r].add(0);
    for (std::uint32_t i = 0; i < steps; ++i) v = apply_counts(v);
    for (std::uint32_t k = 0; k < S && result.scalar; ++k) {
      const CycNum value = v[k].reduce();
      if (k != r) {
        result.scalar = value.is_zero();
      } else if (!diagonal) {
        diagonal = value;
      } else {
        result.scalar = value == *diagonal;
      }
    }
  }
  if (result.scalar) result.value = *diagonal * pow(scalar_, steps);
  return result;
}

IntertwiningT::EigenResult IntertwiningT::eigen_on(const Vector<RootSum>& w) const {
  const std::uint32_t S = model_->block_size();
  const std::uint32_t L = model_->L();
  std::vector<RootSum> image(S);
  for (const Term& term : terms_)
    if (!w(term.col).structurally_zero()) image[term.row] += RootSum::root(L, term.exponent) * w(term.col);
  std::optional<std::uint32_t> pivot;
  for (std::uint32_t k = 0; k < S && !pivot; ++k)
    if (!w(k).reduce().is_zero()) pivot = k;
  EigenResult result;
  if (!pivot) return result;
  const CycNum mu = image[*pivot].reduce() / w(*pivot).reduce();
  result.eigenvector = true;
  for (std::uint32_t k = 0; k < S && result.eigenvector; ++k)
    result.eigenvector = image[k].reduce() == mu * w(k).reduce();
  result.eigenvalue = mu * scalar_;
  return result;
}

}  // namespace tjm
