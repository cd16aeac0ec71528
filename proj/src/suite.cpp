#include "tjm/suite.hpp"

#include "tjm/characters.hpp"
#include "tjm/exact_linalg.hpp"
#include "tjm/gl2.hpp"
#include "tjm/speh.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace tjm {

namespace {

constexpr std::uint32_t kRandomSeed = 20240501;
constexpr std::uint64_t kExhaustiveBruhatLimit = 600'000;
constexpr std::uint32_t kBruhatSamples = 20'000;

CycNum integer(std::int64_t v) { return CycNum(static_cast<long>(v)); }

std::string describe_dx(const DxElement& g) {
  if (g.x.is_one()) return "(1, " + std::to_string(g.j) + ")";
  return "(gamma^" + std::to_string(g.x.rep()) + ", " + std::to_string(g.j) + ")";
}

/// Exact comparison at every element; on success the values are the sums over
/// the group, otherwise the values at the first mismatch.
Check compare_everywhere(std::string group, std::string name, const std::vector<DxElement>& elements,
                         const std::function<CycNum(const DxElement&)>& lhs,
                         const std::function<CycNum(const DxElement&)>& rhs) {
  CycNum lsum(0L), rsum(0L);
  for (const DxElement& g : elements) {
    const CycNum a = lhs(g), b = rhs(g);
    if (a != b) return value_check(std::move(group), std::move(name), a, b, "first mismatch at " + describe_dx(g));
    lsum += a;
    rsum += b;
  }
  return value_check(std::move(group), std::move(name), lsum, rsum,
                     "equal at all " + std::to_string(elements.size()) + " elements; values are sums over the group");
}

struct Context {
  explicit Context(const PointParams& p) : params(p), tower(FieldTower::build(p.tower_params())) {
    tau1.emplace(DivisionParams(tower, p.theta_exponent, p.theta_pi));
    tau2.emplace(DivisionParams(tower, p.theta_exponent_2.value_or(p.theta_exponent), p.theta_pi));
    elements = enumerate_dx(*tower);
  }

  const PSModel& model() {
    if (!model_) model_.emplace(*tau1, *tau2);
    return *model_;
  }
  const WhittakerSpace& whittaker() {
    if (!whittaker_) whittaker_.emplace(model());
    return *whittaker_;
  }
  const IntertwiningT& T() {
    if (!t_) t_.emplace(model());
    return *t_;
  }
  const IntertwiningT::EigenResult& t_eigen() {
    if (!t_eigen_) t_eigen_ = T().eigen_on(whittaker().whittaker_vector());
    return *t_eigen_;
  }
  bool diagonal() const { return !params.theta_exponent_2 || *params.theta_exponent_2 == params.theta_exponent; }
  std::uint32_t L() const { return tau1->L(); }
  CycNum root(std::int64_t k) const { return CycNum::root_of_unity(L(), k); }

  PointParams params;
  std::shared_ptr<const FieldTower> tower;
  std::optional<TameRep> tau1, tau2;
  std::vector<DxElement> elements;

 private:
  std::optional<PSModel> model_;
  std::optional<WhittakerSpace> whittaker_;
  std::optional<IntertwiningT> t_;
  std::optional<IntertwiningT::EigenResult> t_eigen_;
};

using Checks = std::vector<Check>;

// ---------------------------------------------------------------------------

bool has_full_order(const FqElem& x, std::uint32_t units) {
  if (x.is_zero()) return false;
  for (std::uint32_t r : prime_factors(units))
    if (x.pow(units / r).is_one()) return false;
  return x.pow(units).is_one();
}

void field_checks(Context& ctx, Checks& out) {
  const FieldTower& t = *ctx.tower;
  const std::uint32_t n = t.n();
  const FqElem g = t.generator(n);
  out.push_back(property_check("field", "frobenius_order", t.frobenius(g, n) == g && (n == 1 || t.frobenius(g, 1) != g),
                               "x -> x^q has order n on the top generator"));
  bool primitive = true;
  for (std::uint32_t level : t.levels()) primitive = primitive && has_full_order(t.generator(level), t.size(level) - 1);
  out.push_back(property_check("field", "generators_primitive", primitive, "each level generator has full order"));
  const FqElem nr = t.norm_to(g, 1);
  out.push_back(property_check("field", "trace_transitive", t.trace_to(g, 1) == t.trace_to(t.trace_to(g, t.d()), 1),
                               "Tr_{n->1} = Tr_{d->1} Tr_{n->d}"));
  out.push_back(property_check("field", "norm_transitive", nr == t.norm_to(t.norm_to(g, t.d()), 1), "Nr_{n->1} = Nr_{d->1} Nr_{n->d}"));
  out.push_back(property_check("field", "norm_generates", has_full_order(nr, t.q() - 1), "the norm of the top generator generates F_q^x"));
}

void character_checks(Context& ctx, Checks& out) {
  const FieldTower& t = *ctx.tower;
  const DivisionParams& dp = ctx.tau1->params();
  const std::uint32_t L = ctx.L();
  out.push_back(property_check("characters", "regular", is_regular(dp.theta(), t.d()),
                               "theta exponent " + std::to_string(dp.theta().exponent()) + " mod " +
                                   std::to_string(dp.theta().modulus())));
  out.push_back(value_check("characters", "multiplicative_orthogonality", character_sum(dp.theta_tilde(), L), integer(0),
                            "sum of theta~ over F_Q^x"));
  const AddChar psi0(t, t.n());
  out.push_back(value_check("characters", "additive_orthogonality", character_sum(psi0), integer(0), "sum of psi_0 over F_Q"));
  const MultChar chi = dp.theta_tilde().pow(static_cast<std::int64_t>(t.q()) - 1);
  const CycNum G = gauss_sum(chi, psi0, L);
  out.push_back(value_check("characters", "gauss_norm", G * G.conj(), integer(t.Q()), "G(theta~^{q-1}, psi_0) times its conjugate"));
}

void gauss_checks(Context& ctx, Checks& out) {
  if (ctx.tower->d() != 2) {
    out.push_back(info_check("gauss", "lemma", "applies to d = 2"));
    return;
  }
  const GaussLemmaResult r = verify_gauss_lemma(ctx.tau1->params().theta());
  out.push_back(value_check("gauss", "lemma", r.gauss, r.expected, "G(theta^{q-1}, psi o Tr) against q theta(-1)"));
  out.push_back(property_check("gauss", "trace_zero_coset", r.x0_trace_zero && r.trace_zero_coset,
                               "trace-zero units form the coset gamma^{(q+1)/2} F_q^x"));
}

void hasse_davenport_checks(Context& ctx, Checks& out) {
  if (ctx.tower->d() != 2) {
    out.push_back(info_check("hasse_davenport", "lift", "applies to d = 2"));
    return;
  }
  const HasseDavenportResult r = verify_hasse_davenport(ctx.tau1->params().theta());
  out.push_back(value_check("hasse_davenport", "lift", r.lifted, r.base_power,
                            "G(theta~^{q-1}, psi_0) against (-1)^{m+1} G(theta^{q-1}, psi o Tr)^m"));
  out.push_back(value_check("hasse_davenport", "closed_form", r.lifted, r.closed_form,
                            "G(theta~^{q-1}, psi_0) against (-1)^{m+1} q^m theta(-1)^m"));
}

void tau_rep_checks(const TameRep& tau, const std::vector<DxElement>& elements, const std::string& suffix, Checks& out) {
  const TameRep::Invariants inv = tau.check_invariants(true);
  out.push_back(property_check("tau", "twist" + suffix, inv.twist, "pi U(x) = U(x^q) pi for every unit"));
  out.push_back(property_check("tau", "pi_power_d" + suffix, inv.pi_power_d, "pi^d = lambda"));
  out.push_back(property_check("tau", "pi_power_n" + suffix, inv.pi_power_n, "pi^n = lambda^m"));
  out.push_back(property_check("tau", "distinct_conjugates" + suffix, inv.distinct, "theta~^{q^i} pairwise distinct"));
  if (tau.dim() >= 2) {
    out.push_back(compare_everywhere(
        "tau", "ext_square_methods" + suffix, elements, [&](const DxElement& g) { return ext_square_traces(tau, g).basis.reduce(); },
        [&](const DxElement& g) { return ext_square_traces(tau, g).identity.reduce(); }));
  }
}

void tau_checks(Context& ctx, Checks& out) {
  tau_rep_checks(*ctx.tau1, ctx.elements, "", out);
  if (!ctx.diagonal()) tau_rep_checks(*ctx.tau2, ctx.elements, "_right", out);
}

Vector<RootSum> random_vector(std::mt19937& rng, std::uint32_t size, std::uint32_t L) {
  Vector<RootSum> v(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    const std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
    v(i) = c == 0 ? RootSum() : RootSum::monomial(L, rng() % L, Rational(c));
  }
  return v;
}

Mat2 random_matrix(std::mt19937& rng, const FieldTower& t) {
  const std::uint32_t n = t.n();
  while (true) {
    const Mat2 g{t.element(n, rng() % t.Q()), t.element(n, rng() % t.Q()), t.element(n, rng() % t.Q()),
                 t.element(n, rng() % t.Q())};
    if (!g.det().is_zero()) return g;
  }
}

bool equal_vectors(const Vector<RootSum>& a, const Vector<RootSum>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

void model_checks(Context& ctx, Checks& out) {
  const FieldTower& t = *ctx.tower;
  const std::uint32_t Q = t.Q();
  const std::uint32_t n = t.n();
  const PSModel& model = ctx.model();
  out.push_back(value_check("model", "dimension", integer(model.dimension()),
                            integer(std::int64_t{model.d1()} * model.d2() * (Q + 1)), "d1 d2 (Q + 1)"));

  const std::uint64_t order = (std::uint64_t{Q} * Q - 1) * (std::uint64_t{Q} * Q - Q);
  bool roundtrip = true;
  std::uint64_t tested = 0;
  auto test = [&](const Mat2& g) {
    ++tested;
    const BruhatForm form = bruhat_decompose(g);
    if (recompose(form) != g || !form.b.is_upper()) roundtrip = false;
  };
  if (order <= kExhaustiveBruhatLimit) {
    for (std::uint32_t a = 0; a < Q; ++a)
      for (std::uint32_t b = 0; b < Q; ++b)
        for (std::uint32_t c = 0; c < Q; ++c)
          for (std::uint32_t e = 0; e < Q; ++e) {
            const Mat2 g{t.element(n, a), t.element(n, b), t.element(n, c), t.element(n, e)};
            if (!g.det().is_zero()) test(g);
          }
  } else {
    std::mt19937 rng(kRandomSeed);
    for (std::uint32_t i = 0; i < kBruhatSamples; ++i) test(random_matrix(rng, t));
  }
  out.push_back(property_check("model", "bruhat_roundtrip", roundtrip,
                               std::to_string(tested) + (order <= kExhaustiveBruhatLimit ? " elements (all of GL_2)" : " seeded samples")));

  const WhittakerSpace& W = ctx.whittaker();
  std::string failing;
  for (std::uint32_t b = 0; b < model.block_count(); ++b) {
    const ProjectorCheck& c = W.projector_checks()[b];
    if (!c.ok()) {
      const auto [i, j] = model.block_pair(b);
      failing += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  out.push_back(property_check("model", "projector", failing.empty(),
                               failing.empty() ? "idempotent, rank 1, image W, eigen-equation under every n_u, in every block"
                                               : "failing blocks:" + failing));
  const std::uint32_t s = 1 + model.cosets().index_of_x(t.zero(n));
  out.push_back(property_check("model", "whittaker_normalization",
                               W.whittaker_vector()(0).reduce().is_zero() && W.whittaker_vector()(s).reduce() == CycNum(1L),
                               "W(1) = 0, W(s) = 1"));

  std::mt19937 rng(kRandomSeed);
  bool intertwines = true;
  for (int trial = 0; trial < 2 && intertwines; ++trial) {
    const Mat2 k = random_matrix(rng, t);
    const Vector<RootSum> v = random_vector(rng, model.dimension(), ctx.L());
    intertwines = equal_vectors(model.theta(model.act(k, v)), model.act(frobenius_conj(k, 1), model.theta(v)));
  }
  out.push_back(property_check("model", "theta_intertwining", intertwines, "Theta rho(k) = rho(F(k)) Theta on seeded random k and vectors"));

  const std::int64_t scalar = std::int64_t{t.m()} * (ctx.tau1->params().lambda_exponent() + ctx.tau2->params().lambda_exponent());
  Vector<RootSum> v = random_vector(rng, model.dimension(), ctx.L());
  Vector<RootSum> w = v;
  for (std::uint32_t i = 0; i < n; ++i) w = model.theta(w);
  out.push_back(property_check("model", "theta_power_n", equal_vectors(w, RootSum::root(ctx.L(), scalar) * v),
                               "Theta^n = lambda_1^m lambda_2^m on a seeded random vector"));
}

void dimension_checks(Context& ctx, Checks& out) {
  const PSModel& model = ctx.model();
  const WhittakerSpace& W = ctx.whittaker();
  const std::int64_t full = W.dimension();
  out.push_back(value_check("dimensions", "full", integer(full), integer(std::int64_t{model.d1()} * model.d2()), "dimension d1 d2"));
  if (!ctx.diagonal()) return;
  const std::int64_t d = model.d1();
  std::int64_t sp = 0, st = 0;
  bool lines = true;
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::uint32_t b = model.block_index(i, j);
      const std::uint32_t r = W.projector_checks()[b].ok() ? W.projector_checks()[b].rank() : 0;
      if (i < j) {
        sp += r;
      } else if (i > j) {
        st += r;
      } else {
        const auto line = W.det_line_rank(b);
        if (!line) {
          lines = false;
          continue;
        }
        sp += *line;
        st += r - *line;
      }
    }
  out.push_back(property_check("dimensions", "det_lines", lines, "each diagonal block contains a G-stable determinant line killed by the projector"));
  out.push_back(value_check("dimensions", "sp", integer(sp), integer(d * (d - 1) / 2), "d(d-1)/2"));
  out.push_back(value_check("dimensions", "st", integer(st), integer(d * (d - 1) / 2 + d), "d(d-1)/2 + d"));
  out.push_back(value_check("dimensions", "bookkeeping", integer(2 * sp + d), integer(full), "2 d(d-1)/2 + d = d^2"));
}

void equivariance_checks(Context& ctx, Checks& out) {
  const PSModel& model = ctx.model();
  const WhittakerSpace& W = ctx.whittaker();
  const Matrix<RootSum>& A = model.structure_constants();
  std::string mismatch;
  for (Eigen::Index r = 0; r < A.rows() && mismatch.empty(); ++r)
    for (Eigen::Index c = 0; c < A.cols() && mismatch.empty(); ++c)
      if (W.theta_matrix()(r, c) != A(r, c)) {
        const auto [i, j] = model.block_pair(static_cast<std::uint32_t>(c));
        mismatch = "block (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  out.push_back(property_check("equivariance", "structure_constants", W.theta_monomial() && mismatch.empty(),
                               mismatch.empty() ? (W.theta_monomial() ? "Theta W_b = c_b W_b' with c the entries of tau_1(pi) x tau_2(pi)"
                                                                      : "Theta W_b is not a multiple of a single W_b'")
                                                : "mismatch at " + mismatch));
  out.push_back(property_check("equivariance", "unit_action", W.unit_eigen(), "diag(x, x) W_b = chi_b(x) W_b"));
  out.push_back(compare_everywhere(
      "equivariance", "character", ctx.elements, [&](const DxElement& g) { return W.dx_character(g).reduce(); },
      [&](const DxElement& g) { return (ctx.tau1->trace(g) * ctx.tau2->trace(g)).reduce(); }));
}

void mackey_checks(Context& ctx, Checks& out) {
  if (!ctx.diagonal()) {
    out.push_back(info_check("mackey", "hom_dimensions", "needs tau_1 = tau_2"));
    return;
  }
  const TameRep& tau = *ctx.tau1;
  const std::int64_t d = tau.dim();
  bool dims = true, swap = true;
  std::ostringstream table;
  for (std::int64_t y = 0; y < d; ++y) {
    table << (y ? "; " : "");
    for (std::int64_t y2 = 0; y2 < d; ++y2) {
      const MackeyResult r = mackey_hom_dim(tau, y, y2);
      const std::size_t expected = (y == y2 ? 1 : 0) + (mod_floor(y + y2, d) == 0 ? 1 : 0);
      dims = dims && r.total() == expected;
      swap = swap && r.swap_matches_negation == 1;
      table << (y2 ? " " : "") << r.total();
    }
  }
  out.push_back(property_check("mackey", "hom_dimensions", dims, "dim Hom(W_y, W_y' + W_y'^s) = [y = y'] + [y = -y']: " + table.str()));
  out.push_back(property_check("mackey", "swap_negation", swap, "W_y^s is isomorphic to W_{-y}"));
  if (d % 2 == 0 && d > 2)
    out.push_back(info_check("mackey", "interpretation",
                             "even d: the self-paired orbits y = 0 and y = d/2 give dimension 2; irreducibility of the induced pieces is not asserted"));
}

void sp_checks(Context& ctx, Checks& out) {
  const PSModel& model = ctx.model();
  if (!ctx.diagonal() || model.d1() < 2) {
    out.push_back(info_check("sp", "orbits", "needs tau_1 = tau_2 and d >= 2"));
    return;
  }
  const WhittakerSpace& W = ctx.whittaker();
  const std::int64_t d = model.d1();
  for (std::int64_t y = 1; y < d; ++y) {
    if (mod_floor(2 * y, d) == 0 || y > d - y) continue;
    out.push_back(compare_everywhere(
        "sp", "orbit_pairing_" + std::to_string(y), ctx.elements, [&](const DxElement& g) { return W.orbit_character(y, g).reduce(); },
        [&](const DxElement& g) { return W.orbit_character(-y, g).reduce(); }));
  }
  auto chi_sp = [&](const DxElement& g) {
    RootSum s;
    for (std::int64_t y = 1; 2 * y < d; ++y) s += W.orbit_character(y, g);
    return s.reduce();
  };
  if (d % 2 == 1) {
    const DxElement one{ctx.tower->one(ctx.tower->n()), 0};
    out.push_back(value_check("sp", "identity_value", chi_sp(one), integer(d * (d - 1) / 2), "chi_Sp(1) = d(d-1)/2"));
    out.push_back(compare_everywhere("sp", "ext_square", ctx.elements, chi_sp,
                                     [&](const DxElement& g) { return ext_square_trace(*ctx.tau1, g); }));
    return;
  }
  const std::uint32_t lambda = ctx.tau1->params().lambda_exponent();
  if (d == 2) {
    const CycNum a = W.theta_matrix()(model.block_index(0, 1), model.block_index(1, 0)).reduce();
    const CycNum b = W.theta_matrix()(model.block_index(1, 0), model.block_index(0, 1)).reduce();
    out.push_back(value_check("sp", "theta_square_on_e1", a * b, ctx.root(2 * std::int64_t{lambda}),
                              "Theta^2 on E_1 = lambda^2; candidate Sp characters send pi to +lambda or -lambda"));
    return;
  }
  out.push_back(info_check("sp", "even_candidates",
                           "self-paired orbit y = " + std::to_string(d / 2) +
                               " admits two sign resolutions; the Sp character is not asserted for even d > 2"));
}

CycNum chi_sp_d2(Context& ctx, const CycNum& c, const DxElement& g) {
  const TameRep& tau = *ctx.tau1;
  return ctx.root(std::int64_t{tau.unit_exponent(g.x, 0)} + tau.unit_exponent(g.x, 1)) * pow(c, g.j);
}

bool d2_applicable(Context& ctx, Checks& out, const std::string& group) {
  if (ctx.tower->d() == 2 && ctx.diagonal()) return true;
  out.push_back(info_check(group, "applicable", "needs d = 2 and tau_1 = tau_2"));
  return false;
}

void d2_checks(Context& ctx, Checks& out) {
  if (!d2_applicable(ctx, out, "d2")) return;
  const FieldTower& t = *ctx.tower;
  const DivisionParams& dp = ctx.tau1->params();
  const PSModel& model = ctx.model();
  const WhittakerSpace& W = ctx.whittaker();
  const IntertwiningT& T = ctx.T();
  const std::uint32_t L = ctx.L();
  const std::int64_t m = t.m();

  std::vector<Vector<RootSum>> tests{W.whittaker_vector()};
  for (std::uint32_t k : {0u, 1u + model.cosets().index_of_x(t.zero(t.n()))}) {
    Vector<RootSum> e = Vector<RootSum>::Zero(model.block_size());
    e(k) = RootSum(1L);
    tests.push_back(e);
  }
  std::mt19937 rng(kRandomSeed);
  tests.push_back(random_vector(rng, model.block_size(), L));
  out.push_back(property_check("d2", "t_block_stable", T.block_stable(tests),
                               "T phi(b k) = chi(b) T phi(k) for diag(gamma,1), diag(1,gamma), n_1 on Whittaker, delta and random vectors"));

  const IntertwiningT::PowerResult power = T.power_2m();
  out.push_back(property_check("d2", "t_power_scalar", power.scalar, "T^{2m} is a scalar on the block"));
  const CycNum theta_pi = ctx.root(dp.theta_pi_exponent());
  if (power.scalar) out.push_back(value_check("d2", "t_power", power.value, theta_pi * theta_pi, "T^{2m} against theta(pi_F)^2"));

  const auto& eig = ctx.t_eigen();
  out.push_back(property_check("d2", "t_eigenvector", eig.eigenvector, "T W = c W"));
  const AddChar psi0(t, t.n());
  const CycNum G = gauss_sum(dp.theta_tilde().pow(static_cast<std::int64_t>(t.q()) - 1), psi0, L);
  out.push_back(value_check("d2", "t_eigenvalue", eig.eigenvalue, T.paper_constant() * G,
                            "c against theta(-1)^{m+1} theta(pi_F) q^{-m} G(theta~^{q-1}, psi_0)"));
  const CycNum sign = (m + 1) % 2 == 0 ? CycNum(1L) : CycNum(-1L);
  out.push_back(value_check("d2", "c_closed_form", eig.eigenvalue, sign * ctx.root(std::int64_t{dp.theta_minus_one()} + dp.theta_pi_exponent()),
                            "c against (-1)^{m+1} theta(-pi_F)"));
  const FqElem one = t.one(t.n());
  const DxElement pi{one, 1};
  const std::uint32_t z = (m + 1) % 2 == 0 ? 0 : L / 2;
  out.push_back(value_check("d2", "c_predicted_character", eig.eigenvalue,
                            ctx.root(std::int64_t{norm_character(dp, pi)} + mu_character(dp, z, pi)),
                            "c against (theta o Nr) mu_{(-1)^{m+1}} at pi"));
  if (m == 1)
    out.push_back(value_check("d2", "c_central_character", eig.eigenvalue, ctx.root(omega_norm_character(*ctx.tau1, pi)),
                              "c against the central character of tau composed with the reduced norm at pi"));
  const CycNum lambda = ctx.root(dp.lambda_exponent());
  out.push_back(property_check("d2", "c_theta_candidate", eig.eigenvalue == lambda || eig.eigenvalue == -lambda,
                               "c is one of the Theta-eigenvalues +lambda, -lambda on E_1"));
  out.push_back(compare_everywhere(
      "d2", "sp_character", ctx.elements, [&](const DxElement& g) { return chi_sp_d2(ctx, eig.eigenvalue, g); },
      [&](const DxElement& g) { return ctx.root(std::int64_t{norm_character(dp, g)} + mu_character(dp, z, g)); }));
}

void remark_checks(Context& ctx, Checks& out) {
  if (!d2_applicable(ctx, out, "remark")) return;
  const FieldTower& t = *ctx.tower;
  const DivisionParams& dp = ctx.tau1->params();
  const auto& eig = ctx.t_eigen();
  bool equal = true;
  for (const DxElement& g : ctx.elements)
    if (chi_sp_d2(ctx, eig.eigenvalue, g) != ext_square_trace(*ctx.tau1, g)) {
      equal = false;
      break;
    }
  const CycNum theta_m1 = ctx.root(dp.theta_minus_one());
  const CycNum minus_one(-1L);
  const bool condition = pow(theta_m1, t.m()) == pow(minus_one, t.m());
  out.push_back(property_check("remark", "biconditional", equal == condition,
                               std::string("side=") + (condition ? "equal" : "differ") + "; theta(-1)^m " +
                                   (condition ? "=" : "!=") + " (-1)^m; chi_Sp " + (equal ? "=" : "!=") + " chi of wedge^2 tau"));
}

using GroupRunner = void (*)(Context&, Checks&);

const std::vector<std::pair<std::string, GroupRunner>>& runners() {
  static const std::vector<std::pair<std::string, GroupRunner>> table{
      {"field", field_checks},
      {"characters", character_checks},
      {"gauss", gauss_checks},
      {"hasse_davenport", hasse_davenport_checks},
      {"tau", tau_checks},
      {"model", model_checks},
      {"dimensions", dimension_checks},
      {"equivariance", equivariance_checks},
      {"mackey", mackey_checks},
      {"sp", sp_checks},
      {"d2", d2_checks},
      {"remark", remark_checks},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : runners()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_check_group(const std::string& name) {
  const auto& g = check_groups();
  return std::find(g.begin(), g.end(), name) != g.end();
}

bool is_large(const PointParams& params) {
  std::uint64_t Q = 1;
  for (std::uint64_t i = 0; i < std::uint64_t{params.f} * params.n && Q <= 128; ++i) Q *= params.p;
  return params.d >= 4 || Q > 128;
}

void validate(const PointParams& params) {
  const auto tower = FieldTower::build(params.tower_params());
  const DivisionParams left(tower, params.theta_exponent, params.theta_pi);
  if (params.theta_exponent_2) {
    const DivisionParams right(tower, *params.theta_exponent_2, params.theta_pi);
  }
}

std::vector<std::pair<std::string, std::string>> describe(const PointParams& params) {
  std::vector<std::pair<std::string, std::string>> out{
      {"p", std::to_string(params.p)},
      {"f", std::to_string(params.f)},
      {"n", std::to_string(params.n)},
      {"d", std::to_string(params.d)},
      {"theta_exponent", std::to_string(params.theta_exponent)},
  };
  if (params.theta_exponent_2) out.emplace_back("theta_exponent_2", std::to_string(*params.theta_exponent_2));
  out.emplace_back("theta_pi", std::to_string(params.theta_pi.order) + "," + std::to_string(params.theta_pi.exponent));
  if (params.poly_n) out.emplace_back("poly_n", poly_to_string(*params.poly_n));
  return out;
}

std::vector<std::pair<std::string, std::string>> conventions(const PointParams& params) {
  const auto tower = FieldTower::build(params.tower_params());
  std::vector<std::pair<std::string, std::string>> out{
      {"q", std::to_string(tower->q())},
      {"Q", std::to_string(tower->Q())},
      {"m", std::to_string(tower->m())},
      {"cyclotomic_order", std::to_string(global_order(*tower, params.theta_pi))},
  };
  for (std::uint32_t level : tower->levels()) {
    const GaloisField& F = tower->field(level);
    out.emplace_back("poly_level_" + std::to_string(level), poly_to_string(F.polynomial()));
    out.emplace_back("generator_level_" + std::to_string(level), poly_to_string(F.generator_coords()));
  }
  out.emplace_back("s", "antidiag(1, 1)");
  out.emplace_back("psi", "zeta_p^Tr(x), trace to F_p, on every level");
  out.emplace_back("tau_pi", "e_i -> e_{i-1} (i >= 1), e_0 -> lambda e_{d-1}, lambda = theta(-1)^{m+1} theta(pi_F)");
  out.emplace_back("whittaker", "W(1) = 0, W(s n_x) = psi_0(x)");
  out.emplace_back("theta_twist", "Theta omits the unramified twists; their scalars cancel across the tensor product");
  out.emplace_back("t_operator", "s n_y F(k) with s = antidiag(1, 1); the sign of the signed Weyl element enters as chi(diag(1, -1))");
  return out;
}

PointReport verify_point(const PointParams& params, const std::vector<std::string>& groups) {
  for (const std::string& g : groups)
    if (!is_check_group(g)) throw std::invalid_argument("unknown check group '" + g + "'");
  PointReport report;
  report.params = describe(params);
  report.conventions = conventions(params);
  Context ctx(params);
  for (const auto& [name, run] : runners()) {
    if (!groups.empty() && std::find(groups.begin(), groups.end(), name) == groups.end()) continue;
    try {
      run(ctx, report.checks);
    } catch (const std::logic_error& e) {
      report.checks.push_back(property_check(name, "error", false, e.what()));
    }
  }
  return report;
}

std::vector<Check> aggregate_checks(const std::vector<PointReport>& points) {
  std::size_t equal = 0, differ = 0;
  for (const PointReport& p : points) {
    const Check* c = p.find("remark", "biconditional");
    if (!c) continue;
    if (c->detail.starts_with("side=equal")) ++equal;
    if (c->detail.starts_with("side=differ")) ++differ;
  }
  std::vector<Check> out;
  if (equal + differ == 0) return out;
  const std::string detail = "points with equal characters: " + std::to_string(equal) + ", with different characters: " + std::to_string(differ);
  out.push_back(Check{"remark", "witnesses", equal > 0 && differ > 0 ? Status::kPass : Status::kInfo, detail, std::nullopt, std::nullopt});
  return out;
}

}  // namespace tjm
