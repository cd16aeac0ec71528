// Acceptance driver: one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--allow-large]

#include "tjm/characters.hpp"
#include "tjm/config.hpp"
#include "tjm/depthzero.hpp"
#include "tjm/gl2.hpp"
#include "tjm/report.hpp"
#include "tjm/speh.hpp"
#include "tjm/suite.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tjm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome(bool)> run;
};

CycNum sign_power(std::int64_t e) { return e % 2 == 0 ? CycNum(1L) : CycNum(-1L); }

std::vector<std::int64_t> regular_exponents(std::uint64_t q, std::uint32_t d) {
  std::vector<std::int64_t> out;
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < d; ++i) modulus *= q;
  for (std::uint64_t e = 0; e + 1 < modulus; ++e) {
    bool regular = true;
    std::uint64_t conj = e;
    for (std::uint32_t i = 1; i < d; ++i) {
      conj = conj * q % (modulus - 1);
      if (conj == e) regular = false;
    }
    if (regular) out.push_back(static_cast<std::int64_t>(e));
  }
  return out;
}

PointParams point(std::uint32_t p, std::uint32_t n, std::uint32_t d, std::int64_t e, RootOfUnity pi = {1, 0}) {
  PointParams pp;
  pp.p = p;
  pp.n = n;
  pp.d = d;
  pp.theta_exponent = e;
  pp.theta_pi = pi;
  return pp;
}

std::string label(const PointParams& p) {
  std::ostringstream os;
  os << "(p=" << p.p << ",n=" << p.n << ",d=" << p.d << ",e=" << p.theta_exponent;
  if (p.theta_exponent_2) os << "/" << *p.theta_exponent_2;
  os << ",pi=" << p.theta_pi.order << ":" << p.theta_pi.exponent << ")";
  return os.str();
}

/// Every failing check of the named groups, as "point group.name".
std::vector<std::string> failures(const PointReport& r, const PointParams& p) {
  std::vector<std::string> out;
  for (const Check& c : r.checks)
    if (c.failed()) out.push_back(label(p) + " " + c.group + "." + c.name);
  return out;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (o.detail.size() < 400) o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

const Check& need(const PointReport& r, const std::string& group, const std::string& name) {
  const Check* c = r.find(group, name);
  if (!c) throw std::logic_error("missing check " + group + "." + name);
  return *c;
}

// 1 --------------------------------------------------------------------------
Outcome gauss_lemma(bool) {
  Outcome o;
  std::size_t count = 0;
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto tower = FieldTower::build({q, 1, 2, 2, std::nullopt});
    for (std::int64_t e : regular_exponents(q, 2)) {
      const MultChar theta(*tower, 2, e);
      const GaussLemmaResult r = verify_gauss_lemma(theta);
      // -1 = gamma^{(q^2-1)/2}, so theta(-1) = (-1)^e
      const CycNum expected = CycNum(static_cast<long>(q)) * sign_power(e);
      require(o, r.holds() && r.gauss == expected, "q=" + std::to_string(q) + " e=" + std::to_string(e));
      ++count;
    }
  }
  o.detail = o.pass ? std::to_string(count) + " regular characters, G = q theta(-1) exactly" : o.detail;
  return o;
}

// 2 --------------------------------------------------------------------------
Outcome hasse_davenport(bool) {
  Outcome o;
  std::size_t count = 0;
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}}) {
    const auto tower = FieldTower::build({q, 1, 2 * m, 2, std::nullopt});
    for (std::int64_t e : regular_exponents(q, 2)) {
      const HasseDavenportResult r = verify_hasse_davenport(MultChar(*tower, 2, e));
      CycNum qm(1L);
      for (std::uint32_t i = 0; i < m; ++i) qm *= CycNum(static_cast<long>(q));
      const CycNum closed = sign_power(m + 1) * qm * sign_power(e * m);
      require(o, r.lifted == r.base_power && r.lifted == closed && r.closed_form == closed,
              "q=" + std::to_string(q) + " m=" + std::to_string(m) + " e=" + std::to_string(e));
      ++count;
    }
  }
  o.detail = o.pass ? std::to_string(count) + " (q, m, theta) triples, lift = signed power = closed form" : o.detail;
  return o;
}

// 3 --------------------------------------------------------------------------
Outcome dimensions(bool allow_large) {
  Outcome o;
  std::vector<PointParams> points{point(3, 2, 2, 1), point(5, 2, 2, 1), point(3, 3, 3, 1), point(3, 4, 2, 1)};
  if (allow_large) points.push_back(point(3, 4, 4, 1));
  std::string summary;
  for (const PointParams& p : points) {
    const PointReport r = verify_point(p, {"model", "dimensions"});
    for (const auto& f : failures(r, p)) require(o, false, f);
    const std::int64_t d = p.d;
    require(o, need(r, "dimensions", "full").lhs == CycNum(static_cast<long>(d * d)), label(p) + " full");
    require(o, need(r, "dimensions", "sp").lhs == CycNum(static_cast<long>(d * (d - 1) / 2)), label(p) + " sp");
    require(o, need(r, "dimensions", "st").lhs == CycNum(static_cast<long>(d * (d - 1) / 2 + d)), label(p) + " st");
    summary += (summary.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + ":" + std::to_string(d * d) + "/" +
               std::to_string(d * (d - 1) / 2) + "/" + std::to_string(d * (d - 1) / 2 + d);
  }
  if (o.pass) o.detail = "full/Sp/St " + summary + (allow_large ? "" : " (large point skipped)");
  return o;
}

// 4 --------------------------------------------------------------------------
Outcome equivariance(bool) {
  Outcome o;
  std::vector<PointParams> points{point(3, 2, 2, 1), point(5, 2, 2, 1), point(3, 3, 3, 1), point(3, 4, 2, 1)};
  PointParams mixed = point(3, 2, 2, 1);
  mixed.theta_exponent_2 = 2;
  points.push_back(mixed);
  for (const PointParams& p : points) {
    const PointReport r = verify_point(p, {"model", "equivariance"});
    for (const auto& f : failures(r, p)) require(o, false, f);
    require(o, need(r, "equivariance", "structure_constants").status == Status::kPass, label(p) + " structure");
    require(o, need(r, "equivariance", "character").status == Status::kPass, label(p) + " character");
  }
  // trace at the identity is d1 d2, computed without the model
  const auto tower = FieldTower::build({3, 1, 2, 2, std::nullopt});
  const TameRep t1(DivisionParams(tower, 1, {1, 0})), t2(DivisionParams(tower, 2, {1, 0}));
  const PSModel model(t1, t2);
  const WhittakerSpace W(model);
  require(o, W.dx_character({tower->one(2), 0}).reduce() == CycNum(4L), "mixed identity trace");
  if (o.pass) o.detail = std::to_string(points.size()) + " points incl. mixed e=(1,2); structure constants and traces exact";
  return o;
}

// 5 --------------------------------------------------------------------------
Outcome odd_degree(bool) {
  Outcome o;
  for (const PointParams& p : {point(3, 3, 3, 1), point(5, 3, 3, 1)}) {
    const PointReport r = verify_point(p, {"sp"});
    for (const auto& f : failures(r, p)) require(o, false, f);
    require(o, need(r, "sp", "ext_square").status == Status::kPass, label(p) + " ext_square");
    require(o, need(r, "sp", "identity_value").rhs == CycNum(3L), label(p) + " identity");
  }
  if (o.pass) o.detail = "chi_Sp = chi of wedge^2 tau at every element for q = 3, 5 (d = 3)";
  return o;
}

// 6 --------------------------------------------------------------------------
Outcome quadratic(bool) {
  Outcome o;
  std::size_t rows = 0;
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}})
    for (std::int64_t e : regular_exponents(q, 2))
      for (RootOfUnity pi : {RootOfUnity{1, 0}, RootOfUnity{4, 1}}) {
        const PointParams p = point(q, 2 * m, 2, e, pi);
        const PointReport r = verify_point(p, {"d2"});
        for (const auto& f : failures(r, p)) require(o, false, f);
        // c = (-1)^{m+1} theta(-1) theta(pi_F), theta(-1) = (-1)^e
        const CycNum theta_pi = CycNum::root_of_unity(pi.order, pi.exponent);
        const CycNum c = sign_power(m + 1) * sign_power(e) * theta_pi;
        const Check& eig = need(r, "d2", "t_eigenvalue");
        require(o, eig.lhs && *eig.lhs == c, label(p) + " c");
        const Check* power = r.find("d2", "t_power");
        require(o, power && power->rhs && *power->rhs == theta_pi * theta_pi, label(p) + " T^{2m} reference");
        ++rows;
      }
  if (o.pass) o.detail = std::to_string(rows) + " rows: T^{2m} = theta(pi_F)^2, T W = c W, c = (-1)^{m+1} theta(-pi_F) = predicted character at pi";
  else o.detail = std::to_string(rows) + " rows; failing: " + o.detail;
  return o;
}

// 7 --------------------------------------------------------------------------
Outcome remark(bool) {
  Outcome o;
  std::size_t equal = 0, differ = 0;
  for (std::uint32_t m : {1u, 2u})
    for (std::int64_t e : regular_exponents(3, 2))
      for (RootOfUnity pi : {RootOfUnity{1, 0}, RootOfUnity{4, 1}}) {
        const PointParams p = point(3, 2 * m, 2, e, pi);
        const PointReport r = verify_point(p, {"remark"});
        const Check& c = need(r, "remark", "biconditional");
        require(o, c.status == Status::kPass, label(p));
        // theta(-1)^m = (-1)^{em}
        const bool condition = (e * m) % 2 == static_cast<std::int64_t>(m % 2);
        require(o, c.detail.starts_with(condition ? "side=equal" : "side=differ"), label(p) + " side");
        (condition ? equal : differ) += 1;
      }
  require(o, equal > 0 && differ > 0, "missing witness side");
  if (o.pass) o.detail = "equal side " + std::to_string(equal) + " points, differing side " + std::to_string(differ) + " points";
  return o;
}

// 8 --------------------------------------------------------------------------
Outcome mackey(bool allow_large) {
  Outcome o;
  std::vector<std::uint32_t> degrees{3, 4};
  if (allow_large) degrees.push_back(5);
  for (std::uint32_t d : degrees) {
    const auto tower = FieldTower::build({3, 1, d, d, std::nullopt});
    const TameRep tau(DivisionParams(tower, 1, {1, 0}));
    for (std::int64_t y = 0; y < d; ++y)
      for (std::int64_t y2 = 0; y2 < d; ++y2) {
        const std::size_t expected = (y == y2 ? 1u : 0u) + ((y + y2) % d == 0 ? 1u : 0u);
        require(o, mackey_hom_dim(tau, y, y2).total() == expected,
                "d=" + std::to_string(d) + " (" + std::to_string(y) + "," + std::to_string(y2) + ")");
      }
  }
  if (o.pass) {
    o.detail = "dim = [y = y'] + [y = -y'] for d = 3, 4" + std::string(allow_large ? ", 5" : " (d = 5 skipped)") +
               "; d = 4 interpretation reported only";
    std::cout << "INFO 8: d = 4 has self-paired orbits y = 0, 2 with dimension 2; irreducibility is not asserted\n";
  }
  return o;
}

// 9 --------------------------------------------------------------------------
Outcome properties(bool) {
  Outcome o;
  // Bruhat round trip over all of GL_2(F_9)
  const auto t9 = FieldTower::build({3, 1, 2, 2, std::nullopt});
  std::size_t elements = 0;
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b)
      for (std::uint32_t c = 0; c < 9; ++c)
        for (std::uint32_t e = 0; e < 9; ++e) {
          const Mat2 g{t9->element(2, a), t9->element(2, b), t9->element(2, c), t9->element(2, e)};
          if (g.det().is_zero()) continue;
          ++elements;
          if (recompose(bruhat_decompose(g)) != g) require(o, false, "Bruhat " + g.to_string());
        }
  require(o, elements == 5760, "GL_2(F_9) has " + std::to_string(elements) + " elements");

  // projector per block at every point
  const std::vector<PointParams> points{point(3, 2, 2, 1), point(5, 2, 2, 1), point(3, 3, 3, 1), point(3, 4, 2, 1),
                                        point(5, 3, 3, 1), point(7, 2, 2, 1)};
  for (const PointParams& p : points) {
    const auto tower = FieldTower::build(p.tower_params());
    const TameRep tau(DivisionParams(tower, p.theta_exponent, p.theta_pi));
    const PSModel model(tau, tau);
    const WhittakerSpace W(model);
    for (const ProjectorCheck& c : W.projector_checks())
      require(o, c.idempotent && c.rank_one && c.image_whittaker && c.eigen_equation, label(p) + " projector");
  }

  // orbit pairing for 2y != 0
  for (const PointParams& p : {point(3, 3, 3, 1), point(5, 3, 3, 1), point(3, 4, 4, 1)}) {
    const auto tower = FieldTower::build(p.tower_params());
    const TameRep tau(DivisionParams(tower, p.theta_exponent, p.theta_pi));
    const PSModel model(tau, tau);
    const WhittakerSpace W(model);
    for (std::int64_t y = 1; y < p.d; ++y) {
      if ((2 * y) % p.d == 0) continue;
      for (const DxElement& g : enumerate_dx(*tower))
        if (W.orbit_character(y, g) != W.orbit_character(-y, g)) {
          require(o, false, label(p) + " pairing y=" + std::to_string(y));
          break;
        }
    }
  }

  // |G|^2 = Q for every nontrivial multiplicative character
  std::size_t gauss_count = 0;
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    const auto tower = FieldTower::build({p, 1, n, n, std::nullopt});
    const AddChar psi(*tower, n);
    const std::uint32_t Q = tower->Q();
    for (std::int64_t e = 1; e + 1 < Q; ++e) {
      const CycNum G = gauss_sum(MultChar(*tower, n, e), psi);
      require(o, G * G.conj() == CycNum(static_cast<long>(Q)), "|G|^2 Q=" + std::to_string(Q) + " e=" + std::to_string(e));
      ++gauss_count;
    }
  }

  // two consecutive runs render identical bytes
  const std::string a = render_json(Report{"verify", {verify_point(point(3, 2, 2, 1))}, {}});
  const std::string b = render_json(Report{"verify", {verify_point(point(3, 2, 2, 1))}, {}});
  const std::string ma = render_markdown(parse_json(a));
  const std::string mb = render_markdown(Report{"verify", {verify_point(point(3, 2, 2, 1))}, {}});
  require(o, a == b && ma == mb, "report bytes differ");

  if (o.pass)
    o.detail = "Bruhat 5760/5760, projectors at " + std::to_string(points.size()) + " points, orbit pairing, " +
               std::to_string(gauss_count) + " Gauss norms, stable reports";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  bool allow_large = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--allow-large") {
      allow_large = true;
    } else if (arg == "--only" && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--only N]... [--allow-large]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "gauss_lemma", gauss_lemma},       {2, "hasse_davenport", hasse_davenport}, {3, "dimensions", dimensions},
      {4, "equivariance", equivariance},     {5, "odd_degree_wedge_square", odd_degree}, {6, "quadratic_t_chain", quadratic},
      {7, "remark_biconditional", remark},   {8, "mackey", mackey},                   {9, "property_suites", properties},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run(allow_large);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (out.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << " [" << time.str() << "s]: " << out.detail << "\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
