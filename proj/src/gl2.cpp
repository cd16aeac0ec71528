#include "tjm/gl2.hpp"

namespace tjm {

Mat2 Mat2::identity(const FieldTower& tower) {
  const std::uint32_t n = tower.n();
  return {tower.one(n), tower.zero(n), tower.zero(n), tower.one(n)};
}

Mat2 Mat2::weyl(const FieldTower& tower) {
  const std::uint32_t n = tower.n();
  return {tower.zero(n), tower.one(n), tower.one(n), tower.zero(n)};
}

Mat2 Mat2::unipotent(const FqElem& x) {
  const FieldTower& t = x.tower();
  return {t.one(x.level()), x, t.zero(x.level()), t.one(x.level())};
}

Mat2 Mat2::diag(const FqElem& x, const FqElem& y) {
  const FieldTower& t = x.tower();
  return {x, t.zero(x.level()), t.zero(x.level()), y};
}

Mat2 Mat2::lower(const FqElem& c) {
  const FieldTower& t = c.tower();
  return {t.one(c.level()), t.zero(c.level()), c, t.one(c.level())};
}

Mat2 Mat2::inv() const {
  const FqElem det_inv = det().inv();
  return {e * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

Mat2 Mat2::operator*(const Mat2& h) const {
  return {a * h.a + b * h.c, a * h.b + b * h.e, c * h.a + e * h.c, c * h.b + e * h.e};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + e.to_string() + "]]";
}

Mat2 frobenius_conj(const Mat2& g, std::int64_t i) {
  const FieldTower& t = g.a.tower();
  return {t.frobenius(g.a, i), t.frobenius(g.b, i), t.frobenius(g.c, i), t.frobenius(g.e, i)};
}

BruhatForm bruhat_decompose(const Mat2& g) {
  if (g.det().is_zero()) throw FieldError("Bruhat decomposition of a singular matrix");
  if (g.c.is_zero()) return {BruhatForm::Cell::kBorel, g, g.a.tower().zero(g.a.level())};
  const FqElem c_inv = g.c.inv();
  const FqElem x = g.e * c_inv;
  const Mat2 b{-(g.det() * c_inv), g.a, g.a.tower().zero(g.a.level()), g.c};
  return {BruhatForm::Cell::kBig, b, x};
}

Mat2 recompose(const BruhatForm& form) {
  if (form.cell == BruhatForm::Cell::kBorel) return form.b;
  return form.b * Mat2::weyl(form.x.tower()) * Mat2::unipotent(form.x);
}

std::vector<Mat2> enumerate_unipotent(const FieldTower& tower) {
  std::vector<Mat2> out;
  const std::uint32_t n = tower.n();
  for (std::uint32_t k = 0; k < tower.Q(); ++k) out.push_back(Mat2::unipotent(tower.element(n, k)));
  return out;
}

// ---------------------------------------------------------------------------

CosetSpace::CosetSpace(const FieldTower& tower) : tower_(&tower), size_(tower.Q() + 1) {
  reps_.reserve(size_);
  reps_.push_back(Mat2::identity(tower));
  const Mat2 s = Mat2::weyl(tower);
  for (std::uint32_t k = 0; k < tower.Q(); ++k) reps_.push_back(s * Mat2::unipotent(tower.element(tower.n(), k)));
}

std::uint32_t CosetSpace::index_of_x(const FqElem& x) const {
  return x.is_zero() ? tower_->Q() - 1 : static_cast<std::uint32_t>(x.rep());
}

FqElem CosetSpace::x_of(std::uint32_t k) const {
  if (k == 0 || k >= size_) throw std::out_of_range("coset index has no unipotent parameter");
  return tower_->element(tower_->n(), k - 1);
}

CosetSpace::Located CosetSpace::locate(const Mat2& g) const {
  const BruhatForm form = bruhat_decompose(g);
  if (form.cell == BruhatForm::Cell::kBorel) return {0, form.b};
  return {1 + index_of_x(form.x), form.b};
}

}  // namespace tjm
