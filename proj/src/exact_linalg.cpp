#include "tjm/exact_linalg.hpp"

#include <map>

namespace tjm {

std::size_t rank(const Matrix<CycNum>& m) {
  using Row = std::map<Eigen::Index, CycNum>;
  std::vector<Row> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Row row;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace(j, m(i, j));
    if (!row.empty()) rows.push_back(std::move(row));
  }

  std::size_t r = 0;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;
    Row pivot_row = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));

    auto pivot = pivot_row.begin();
    for (auto it = pivot_row.begin(); it != pivot_row.end(); ++it)
      if (it->second.terms().size() < pivot->second.terms().size()) pivot = it;
    const Eigen::Index col = pivot->first;
    ++r;
    if (pivot_row.size() == 1) {
      for (auto& row : rows) row.erase(col);
      std::erase_if(rows, [](const Row& row) { return row.empty(); });
      continue;
    }
    const CycNum pivot_inv = pivot->second.inv();

    for (auto& row : rows) {
      auto hit = row.find(col);
      if (hit == row.end()) continue;
      const CycNum factor = hit->second * pivot_inv;
      for (const auto& [j, v] : pivot_row) {
        CycNum updated = (row.count(j) ? row[j] : CycNum(0L)) - factor * v;
        if (updated.is_zero())
          row.erase(j);
        else
          row[j] = std::move(updated);
      }
    }
    std::erase_if(rows, [](const Row& row) { return row.empty(); });
  }
  return r;
}

std::size_t intertwiner_dimension(const std::vector<Matrix<CycNum>>& source,
                                  const std::vector<Matrix<CycNum>>& target) {
  if (source.size() != target.size() || source.empty()) throw std::invalid_argument("generator families differ");
  const Eigen::Index n = source.front().rows();
  const Eigen::Index r = target.front().rows();
  // unknown X(a, b) at column a * n + b; equation (X A - B X)(a, c) = 0
  Matrix<CycNum> system = Matrix<CycNum>::Zero(static_cast<Eigen::Index>(source.size()) * r * n, r * n);
  Eigen::Index eq = 0;
  for (std::size_t k = 0; k < source.size(); ++k) {
    const Matrix<CycNum>& A = source[k];
    const Matrix<CycNum>& B = target[k];
    for (Eigen::Index a = 0; a < r; ++a) {
      for (Eigen::Index c = 0; c < n; ++c, ++eq) {
        for (Eigen::Index b = 0; b < n; ++b)
          if (!A(b, c).is_zero()) system(eq, a * n + b) += A(b, c);
        for (Eigen::Index b = 0; b < r; ++b)
          if (!B(a, b).is_zero()) system(eq, b * n + c) -= B(a, b);
      }
    }
  }
  return static_cast<std::size_t>(r * n) - rank(system);
}

}  // namespace tjm
