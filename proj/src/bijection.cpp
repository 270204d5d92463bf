#include "hdpart/bijection.hpp"

#include <algorithm>

#include "hdpart/errors.hpp"

namespace hdpart {

WeightMonomial::WeightMonomial(int rank) : exponents_(rank) {
  if (rank < 1) throw UnsupportedRank("weight monomial rank must be at least 1");
}

Entry WeightMonomial::exponent(int axis, int index) const {
  const auto& e = exponents_.at(axis);
  return index >= 1 && index <= static_cast<int>(e.size()) ? e[index - 1] : 0;
}

void WeightMonomial::add(int axis, int index, Entry amount) {
  if (amount == 0) return;
  auto& e = exponents_.at(axis);
  if (static_cast<int>(e.size()) < index) e.resize(index, 0);
  e[index - 1] += amount;
}

Entry WeightMonomial::degree(int axis) const {
  Entry s = 0;
  for (Entry e : exponents_.at(axis)) s += e;
  return s;
}

bool WeightMonomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const auto& e) { return e.empty(); });
}

std::string WeightMonomial::to_string() const {
  std::string s;
  for (int axis = 0; axis < rank(); ++axis) {
    for (int j = 1; j <= static_cast<int>(exponents_[axis].size()); ++j) {
      const Entry e = exponents_[axis][j - 1];
      if (e == 0) continue;
      if (!s.empty()) s += " ";
      s += "x" + std::to_string(axis + 1) + "_" + std::to_string(j);
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s.empty() ? "1" : s;
}

DdPartition phi(const NdArray& matrix) {
  const Box& box = matrix.box();
  NdArray g(box.extents());
  std::vector<int> c(box.rank());
  // Decreasing linear order visits every successor i + e_l before i.
  for (std::size_t i = box.size(); i-- > 0;) {
    box.coords_of(i, c);
    Entry best = 0;
    for (int k = 0; k < box.rank(); ++k) {
      if (c[k] < box.extent(k)) best = std::max(best, g.at_linear(i + box.stride(k)));
    }
    g.set_linear(i, matrix.at_linear(i) + best);
  }
  return DdPartition::trusted(std::move(g));
}

NdArray phi_inverse(const DdPartition& pi) {
  const Box& box = pi.box();
  NdArray a(box.extents());
  std::vector<int> c(box.rank());
  for (std::size_t i = 0; i < box.size(); ++i) {
    box.coords_of(i, c);
    Entry best = 0;
    for (int k = 0; k < box.rank(); ++k) {
      if (c[k] < box.extent(k)) best = std::max(best, pi.at_linear(i + box.stride(k)));
    }
    a.set_linear(i, pi.at_linear(i) - best);
  }
  return a;
}

NdArray phi_inverse(const NdArray& pi) { return phi_inverse(DdPartition(pi)); }

WeightMonomial weight_of_matrix(const NdArray& matrix) {
  WeightMonomial w(matrix.rank());
  std::vector<int> c(matrix.rank());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const Entry a = matrix.at_linear(i);
    if (a == 0) continue;
    matrix.box().coords_of(i, c);
    for (int k = 0; k < matrix.rank(); ++k) w.add(k, c[k], a);
  }
  return w;
}

WeightMonomial weight_of_partition(const DdPartition& pi) {
  WeightMonomial w(pi.rank());
  for (const auto& corner : corners(pi)) {
    for (int k = 0; k < pi.rank(); ++k) w.add(k, corner[k], 1);
  }
  return w;
}

bool check_membership(const NdArray& matrix, const DiagramSet& rho, std::optional<Entry> n) {
  if (rho.rank() != matrix.rank()) throw RankMismatch("matrix rank differs from the shape rank");
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix.at_linear(i) > 0 && !rho.contains(matrix.box().index_of(i))) return false;
  }
  return !n || phi(matrix).largest() <= *n;
}

}  // namespace hdpart
