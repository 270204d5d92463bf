#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdpart/diagram.hpp"
#include "hdpart/ndarray.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

/// Monomial in d alphabets x^{(1)}, ..., x^{(d)}: per axis, the exponent of
/// each variable x^{(axis)}_j, j >= 1. Trailing zero exponents are not stored.
class WeightMonomial {
 public:
  explicit WeightMonomial(int rank);

  int rank() const { return static_cast<int>(exponents_.size()); }
  /// Exponent of x^{(axis+1)}_index; `axis` is 0-based, `index` 1-based.
  Entry exponent(int axis, int index) const;
  void add(int axis, int index, Entry amount);
  const std::vector<Entry>& axis_exponents(int axis) const { return exponents_[axis]; }
  Entry degree(int axis) const;
  bool is_one() const;

  std::string to_string() const;
  bool operator==(const WeightMonomial&) const = default;

 private:
  std::vector<std::vector<Entry>> exponents_;
};

/// Last-passage map A -> G with G_i = a_i + max_l G_{i+e_l}. Keeps the
/// input's box; the result is a partition by construction.
DdPartition phi(const NdArray& matrix);
/// a_i = pi_i - max_l pi_{i+e_l}.
NdArray phi_inverse(const DdPartition& pi);
/// Validating overload; throws InvalidPartition.
NdArray phi_inverse(const NdArray& pi);

/// w_A: axis-l exponent of j is the sum of a_i over i_l = j.
WeightMonomial weight_of_matrix(const NdArray& matrix);
/// w(pi): axis-l exponent of j counts corners with i_l = j.
WeightMonomial weight_of_partition(const DdPartition& pi);

/// A in M(rho, n): support inside rho and (if n is given) G_{1,...,1} <= n.
bool check_membership(const NdArray& matrix, const DiagramSet& rho, std::optional<Entry> n = std::nullopt);

}  // namespace hdpart
