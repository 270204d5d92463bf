#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hdpart/diagram.hpp"
#include "hdpart/partition.hpp"
#include "hdpart/poly.hpp"

namespace hdpart {

/// Polynomial construction refuses boxes with more than this many cells
/// in the first d coordinates.
inline constexpr long kMaxPolyCells = 24;

/// A finite sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;
  bool operator==(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Positive entries of `values` in order.
Composition strip_zeros(const std::vector<Entry>& values);

/// g_rho over P(n_1, ..., n_{d+1}): `rho` is the diagram (rank d) of a
/// (d-1)-dimensional partition in P(n_2, ..., n_{d+1}). Alphabets have sizes
/// n_1, ..., n_d. Parallel over the choices of the second slice.
MultiPoly groth_poly(const DiagramSet& rho, const std::vector<int>& dims);
MultiPoly groth_poly(const DdPartition& rho, const std::vector<int>& dims);
MultiPoly groth_poly_serial(const DiagramSet& rho, const std::vector<int>& dims);

/// F_{(n_1, ..., n_{d+1})}: the corner weight summed over the whole box.
MultiPoly boxed_poly(const std::vector<int>& dims);
MultiPoly boxed_poly_serial(const std::vector<int>& dims);

/// w(pi) as a term key over alphabets (n_1, ..., n_d).
std::vector<int> corner_weight_key(const DdPartition& pi, const std::vector<int>& alphabets);

/// Every lower subset of a finite lower set, each once, sorted.
std::vector<DiagramSet> lower_subsets(const DiagramSet& rho);

struct SymmetryCheck {
  bool holds = true;
  /// Two monomials of the checked alphabet's orbit with different coefficients.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  mpz_class first_coeff;
  mpz_class second_coeff;
};

/// Quasisymmetry in one alphabet (0-based), other alphabets treated as
/// coefficients.
SymmetryCheck check_quasisymmetric(const MultiPoly& p, int alphabet);
/// Full symmetry in one alphabet.
SymmetryCheck check_symmetric(const MultiPoly& p, int alphabet);

/// M_alpha in n variables (single alphabet); zero when the length exceeds n.
MultiPoly monomial_qsym(const Composition& alpha, int n);
/// Same polynomial placed in one alphabet of a multi-alphabet ring.
MultiPoly monomial_qsym_in(const Composition& alpha, const std::vector<int>& alphabets, int alphabet);

using MonomialExpansion = std::map<std::vector<Composition>, mpz_class>;

/// Coefficients of F_{(n_1, ..., n_{d+1})} in the basis of products of
/// monomial quasisymmetric functions, counted over packed matrices.
MonomialExpansion monomial_expansion(const std::vector<int>& dims);
/// sum m * prod_l M_{alpha^(l)}(x^(l)).
MultiPoly reconstruct(const MonomialExpansion& expansion, const std::vector<int>& alphabets);

/// Terms of maximal degree in `alphabet`; throws InvalidArgument on zero.
MultiPoly top_component(const MultiPoly& p, int alphabet = 0);

}  // namespace hdpart
