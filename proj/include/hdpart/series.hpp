#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "hdpart/diagram.hpp"

namespace hdpart {

/// Power series in t and q, exact modulo q^{N+1}. Every stored term
/// satisfies t-degree <= q-degree, so t-degrees never exceed N and the
/// truncation is closed under products.
class TruncSeries {
 public:
  explicit TruncSeries(int trunc);
  static TruncSeries one(int trunc);
  /// t^t_deg q^q_deg (zero when q_deg > trunc).
  static TruncSeries monomial(int trunc, int t_deg, int q_deg);

  int trunc() const { return trunc_; }
  const mpz_class& coeff(int t_deg, int q_deg) const;
  /// Throws InvalidArgument when t_deg > q_deg; ignores q_deg > trunc.
  void add_to(int t_deg, int q_deg, const mpz_class& value);

  TruncSeries operator+(const TruncSeries& other) const;
  TruncSeries operator*(const TruncSeries& other) const;
  /// Multiplicative inverse; the constant term must be 1.
  TruncSeries inverse() const;
  /// Multiplies by (1 - t q^e)^{-power} in closed form.
  TruncSeries times_geometric(int e, const mpz_class& power = 1) const;

  /// Coefficients at t = 1, indexed by q-degree.
  std::vector<mpz_class> t_marginal() const;

  /// "t_deg,q_deg,coeff" rows for nonzero coefficients, or
  /// "q_deg,coeff" rows of the t = 1 marginal.
  std::string to_csv(bool marginal) const;

  bool operator==(const TruncSeries& other) const = default;

 private:
  void check_trunc(const TruncSeries& other) const;

  int trunc_;
  std::vector<mpz_class> c_;  // (trunc+1)^2, row t, column q
};

/// sum_j t^j q^{j e} = (1 - t q^e)^{-1}; e >= 1.
TruncSeries geometric_factor(int e, int trunc);
/// prod over cells of rho of (1 - t q^{ch(cell)})^{-1}; with exact_shape the
/// prefactor t^{cr(rho)} q^{|rho|_cr} is applied.
TruncSeries shaped_gf(const DiagramSet& rho, bool exact_shape, int trunc);
/// prod_{n >= 1} (1 - t q^n)^{-C(n+d-2, d-1)}.
TruncSeries macmahon_series(int d, int trunc);
mpz_class macmahon_number(int d, int n);
/// Product of geometric factors over the full box [n_1] x ... x [n_d].
TruncSeries boxed_gf(const std::vector<int>& dims, int trunc);
/// prod_{n=1}^{m} (1 - t q^n)^{-C(n+d-2, d-1)}.
TruncSeries pyramid_gf(int d, int m, int trunc);
/// prod_{n >= 1} (1 - t q^n)^{-p(n,d)}; its t = 1 marginal counts |pi|_p.
TruncSeries distinct_parts_gf(int d, int trunc);

/// Number of partitions of n into exactly d distinct parts.
mpz_class distinct_part_count(int n, int d);
/// C(n + d - 2, d - 1): cells of Z^d_+ with cohook length n.
mpz_class cohook_multiplicity(int n, int d);

}  // namespace hdpart
