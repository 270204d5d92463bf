#include "hdpart/series.hpp"

#include <sstream>

#include "hdpart/errors.hpp"
#include "hdpart/stats.hpp"

namespace hdpart {

namespace {

std::size_t at(int trunc, int t, int q) {
  return static_cast<std::size_t>(t) * static_cast<std::size_t>(trunc + 1) + static_cast<std::size_t>(q);
}

const mpz_class& zero_coeff() {
  static const mpz_class zero = 0;
  return zero;
}

}  // namespace

TruncSeries::TruncSeries(int trunc) : trunc_(trunc) {
  if (trunc < 0) throw InvalidArgument("truncation order must be non-negative");
  c_.assign(at(trunc, trunc + 1, 0), 0);
}

TruncSeries TruncSeries::one(int trunc) { return monomial(trunc, 0, 0); }

TruncSeries TruncSeries::monomial(int trunc, int t_deg, int q_deg) {
  TruncSeries s(trunc);
  s.add_to(t_deg, q_deg, 1);
  return s;
}

const mpz_class& TruncSeries::coeff(int t_deg, int q_deg) const {
  if (t_deg < 0 || q_deg < 0 || t_deg > trunc_ || q_deg > trunc_) return zero_coeff();
  return c_[at(trunc_, t_deg, q_deg)];
}

void TruncSeries::add_to(int t_deg, int q_deg, const mpz_class& value) {
  if (t_deg < 0 || q_deg < 0) throw InvalidArgument("series degrees must be non-negative");
  if (t_deg > q_deg) throw InvalidArgument("series terms need t-degree <= q-degree");
  if (q_deg > trunc_) return;
  c_[at(trunc_, t_deg, q_deg)] += value;
}

void TruncSeries::check_trunc(const TruncSeries& other) const {
  if (other.trunc_ != trunc_) throw InvalidArgument("series truncation orders differ");
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const {
  check_trunc(other);
  TruncSeries out = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += other.c_[i];
  return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& other) const {
  check_trunc(other);
  TruncSeries out(trunc_);
  for (int t1 = 0; t1 <= trunc_; ++t1) {
    for (int q1 = t1; q1 <= trunc_; ++q1) {
      const mpz_class& a = c_[at(trunc_, t1, q1)];
      if (a == 0) continue;
      for (int t2 = 0; t2 + t1 <= trunc_; ++t2) {
        for (int q2 = t2; q2 + q1 <= trunc_; ++q2) {
          const mpz_class& b = other.c_[at(trunc_, t2, q2)];
          if (b != 0) out.c_[at(trunc_, t1 + t2, q1 + q2)] += a * b;
        }
      }
    }
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0] != 1) throw InvalidArgument("only series with constant term 1 are inverted");
  // g = 1 - f g', solved in increasing (q, t) order: g_{t,q} = -sum_{(a,b) != 0} f_{a,b} g_{t-a,q-b}.
  TruncSeries g(trunc_);
  g.c_[0] = 1;
  for (int q = 1; q <= trunc_; ++q) {
    for (int t = 0; t <= q; ++t) {
      mpz_class acc = 0;
      for (int a = 0; a <= t; ++a) {
        for (int b = a; b <= q; ++b) {
          if (a == 0 && b == 0) continue;
          const mpz_class& f = c_[at(trunc_, a, b)];
          if (f != 0 && t - a <= q - b) acc += f * g.c_[at(trunc_, t - a, q - b)];
        }
      }
      g.c_[at(trunc_, t, q)] = -acc;
    }
  }
  return g;
}

TruncSeries TruncSeries::times_geometric(int e, const mpz_class& power) const {
  if (e < 1) throw InvalidArgument("geometric factor exponent must be at least 1");
  if (power < 0) throw InvalidArgument("geometric factor power must be non-negative");
  if (power == 0 || e > trunc_) return *this;
  // (1 - t q^e)^{-k} = sum_j C(k + j - 1, j) t^j q^{j e}.
  std::vector<mpz_class> binom{1};
  for (int j = 1; j * e <= trunc_; ++j) binom.push_back(binom.back() * (power + j - 1) / j);
  TruncSeries out(trunc_);
  for (int t = 0; t <= trunc_; ++t) {
    for (int q = t; q <= trunc_; ++q) {
      const mpz_class& a = c_[at(trunc_, t, q)];
      if (a == 0) continue;
      for (int j = 0; t + j <= trunc_ && q + j * e <= trunc_; ++j) {
        out.c_[at(trunc_, t + j, q + j * e)] += a * binom[j];
      }
    }
  }
  return out;
}

std::vector<mpz_class> TruncSeries::t_marginal() const {
  std::vector<mpz_class> m(trunc_ + 1, 0);
  for (int t = 0; t <= trunc_; ++t) {
    for (int q = 0; q <= trunc_; ++q) m[q] += c_[at(trunc_, t, q)];
  }
  return m;
}

std::string TruncSeries::to_csv(bool marginal) const {
  std::ostringstream out;
  if (marginal) {
    out << "q_deg,coeff\n";
    const auto m = t_marginal();
    for (int q = 0; q <= trunc_; ++q) out << q << "," << m[q].get_str() << "\n";
    return out.str();
  }
  out << "t_deg,q_deg,coeff\n";
  for (int q = 0; q <= trunc_; ++q) {
    for (int t = 0; t <= q; ++t) {
      const mpz_class& v = c_[at(trunc_, t, q)];
      if (v != 0) out << t << "," << q << "," << v.get_str() << "\n";
    }
  }
  return out.str();
}

TruncSeries geometric_factor(int e, int trunc) { return TruncSeries::one(trunc).times_geometric(e); }

TruncSeries shaped_gf(const DiagramSet& rho, bool exact_shape, int trunc) {
  if (!rho.is_lower_set()) throw InvalidArgument("shape must be a lower set");
  TruncSeries s = TruncSeries::one(trunc);
  if (exact_shape) {
    const auto cr = static_cast<int>(rho.maximal_cells().size());
    const auto weight = static_cast<int>(cr_weight(rho));
    s = TruncSeries::monomial(trunc, cr, weight);
  }
  // Group equal cohooks into one closed-form power.
  std::vector<mpz_class> mult;
  for (const auto& c : rho) {
    const auto e = static_cast<std::size_t>(cohook(c));
    if (mult.size() <= e) mult.resize(e + 1, 0);
    mult[e] += 1;
  }
  for (std::size_t e = 1; e < mult.size(); ++e) s = s.times_geometric(static_cast<int>(e), mult[e]);
  return s;
}

mpz_class cohook_multiplicity(int n, int d) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  if (n < 1) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + d - 2), static_cast<unsigned long>(d - 1));
  return c;
}

TruncSeries macmahon_series(int d, int trunc) { return pyramid_gf(d, std::max(trunc, 1), trunc); }

mpz_class macmahon_number(int d, int n) { return macmahon_series(d, n).t_marginal()[n]; }

TruncSeries boxed_gf(const std::vector<int>& dims, int trunc) {
  if (dims.empty()) throw InvalidArgument("box needs at least one dimension");
  const Box box(dims);
  std::vector<IndexVec> cells;
  for (std::size_t i = 0; i < box.size(); ++i) cells.push_back(box.index_of(i));
  return shaped_gf(DiagramSet(box.rank(), std::move(cells)), false, trunc);
}

TruncSeries pyramid_gf(int d, int m, int trunc) {
  if (m < 1) throw InvalidArgument("pyramid size must be at least 1");
  TruncSeries s = TruncSeries::one(trunc);
  for (int n = 1; n <= std::min(m, trunc); ++n) s = s.times_geometric(n, cohook_multiplicity(n, d));
  return s;
}

mpz_class distinct_part_count(int n, int d) {
  if (n < 0 || d < 0) return 0;
  // p(n, k) = p(n - k, k) + p(n - k, k - 1): remove one from every part.
  std::vector<std::vector<mpz_class>> p(n + 1, std::vector<mpz_class>(d + 1, 0));
  p[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= d && k <= m; ++k) p[m][k] = p[m - k][k] + p[m - k][k - 1];
  }
  return p[n][d];
}

TruncSeries distinct_parts_gf(int d, int trunc) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  TruncSeries s = TruncSeries::one(trunc);
  for (int n = 1; n <= trunc; ++n) s = s.times_geometric(n, distinct_part_count(n, d));
  return s;
}

}  // namespace hdpart
