#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "hdpart/ndarray.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

/// Samples per RNG stream in Monte Carlo runs. Results depend on the seed
/// and sample count only, never on the thread count.
inline constexpr std::uint64_t kSampleBlock = 4096;

struct GeomParams {
  mpq_class q;
  std::vector<int> dims;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless 0 < q < 1 and every dim is positive.
  void validate() const;
  std::size_t cells() const;
};

/// i.i.d. geometric(q) weights on the box, drawn from stream `stream`.
NdArray sample_weights(const GeomParams& p, std::uint64_t stream = 0);

/// G(i) = w_i + max_l G(i - e_l).
NdArray last_passage_grid(const NdArray& weights);

/// (G(n_1, n - i))_i over [n_2] x ... x [n_d], with n = (n_2 + 1, ..., n_d + 1).
NdArray boundary_slice(const NdArray& grid);

/// Prob(G(n_1, n - i) = rho_i for all i) = (1 - q)^N g_rho(q, ..., q).
/// `rho` has rank d - 1 and must fit in [n_2] x ... x [n_d].
mpq_class joint_probability_exact(const DdPartition& rho, const std::vector<int>& dims, const mpq_class& q);

/// Prob(G(n_1, ..., n_d) <= n) = (1 - q)^N g_{[n_2] x ... x [n_d] x [n]}(1, q, ..., q).
mpq_class single_point_cdf(const std::vector<int>& dims, int n, const mpq_class& q);

struct JointEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double frequency = 0;
  /// Binomial standard error at the empirical frequency.
  double std_error = 0;
};

/// Fraction of samples whose boundary slice equals `rho` (rank d - 1).
JointEstimate monte_carlo_joint(const NdArray& rho, const GeomParams& p, std::uint64_t samples);
JointEstimate monte_carlo_joint_serial(const NdArray& rho, const GeomParams& p, std::uint64_t samples);

struct LppResult {
  /// Last passage grid of the first sample.
  NdArray grid;
  std::uint64_t samples = 0;
  /// Boundary slices (row-major entries over [n_2] x ... x [n_d]) and their counts.
  std::map<std::vector<Entry>, std::uint64_t> frequencies;
};

LppResult simulate(const GeomParams& p, std::uint64_t samples);

/// Distance from the exact value in units of the exact binomial deviation
/// sqrt(P (1 - P) / samples); 0 when P is 0 or 1 and the estimate matches.
double z_score(const JointEstimate& e, const mpq_class& exact);

nlohmann::json to_json(const LppResult& r);

}  // namespace hdpart
