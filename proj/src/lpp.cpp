#include "hdpart/lpp.hpp"

#include <algorithm>
#include <cmath>

#include "hdpart/errors.hpp"
#include "hdpart/groth.hpp"
#include "hdpart/parallel.hpp"
#include "hdpart/rng.hpp"

namespace hdpart {

void GeomParams::validate() const {
  if (q <= 0 || q >= 1) throw InvalidArgument("q must lie strictly between 0 and 1");
  if (dims.empty()) throw InvalidArgument("dims must be non-empty");
  for (int n : dims) {
    if (n < 1) throw InvalidArgument("dims must be positive");
  }
}

std::size_t GeomParams::cells() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

namespace {

// Forward last-passage DP over a fixed box on raw buffers.
class GridKernel {
 public:
  explicit GridKernel(const Box& box) : box_(box) {
    std::vector<int> c(box.rank());
    for (std::size_t i = 0; i < box.size(); ++i) {
      box.coords_of(i, c);
      std::uint32_t mask = 0;
      for (int l = 0; l < box.rank(); ++l) {
        if (c[l] > 1) mask |= 1u << l;
      }
      pred_.push_back(mask);
    }
  }

  void run(const std::vector<Entry>& w, std::vector<Entry>& g) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Entry best = 0;
      for (int l = 0; l < box_.rank(); ++l) {
        if (pred_[i] & (1u << l)) best = std::max(best, g[i - box_.stride(l)]);
      }
      g[i] = w[i] + best;
    }
  }

 private:
  Box box_;
  std::vector<std::uint32_t> pred_;
};

// Linear positions of (n_1, n_2 + 1 - i_2, ..., n_d + 1 - i_d), row-major in i.
std::vector<std::size_t> boundary_positions(const Box& box) {
  if (box.rank() < 2) throw UnsupportedRank("the boundary slice needs d >= 2");
  const Box slice(std::vector<int>(box.extents().begin() + 1, box.extents().end()));
  std::vector<std::size_t> out;
  std::vector<int> c(slice.rank());
  for (std::size_t i = 0; i < slice.size(); ++i) {
    slice.coords_of(i, c);
    std::vector<int> full{box.extent(0)};
    for (int l = 0; l < slice.rank(); ++l) full.push_back(slice.extent(l) + 1 - c[l]);
    out.push_back(box.linear(IndexVec(full)));
  }
  return out;
}

std::vector<int> tail_dims(const std::vector<int>& dims) { return {dims.begin() + 1, dims.end()}; }

// Fits `rho` into [n_2] x ... x [n_d]; nullopt when it has mass outside.
std::optional<std::vector<Entry>> target_entries(const NdArray& rho, const std::vector<int>& dims) {
  if (rho.rank() + 1 != static_cast<int>(dims.size())) throw RankMismatch("rho must have rank d - 1");
  const NdArray t = rho.trimmed();
  const auto slice = tail_dims(dims);
  for (int l = 0; l < t.rank(); ++l) {
    if (t.bounds()[l] > slice[l] && !t.is_zero()) return std::nullopt;
  }
  const NdArray boxed = t.reboxed(slice);
  return std::vector<Entry>(boxed.entries().begin(), boxed.entries().end());
}

mpq_class pow_q(const mpq_class& q, std::size_t e) {
  mpq_class out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= q;
  return out;
}

// Runs `samples` draws in blocks of kSampleBlock, block b on stream b.
// visit(block, const vector<Entry>& grid) is called once per sample.
template <class PerBlock>
void run_blocks(const GeomParams& p, std::uint64_t samples, bool parallel, PerBlock& per_block) {
  const Box box(p.dims);
  const GridKernel kernel(box);
  const double log_q = std::log(p.q.get_d());
  const auto blocks = static_cast<std::int64_t>((samples + kSampleBlock - 1) / kSampleBlock);
  auto body = [&](std::int64_t b) {
    SplitMix64 rng(p.seed, static_cast<std::uint64_t>(b));
    std::vector<Entry> w(box.size()), g(box.size());
    const std::uint64_t start = static_cast<std::uint64_t>(b) * kSampleBlock;
    const std::uint64_t count = std::min<std::uint64_t>(kSampleBlock, samples - start);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& x : w) x = rng.geometric(log_q);
      kernel.run(w, g);
      per_block(b, g);
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::int64_t b = 0; b < blocks; ++b) body(b);
  } else {
    for (std::int64_t b = 0; b < blocks; ++b) body(b);
  }
}

JointEstimate estimate(const NdArray& rho, const GeomParams& p, std::uint64_t samples, bool parallel) {
  p.validate();
  if (samples < 1) throw InvalidArgument("at least one sample is required");
  const auto target = target_entries(rho, p.dims);
  JointEstimate e;
  e.samples = samples;
  if (target) {
    const auto pos = boundary_positions(Box(p.dims));
    const auto blocks = (samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<std::uint64_t> hits(blocks, 0);
    auto count = [&](std::int64_t b, const std::vector<Entry>& g) {
      for (std::size_t j = 0; j < pos.size(); ++j) {
        if (g[pos[j]] != (*target)[j]) return;
      }
      ++hits[b];
    };
    run_blocks(p, samples, parallel, count);
    for (auto h : hits) e.hits += h;
  }
  e.frequency = static_cast<double>(e.hits) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.frequency * (1 - e.frequency) / static_cast<double>(samples));
  return e;
}

}  // namespace

NdArray sample_weights(const GeomParams& p, std::uint64_t stream) {
  p.validate();
  SplitMix64 rng(p.seed, stream);
  const double log_q = std::log(p.q.get_d());
  NdArray w(p.dims);
  for (std::size_t i = 0; i < w.size(); ++i) w.set_linear(i, rng.geometric(log_q));
  return w;
}

NdArray last_passage_grid(const NdArray& weights) {
  const GridKernel kernel(weights.box());
  std::vector<Entry> w(weights.entries().begin(), weights.entries().end());
  std::vector<Entry> g(w.size());
  kernel.run(w, g);
  return NdArray(weights.bounds(), std::move(g));
}

NdArray boundary_slice(const NdArray& grid) {
  const auto pos = boundary_positions(grid.box());
  NdArray out(tail_dims(grid.bounds()));
  for (std::size_t j = 0; j < pos.size(); ++j) out.set_linear(j, grid.at_linear(pos[j]));
  return out;
}

mpq_class joint_probability_exact(const DdPartition& rho, const std::vector<int>& dims, const mpq_class& q) {
  GeomParams{q, dims, 0}.validate();
  const int d = static_cast<int>(dims.size());
  if (d < 2) throw UnsupportedRank("the joint distribution formula needs d >= 2");
  if (rho.rank() != d - 1) throw RankMismatch("rho must have rank d - 1");
  if (!target_entries(rho.array(), dims)) throw InvalidArgument("rho does not fit in [n_2] x ... x [n_d]");
  std::vector<int> box = dims;
  box.push_back(static_cast<int>(std::max<Entry>(rho.largest(), 1)));
  const MultiPoly g = groth_poly(rho, box);
  Assignment values(d);
  values[0].assign(dims[0], q);
  for (int l = 1; l < d; ++l) values[l].assign(dims[l], mpq_class(1));
  const std::size_t n = GeomParams{q, dims, 0}.cells();
  return pow_q(1 - q, n) * constant_value(specialize(g, values));
}

mpq_class single_point_cdf(const std::vector<int>& dims, int n, const mpq_class& q) {
  GeomParams{q, dims, 0}.validate();
  const int d = static_cast<int>(dims.size());
  if (d < 2) throw UnsupportedRank("the single point formula needs d >= 2");
  if (n < 0) return 0;
  std::vector<int> box = dims;
  box[0] += 1;
  box.push_back(std::max(n, 1));
  std::vector<int> shape(dims.begin() + 1, dims.end());
  shape.push_back(n);
  std::vector<IndexVec> cells;
  if (n > 0) {
    const Box b(shape);
    for (std::size_t i = 0; i < b.size(); ++i) cells.push_back(b.index_of(i));
  }
  const MultiPoly g = groth_poly(DiagramSet(d, std::move(cells)), box);
  Assignment values(d);
  values[0].assign(box[0], q);
  values[0][0] = mpq_class(1);
  for (int l = 1; l < d; ++l) values[l].assign(dims[l], mpq_class(1));
  const std::size_t cells_n = GeomParams{q, dims, 0}.cells();
  return pow_q(1 - q, cells_n) * constant_value(specialize(g, values));
}

JointEstimate monte_carlo_joint(const NdArray& rho, const GeomParams& p, std::uint64_t samples) {
  return estimate(rho, p, samples, true);
}

JointEstimate monte_carlo_joint_serial(const NdArray& rho, const GeomParams& p, std::uint64_t samples) {
  return estimate(rho, p, samples, false);
}

LppResult simulate(const GeomParams& p, std::uint64_t samples) {
  p.validate();
  if (samples < 1) throw InvalidArgument("at least one sample is required");
  const Box box(p.dims);
  const auto pos = boundary_positions(box);
  const auto blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<std::map<std::vector<Entry>, std::uint64_t>> local(blocks);
  std::vector<Entry> first;
  auto tally = [&](std::int64_t b, const std::vector<Entry>& g) {
    if (b == 0 && first.empty()) first = g;
    std::vector<Entry> key(pos.size());
    for (std::size_t j = 0; j < pos.size(); ++j) key[j] = g[pos[j]];
    ++local[b][key];
  };
  run_blocks(p, samples, true, tally);
  LppResult r;
  r.grid = NdArray(p.dims, first);
  r.samples = samples;
  for (const auto& m : local) {
    for (const auto& [k, c] : m) r.frequencies[k] += c;
  }
  return r;
}

double z_score(const JointEstimate& e, const mpq_class& exact) {
  const double p = exact.get_d();
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(e.samples));
  const double diff = e.frequency - p;
  if (sigma == 0) return diff == 0 ? 0.0 : std::copysign(INFINITY, diff);
  return diff / sigma;
}

nlohmann::json to_json(const LppResult& r) {
  nlohmann::json freq = nlohmann::json::array();
  for (const auto& [k, c] : r.frequencies) freq.push_back({{"slice", k}, {"count", std::to_string(c)}});
  std::vector<Entry> grid(r.grid.entries().begin(), r.grid.entries().end());
  return {{"samples", std::to_string(r.samples)},
          {"grid", {{"bounds", r.grid.bounds()}, {"entries", grid}}},
          {"frequencies", freq}};
}

}  // namespace hdpart
