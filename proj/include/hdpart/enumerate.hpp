#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hdpart/diagram.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/ndarray.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

// ---------------------------------------------------------------------------
// Search kernels. Each visits a buffer that is complete at call time; copy it
// if it must outlive the callback.
// ---------------------------------------------------------------------------

/// Partitions over a fixed box, filled in row-major order. Every cell gets
/// max(lo) <= pi_i <= min(hi, pi at each predecessor i - e_l), which prunes
/// monotonicity violations as soon as they would occur.
class PartitionSearch {
 public:
  /// A partial fill: cells before `pos` are set, the rest are zero.
  struct State {
    std::size_t pos = 0;
    Entry volume = 0;
    std::vector<Entry> values;
  };

  PartitionSearch(std::vector<int> bounds, Entry height);

  /// P(n_1, ..., n_{d+1}); the last entry of `dims` is the height bound.
  static PartitionSearch boxed(const std::vector<int>& dims);
  /// Partitions with sh(pi) inside the lower set `rho` and entries <= height.
  static PartitionSearch within_shape(const DiagramSet& rho, Entry height);
  /// Partitions of volume <= max_volume, confined to the box [max_volume]^rank.
  static PartitionSearch by_volume(int rank, Entry max_volume);

  /// Cells outside `rho` are forced to 0.
  PartitionSearch& restrict_to(const DiagramSet& rho);
  /// Cells of `rho` must be positive (combine with restrict_to for sh(pi) = rho).
  PartitionSearch& require_positive_on(const DiagramSet& rho);
  /// pi_{1, i_2, ..., i_d} is fixed to slice[i_2, ..., i_d].
  PartitionSearch& fix_first_slice(const NdArray& slice);
  PartitionSearch& with_volume_budget(Entry budget);

  const Box& box() const { return box_; }

  template <class Visitor>
  void run(Visitor&& visit) const {
    run_from(State{0, 0, std::vector<Entry>(box_.size(), 0)}, visit);
  }

  template <class Visitor>
  void run_from(const State& state, Visitor&& visit) const {
    NdArray buf(box_.extents(), state.values);
    descend(buf, state.pos, state.volume, visit);
  }

  /// Breadth-first expansion of the first cells until at least `min_tasks`
  /// disjoint subtrees exist (or the tree is exhausted).
  std::vector<State> split(std::size_t min_tasks) const;

 private:
  bool done_early(std::size_t pos, Entry volume) const {
    return pos == box_.size() || (budget_ && volume == *budget_ && suffix_lo_[pos] == 0);
  }

  Entry upper_at(const NdArray& buf, std::size_t pos, Entry volume) const {
    Entry upper = hi_[pos];
    const std::uint32_t mask = pred_mask_[pos];
    for (int k = 0; k < box_.rank(); ++k) {
      if (mask & (1u << k)) upper = std::min(upper, buf.at_linear(pos - box_.stride(k)));
    }
    if (budget_) upper = std::min(upper, *budget_ - volume - suffix_lo_[pos + 1]);
    return upper;
  }

  template <class Visitor>
  void descend(NdArray& buf, std::size_t pos, Entry volume, Visitor& visit) const {
    if (done_early(pos, volume)) {
      visit(static_cast<const NdArray&>(buf), volume);
      return;
    }
    const Entry upper = upper_at(buf, pos, volume);
    for (Entry v = lo_[pos]; v <= upper; ++v) {
      buf.set_linear(pos, v);
      descend(buf, pos + 1, volume + v, visit);
    }
    buf.set_linear(pos, 0);
  }

  void refresh();

  Box box_;
  std::vector<Entry> lo_;
  std::vector<Entry> hi_;
  std::vector<Entry> suffix_lo_;
  std::vector<std::uint32_t> pred_mask_;
  std::optional<Entry> budget_;
};

/// Matrices supported on a finite lower set, filled in decreasing row-major
/// order while maintaining the last-passage grid G = phi(A) on the fly.
class MatrixSearch {
 public:
  explicit MatrixSearch(const DiagramSet& rho);

  /// G_{1,...,1} <= n.
  MatrixSearch& with_last_passage_cap(Entry n);
  /// sum_i a_i * weight(i) <= n, weight defaults to the cohook length.
  MatrixSearch& with_weighted_budget(Entry n);
  /// Replaces the cell weights; every weight must be >= 1.
  MatrixSearch& with_cell_weights(const std::function<Entry(const IndexVec&)>& weight);

  const Box& box() const { return box_; }

  /// visit(const NdArray& a, const NdArray& g, Entry weight).
  /// Throws InvalidArgument when neither bound is set.
  template <class Visitor>
  void run(Visitor&& visit) const {
    if (!cap_ && !budget_) throw InvalidArgument("unbounded matrix enumeration: set a cap or a weighted bound");
    NdArray a(box_.extents());
    NdArray g(box_.extents());
    descend(a, g, 0, 0, visit);
  }

 private:
  template <class Visitor>
  void descend(NdArray& a, NdArray& g, std::size_t pos, Entry used, Visitor& visit) const {
    if (pos == order_.size()) {
      visit(static_cast<const NdArray&>(a), static_cast<const NdArray&>(g), used);
      return;
    }
    const std::size_t at = order_[pos];
    Entry succ = 0;
    const std::uint32_t mask = succ_mask_[pos];
    for (int k = 0; k < box_.rank(); ++k) {
      if (mask & (1u << k)) succ = std::max(succ, g.at_linear(at + box_.stride(k)));
    }
    Entry upper = std::numeric_limits<Entry>::max();
    if (cap_) upper = *cap_ - succ;
    if (budget_) upper = std::min(upper, (*budget_ - used) / weight_[pos]);
    for (Entry v = 0; v <= upper; ++v) {
      a.set_linear(at, v);
      g.set_linear(at, v + succ);
      descend(a, g, pos + 1, used + v * weight_[pos], visit);
    }
    a.set_linear(at, 0);
    g.set_linear(at, 0);
  }

  Box box_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> succ_mask_;
  std::vector<Entry> weight_;
  std::optional<Entry> cap_;
  std::optional<Entry> budget_;
};

/// Partitions with shape inside a finite lower set, filled in decreasing
/// row-major order so the corner count pi_i - max_l pi_{i+e_l} above each
/// column is known when the column is set. Bounds the corner-weighted sum
/// sum over corners (i, k) of weight(i) by `budget`.
class CornerWeightedSearch {
 public:
  CornerWeightedSearch(const DiagramSet& rho, Entry budget);

  CornerWeightedSearch& with_cell_weights(const std::function<Entry(const IndexVec&)>& weight);
  CornerWeightedSearch& with_height(Entry height);
  /// Only partitions with sh(pi) = rho.
  CornerWeightedSearch& exact_shape();

  const Box& box() const { return box_; }

  /// visit(const NdArray& pi, Entry corner_weight).
  template <class Visitor>
  void run(Visitor&& visit) const {
    NdArray pi(box_.extents());
    descend(pi, 0, 0, visit);
  }

 private:
  template <class Visitor>
  void descend(NdArray& pi, std::size_t pos, Entry used, Visitor& visit) const {
    if (pos == order_.size()) {
      visit(static_cast<const NdArray&>(pi), used);
      return;
    }
    const std::size_t at = order_[pos];
    Entry succ = 0;
    const std::uint32_t mask = succ_mask_[pos];
    for (int k = 0; k < box_.rank(); ++k) {
      if (mask & (1u << k)) succ = std::max(succ, pi.at_linear(at + box_.stride(k)));
    }
    const Entry lower = exact_ ? std::max<Entry>(succ, 1) : succ;
    Entry upper = succ + (budget_ - used) / weight_[pos];
    if (height_) upper = std::min(upper, *height_);
    for (Entry v = lower; v <= upper; ++v) {
      pi.set_linear(at, v);
      descend(pi, pos + 1, used + (v - succ) * weight_[pos], visit);
    }
    pi.set_linear(at, 0);
  }

  Box box_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> succ_mask_;
  std::vector<Entry> weight_;
  Entry budget_;
  std::optional<Entry> height_;
  bool exact_ = false;
};

// ---------------------------------------------------------------------------
// Streams and counts.
// ---------------------------------------------------------------------------

using PartitionVisitor = std::function<void(const DdPartition&)>;
using MatrixVisitor = std::function<void(const NdArray&)>;

/// Every pi in P(n_1, ..., n_{d+1}) once, in lexicographic order of the
/// row-major entry sequence.
void iter_boxed_partitions(const std::vector<int>& dims, const PartitionVisitor& visit);
std::vector<DdPartition> boxed_partitions(const std::vector<int>& dims);

struct MatrixBound {
  std::optional<Entry> last_passage;  // G_{1,...,1} <= n
  std::optional<Entry> weighted;      // sum a_i ch(i) <= N
};

/// Matrices with support inside `rho`; at least one bound must be set.
void iter_matrices(const DiagramSet& rho, const MatrixBound& bound, const MatrixVisitor& visit);

/// |P(n_1, ..., n_{d+1})|, parallel over disjoint prefix subtrees.
mpz_class count_boxed_partitions(const std::vector<int>& dims);
mpz_class count_boxed_partitions_serial(const std::vector<int>& dims);

/// |M([n_1] x ... x [n_d], n_{d+1})|.
mpz_class count_capped_matrices(const std::vector<int>& dims);

/// p_d(n): d-dimensional partitions of volume n.
mpz_class count_by_volume(int d, Entry n);
/// p_d(0..upto) from one enumeration; parallel.
std::vector<mpz_class> volume_counts(int d, Entry upto);
std::vector<mpz_class> volume_counts_serial(int d, Entry upto);

/// #{pi : |pi|_ch = n} via matrices with sum a_i ch(i) = n.
mpz_class count_by_ch_volume(int d, Entry n);
std::vector<mpz_class> ch_volume_counts(int d, Entry upto);
/// Same counts by enumerating partitions and measuring |pi|_ch on corners.
std::vector<mpz_class> ch_volume_counts_direct(int d, Entry upto);

// Packed matrices.

/// s_l(A): sums of the slices with fixed axis-l coordinate (0-based axis).
std::vector<Entry> slice_sums(const NdArray& matrix, int axis);
/// Positive slice sums occupy an initial segment along every axis, i.e.
/// pack(A) = A.
bool is_packed(const NdArray& matrix);
/// Removes all zero slices; the zero matrix packs to itself.
NdArray pack(const NdArray& matrix);

/// Packed matrices in the box with G_{1,...,1} <= cap.
void iter_packed_matrices(const std::vector<int>& bounds, Entry cap, const MatrixVisitor& visit);
mpz_class count_packed_matrices(const std::vector<int>& bounds, Entry cap);

}  // namespace hdpart
