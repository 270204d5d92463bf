#include "hdpart/enumerate.hpp"

#include <algorithm>

#include "hdpart/parallel.hpp"
#include "hdpart/stats.hpp"

namespace hdpart {

namespace {

// Bit k set when the cell at `linear` has coordinate > 1 (pred) or < n_k (succ) on axis k.
std::uint32_t axis_mask(const Box& box, std::size_t linear, bool successors) {
  if (box.rank() > 32) throw UnsupportedRank("rank above 32 is not supported by the search kernels");
  std::vector<int> c(box.rank());
  box.coords_of(linear, c);
  std::uint32_t mask = 0;
  for (int k = 0; k < box.rank(); ++k) {
    const bool has = successors ? c[k] < box.extent(k) : c[k] > 1;
    if (has) mask |= 1u << k;
  }
  return mask;
}

void require_lower_set(const DiagramSet& rho) {
  if (!rho.is_lower_set()) throw InvalidArgument("shape must be a lower set");
}

// Cells of rho in decreasing row-major order within its bounding box.
std::vector<std::size_t> reverse_order(const DiagramSet& rho, const Box& box) {
  std::vector<std::size_t> order;
  order.reserve(rho.size());
  for (const auto& c : rho) order.push_back(box.linear(c));
  std::sort(order.rbegin(), order.rend());
  return order;
}

}  // namespace

// --- PartitionSearch -------------------------------------------------------

PartitionSearch::PartitionSearch(std::vector<int> bounds, Entry height)
    : box_(std::move(bounds)), lo_(box_.size(), 0), hi_(box_.size(), height), pred_mask_(box_.size()) {
  if (height < 0) throw InvalidArgument("height bound must be non-negative");
  for (std::size_t i = 0; i < box_.size(); ++i) pred_mask_[i] = axis_mask(box_, i, false);
  refresh();
}

PartitionSearch PartitionSearch::boxed(const std::vector<int>& dims) {
  if (dims.size() < 2) throw InvalidArgument("boxed partitions need dims n_1, ..., n_{d+1} with d >= 1");
  for (int n : dims) {
    if (n < 1) throw InvalidArgument("box dimensions must be positive");
  }
  return PartitionSearch(std::vector<int>(dims.begin(), dims.end() - 1), dims.back());
}

PartitionSearch PartitionSearch::within_shape(const DiagramSet& rho, Entry height) {
  PartitionSearch s(rho.bounding_extents(), height);
  s.restrict_to(rho);
  return s;
}

PartitionSearch PartitionSearch::by_volume(int rank, Entry max_volume) {
  if (max_volume < 0) throw InvalidArgument("volume must be non-negative");
  const int side = static_cast<int>(std::max<Entry>(max_volume, 1));
  PartitionSearch s(std::vector<int>(rank, side), max_volume);
  s.with_volume_budget(max_volume);
  return s;
}

PartitionSearch& PartitionSearch::restrict_to(const DiagramSet& rho) {
  if (rho.rank() != box_.rank()) throw RankMismatch("shape rank differs from the search rank");
  require_lower_set(rho);
  const auto mask = rho.mask(box_);
  for (std::size_t i = 0; i < box_.size(); ++i) {
    if (!mask[i]) hi_[i] = 0;
  }
  refresh();
  return *this;
}

PartitionSearch& PartitionSearch::require_positive_on(const DiagramSet& rho) {
  if (rho.rank() != box_.rank()) throw RankMismatch("shape rank differs from the search rank");
  for (const auto& c : rho) {
    if (!box_.contains(c)) throw InvalidArgument("required cell lies outside the search box");
    lo_[box_.linear(c)] = std::max<Entry>(lo_[box_.linear(c)], 1);
  }
  refresh();
  return *this;
}

PartitionSearch& PartitionSearch::fix_first_slice(const NdArray& slice) {
  if (slice.rank() + 1 != box_.rank()) throw RankMismatch("first slice must have rank d - 1");
  const NdArray fitted = slice.trimmed();
  for (int k = 0; k < fitted.rank(); ++k) {
    if (fitted.bounds()[k] > box_.extent(k + 1) && fitted.max_entry() > 0) {
      throw InvalidArgument("first slice does not fit inside the box");
    }
  }
  const std::size_t n = box_.stride(0);
  std::vector<int> c(box_.rank());
  for (std::size_t i = 0; i < n; ++i) {
    box_.coords_of(i, c);
    const Entry v = fitted[IndexVec(std::vector<int>(c.begin() + 1, c.end()))];
    if (v > hi_[i]) throw InvalidArgument("first slice exceeds the height bound");
    lo_[i] = v;
    hi_[i] = v;
  }
  refresh();
  return *this;
}

PartitionSearch& PartitionSearch::with_volume_budget(Entry budget) {
  if (budget < 0) throw InvalidArgument("volume budget must be non-negative");
  budget_ = budget;
  return *this;
}

void PartitionSearch::refresh() {
  suffix_lo_.assign(box_.size() + 1, 0);
  for (std::size_t i = box_.size(); i-- > 0;) suffix_lo_[i] = suffix_lo_[i + 1] + lo_[i];
}

std::vector<PartitionSearch::State> PartitionSearch::split(std::size_t min_tasks) const {
  std::vector<State> frontier{State{0, 0, std::vector<Entry>(box_.size(), 0)}};
  while (frontier.size() < min_tasks) {
    std::vector<State> next;
    bool expanded = false;
    for (auto& s : frontier) {
      if (done_early(s.pos, s.volume)) {
        next.push_back(std::move(s));
        continue;
      }
      expanded = true;
      const NdArray buf(box_.extents(), s.values);
      const Entry upper = upper_at(buf, s.pos, s.volume);
      for (Entry v = lo_[s.pos]; v <= upper; ++v) {
        State child{s.pos + 1, s.volume + v, s.values};
        child.values[s.pos] = v;
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (!expanded) break;
  }
  return frontier;
}

// --- MatrixSearch ----------------------------------------------------------

MatrixSearch::MatrixSearch(const DiagramSet& rho) : box_(rho.bounding_extents()) {
  require_lower_set(rho);
  order_ = reverse_order(rho, box_);
  for (std::size_t at : order_) {
    succ_mask_.push_back(axis_mask(box_, at, true));
    weight_.push_back(cohook(box_.index_of(at)));
  }
}

MatrixSearch& MatrixSearch::with_last_passage_cap(Entry n) {
  if (n < 0) throw InvalidArgument("last-passage cap must be non-negative");
  cap_ = n;
  return *this;
}

MatrixSearch& MatrixSearch::with_weighted_budget(Entry n) {
  if (n < 0) throw InvalidArgument("weighted bound must be non-negative");
  budget_ = n;
  return *this;
}

MatrixSearch& MatrixSearch::with_cell_weights(const std::function<Entry(const IndexVec&)>& weight) {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    weight_[p] = weight(box_.index_of(order_[p]));
    if (weight_[p] < 1) throw InvalidArgument("cell weights must be at least 1");
  }
  return *this;
}

// --- CornerWeightedSearch --------------------------------------------------

CornerWeightedSearch::CornerWeightedSearch(const DiagramSet& rho, Entry budget)
    : box_(rho.bounding_extents()), budget_(budget) {
  if (budget < 0) throw InvalidArgument("corner-weight budget must be non-negative");
  require_lower_set(rho);
  order_ = reverse_order(rho, box_);
  for (std::size_t at : order_) {
    succ_mask_.push_back(axis_mask(box_, at, true));
    weight_.push_back(cohook(box_.index_of(at)));
  }
}

CornerWeightedSearch& CornerWeightedSearch::with_cell_weights(
    const std::function<Entry(const IndexVec&)>& weight) {
  for (std::size_t p = 0; p < order_.size(); ++p) {
    weight_[p] = weight(box_.index_of(order_[p]));
    if (weight_[p] < 1) throw InvalidArgument("cell weights must be at least 1");
  }
  return *this;
}

CornerWeightedSearch& CornerWeightedSearch::with_height(Entry height) {
  height_ = height;
  return *this;
}

CornerWeightedSearch& CornerWeightedSearch::exact_shape() {
  exact_ = true;
  return *this;
}

// --- streams and counts ----------------------------------------------------

void iter_boxed_partitions(const std::vector<int>& dims, const PartitionVisitor& visit) {
  PartitionSearch::boxed(dims).run(
      [&](const NdArray& a, Entry) { visit(DdPartition::trusted(a)); });
}

std::vector<DdPartition> boxed_partitions(const std::vector<int>& dims) {
  std::vector<DdPartition> out;
  iter_boxed_partitions(dims, [&](const DdPartition& pi) { out.push_back(pi); });
  return out;
}

void iter_matrices(const DiagramSet& rho, const MatrixBound& bound, const MatrixVisitor& visit) {
  MatrixSearch search(rho);
  if (bound.last_passage) search.with_last_passage_cap(*bound.last_passage);
  if (bound.weighted) search.with_weighted_budget(*bound.weighted);
  search.run([&](const NdArray& a, const NdArray&, Entry) { visit(a); });
}

namespace {

// Histogram of partition volumes 0..max_bin over a search, parallel over split subtrees.
std::vector<mpz_class> histogram(const PartitionSearch& search, Entry max_bin, bool parallel) {
  std::vector<BigCounter> total(max_bin + 1);
  if (!parallel) {
    search.run([&](const NdArray&, Entry v) {
      if (v <= max_bin) total[v].add();
    });
  } else {
    const auto tasks = search.split(static_cast<std::size_t>(16 * thread_count()));
    std::vector<std::vector<BigCounter>> local(tasks.size(), std::vector<BigCounter>(max_bin + 1));
    const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (std::int64_t t = 0; t < n; ++t) {
      auto& bins = local[t];
      search.run_from(tasks[t], [&](const NdArray&, Entry v) {
        if (v <= max_bin) bins[v].add();
      });
    }
    for (const auto& bins : local) {
      for (Entry v = 0; v <= max_bin; ++v) total[v].merge(bins[v]);
    }
  }
  std::vector<mpz_class> out;
  for (const auto& c : total) out.push_back(c.value());
  return out;
}

}  // namespace

mpz_class count_boxed_partitions(const std::vector<int>& dims) {
  const auto search = PartitionSearch::boxed(dims);
  const auto tasks = search.split(static_cast<std::size_t>(16 * thread_count()));
  std::vector<BigCounter> local(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t t = 0; t < n; ++t) {
    auto& counter = local[t];
    search.run_from(tasks[t], [&](const NdArray&, Entry) { counter.add(); });
  }
  BigCounter total;
  for (const auto& c : local) total.merge(c);
  return total.value();
}

mpz_class count_boxed_partitions_serial(const std::vector<int>& dims) {
  BigCounter c;
  PartitionSearch::boxed(dims).run([&](const NdArray&, Entry) { c.add(); });
  return c.value();
}

mpz_class count_capped_matrices(const std::vector<int>& dims) {
  if (dims.size() < 2) throw InvalidArgument("matrix box needs n_1, ..., n_d and a cap");
  std::vector<int> box(dims.begin(), dims.end() - 1);
  std::vector<IndexVec> cells;
  const Box b(box);
  for (std::size_t i = 0; i < b.size(); ++i) cells.push_back(b.index_of(i));
  BigCounter c;
  MatrixSearch(DiagramSet(static_cast<int>(box.size()), std::move(cells)))
      .with_last_passage_cap(dims.back())
      .run([&](const NdArray&, const NdArray&, Entry) { c.add(); });
  return c.value();
}

std::vector<mpz_class> volume_counts(int d, Entry upto) {
  return histogram(PartitionSearch::by_volume(d, upto), upto, true);
}

std::vector<mpz_class> volume_counts_serial(int d, Entry upto) {
  return histogram(PartitionSearch::by_volume(d, upto), upto, false);
}

mpz_class count_by_volume(int d, Entry n) { return volume_counts(d, n).back(); }

std::vector<mpz_class> ch_volume_counts(int d, Entry upto) {
  std::vector<BigCounter> bins(upto + 1);
  if (upto == 0) return {mpz_class(1)};
  MatrixSearch(pyramid_diagram(d, static_cast<int>(upto)))
      .with_weighted_budget(upto)
      .run([&](const NdArray&, const NdArray&, Entry w) { bins[w].add(); });
  std::vector<mpz_class> out;
  for (const auto& b : bins) out.push_back(b.value());
  return out;
}

mpz_class count_by_ch_volume(int d, Entry n) { return ch_volume_counts(d, n).back(); }

std::vector<mpz_class> ch_volume_counts_direct(int d, Entry upto) {
  std::vector<BigCounter> bins(upto + 1);
  if (upto == 0) return {mpz_class(1)};
  CornerWeightedSearch(pyramid_diagram(d, static_cast<int>(upto)), upto)
      .run([&](const NdArray& pi, Entry) {
        // Measured independently from the corner set of the finished partition.
        const Entry ch = ch_volume(DdPartition::trusted(pi));
        if (ch <= upto) bins[ch].add();
      });
  std::vector<mpz_class> out;
  for (const auto& b : bins) out.push_back(b.value());
  return out;
}

// --- packed matrices -------------------------------------------------------

std::vector<Entry> slice_sums(const NdArray& matrix, int axis) {
  const Box& box = matrix.box();
  if (axis < 0 || axis >= box.rank()) throw InvalidArgument("axis out of range");
  std::vector<Entry> sums(box.extent(axis), 0);
  for (std::size_t i = 0; i < box.size(); ++i) {
    sums[(i / box.stride(axis)) % static_cast<std::size_t>(box.extent(axis))] += matrix.at_linear(i);
  }
  return sums;
}

bool is_packed(const NdArray& matrix) {
  for (int k = 0; k < matrix.rank(); ++k) {
    bool seen_zero = false;
    for (Entry s : slice_sums(matrix, k)) {
      if (s == 0) {
        seen_zero = true;
      } else if (seen_zero) {
        return false;
      }
    }
  }
  return true;
}

NdArray pack(const NdArray& matrix) {
  const Box& box = matrix.box();
  std::vector<std::vector<int>> keep(box.rank());
  std::vector<int> extents(box.rank());
  for (int k = 0; k < box.rank(); ++k) {
    const auto sums = slice_sums(matrix, k);
    for (int j = 0; j < static_cast<int>(sums.size()); ++j) {
      if (sums[j] > 0) keep[k].push_back(j + 1);
    }
    extents[k] = std::max<int>(1, static_cast<int>(keep[k].size()));
  }
  NdArray out(extents);
  if (matrix.is_zero()) return out;
  std::vector<int> c(box.rank());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.box().coords_of(i, c);
    for (int k = 0; k < box.rank(); ++k) c[k] = keep[k][c[k] - 1];
    out.set_linear(i, matrix[IndexVec(c)]);
  }
  return out;
}

void iter_packed_matrices(const std::vector<int>& bounds, Entry cap, const MatrixVisitor& visit) {
  const Box b(bounds);
  std::vector<IndexVec> cells;
  for (std::size_t i = 0; i < b.size(); ++i) cells.push_back(b.index_of(i));
  MatrixSearch(DiagramSet(b.rank(), std::move(cells)))
      .with_last_passage_cap(cap)
      .run([&](const NdArray& a, const NdArray&, Entry) {
        if (is_packed(a)) visit(a);
      });
}

mpz_class count_packed_matrices(const std::vector<int>& bounds, Entry cap) {
  BigCounter c;
  iter_packed_matrices(bounds, cap, [&](const NdArray&) { c.add(); });
  return c.value();
}

}  // namespace hdpart
