#include "hdpart/diagram.hpp"

#include <algorithm>

#include "hdpart/errors.hpp"

namespace hdpart {

DiagramSet::DiagramSet(int rank) : rank_(rank) {
  if (rank < 1) throw UnsupportedRank("diagram rank must be at least 1");
}

DiagramSet::DiagramSet(int rank, std::vector<IndexVec> cells) : DiagramSet(rank) {
  for (const auto& c : cells) {
    if (c.rank() != rank) throw RankMismatch("cell " + c.to_string() + " has the wrong rank");
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  cells_ = std::move(cells);
}

bool DiagramSet::contains(const IndexVec& idx) const {
  return std::binary_search(cells_.begin(), cells_.end(), idx);
}

bool DiagramSet::is_lower_set() const {
  // Closure under single unit decrements is enough for closure under <=.
  for (const auto& c : cells_) {
    for (int k = 0; k < rank_; ++k) {
      if (c[k] == 1) continue;
      std::vector<int> down(c.coords().begin(), c.coords().end());
      --down[k];
      if (!contains(IndexVec(std::move(down)))) return false;
    }
  }
  return true;
}

bool DiagramSet::is_subset_of(const DiagramSet& other) const {
  return rank_ == other.rank_ &&
         std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(), cells_.end());
}

DiagramSet DiagramSet::maximal_cells() const {
  std::vector<IndexVec> out;
  for (const auto& c : cells_) {
    bool maximal = true;
    for (int k = 0; k < rank_ && maximal; ++k) maximal = !contains(c.stepped(k));
    if (maximal) out.push_back(c);
  }
  return DiagramSet(rank_, std::move(out));
}

std::vector<int> DiagramSet::bounding_extents() const {
  std::vector<int> ext(rank_, 1);
  for (const auto& c : cells_) {
    for (int k = 0; k < rank_; ++k) ext[k] = std::max(ext[k], c[k]);
  }
  return ext;
}

std::vector<char> DiagramSet::mask(const Box& box) const {
  std::vector<char> m(box.size(), 0);
  for (const auto& c : cells_) {
    if (box.contains(c)) m[box.linear(c)] = 1;
  }
  return m;
}

namespace {

// Height of the tallest successor column max_l pi_{i + e_l}, reading 0 outside the box.
Entry successor_max(const NdArray& a, std::size_t linear, std::span<const int> coords) {
  const Box& box = a.box();
  Entry m = 0;
  for (int k = 0; k < box.rank(); ++k) {
    if (coords[k] < box.extent(k)) m = std::max(m, a.at_linear(linear + box.stride(k)));
  }
  return m;
}

}  // namespace

DiagramSet diagram(const DdPartition& pi) {
  std::vector<IndexVec> cells;
  std::vector<int> c(pi.rank());
  for (std::size_t i = 0; i < pi.array().size(); ++i) {
    const Entry h = pi.at_linear(i);
    if (h == 0) continue;
    pi.box().coords_of(i, c);
    IndexVec base(c);
    for (Entry k = 1; k <= h; ++k) cells.push_back(base.extended(static_cast<int>(k)));
  }
  return DiagramSet(pi.rank() + 1, std::move(cells));
}

DiagramSet shape(const DdPartition& pi) {
  std::vector<IndexVec> cells;
  for (std::size_t i = 0; i < pi.array().size(); ++i) {
    if (pi.at_linear(i) > 0) cells.push_back(pi.box().index_of(i));
  }
  return DiagramSet(pi.rank(), std::move(cells));
}

DiagramSet corners(const DdPartition& pi) {
  // (i, k) is a corner iff max_l pi_{i+e_l} < k <= pi_i.
  std::vector<IndexVec> cells;
  std::vector<int> c(pi.rank());
  for (std::size_t i = 0; i < pi.array().size(); ++i) {
    const Entry h = pi.at_linear(i);
    if (h == 0) continue;
    pi.box().coords_of(i, c);
    const Entry floor = successor_max(pi.array(), i, c);
    IndexVec base(c);
    for (Entry k = floor + 1; k <= h; ++k) cells.push_back(base.extended(static_cast<int>(k)));
  }
  return DiagramSet(pi.rank() + 1, std::move(cells));
}

DiagramSet top_corners(const DdPartition& pi) {
  std::vector<IndexVec> cells;
  std::vector<int> c(pi.rank());
  for (std::size_t i = 0; i < pi.array().size(); ++i) {
    const Entry h = pi.at_linear(i);
    if (h == 0) continue;
    pi.box().coords_of(i, c);
    if (successor_max(pi.array(), i, c) < h) cells.push_back(IndexVec(c).extended(static_cast<int>(h)));
  }
  return DiagramSet(pi.rank() + 1, std::move(cells));
}

DiagramSet sh1(const DdPartition& pi) {
  if (pi.rank() == 1) {
    std::vector<IndexVec> cells;
    for (Entry k = 1; k <= pi.largest(); ++k) cells.push_back(IndexVec{static_cast<int>(k)});
    return DiagramSet(1, std::move(cells));
  }
  // The projection equals the diagram of the first slice because pi decreases along axis 1.
  return diagram(DdPartition::trusted(pi.array().first_slice(1)));
}

DiagramSet pyramid_diagram(int rank, int m) {
  if (rank < 1) throw UnsupportedRank("pyramid rank must be at least 1");
  if (m < 1) throw InvalidArgument("pyramid size must be at least 1");
  std::vector<IndexVec> cells;
  std::vector<int> c(rank, 1);
  // Odometer over the simplex sum(c) <= m + rank - 1.
  while (true) {
    cells.emplace_back(c);
    int k = rank - 1;
    for (; k >= 0; --k) {
      ++c[k];
      int sum = 0;
      for (int v : c) sum += v;
      if (sum - rank + 1 <= m) break;
      c[k] = 1;
    }
    if (k < 0) break;
  }
  return DiagramSet(rank, std::move(cells));
}

DdPartition partition_from_diagram(const DiagramSet& cells) {
  const int rank = cells.rank() - 1;
  if (rank < 1) throw UnsupportedRank("a diagram of a partition has rank at least 2");
  if (!cells.is_lower_set()) throw InvalidPartition("diagram is not a lower set");
  if (cells.empty()) return DdPartition::zero(rank);
  std::vector<int> ext = cells.bounding_extents();
  ext.pop_back();
  NdArray a(ext);
  for (const auto& c : cells) {
    const IndexVec base = c.prefix(rank);
    a.set(base, std::max<Entry>(a[base], c[rank]));
  }
  return DdPartition(std::move(a));
}

DdPartition partition_from_top_corners(const DiagramSet& top, int rank) {
  if (top.rank() != rank + 1) throw RankMismatch("top corners must have rank d + 1");
  if (top.empty()) return DdPartition::zero(rank);
  std::vector<int> ext = top.bounding_extents();
  ext.pop_back();
  NdArray a(ext);
  std::vector<int> c(rank);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.box().coords_of(i, c);
    const IndexVec here(c);
    Entry h = 0;
    for (const auto& t : top) {
      if (here.dominated_by(t.prefix(rank))) h = std::max<Entry>(h, t[rank]);
    }
    a.set_linear(i, h);
  }
  return DdPartition(std::move(a));
}

}  // namespace hdpart
