#pragma once

#include <cstddef>
#include <vector>

#include "hdpart/index.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

/// Finite set of points of Z^d_+, stored sorted lexicographically.
/// Used for diagrams, shapes and corner sets; only the first two are
/// required to be lower sets.
class DiagramSet {
 public:
  explicit DiagramSet(int rank = 1);
  DiagramSet(int rank, std::vector<IndexVec> cells);

  int rank() const { return rank_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<IndexVec>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool contains(const IndexVec& idx) const;
  bool is_lower_set() const;
  bool is_subset_of(const DiagramSet& other) const;

  /// Cells with no successor i + e_l in the set (the top corners of the
  /// set viewed as a shape).
  DiagramSet maximal_cells() const;
  /// Largest coordinate per axis; all 1 for the empty set.
  std::vector<int> bounding_extents() const;
  /// 0/1 membership table over `box`.
  std::vector<char> mask(const Box& box) const;

  bool operator==(const DiagramSet&) const = default;

 private:
  int rank_;
  std::vector<IndexVec> cells_;
};

/// D(pi) = {(i, k) : 1 <= k <= pi_i}, rank d + 1.
DiagramSet diagram(const DdPartition& pi);
/// sh(pi) = {i : pi_i > 0}, rank d.
DiagramSet shape(const DdPartition& pi);
/// Cor(pi): diagram cells with no diagram neighbour in the first d directions.
DiagramSet corners(const DdPartition& pi);
/// Cr(pi): corners that are also free in direction d + 1.
DiagramSet top_corners(const DdPartition& pi);
/// Projection of D(pi) dropping the first coordinate; rank d.
DiagramSet sh1(const DdPartition& pi);
/// {i in Z^rank_+ : i_1 + ... + i_rank - rank + 1 <= m}.
DiagramSet pyramid_diagram(int rank, int m);

/// Inverse of `diagram`: column heights of a rank d + 1 lower set.
/// Throws InvalidPartition if `cells` is not a lower set.
DdPartition partition_from_diagram(const DiagramSet& cells);
/// Rebuilds pi from its top corners (the maximal cells of D(pi)).
DdPartition partition_from_top_corners(const DiagramSet& top, int rank);

}  // namespace hdpart
