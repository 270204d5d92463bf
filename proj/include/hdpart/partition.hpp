#pragma once

#include <vector>

#include "hdpart/ndarray.hpp"

namespace hdpart {

/// True when every entry dominates its successors along each axis.
bool is_partition(const NdArray& array);

/// A d-dimensional partition: an NdArray that is weakly decreasing along
/// every axis. Construction validates; the value is immutable afterwards.
class DdPartition {
 public:
  DdPartition() = default;
  /// Throws InvalidPartition on a monotonicity violation.
  explicit DdPartition(NdArray array);
  DdPartition(std::vector<int> bounds, std::vector<Entry> entries);

  /// The zero partition of the given rank.
  static DdPartition zero(int rank);
  /// Skips validation; for kernels whose output is a partition by construction.
  static DdPartition trusted(NdArray array);

  const NdArray& array() const { return array_; }
  int rank() const { return array_.rank(); }
  const std::vector<int>& bounds() const { return array_.bounds(); }
  const Box& box() const { return array_.box(); }

  Entry operator[](const IndexVec& idx) const { return array_[idx]; }
  Entry at_linear(std::size_t linear) const { return array_.at_linear(linear); }

  Entry volume() const { return array_.total(); }
  /// pi_{1,...,1}, the largest entry.
  Entry largest() const;
  bool is_zero() const { return array_.is_zero(); }

  DdPartition trimmed() const { return DdPartition::trusted(array_.trimmed()); }

  friend bool operator==(const DdPartition& a, const DdPartition& b) {
    return a.array_ == b.array_;
  }

 private:
  NdArray array_;
};

}  // namespace hdpart
