#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hdpart/index.hpp"

namespace hdpart {

using Entry = std::int64_t;

/// Row-major geometry of a box [n_1] x ... x [n_d].
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<int> extents);

  int rank() const { return static_cast<int>(extents_.size()); }
  const std::vector<int>& extents() const { return extents_; }
  int extent(int axis) const { return extents_[axis]; }
  std::size_t stride(int axis) const { return strides_[axis]; }
  std::size_t size() const { return size_; }

  bool contains(const IndexVec& idx) const;
  std::size_t linear(const IndexVec& idx) const;
  IndexVec index_of(std::size_t linear) const;
  /// Writes the 1-based coordinates of `linear` into `out` (size rank()).
  void coords_of(std::size_t linear, std::span<int> out) const;

  bool operator==(const Box& other) const { return extents_ == other.extents_; }

 private:
  std::vector<int> extents_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Dense array of non-negative integers over a bounding box of runtime rank.
/// Reads outside the box are 0. Equality is semantic: arrays that differ only
/// by trailing zero hyperplanes compare equal.
class NdArray {
 public:
  NdArray() = default;
  explicit NdArray(std::vector<int> bounds);
  NdArray(std::vector<int> bounds, std::vector<Entry> entries);

  int rank() const { return box_.rank(); }
  const Box& box() const { return box_; }
  const std::vector<int>& bounds() const { return box_.extents(); }
  std::size_t size() const { return entries_.size(); }

  Entry operator[](const IndexVec& idx) const;
  Entry at_linear(std::size_t linear) const { return entries_[linear]; }
  void set(const IndexVec& idx, Entry value);
  void set_linear(std::size_t linear, Entry value);

  std::span<const Entry> entries() const { return entries_; }

  Entry total() const;
  Entry max_entry() const;
  bool is_zero() const;

  /// Removes trailing all-zero hyperplanes; no extent drops below 1.
  NdArray trimmed() const;
  /// Same values re-embedded in a new box; values outside it must be 0.
  NdArray reboxed(std::vector<int> bounds) const;
  /// Reverses every axis: entry i moves to n + 1 - i.
  NdArray reversed() const;
  /// Slice with the first coordinate fixed (rank - 1 result, rank >= 2).
  NdArray first_slice(int first) const;

  friend bool operator==(const NdArray& a, const NdArray& b);

 private:
  Box box_;
  std::vector<Entry> entries_;
};

}  // namespace hdpart
