#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hdpart {

/// A point of Z^d_+ with 1-based coordinates.
class IndexVec {
 public:
  IndexVec() = default;
  explicit IndexVec(std::vector<int> coords);
  IndexVec(std::initializer_list<int> coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](std::size_t axis) const { return coords_[axis]; }
  std::span<const int> coords() const { return coords_; }

  /// Unit step along a 0-based axis.
  IndexVec stepped(int axis) const;
  /// Coordinates with one more coordinate appended.
  IndexVec extended(int last) const;
  /// Drops the first `count` coordinates.
  IndexVec without_front(int count = 1) const;
  /// Keeps the first `count` coordinates.
  IndexVec prefix(int count) const;

  int coordinate_sum() const;
  /// Coordinatewise i <= j.
  bool dominated_by(const IndexVec& other) const;

  std::string to_string() const;

  auto operator<=>(const IndexVec&) const = default;
  bool operator==(const IndexVec&) const = default;

 private:
  std::vector<int> coords_;
};

}  // namespace hdpart
