#include "hdpart/index.hpp"

#include <numeric>

#include "hdpart/errors.hpp"

namespace hdpart {

IndexVec::IndexVec(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 1) throw InvalidArgument("index coordinates must be >= 1, got " + to_string());
  }
}

IndexVec::IndexVec(std::initializer_list<int> coords) : IndexVec(std::vector<int>(coords)) {}

IndexVec IndexVec::stepped(int axis) const {
  IndexVec out = *this;
  ++out.coords_[axis];
  return out;
}

IndexVec IndexVec::extended(int last) const {
  std::vector<int> c = coords_;
  c.push_back(last);
  return IndexVec(std::move(c));
}

IndexVec IndexVec::without_front(int count) const {
  IndexVec out;
  out.coords_.assign(coords_.begin() + count, coords_.end());
  return out;
}

IndexVec IndexVec::prefix(int count) const {
  IndexVec out;
  out.coords_.assign(coords_.begin(), coords_.begin() + count);
  return out;
}

int IndexVec::coordinate_sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool IndexVec::dominated_by(const IndexVec& other) const {
  if (other.rank() != rank()) return false;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] > other.coords_[k]) return false;
  }
  return true;
}

std::string IndexVec::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

}  // namespace hdpart
