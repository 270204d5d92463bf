#include "hdpart/ndarray.hpp"

#include <algorithm>
#include <numeric>

#include "hdpart/errors.hpp"

namespace hdpart {

Box::Box(std::vector<int> extents) : extents_(std::move(extents)) {
  if (extents_.empty()) throw UnsupportedRank("rank must be at least 1");
  for (int n : extents_) {
    if (n < 1) throw InvalidArgument("box extents must be positive");
  }
  strides_.assign(extents_.size(), 1);
  for (int k = rank() - 2; k >= 0; --k) strides_[k] = strides_[k + 1] * extents_[k + 1];
  size_ = strides_[0] * extents_[0];
}

bool Box::contains(const IndexVec& idx) const {
  if (idx.rank() != rank()) return false;
  for (int k = 0; k < rank(); ++k) {
    if (idx[k] > extents_[k]) return false;
  }
  return true;
}

std::size_t Box::linear(const IndexVec& idx) const {
  std::size_t at = 0;
  for (int k = 0; k < rank(); ++k) at += static_cast<std::size_t>(idx[k] - 1) * strides_[k];
  return at;
}

void Box::coords_of(std::size_t linear, std::span<int> out) const {
  for (int k = 0; k < rank(); ++k) {
    out[k] = static_cast<int>(linear / strides_[k]) + 1;
    linear %= strides_[k];
  }
}

IndexVec Box::index_of(std::size_t linear) const {
  std::vector<int> c(extents_.size());
  coords_of(linear, c);
  return IndexVec(std::move(c));
}

NdArray::NdArray(std::vector<int> bounds) : box_(std::move(bounds)), entries_(box_.size(), 0) {}

NdArray::NdArray(std::vector<int> bounds, std::vector<Entry> entries)
    : box_(std::move(bounds)), entries_(std::move(entries)) {
  if (entries_.size() != box_.size()) {
    throw InvalidArgument("entry count " + std::to_string(entries_.size()) +
                          " does not match box size " + std::to_string(box_.size()));
  }
  for (Entry e : entries_) {
    if (e < 0) throw InvalidArgument("array entries must be non-negative");
  }
}

Entry NdArray::operator[](const IndexVec& idx) const {
  if (idx.rank() != rank()) throw RankMismatch("index rank does not match array rank");
  return box_.contains(idx) ? entries_[box_.linear(idx)] : 0;
}

void NdArray::set(const IndexVec& idx, Entry value) {
  if (!box_.contains(idx)) throw InvalidArgument("index " + idx.to_string() + " outside the box");
  set_linear(box_.linear(idx), value);
}

void NdArray::set_linear(std::size_t linear, Entry value) {
  if (value < 0) throw InvalidArgument("array entries must be non-negative");
  entries_[linear] = value;
}

Entry NdArray::total() const { return std::accumulate(entries_.begin(), entries_.end(), Entry{0}); }

Entry NdArray::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool NdArray::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e == 0; });
}

NdArray NdArray::trimmed() const {
  if (entries_.empty()) return *this;
  std::vector<int> last(rank(), 1);
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) continue;
    box_.coords_of(i, c);
    for (int k = 0; k < rank(); ++k) last[k] = std::max(last[k], c[k]);
  }
  if (last == bounds()) return *this;
  return reboxed(std::move(last));
}

NdArray NdArray::reboxed(std::vector<int> bounds) const {
  NdArray out(std::move(bounds));
  if (out.rank() != rank()) throw RankMismatch("rebox must preserve rank");
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) continue;
    box_.coords_of(i, c);
    IndexVec idx(c);
    if (!out.box_.contains(idx)) throw InvalidArgument("nonzero entry outside the target box");
    out.entries_[out.box_.linear(idx)] = entries_[i];
  }
  return out;
}

NdArray NdArray::reversed() const {
  NdArray out(bounds());
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    box_.coords_of(i, c);
    std::size_t at = 0;
    for (int k = 0; k < rank(); ++k) at += static_cast<std::size_t>(box_.extent(k) - c[k]) * box_.stride(k);
    out.entries_[at] = entries_[i];
  }
  return out;
}

NdArray NdArray::first_slice(int first) const {
  if (rank() < 2) throw UnsupportedRank("first_slice needs rank >= 2");
  std::vector<int> rest(bounds().begin() + 1, bounds().end());
  NdArray out(rest);
  if (first < 1 || first > box_.extent(0)) return out;
  const std::size_t base = static_cast<std::size_t>(first - 1) * box_.stride(0);
  std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(base), out.size(), out.entries_.begin());
  return out;
}

bool operator==(const NdArray& a, const NdArray& b) {
  if (a.rank() != b.rank()) return false;
  if (a.bounds() == b.bounds()) return a.entries_ == b.entries_;
  const NdArray ta = a.trimmed();
  const NdArray tb = b.trimmed();
  return ta.bounds() == tb.bounds() && ta.entries_ == tb.entries_;
}

}  // namespace hdpart
