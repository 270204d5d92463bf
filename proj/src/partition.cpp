#include "hdpart/partition.hpp"

#include "hdpart/errors.hpp"

namespace hdpart {

bool is_partition(const NdArray& array) {
  const Box& box = array.box();
  const auto values = array.entries();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (int k = 0; k < box.rank(); ++k) {
      const std::size_t stride = box.stride(k);
      const bool has_next = (i / stride) % static_cast<std::size_t>(box.extent(k)) + 1 <
                            static_cast<std::size_t>(box.extent(k));
      if (has_next && values[i + stride] > values[i]) return false;
    }
  }
  return true;
}

DdPartition::DdPartition(NdArray array) : array_(std::move(array)) {
  if (!is_partition(array_)) throw InvalidPartition("entries are not weakly decreasing along every axis");
}

DdPartition::DdPartition(std::vector<int> bounds, std::vector<Entry> entries)
    : DdPartition(NdArray(std::move(bounds), std::move(entries))) {}

DdPartition DdPartition::zero(int rank) { return trusted(NdArray(std::vector<int>(rank, 1))); }

DdPartition DdPartition::trusted(NdArray array) {
  DdPartition pi;
  pi.array_ = std::move(array);
  return pi;
}

Entry DdPartition::largest() const { return array_.size() ? array_.at_linear(0) : 0; }

}  // namespace hdpart
