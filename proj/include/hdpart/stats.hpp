#pragma once

#include <optional>

#include <json.hpp>

#include "hdpart/diagram.hpp"
#include "hdpart/partition.hpp"

namespace hdpart {

/// ch(i) = i_1 + ... + i_d - d + 1.
Entry cohook(const IndexVec& idx);

struct StatRecord {
  Entry volume = 0;
  Entry cor = 0;
  Entry cr = 0;
  Entry ch_volume = 0;
  Entry c_stat = 0;
  Entry p_stat = 0;
  std::optional<Entry> trace;  // plane partitions only

  bool operator==(const StatRecord&) const = default;
};

/// All statistics from a single corner pass.
StatRecord compute_stats(const DdPartition& pi);

Entry ch_volume(const DdPartition& pi);
/// |rho|_cr: cohooks summed over the maximal cells of a lower set.
Entry cr_weight(const DiagramSet& rho);
/// Sum of the diagonal of a plane partition; UnsupportedRank otherwise.
Entry trace(const DdPartition& pi);
/// Sum of i_1 over corners.
Entry c_stat(const DdPartition& pi);
/// Sum of i_1 + 2 i_2 + ... + d i_d over corners.
Entry p_stat(const DdPartition& pi);

nlohmann::json to_json(const StatRecord& s);

}  // namespace hdpart
