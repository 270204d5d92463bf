#include "hdpart/stats.hpp"

#include "hdpart/errors.hpp"

namespace hdpart {

Entry cohook(const IndexVec& idx) { return idx.coordinate_sum() - idx.rank() + 1; }

StatRecord compute_stats(const DdPartition& pi) {
  StatRecord s;
  const int d = pi.rank();
  s.volume = pi.volume();
  for (const auto& c : corners(pi)) {
    ++s.cor;
    Entry hook = 1 - d;
    Entry weighted = 0;
    for (int k = 0; k < d; ++k) {
      hook += c[k];
      weighted += static_cast<Entry>(k + 1) * c[k];
    }
    s.ch_volume += hook;
    s.c_stat += c[0];
    s.p_stat += weighted;
  }
  s.cr = static_cast<Entry>(top_corners(pi).size());
  if (d == 2) s.trace = trace(pi);
  return s;
}

Entry ch_volume(const DdPartition& pi) {
  Entry total = 0;
  for (const auto& c : corners(pi)) total += cohook(c.prefix(pi.rank()));
  return total;
}

Entry cr_weight(const DiagramSet& rho) {
  Entry total = 0;
  for (const auto& c : rho.maximal_cells()) total += cohook(c);
  return total;
}

Entry trace(const DdPartition& pi) {
  if (pi.rank() != 2) throw UnsupportedRank("trace is defined for plane partitions (rank 2)");
  Entry total = 0;
  for (int i = 1; i <= std::min(pi.bounds()[0], pi.bounds()[1]); ++i) total += pi[IndexVec{i, i}];
  return total;
}

Entry c_stat(const DdPartition& pi) {
  Entry total = 0;
  for (const auto& c : corners(pi)) total += c[0];
  return total;
}

Entry p_stat(const DdPartition& pi) {
  Entry total = 0;
  for (const auto& c : corners(pi)) {
    for (int k = 0; k < pi.rank(); ++k) total += static_cast<Entry>(k + 1) * c[k];
  }
  return total;
}

nlohmann::json to_json(const StatRecord& s) {
  nlohmann::json j{{"volume", s.volume}, {"cor", s.cor},       {"cr", s.cr},
                   {"ch_volume", s.ch_volume}, {"c_stat", s.c_stat}, {"p_stat", s.p_stat}};
  if (s.trace) j["trace"] = *s.trace;
  return j;
}

}  // namespace hdpart
