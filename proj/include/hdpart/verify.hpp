#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdpart/diagram.hpp"
#include "hdpart/series.hpp"

namespace hdpart {

/// sum t^{cor(pi)} q^{|pi|_ch} over partitions with sh(pi) inside `rho`
/// (or equal to it), by enumeration.
TruncSeries corner_series(const DiagramSet& rho, bool exact_shape, int trunc);
/// sum t^{tr(pi)} q^{|pi|} over plane partitions with base in [n_1] x [n_2].
TruncSeries trace_series(int n1, int n2, int trunc);

struct VerifyOptions {
  int n1 = 2;
  int n2 = 3;
  int trunc = 6;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  int checks = 0;
  std::string failure;
  double seconds = 0;
};

/// bij, shaped, full, equidist, cauchy, branch, qsym, monomial, lpp.
const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all". Throws InvalidArgument on an
/// unknown name.
std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts);

nlohmann::json to_json(const std::vector<SuiteResult>& results);

}  // namespace hdpart
