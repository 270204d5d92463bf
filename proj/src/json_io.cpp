#include "hdpart/json_io.hpp"

#include "hdpart/errors.hpp"

namespace hdpart {

using nlohmann::json;

namespace {

json nest(const NdArray& a, int axis, std::size_t offset) {
  json out = json::array();
  const Box& box = a.box();
  for (int i = 0; i < box.extent(axis); ++i) {
    const std::size_t at = offset + static_cast<std::size_t>(i) * box.stride(axis);
    if (axis + 1 == box.rank()) {
      out.push_back(a.at_linear(at));
    } else {
      out.push_back(nest(a, axis + 1, at));
    }
  }
  return out;
}

void measure(const json& j, int depth, std::vector<int>& extents) {
  if (!j.is_array()) return;
  if (static_cast<int>(extents.size()) <= depth) extents.push_back(0);
  extents[depth] = std::max(extents[depth], static_cast<int>(j.size()));
  for (const auto& item : j) measure(item, depth + 1, extents);
}

void fill(const json& j, std::vector<int>& prefix, int rank, NdArray& out) {
  if (static_cast<int>(prefix.size()) == rank) {
    if (!j.is_number_integer()) throw InvalidArgument("array leaves must be integers");
    const auto v = j.get<Entry>();
    if (v < 0) throw InvalidArgument("array entries must be non-negative");
    if (v != 0) out.set(IndexVec(prefix), v);
    return;
  }
  if (!j.is_array()) throw InvalidArgument("array nesting depth does not match rank");
  for (std::size_t i = 0; i < j.size(); ++i) {
    prefix.push_back(static_cast<int>(i) + 1);
    fill(j[i], prefix, rank, out);
    prefix.pop_back();
  }
}

}  // namespace

json to_json(const NdArray& array) {
  const NdArray t = array.trimmed();
  return json{{"rank", t.rank()}, {"bounds", t.bounds()}, {"entries", nest(t, 0, 0)}};
}

json to_json(const DdPartition& pi) { return to_json(pi.array()); }

json to_json(const DiagramSet& set) {
  json cells = json::array();
  for (const auto& c : set) cells.push_back(std::vector<int>(c.coords().begin(), c.coords().end()));
  return json{{"rank", set.rank()}, {"cells", std::move(cells)}};
}

NdArray ndarray_from_json(const json& j) {
  const json& entries = j.is_object() ? j.at("entries") : j;
  std::vector<int> extents;
  measure(entries, 0, extents);
  int rank = static_cast<int>(extents.size());
  if (j.is_object() && j.contains("rank")) rank = j.at("rank").get<int>();
  if (rank < 1) throw InvalidArgument("array rank must be at least 1");
  extents.resize(rank, 1);
  for (int& e : extents) e = std::max(e, 1);
  if (j.is_object() && j.contains("bounds")) {
    auto declared = j.at("bounds").get<std::vector<int>>();
    if (static_cast<int>(declared.size()) != rank) throw InvalidArgument("bounds length must equal rank");
    for (int k = 0; k < rank; ++k) {
      if (declared[k] < extents[k]) throw InvalidArgument("entries exceed the declared bounds");
    }
    extents = std::move(declared);
  }
  NdArray out(extents);
  std::vector<int> prefix;
  fill(entries, prefix, rank, out);
  return out;
}

DdPartition partition_from_json(const json& j) { return DdPartition(ndarray_from_json(j)); }

DiagramSet diagram_from_json(const json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    std::vector<IndexVec> cells;
    for (const auto& c : j.at("cells")) cells.emplace_back(c.get<std::vector<int>>());
    return DiagramSet(rank, std::move(cells));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace hdpart
