#include <doctest.h>

#include <algorithm>

#include "hdpart/diagram.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/json_io.hpp"
#include "hdpart/partition.hpp"
#include "oracles.hpp"

using namespace hdpart;

namespace {

DdPartition fig1() { return DdPartition({2, 3}, {4, 3, 2, 3, 3, 0}); }

DiagramSet cells(int rank, std::vector<std::vector<int>> list) {
  std::vector<IndexVec> out;
  for (auto& c : list) out.emplace_back(std::move(c));
  return DiagramSet(rank, std::move(out));
}

std::vector<std::vector<int>> as_lists(const DiagramSet& s) {
  std::vector<std::vector<int>> out;
  for (const auto& c : s) out.emplace_back(c.coords().begin(), c.coords().end());
  return out;
}

}  // namespace

TEST_CASE("index vectors are 1-based and ordered") {
  CHECK_THROWS_AS(IndexVec({1, 0}), InvalidArgument);
  const IndexVec i{1, 2, 3};
  CHECK(i.rank() == 3);
  CHECK(i.stepped(0) == IndexVec{2, 2, 3});
  CHECK(i.extended(4) == IndexVec{1, 2, 3, 4});
  CHECK(i.without_front() == IndexVec{2, 3});
  CHECK(i.prefix(2) == IndexVec{1, 2});
  CHECK(i.coordinate_sum() == 6);
  CHECK(IndexVec{1, 1}.dominated_by(IndexVec{1, 2}));
  CHECK_FALSE(IndexVec{2, 1}.dominated_by(IndexVec{1, 2}));
  CHECK(IndexVec{1, 2} < IndexVec{2, 1});
}

TEST_CASE("arrays read zero outside their box and trim trailing zeros") {
  NdArray a({2, 3}, {1, 0, 2, 0, 0, 0});
  CHECK(a[IndexVec{1, 3}] == 2);
  CHECK(a[IndexVec{5, 7}] == 0);
  CHECK_THROWS_AS(a[IndexVec{1}], RankMismatch);
  CHECK_THROWS_AS(NdArray({2}, {1, -1}), InvalidArgument);
  CHECK_THROWS_AS(NdArray({2}, {1, 1, 1}), InvalidArgument);
  const NdArray t = a.trimmed();
  CHECK(t.bounds() == std::vector<int>{1, 3});
  CHECK(t == a);
  CHECK(NdArray({3, 3}).trimmed().bounds() == std::vector<int>{1, 1});
  CHECK(a.total() == 3);
  CHECK(a.max_entry() == 2);
  CHECK(a.reversed()[IndexVec{2, 1}] == 2);
  CHECK(a.reboxed({4, 4})[IndexVec{1, 3}] == 2);
  CHECK_THROWS(a.reboxed({1, 2}));
  CHECK(a.first_slice(1) == NdArray({3}, {1, 0, 2}));
}

TEST_CASE("partition validation") {
  CHECK(is_partition(NdArray({2, 2}, {2, 1, 1, 1})));
  CHECK_FALSE(is_partition(NdArray({2, 2}, {1, 2, 1, 1})));
  CHECK_THROWS_AS(DdPartition({1, 3}, {1, 0, 1}), InvalidPartition);
  CHECK(fig1().volume() == 15);
  CHECK(fig1().largest() == 4);
  CHECK(DdPartition::zero(3).is_zero());
  CHECK(DdPartition::zero(2) == DdPartition({2, 2}, {0, 0, 0, 0}));
}

TEST_CASE("validation agrees with the definition on every small array") {
  for (const oracle::Dims& dims : {oracle::Dims{2, 3}, oracle::Dims{2, 2, 2}, oracle::Dims{4}}) {
    oracle::odometer(dims, 2, [&](const oracle::Flat& v) {
      const NdArray a(dims, std::vector<Entry>(v.begin(), v.end()));
      CHECK(is_partition(a) == oracle::is_partition(dims, v));
    });
  }
}

TEST_CASE("diagram, shape and sh1 of the running example") {
  const auto pi = fig1();
  const auto d = diagram(pi);
  CHECK(d.size() == 15);
  CHECK(d.contains(IndexVec{1, 1, 4}));
  CHECK(d.is_lower_set());
  CHECK(shape(pi) == diagram(DdPartition({2}, {3, 2})));
  CHECK(sh1(pi) == diagram(DdPartition({3}, {4, 3, 2})));
  CHECK(diagram(DdPartition({1}, {2})) == cells(2, {{1, 1}, {1, 2}}));
  CHECK(diagram(DdPartition::zero(2)).empty());
  CHECK(shape(DdPartition({2, 2}, {1, 1, 1, 1})) == cells(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(sh1(DdPartition({2, 3}, {1, 1, 1, 1, 1, 1})) == cells(2, {{1, 1}, {2, 1}, {3, 1}}));
  CHECK(sh1(DdPartition::zero(2)).empty());
}

TEST_CASE("corners and top corners of the running example") {
  const auto pi = fig1();
  CHECK(as_lists(corners(pi)) ==
        std::vector<std::vector<int>>{{1, 1, 4}, {1, 3, 1}, {1, 3, 2}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3}});
  CHECK(as_lists(top_corners(pi)) == std::vector<std::vector<int>>{{1, 1, 4}, {1, 3, 2}, {2, 2, 3}});
  const DdPartition square({2, 2}, {1, 1, 1, 1});
  CHECK(as_lists(corners(square)) == std::vector<std::vector<int>>{{2, 2, 1}});
  CHECK(as_lists(top_corners(square)) == std::vector<std::vector<int>>{{2, 2, 1}});
  CHECK(corners(DdPartition::zero(2)).empty());
  CHECK(top_corners(DdPartition::zero(2)).empty());
}

TEST_CASE("corners match the definition on every small partition") {
  for (const oracle::Dims& dims : {oracle::Dims{3}, oracle::Dims{2, 3}, oracle::Dims{2, 2, 2}}) {
    for (const auto& v : oracle::boxed_partitions(dims, 3)) {
      const DdPartition pi(dims, std::vector<Entry>(v.begin(), v.end()));
      auto expected = oracle::corners(dims, v);
      std::sort(expected.begin(), expected.end());
      CHECK(as_lists(corners(pi)) == expected);
      CHECK(partition_from_diagram(diagram(pi)) == pi);
      CHECK(partition_from_top_corners(top_corners(pi), pi.rank()) == pi);
      // Top corners are the maximal cells of the diagram.
      CHECK(top_corners(pi) == diagram(pi).maximal_cells());
    }
  }
}

TEST_CASE("pyramid diagrams") {
  CHECK(pyramid_diagram(2, 1) == cells(2, {{1, 1}}));
  CHECK(pyramid_diagram(2, 2) == cells(2, {{1, 1}, {1, 2}, {2, 1}}));
  CHECK(pyramid_diagram(3, 2).size() == 4);
  CHECK(pyramid_diagram(3, 4).size() == 20);
  CHECK(pyramid_diagram(4, 3).is_lower_set());
}

TEST_CASE("diagram sets") {
  const auto rho = diagram(DdPartition({2}, {3, 2}));
  CHECK(rho.maximal_cells() == cells(2, {{1, 3}, {2, 2}}));
  CHECK(rho.bounding_extents() == std::vector<int>{2, 3});
  CHECK(DiagramSet(3).bounding_extents() == std::vector<int>{1, 1, 1});
  CHECK_FALSE(cells(2, {{1, 2}}).is_lower_set());
  CHECK(cells(2, {{1, 1}}).is_subset_of(rho));
  CHECK_THROWS_AS(partition_from_diagram(cells(2, {{2, 1}})), InvalidPartition);
  CHECK_THROWS_AS(DiagramSet(2, {IndexVec{1, 1, 1}}), RankMismatch);
}

TEST_CASE("json round trips") {
  const auto pi = fig1();
  const auto j = to_json(pi);
  CHECK(j["rank"] == 2);
  CHECK(j["entries"] == nlohmann::json::parse("[[4,3,2],[3,3,0]]"));
  CHECK(partition_from_json(j) == pi);
  CHECK(partition_from_json(nlohmann::json::parse("[[4,3,2],[3,3]]")) == pi);
  CHECK(ndarray_from_json(nlohmann::json::parse(R"({"rank": 3, "entries": [[[1]]]})")).rank() == 3);
  CHECK_THROWS_AS(ndarray_from_json(nlohmann::json::parse(R"({"rank": 3, "entries": [[1]]})")), InvalidArgument);
  CHECK(diagram_from_json(to_json(diagram(pi))) == diagram(pi));
  CHECK_THROWS_AS(partition_from_json(nlohmann::json::parse("[[1,2]]")), InvalidPartition);
  CHECK_THROWS_AS(ndarray_from_json(nlohmann::json::parse(R"([[1, "a"]])")), InvalidArgument);
  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::parse(R"({"cells": []})")), InvalidArgument);
}
