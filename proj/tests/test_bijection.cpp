#include <doctest.h>

#include <random>
#include <set>

#include "hdpart/bijection.hpp"
#include "hdpart/enumerate.hpp"
#include "hdpart/errors.hpp"
#include "oracles.hpp"

using namespace hdpart;

namespace {

const NdArray kFig1Matrix({2, 3}, {1, 0, 2, 0, 3, 0});
const DdPartition kFig1({2, 3}, {4, 3, 2, 3, 3, 0});

std::vector<std::vector<int>> exponents(const WeightMonomial& w, const std::vector<int>& dims) {
  std::vector<std::vector<int>> out(w.rank());
  for (int l = 0; l < w.rank(); ++l) {
    for (int j = 1; j <= dims[l]; ++j) out[l].push_back(static_cast<int>(w.exponent(l, j)));
  }
  return out;
}

}  // namespace

TEST_CASE("phi on hand-computed cases") {
  CHECK(phi(NdArray({2, 2})).is_zero());
  CHECK(phi(kFig1Matrix) == kFig1);
  CHECK(phi(NdArray({2}, {2, 3})) == DdPartition({2}, {5, 3}));
  CHECK(phi_inverse(kFig1) == kFig1Matrix);
  CHECK(phi_inverse(DdPartition({2}, {5, 3})) == NdArray({2}, {2, 3}));
  CHECK(phi_inverse(DdPartition::zero(2)).is_zero());
  CHECK_THROWS_AS(phi_inverse(NdArray({2}, {1, 2})), InvalidPartition);
}

TEST_CASE("phi agrees with the path-maximum oracle") {
  for (const oracle::Dims& dims : {oracle::Dims{2, 3}, oracle::Dims{2, 2, 2}, oracle::Dims{3}}) {
    oracle::odometer(dims, 2, [&](const oracle::Flat& a) {
      const NdArray m(dims, std::vector<Entry>(a.begin(), a.end()));
      const auto g = oracle::last_passage(dims, a);
      CHECK(phi(m).array() == NdArray(dims, std::vector<Entry>(g.begin(), g.end())));
    });
  }
}

TEST_CASE("weights of matrices and partitions") {
  CHECK(weight_of_matrix(NdArray({2, 2})).is_one());
  CHECK(weight_of_partition(DdPartition::zero(2)).is_one());
  const auto wa = weight_of_matrix(kFig1Matrix);
  CHECK(exponents(wa, {2, 3}) == std::vector<std::vector<int>>{{3, 3}, {1, 3, 2}});
  CHECK(weight_of_partition(kFig1) == wa);
  const auto w1 = weight_of_matrix(NdArray({1}, {2}));
  CHECK(w1.exponent(0, 1) == 2);
  CHECK(w1.to_string() == "x1_1^2");
  const auto single = weight_of_partition(DdPartition({1, 1}, {1}));
  CHECK(single.exponent(0, 1) == 1);
  CHECK(single.exponent(1, 1) == 1);
  CHECK(single.degree(0) == 1);
}

TEST_CASE("weight preservation on random sparse matrices") {
  std::mt19937_64 rng(7);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 300; ++trial) {
      oracle::Dims dims(d);
      for (auto& n : dims) n = 1 + static_cast<int>(rng() % 3);
      oracle::Flat a(oracle::volume_of(dims));
      for (auto& x : a) x = rng() % 5 == 0 ? static_cast<long>(1 + rng() % 4) : 0;
      const NdArray m(dims, std::vector<Entry>(a.begin(), a.end()));
      const DdPartition pi = phi(m);
      CHECK(phi_inverse(pi) == m);
      CHECK(exponents(weight_of_partition(pi), dims) == oracle::corner_weight(dims, oracle::last_passage(dims, a)));
      CHECK(exponents(weight_of_matrix(m), dims) == oracle::matrix_weight(dims, a));
    }
  }
}

TEST_CASE("phi is a bijection onto boxed partitions") {
  const oracle::Dims dims{2, 2};
  const long cap = 3;
  std::set<std::vector<Entry>> images;
  oracle::odometer(dims, cap, [&](const oracle::Flat& a) {
    const auto g = oracle::last_passage(dims, a);
    if (g[0] > cap) return;
    const NdArray m(dims, std::vector<Entry>(a.begin(), a.end()));
    const auto boxed = phi(m).array().reboxed(dims);
    images.emplace(boxed.entries().begin(), boxed.entries().end());
  });
  std::set<std::vector<Entry>> expected;
  for (const auto& v : oracle::boxed_partitions(dims, cap)) expected.emplace(v.begin(), v.end());
  CHECK(images == expected);
}

TEST_CASE("membership in M(rho, n)") {
  const auto rho = diagram(DdPartition({2}, {3, 2}));
  CHECK(check_membership(NdArray({2, 2}), rho, 0));
  CHECK(check_membership(kFig1Matrix, rho, 4));
  CHECK_FALSE(check_membership(kFig1Matrix, rho, 3));
  CHECK(check_membership(kFig1Matrix, rho));
  CHECK_FALSE(check_membership(NdArray({2, 3}, {0, 0, 0, 0, 0, 1}), rho));
}
