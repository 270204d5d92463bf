#include <doctest.h>

#include "hdpart/enumerate.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/series.hpp"
#include "hdpart/stats.hpp"
#include "hdpart/verify.hpp"
#include "oracles.hpp"

using namespace hdpart;

namespace {

TruncSeries from_oracle(const oracle::Series& s, int trunc) {
  TruncSeries out(trunc);
  for (const auto& [k, c] : s) out.add_to(k.first, k.second, c);
  return out;
}

oracle::Series product_over(const DiagramSet& rho, int trunc) {
  oracle::Series s = oracle::series_one();
  for (const auto& c : rho) {
    oracle::Coords x(c.coords().begin(), c.coords().end());
    s = oracle::times_geometric(s, static_cast<int>(oracle::cohook(x, x.size())), trunc);
  }
  return s;
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
  const auto g = geometric_factor(1, 2);
  CHECK(g.coeff(0, 0) == 1);
  CHECK(g.coeff(1, 1) == 1);
  CHECK(g.coeff(2, 2) == 1);
  CHECK(g.coeff(1, 2) == 0);
  const auto g3 = geometric_factor(3, 3);
  CHECK(g3.coeff(1, 3) == 1);
  CHECK(g3.t_marginal() == std::vector<mpz_class>{1, 0, 0, 1});
  CHECK_THROWS_AS(TruncSeries(3).add_to(2, 1, 1), InvalidArgument);
  CHECK(TruncSeries::monomial(2, 1, 3) == TruncSeries(2));
  const auto a = geometric_factor(1, 5) * geometric_factor(2, 5);
  CHECK(a * a.inverse() == TruncSeries::one(5));
  CHECK(TruncSeries::one(5).times_geometric(2, 3) ==
        geometric_factor(2, 5) * geometric_factor(2, 5) * geometric_factor(2, 5));
  CHECK(g.to_csv(false) == "t_deg,q_deg,coeff\n0,0,1\n1,1,1\n2,2,1\n");
  CHECK(g.to_csv(true) == "q_deg,coeff\n0,1\n1,1\n2,1\n");
  CHECK_THROWS_AS(TruncSeries(2) + TruncSeries(3), InvalidArgument);
}

TEST_CASE("shaped products against a naive expansion") {
  const DiagramSet unit(2, {IndexVec{1, 1}});
  CHECK(shaped_gf(unit, false, 3) == geometric_factor(1, 3));
  const auto two = diagram(DdPartition({1}, {2}));
  const auto exact = shaped_gf(two, true, 4);
  CHECK(exact.coeff(0, 0) == 0);
  CHECK(exact.coeff(1, 2) == 1);
  for (const auto& rho : {diagram(DdPartition({2}, {3, 2})), diagram(DdPartition({2, 2}, {2, 1, 1, 0})),
                          pyramid_diagram(3, 3)}) {
    CHECK(shaped_gf(rho, false, 7) == from_oracle(product_over(rho, 7), 7));
    CHECK(shaped_gf(rho, false, 6) == corner_series(rho, false, 6));
    CHECK(shaped_gf(rho, true, 6) == corner_series(rho, true, 6));
  }
}

TEST_CASE("MacMahon series") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(macmahon_series(d, 8).t_marginal() == oracle::macmahon_numbers(d, 8));
    CHECK(macmahon_number(d, 0) == 1);
    CHECK(macmahon_number(d, 1) == 1);
  }
  CHECK(macmahon_number(3, 2) == 4);
  CHECK(macmahon_number(3, 3) == 10);
  CHECK(macmahon_number(3, 6) == 141);
  CHECK(macmahon_number(2, 6) == 48);
  CHECK(macmahon_series(3, 5).t_marginal() == volume_counts(3, 5));
  for (int n = 0; n <= 7; ++n) CHECK(macmahon_number(2, n) == count_by_volume(2, n));
  CHECK(pyramid_gf(3, 8, 6) == macmahon_series(3, 6));
  CHECK(pyramid_gf(2, 1, 4) == geometric_factor(1, 4));
  CHECK(pyramid_gf(2, 2, 2).t_marginal()[2] == 3);
}

TEST_CASE("boxed products") {
  CHECK(boxed_gf({1}, 2) == geometric_factor(1, 2));
  CHECK(boxed_gf({2, 3}, 6) == trace_series(2, 3, 6));
  CHECK(boxed_gf({2, 2}, 6) == corner_series(diagram(DdPartition({2}, {2, 2})), false, 6));
  CHECK(boxed_gf({2, 2, 2}, 6) == corner_series(diagram(DdPartition({2, 2}, {2, 2, 2, 2})), false, 6));
}

TEST_CASE("distinct parts") {
  CHECK(distinct_part_count(1, 1) == 1);
  CHECK(distinct_part_count(5, 1) == 1);
  CHECK(distinct_part_count(3, 2) == 1);
  CHECK(distinct_part_count(6, 3) == 1);
  CHECK(distinct_part_count(2, 2) == 0);
  CHECK(distinct_part_count(10, 3) == 4);
  const auto g = distinct_parts_gf(2, 6);
  CHECK(g.t_marginal()[1] == 0);
  CHECK(g.t_marginal()[2] == 0);
  CHECK(g.t_marginal()[3] == 1);
  CHECK(cohook_multiplicity(3, 3) == 6);

  // sum t^cor q^{|pi|_p} over partitions, with corners confined to cells of
  // p-weight <= N (a lower set).
  for (int d : {2, 3}) {
    const int trunc = 7;
    std::vector<IndexVec> cells;
    auto pweight = [](const IndexVec& i) {
      Entry s = 0;
      for (int l = 0; l < i.rank(); ++l) s += (l + 1) * i[l];
      return s;
    };
    const Box b(std::vector<int>(d, trunc));
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (pweight(b.index_of(i)) <= trunc) cells.push_back(b.index_of(i));
    }
    TruncSeries brute(trunc);
    CornerWeightedSearch(DiagramSet(d, cells), trunc).with_cell_weights(pweight).run([&](const NdArray& pi, Entry w) {
      const auto s = compute_stats(DdPartition(pi));
      CHECK(s.p_stat == w);
      brute.add_to(static_cast<int>(s.cor), static_cast<int>(w), 1);
    });
    CHECK(brute == distinct_parts_gf(d, trunc));
  }
}
