#include "hdpart/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "hdpart/bijection.hpp"
#include "hdpart/enumerate.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/groth.hpp"
#include "hdpart/lpp.hpp"
#include "hdpart/stats.hpp"

namespace hdpart {

TruncSeries corner_series(const DiagramSet& rho, bool exact_shape, int trunc) {
  TruncSeries out(trunc);
  CornerWeightedSearch search(rho, trunc);
  if (exact_shape) search.exact_shape();
  const Box box = search.box();
  search.run([&](const NdArray& pi, Entry ch) {
    Entry cor = 0;
    for (std::size_t i = 0; i < box.size(); ++i) {
      const Entry v = pi.at_linear(i);
      if (v == 0) continue;
      const IndexVec idx = box.index_of(i);
      Entry succ = 0;
      for (int l = 0; l < box.rank(); ++l) succ = std::max(succ, pi[idx.stepped(l)]);
      cor += v - succ;
    }
    out.add_to(static_cast<int>(cor), static_cast<int>(ch), 1);
  });
  return out;
}

TruncSeries trace_series(int n1, int n2, int trunc) {
  TruncSeries out(trunc);
  if (trunc == 0) return TruncSeries::one(0);
  auto search = PartitionSearch::boxed({n1, n2, trunc});
  search.with_volume_budget(trunc);
  search.run([&](const NdArray& pi, Entry vol) {
    Entry tr = 0;
    for (int i = 1; i <= std::min(n1, n2); ++i) tr += pi[IndexVec{i, i}];
    out.add_to(static_cast<int>(tr), static_cast<int>(vol), 1);
  });
  return out;
}

namespace {

// Collects named checks; the first failure is kept for the report.
class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}
  void operator()(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.pass) {
      r_.pass = false;
      r_.failure = what;
    }
  }

 private:
  SuiteResult& r_;
};

DiagramSet box_diagram(const std::vector<int>& dims) {
  std::vector<IndexVec> cells;
  const Box b(dims);
  for (std::size_t i = 0; i < b.size(); ++i) cells.push_back(b.index_of(i));
  return DiagramSet(static_cast<int>(dims.size()), std::move(cells));
}

DiagramSet diagram_of(std::vector<int> bounds, std::vector<Entry> entries) {
  return diagram(DdPartition(std::move(bounds), std::move(entries)));
}

void suite_bij(Checker& check, const VerifyOptions&) {
  const std::vector<std::vector<int>> boxes{{3, 3, 3}, {2, 2, 2, 2}};
  for (const auto& dims : boxes) {
    const std::vector<int> base(dims.begin(), dims.end() - 1);
    std::set<std::vector<Entry>> images;
    bool roundtrip = true, weights = true, grid = true;
    MatrixSearch(box_diagram(base)).with_last_passage_cap(dims.back()).run(
        [&](const NdArray& a, const NdArray& g, Entry) {
          const DdPartition pi = phi(a);
          grid = grid && pi.array() == g;
          roundtrip = roundtrip && phi_inverse(pi) == a;
          weights = weights && weight_of_matrix(a) == weight_of_partition(pi);
          const NdArray boxed = pi.array().trimmed().reboxed(base);
          images.emplace(boxed.entries().begin(), boxed.entries().end());
        });
    std::set<std::vector<Entry>> expected;
    for (const auto& pi : boxed_partitions(dims)) {
      expected.emplace(pi.array().entries().begin(), pi.array().entries().end());
      roundtrip = roundtrip && phi(phi_inverse(pi)) == pi;
    }
    std::ostringstream name;
    for (int n : dims) name << n << ' ';
    check(grid, "search grid differs from phi on box " + name.str());
    check(roundtrip, "roundtrip failed on box " + name.str());
    check(weights, "weight mismatch on box " + name.str());
    check(images == expected, "image set differs from P on box " + name.str());
  }
}

std::vector<DiagramSet> shaped_family() {
  return {
      diagram_of({1}, {1}),
      diagram_of({2}, {2, 1}),
      diagram_of({2}, {3, 2}),
      diagram_of({1, 1}, {1}),
      diagram_of({2, 1}, {1, 1}),
      diagram_of({2, 3}, {4, 3, 2, 3, 3, 0}),
  };
}

void suite_shaped(Checker& check, const VerifyOptions& o) {
  for (const auto& rho : shaped_family()) {
    for (bool exact : {false, true}) {
      check(corner_series(rho, exact, o.trunc) == shaped_gf(rho, exact, o.trunc),
            "shaped identity failed for rho with " + std::to_string(rho.size()) + " cells" +
                (exact ? " (exact shape)" : ""));
    }
  }
}

void suite_full(Checker& check, const VerifyOptions& o) {
  for (int d : {2, 3}) {
    const auto series = macmahon_series(d, o.trunc).t_marginal();
    check(ch_volume_counts(d, o.trunc) == series, "matrix ch-volume counts differ from m_d, d=" + std::to_string(d));
    check(ch_volume_counts_direct(d, o.trunc) == series,
          "partition ch-volume counts differ from m_d, d=" + std::to_string(d));
  }
}

void suite_equidist(Checker& check, const VerifyOptions& o) {
  const auto lhs = corner_series(box_diagram({o.n1, o.n2}), false, o.trunc);
  const auto rhs = trace_series(o.n1, o.n2, o.trunc);
  check(lhs == rhs, "(cor, ch) and (tr, vol) tables differ");
  check(lhs == boxed_gf({o.n1, o.n2}, o.trunc), "tables differ from the product formula");
}

MultiPoly cauchy_product(const std::vector<int>& base, int degree) {
  MultiPoly out = MultiPoly::constant(base, 1);
  const Box b(base);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const IndexVec idx = b.index_of(i);
    MultiPoly factor(base);
    std::vector<int> key(factor.key_length(), 0);
    for (int e = 0; e <= degree; ++e) {
      for (int l = 0; l < b.rank(); ++l) key[factor.offset(l) + idx[l] - 1] = e;
      factor.add_term(key, 1);
    }
    out = out.multiply(factor, degree, 0);
  }
  return out;
}

void suite_cauchy(Checker& check, const VerifyOptions&) {
  const std::vector<std::vector<int>> bases{{1, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 2, 2}, {1, 2, 3}};
  const int degree = 4;
  for (const auto& base : bases) {
    std::vector<int> dims = base;
    dims.push_back(degree);
    std::vector<int> family(base.begin() + 1, base.end());
    family.push_back(degree);
    MultiPoly sum(base);
    for (const auto& rho : boxed_partitions(family)) sum = sum + groth_poly(rho, dims);
    const auto expected = cauchy_product(base, degree);
    check(sum.truncated(0, degree) == expected, "Cauchy identity failed");
    check(boxed_poly(dims).truncated(0, degree) == expected, "boxed polynomial differs from the Cauchy product");
  }
}

RationalPoly ones_except_first(const MultiPoly& p, std::optional<mpq_class> first_var = std::nullopt) {
  Assignment values(p.alphabet_count());
  for (int l = 1; l < p.alphabet_count(); ++l) values[l].assign(p.alphabets()[l], mpq_class(1));
  if (first_var) {
    values[0].assign(p.alphabets()[0], std::nullopt);
    values[0][0] = *first_var;
  }
  return specialize(p, values);
}

void suite_branch(Checker& check, const VerifyOptions&) {
  struct Case {
    DdPartition rho;
    std::vector<int> rest;  // n_2, ..., n_{d+1}
    int n;
  };
  const std::vector<Case> cases{
      {DdPartition({1}, {1}), {2, 2}, 2},
      {DdPartition({2}, {2, 1}), {2, 2}, 2},
      {DdPartition({2}, {2, 2}), {2, 3}, 2},
      {DdPartition({1, 2}, {2, 1}), {2, 2, 2}, 2},
      {DdPartition({2, 2}, {1, 1, 1, 0}), {2, 2, 2}, 1},
  };
  for (const auto& c : cases) {
    std::vector<int> big{c.n + 1}, small{c.n};
    big.insert(big.end(), c.rest.begin(), c.rest.end());
    small.insert(small.end(), c.rest.begin(), c.rest.end());
    const auto lhs = ones_except_first(groth_poly(c.rho, big), mpq_class(1));
    RationalPoly rhs(lhs.alphabets());
    for (const auto& sigma : lower_subsets(diagram(c.rho))) {
      rhs = rhs + ones_except_first(groth_poly(sigma, small));
    }
    check(lhs == rhs, "branching rule failed");
  }
  // Boxed specialization, with MacMahon's product for d = 2.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 1; c <= 3; ++c) {
        const auto g = groth_poly(box_diagram({b, c}), {a + 1, b, c});
        Assignment ones(2);
        ones[0].assign(a + 1, mpq_class(1));
        ones[1].assign(b, mpq_class(1));
        const mpq_class value = constant_value(specialize(g, ones));
        mpq_class product = 1;
        for (int i = 1; i <= a; ++i)
          for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) product *= mpq_class(i + j + k - 1, i + j + k - 2);
        check(value == product, "boxed specialization differs from MacMahon's product");
        check(value == mpq_class(count_boxed_partitions({a, b, c})), "boxed specialization differs from the count");
      }
    }
  }
  {
    const auto g = groth_poly(box_diagram({2, 2, 1}), {2, 2, 2, 1});
    Assignment ones(3);
    ones[0].assign(2, mpq_class(1));
    ones[1].assign(2, mpq_class(1));
    ones[2].assign(2, mpq_class(1));
    check(constant_value(specialize(g, ones)) == mpq_class(count_boxed_partitions({1, 2, 2, 1})),
          "boxed specialization failed for d = 3");
  }
}

void suite_qsym(Checker& check, const VerifyOptions&) {
  for (const auto& rho : boxed_partitions({2, 2, 2})) {
    const auto g = groth_poly(rho, {3, 2, 2, 2});
    check(check_quasisymmetric(g, 0).holds, "g_rho is not quasisymmetric");
  }
  const auto g = groth_poly(DdPartition({2, 2}, {2, 1, 1, 0}), {3, 2, 2, 2});
  check(!check_symmetric(g, 0).holds, "g for rho [[2,1],[1]] unexpectedly symmetric");
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}}) {
    const auto f = boxed_poly(dims);
    for (int l = 0; l < f.alphabet_count(); ++l) {
      check(check_quasisymmetric(f, l).holds, "boxed polynomial not quasisymmetric");
    }
  }
}

void suite_monomial(Checker& check, const VerifyOptions&) {
  for (const auto& dims : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 2, 2}, {3, 2, 2}}) {
    const std::vector<int> base(dims.begin(), dims.end() - 1);
    check(reconstruct(monomial_expansion(dims), base) == boxed_poly(dims), "monomial expansion mismatch");
  }
}

void suite_lpp(Checker& check, const VerifyOptions& o) {
  struct Point {
    std::vector<int> dims;
    DdPartition rho;
  };
  const std::vector<Point> points{
      {{2, 2}, DdPartition::zero(1)},
      {{2, 2}, DdPartition({1}, {1})},
      {{2, 2}, DdPartition({2}, {1, 1})},
      {{2, 2}, DdPartition({2}, {2, 1})},
      {{2, 2, 2}, DdPartition::zero(2)},
      {{2, 2, 2}, DdPartition({1, 1}, {1})},
      {{2, 2, 2}, DdPartition({2, 2}, {1, 1, 1, 0})},
      {{2, 2, 2}, DdPartition({2, 2}, {2, 1, 1, 0})},
  };
  for (const mpq_class& q : {mpq_class(1, 4), mpq_class(1, 2)}) {
    for (const auto& pt : points) {
      const GeomParams params{q, pt.dims, o.seed};
      const auto exact = joint_probability_exact(pt.rho, pt.dims, q);
      const auto est = monte_carlo_joint(pt.rho.array(), params, o.samples);
      check(std::abs(z_score(est, exact)) <= 4.0, "Monte Carlo frequency is more than 4 sigma from the exact value");
    }
    for (int d : {2, 3}) {
      for (int n = 0; n <= 4; ++n) {
        mpq_class expected = 1;
        mpq_class qp = 1;
        for (int k = 0; k <= n; ++k) qp *= q;
        expected -= qp;
        check(single_point_cdf(std::vector<int>(d, 1), n, q) == expected, "single point cdf differs from 1 - q^(n+1)");
      }
    }
  }
}

using SuiteFn = std::function<void(Checker&, const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"bij", suite_bij},         {"shaped", suite_shaped}, {"full", suite_full},
      {"equidist", suite_equidist}, {"cauchy", suite_cauchy}, {"branch", suite_branch},
      {"qsym", suite_qsym},       {"monomial", suite_monomial}, {"lpp", suite_lpp},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    found = true;
    SuiteResult r;
    r.name = suite;
    const auto start = std::chrono::steady_clock::now();
    Checker check(r);
    try {
      fn(check, opts);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  if (!found) throw InvalidArgument("unknown suite '" + name + "'");
  return out;
}

nlohmann::json to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json suites = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    nlohmann::json j{{"name", r.name}, {"pass", r.pass}, {"checks", r.checks}};
    if (!r.pass) j["failure"] = r.failure;
    suites.push_back(j);
  }
  return {{"pass", all}, {"suites", suites}};
}

}  // namespace hdpart
