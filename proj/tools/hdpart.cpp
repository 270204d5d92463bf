// hdpart: command-line front end for the hdpart library.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdpart/bijection.hpp"
#include "hdpart/enumerate.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/groth.hpp"
#include "hdpart/json_io.hpp"
#include "hdpart/lpp.hpp"
#include "hdpart/parallel.hpp"
#include "hdpart/series.hpp"
#include "hdpart/stats.hpp"
#include "hdpart/verify.hpp"

using nlohmann::json;
using namespace hdpart;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

// Inline JSON when the text starts like JSON, otherwise a file path.
json load_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("cannot parse JSON argument: ") + e.what());
    }
  }
  std::ifstream in(text);
  if (!in) throw InvalidArgument("cannot open " + text);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument("cannot parse " + text + ": " + e.what());
  }
}

// A diagram given directly ({"cells": ...}) or as the partition it is the diagram of.
DiagramSet load_shape(const std::string& text) {
  const json j = load_json(text);
  if (j.is_object() && j.contains("cells")) return diagram_from_json(j);
  return diagram(partition_from_json(j));
}

json strings(const std::vector<mpz_class>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::string decimal(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

void print_counts(const std::string& format, const json& header, const std::vector<mpz_class>& counts) {
  if (format == "csv") {
    std::cout << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) std::cout << n << "," << counts[n].get_str() << "\n";
    return;
  }
  json out = header;
  out["counts"] = strings(counts);
  std::cout << out.dump() << "\n";
}

json series_json(const TruncSeries& s, bool marginal) {
  json out{{"trunc", s.trunc()}};
  if (marginal) {
    out["marginal"] = strings(s.t_marginal());
    return out;
  }
  json terms = json::array();
  for (int q = 0; q <= s.trunc(); ++q) {
    for (int t = 0; t <= q; ++t) {
      if (s.coeff(t, q) != 0) terms.push_back({{"t_deg", t}, {"q_deg", q}, {"coeff", s.coeff(t, q).get_str()}});
    }
  }
  out["terms"] = terms;
  return out;
}

void print_poly(const MultiPoly& p, const std::string& format) {
  if (format == "pretty") {
    std::cout << pretty(p) << "\n";
  } else {
    std::cout << to_json(p).dump() << "\n";
  }
}

json expansion_json(const MonomialExpansion& e) {
  json out = json::array();
  for (const auto& [comps, m] : e) {
    json parts = json::array();
    for (const auto& c : comps) parts.push_back(c.parts());
    out.push_back({{"compositions", parts}, {"coeff", m.get_str()}});
  }
  return out;
}

json key_json(const MultiPoly& p, const std::vector<int>& key) {
  json out = json::array();
  for (int a = 0; a < p.alphabet_count(); ++a) {
    out.push_back(std::vector<int>(key.begin() + p.offset(a), key.begin() + p.offset(a + 1)));
  }
  return out;
}

json check_json(const MultiPoly& p, const SymmetryCheck& c) {
  json out{{"holds", c.holds}};
  if (c.witness) {
    out["witness"] = {{{"exps", key_json(p, c.witness->first)}, {"coeff", c.first_coeff.get_str()}},
                      {{"exps", key_json(p, c.witness->second)}, {"coeff", c.second_coeff.get_str()}}};
  }
  return out;
}

mpq_class parse_rational(const std::string& text) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      mpq_class q(text);
      q.canonicalize();
      return q;
    }
    // Exact decimal: 0.25 -> 25/100.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    mpq_class q(mpz_class(digits), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("cannot parse rational '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-dimensional partitions, corner-hook statistics and Grothendieck polynomials"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: HDPART_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  // count
  auto* count = app.add_subcommand("count", "Counts of partitions and matrices");
  count->require_subcommand(1);
  std::vector<int> dims;
  int d = 2;
  int upto = 6;
  bool direct = false;
  auto* count_boxed = count->add_subcommand("boxed", "|P(n_1, ..., n_{d+1})|");
  count_boxed->add_option("--dims", dims, "n_1,...,n_{d+1}")->delimiter(',')->required();
  auto* count_volume = count->add_subcommand("volume", "p_d(n) for n = 0..upto");
  auto* count_macmahon = count->add_subcommand("macmahon", "m_d(n) for n = 0..upto from the product formula");
  auto* count_chvol = count->add_subcommand("chvol", "partitions by corner-hook volume, n = 0..upto");
  for (auto* c : {count_volume, count_macmahon, count_chvol}) {
    c->add_option("--d", d, "Dimension")->required()->check(CLI::PositiveNumber);
    c->add_option("--upto", upto, "Largest n")->check(CLI::NonNegativeNumber);
    add_format(c, {"json", "csv"});
  }
  count_chvol->add_flag("--direct", direct, "Enumerate partitions instead of matrices");
  auto* count_packed = count->add_subcommand("packed", "Packed matrices in M([n_1] x ... x [n_d], n_{d+1})");
  count_packed->add_option("--dims", dims, "n_1,...,n_d,cap")->delimiter(',')->required();

  // series
  auto* series = app.add_subcommand("series", "Truncated generating functions in t and q");
  series->require_subcommand(1);
  int trunc = 6;
  bool exact = false;
  bool marginal = false;
  int m = 1;
  std::string rho_text;
  auto* s_shaped = series->add_subcommand("shaped", "sum t^cor q^ch over sh(pi) inside rho");
  s_shaped->add_option("--rho", rho_text, "Shape as JSON text or file")->required();
  s_shaped->add_flag("--exact", exact, "Require sh(pi) = rho");
  auto* s_macmahon = series->add_subcommand("macmahon", "MacMahon's product");
  auto* s_boxed = series->add_subcommand("boxed", "Product over the box [n_1] x ... x [n_d]");
  s_boxed->add_option("--dims", dims, "n_1,...,n_d")->delimiter(',')->required();
  auto* s_pyramid = series->add_subcommand("pyramid", "Product over cohook lengths 1..m");
  s_pyramid->add_option("--m", m, "Pyramid height")->check(CLI::PositiveNumber);
  auto* s_distinct = series->add_subcommand("distinct", "Generating function of |pi|_p");
  for (auto* c : {s_macmahon, s_pyramid, s_distinct}) {
    c->add_option("--d", d, "Dimension")->required()->check(CLI::PositiveNumber);
  }
  for (auto* c : {s_shaped, s_macmahon, s_boxed, s_pyramid, s_distinct}) {
    c->add_option("--trunc", trunc, "Truncation order in q")->check(CLI::NonNegativeNumber);
    c->add_flag("--marginal", marginal, "Set t = 1");
    add_format(c, {"json", "csv"});
  }

  // groth
  auto* groth = app.add_subcommand("groth", "Grothendieck and boxed polynomials");
  groth->require_subcommand(1);
  std::vector<int> box;
  bool pretty_flag = false;
  int alphabet = 1;
  auto* g_poly = groth->add_subcommand("poly", "g_rho over P(n_1, ..., n_{d+1})");
  auto* g_top = groth->add_subcommand("top", "Top x-degree component of g_rho");
  auto* g_qsym = groth->add_subcommand("qsym", "Quasisymmetry and symmetry checks of g_rho");
  for (auto* c : {g_poly, g_top, g_qsym}) {
    c->add_option("--rho", rho_text, "Partition or diagram as JSON text or file")->required();
  }
  g_qsym->add_option("--alphabet", alphabet, "Alphabet to check, 1-based")->check(CLI::PositiveNumber);
  auto* g_boxed = groth->add_subcommand("boxed", "F_(n_1, ..., n_{d+1})");
  auto* g_expand = groth->add_subcommand("expand", "Monomial quasisymmetric expansion of F");
  for (auto* c : {g_poly, g_top, g_qsym, g_boxed, g_expand}) {
    c->add_option("--box", box, "n_1,...,n_{d+1}")->delimiter(',')->required();
  }
  for (auto* c : {g_poly, g_top, g_boxed}) {
    c->add_flag("--pretty", pretty_flag, "Human-readable polynomial");
    add_format(c, {"json", "pretty"});
  }

  // bij
  auto* bij = app.add_subcommand("bij", "The bijection between matrices and partitions");
  bij->require_subcommand(1);
  std::string input;
  auto* b_forward = bij->add_subcommand("forward", "Last passage times of a matrix");
  auto* b_inverse = bij->add_subcommand("inverse", "Matrix of a partition");
  auto* b_stats = bij->add_subcommand("stats", "Statistics of a partition");
  auto* b_corners = bij->add_subcommand("corners", "Corners and top corners of a partition");
  for (auto* c : {b_forward, b_inverse, b_stats, b_corners}) {
    c->add_option("--input", input, "Array as JSON text or file")->required();
  }

  // lpp
  auto* lpp = app.add_subcommand("lpp", "Geometric last passage percolation");
  lpp->require_subcommand(1);
  std::string q_text;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  int n = 0;
  int lpp_d = 0;
  auto* l_sim = lpp->add_subcommand("simulate", "Monte Carlo estimate of the boundary-slice law");
  l_sim->add_option("--d", lpp_d, "Dimension (must match --dims)");
  l_sim->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  l_sim->add_option("--seed", seed, "RNG seed");
  l_sim->add_option("--rho", rho_text, "Target slice, a partition of rank d - 1")->required();
  auto* l_cdf = lpp->add_subcommand("cdf", "Prob(G(n_1, ..., n_d) <= n), exact");
  l_cdf->add_option("--n", n, "Level")->required();
  for (auto* c : {l_sim, l_cdf}) {
    c->add_option("--dims", dims, "n_1,...,n_d")->delimiter(',')->required();
    c->add_option("--q", q_text, "Geometric parameter, e.g. 1/2 or 0.25")->required();
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity suites");
  std::string suite = "all";
  VerifyOptions vopts;
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  verify->add_option("--n1", vopts.n1, "Equidistribution base rows")->check(CLI::PositiveNumber);
  verify->add_option("--n2", vopts.n2, "Equidistribution base columns")->check(CLI::PositiveNumber);
  verify->add_option("--trunc", vopts.trunc, "Series truncation")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", vopts.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (threads > 0) set_thread_count(threads);
    if (pretty_flag) format = "pretty";

    if (*count_boxed) {
      std::cout << json{{"dims", dims}, {"count", count_boxed_partitions(dims).get_str()}}.dump() << "\n";
    } else if (*count_volume) {
      print_counts(format, {{"d", d}, {"statistic", "volume"}}, volume_counts(d, upto));
    } else if (*count_macmahon) {
      print_counts(format, {{"d", d}, {"statistic", "macmahon"}}, macmahon_series(d, upto).t_marginal());
    } else if (*count_chvol) {
      print_counts(format, {{"d", d}, {"statistic", "ch_volume"}},
                   direct ? ch_volume_counts_direct(d, upto) : ch_volume_counts(d, upto));
    } else if (*count_packed) {
      if (dims.size() < 2) throw InvalidArgument("--dims needs n_1, ..., n_d and a cap");
      const std::vector<int> bounds(dims.begin(), dims.end() - 1);
      std::cout << json{{"dims", dims}, {"count", count_packed_matrices(bounds, dims.back()).get_str()}}.dump()
                << "\n";
    } else if (*series) {
      TruncSeries s(trunc);
      if (*s_shaped) s = shaped_gf(load_shape(rho_text), exact, trunc);
      if (*s_macmahon) s = macmahon_series(d, trunc);
      if (*s_boxed) s = boxed_gf(dims, trunc);
      if (*s_pyramid) s = pyramid_gf(d, m, trunc);
      if (*s_distinct) s = distinct_parts_gf(d, trunc);
      if (format == "csv") {
        std::cout << s.to_csv(marginal);
      } else {
        std::cout << series_json(s, marginal).dump() << "\n";
      }
    } else if (*g_poly) {
      print_poly(groth_poly(load_shape(rho_text), box), format);
    } else if (*g_top) {
      print_poly(top_component(groth_poly(load_shape(rho_text), box)), format);
    } else if (*g_boxed) {
      print_poly(boxed_poly(box), format);
    } else if (*g_qsym) {
      const MultiPoly g = groth_poly(load_shape(rho_text), box);
      if (alphabet > g.alphabet_count()) throw InvalidArgument("--alphabet exceeds the number of alphabets");
      std::cout << json{{"alphabet", alphabet},
                        {"quasisymmetric", check_json(g, check_quasisymmetric(g, alphabet - 1))},
                        {"symmetric", check_json(g, check_symmetric(g, alphabet - 1))}}
                       .dump()
                << "\n";
    } else if (*g_expand) {
      std::cout << json{{"box", box}, {"expansion", expansion_json(monomial_expansion(box))}}.dump() << "\n";
    } else if (*b_forward) {
      std::cout << to_json(phi(ndarray_from_json(load_json(input)))).dump() << "\n";
    } else if (*b_inverse) {
      std::cout << to_json(phi_inverse(partition_from_json(load_json(input)))).dump() << "\n";
    } else if (*b_stats) {
      std::cout << to_json(compute_stats(partition_from_json(load_json(input)))).dump() << "\n";
    } else if (*b_corners) {
      const DdPartition pi = partition_from_json(load_json(input));
      std::cout << json{{"corners", to_json(corners(pi))}, {"top_corners", to_json(top_corners(pi))}}.dump()
                << "\n";
    } else if (*l_sim) {
      if (lpp_d != 0 && lpp_d != static_cast<int>(dims.size())) {
        throw InvalidArgument("--d does not match the number of --dims");
      }
      const GeomParams params{parse_rational(q_text), dims, seed};
      const DdPartition rho = partition_from_json(load_json(rho_text));
      const mpq_class exact_p = joint_probability_exact(rho, dims, params.q);
      const JointEstimate est = monte_carlo_joint(rho.array(), params, samples);
      std::cout << json{{"samples", std::to_string(samples)},
                        {"seed", std::to_string(seed)},
                        {"hits", std::to_string(est.hits)},
                        {"empirical", decimal(est.frequency)},
                        {"exact", exact_p.get_str()},
                        {"exact_decimal", decimal(exact_p.get_d())},
                        {"stderr", decimal(est.std_error)},
                        {"z_score", decimal(z_score(est, exact_p))}}
                       .dump()
                << "\n";
    } else if (*l_cdf) {
      const mpq_class q = parse_rational(q_text);
      const mpq_class p = single_point_cdf(dims, n, q);
      std::cout << json{{"dims", dims}, {"n", n}, {"q", q.get_str()}, {"cdf", p.get_str()},
                        {"cdf_decimal", decimal(p.get_d())}}
                       .dump()
                << "\n";
    } else if (*verify) {
      const auto results = run_suites(suite, vopts);
      const json report = to_json(results);
      std::cout << report.dump(2) << "\n";
      return report["pass"].get<bool>() ? 0 : kExitVerify;
    }
  } catch (const LimitExceeded& e) {
    std::cerr << "hdpart: limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const Error& e) {
    std::cerr << "hdpart: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
