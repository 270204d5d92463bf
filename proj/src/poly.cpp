#include "hdpart/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hdpart {

namespace {

mpq_class power(const mpq_class& base, int e) {
  mpq_class out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

template <class Coeff>
std::string coeff_text(const Coeff& c) {
  return c.get_str();
}

template <class Coeff>
std::string pretty_impl(const BasicPoly<Coeff>& p) {
  if (p.is_zero()) return "0";
  using Item = std::pair<std::vector<int>, Coeff>;
  std::vector<Item> items(p.terms().begin(), p.terms().end());
  auto total = [&](const std::vector<int>& k) {
    int s = 0;
    for (int a = 0; a < p.alphabet_count(); ++a) s += p.degree_in(k, a);
    return s;
  };
  std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    const int ta = total(a.first), tb = total(b.first);
    if (ta != tb) return ta > tb;
    return a.first > b.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : items) {
    Coeff mag = c;
    if (c < 0) {
      mag = -c;
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    first = false;
    std::string mono;
    for (int a = 0; a < p.alphabet_count(); ++a) {
      for (int i = 0; i < p.alphabets()[a]; ++i) {
        const int e = key[p.offset(a) + i];
        if (e == 0) continue;
        if (!mono.empty()) mono += ' ';
        mono += alphabet_letter(a) + std::to_string(i + 1);
        if (e > 1) mono += '^' + std::to_string(e);
      }
    }
    if (mono.empty()) {
      out << coeff_text(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << coeff_text(mag) << ' ' << mono;
    }
  }
  return out.str();
}

}  // namespace

RationalPoly specialize(const MultiPoly& p, const Assignment& values) {
  if (static_cast<int>(values.size()) > p.alphabet_count()) {
    throw InvalidArgument("assignment has more alphabets than the polynomial");
  }
  const int d = p.alphabet_count();
  std::vector<int> kept_sizes(d);
  std::vector<std::vector<int>> kept(d);
  for (int a = 0; a < d; ++a) {
    const bool given = a < static_cast<int>(values.size()) && !values[a].empty();
    if (given && static_cast<int>(values[a].size()) != p.alphabets()[a]) {
      throw InvalidArgument("assignment length does not match alphabet " + std::to_string(a + 1));
    }
    for (int i = 0; i < p.alphabets()[a]; ++i) {
      if (!given || !values[a][i]) kept[a].push_back(i);
    }
    kept_sizes[a] = static_cast<int>(kept[a].size());
  }
  RationalPoly out(kept_sizes);
  std::vector<int> key(out.key_length());
  for (const auto& [k, c] : p.terms()) {
    mpq_class coeff = c;
    int pos = 0;
    for (int a = 0; a < d; ++a) {
      const bool given = a < static_cast<int>(values.size()) && !values[a].empty();
      for (int i = 0; i < p.alphabets()[a]; ++i) {
        const int e = k[p.offset(a) + i];
        if (given && values[a][i]) {
          coeff *= power(*values[a][i], e);
        } else {
          key[pos++] = e;
        }
      }
    }
    out.add_term(key, coeff);
  }
  return out;
}

Assignment fill_alphabet(const MultiPoly& p, int alphabet, const mpq_class& value, Assignment base) {
  if (alphabet < 0 || alphabet >= p.alphabet_count()) throw InvalidArgument("alphabet out of range");
  base.resize(p.alphabet_count());
  base[alphabet].assign(p.alphabets()[alphabet], value);
  return base;
}

mpq_class constant_value(const RationalPoly& p) {
  if (p.is_zero()) return 0;
  if (p.key_length() != 0) {
    for (const auto& [k, c] : p.terms()) {
      if (std::any_of(k.begin(), k.end(), [](int e) { return e != 0; })) {
        throw InvalidArgument("polynomial still has symbolic variables");
      }
    }
  }
  return p.terms().begin()->second;
}

MultiPoly to_integer_poly(const RationalPoly& p) {
  MultiPoly out(p.alphabets());
  for (const auto& [k, c] : p.terms()) {
    if (c.get_den() != 1) throw InvalidArgument("non-integer coefficient " + c.get_str());
    out.add_term(k, c.get_num());
  }
  return out;
}

std::string alphabet_letter(int alphabet) {
  static const char* letters[] = {"x", "y", "z", "w", "v", "u"};
  if (alphabet >= 0 && alphabet < 6) return letters[alphabet];
  return "a" + std::to_string(alphabet + 1);
}

std::string pretty(const MultiPoly& p) { return pretty_impl(p); }
std::string pretty(const RationalPoly& p) { return pretty_impl(p); }

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (int a = 0; a < p.alphabet_count(); ++a) {
      exps.push_back(std::vector<int>(k.begin() + p.offset(a), k.begin() + p.offset(a + 1)));
    }
    terms.push_back({{"exps", exps}, {"coeff", c.get_str()}});
  }
  return {{"alphabets", p.alphabets()}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    MultiPoly p(j.at("alphabets").get<std::vector<int>>());
    for (const auto& t : j.at("terms")) {
      const auto exps = t.at("exps").get<std::vector<std::vector<int>>>();
      const auto& c = t.at("coeff");
      const mpz_class coeff = c.is_string() ? mpz_class(c.get<std::string>()) : mpz_class(c.get<long>());
      p.add_term(p.make_key(exps), coeff);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidArgument(std::string("malformed coefficient: ") + e.what());
  }
}

}  // namespace hdpart
