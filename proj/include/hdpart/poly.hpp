#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "hdpart/errors.hpp"

namespace hdpart {

/// Polynomial in d alphabets of fixed sizes. A term key is the
/// concatenation of the per-alphabet exponent vectors, so the term map is
/// ordered lexicographically by alphabet and then by variable index.
template <class Coeff>
class BasicPoly {
 public:
  using Key = std::vector<int>;
  using Terms = std::map<Key, Coeff>;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<int> alphabet_sizes) : sizes_(std::move(alphabet_sizes)) {
    offsets_.assign(sizes_.size() + 1, 0);
    for (std::size_t a = 0; a < sizes_.size(); ++a) {
      if (sizes_[a] < 0) throw InvalidArgument("alphabet sizes must be non-negative");
      offsets_[a + 1] = offsets_[a] + sizes_[a];
    }
  }

  static BasicPoly constant(std::vector<int> alphabet_sizes, const Coeff& c) {
    BasicPoly p(std::move(alphabet_sizes));
    p.add_term(Key(p.key_length(), 0), c);
    return p;
  }

  const std::vector<int>& alphabets() const { return sizes_; }
  int alphabet_count() const { return static_cast<int>(sizes_.size()); }
  int offset(int alphabet) const { return offsets_[alphabet]; }
  int key_length() const { return offsets_.empty() ? 0 : offsets_.back(); }

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds `c` to the coefficient of `key`, erasing it if it cancels.
  void add_term(const Key& key, const Coeff& c) {
    if (static_cast<int>(key.size()) != key_length()) throw InvalidArgument("term key has the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Coefficient from per-alphabet exponent vectors (short vectors are zero-padded).
  Coeff coeff(const std::vector<std::vector<int>>& exps) const { return coeff(make_key(exps)); }

  Key make_key(const std::vector<std::vector<int>>& exps) const {
    if (static_cast<int>(exps.size()) > alphabet_count()) throw InvalidArgument("too many alphabets");
    Key key(key_length(), 0);
    for (std::size_t a = 0; a < exps.size(); ++a) {
      if (static_cast<int>(exps[a].size()) > sizes_[a]) throw InvalidArgument("too many variables");
      std::copy(exps[a].begin(), exps[a].end(), key.begin() + offsets_[a]);
    }
    return key;
  }

  /// Total degree of `key` in one alphabet.
  int degree_in(const Key& key, int alphabet) const {
    return std::accumulate(key.begin() + offsets_[alphabet], key.begin() + offsets_[alphabet + 1], 0);
  }

  BasicPoly operator+(const BasicPoly& other) const {
    check_same(other);
    BasicPoly out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k, c);
    return out;
  }

  BasicPoly operator-(const BasicPoly& other) const {
    check_same(other);
    BasicPoly out = *this;
    for (const auto& [k, c] : other.terms_) out.add_term(k, -c);
    return out;
  }

  /// Product; when `max_degree` is set, terms whose degree in alphabet
  /// `graded` exceeds it are dropped.
  BasicPoly multiply(const BasicPoly& other, std::optional<int> max_degree = std::nullopt,
                     int graded = 0) const {
    check_same(other);
    BasicPoly out(sizes_);
    Key key(key_length());
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : other.terms_) {
        for (int i = 0; i < key_length(); ++i) key[i] = ka[i] + kb[i];
        if (max_degree && degree_in(key, graded) > *max_degree) continue;
        out.add_term(key, ca * cb);
      }
    }
    return out;
  }

  BasicPoly operator*(const BasicPoly& other) const { return multiply(other); }

  /// Terms of degree <= max_degree in one alphabet.
  BasicPoly truncated(int alphabet, int max_degree) const {
    BasicPoly out(sizes_);
    for (const auto& [k, c] : terms_) {
      if (degree_in(k, alphabet) <= max_degree) out.terms_.emplace(k, c);
    }
    return out;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.sizes_ == b.sizes_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const BasicPoly& other) const {
    if (other.sizes_ != sizes_) throw InvalidArgument("polynomials live over different alphabets");
  }

  std::vector<int> sizes_;
  std::vector<int> offsets_{0};
  Terms terms_;
};

using MultiPoly = BasicPoly<mpz_class>;
using RationalPoly = BasicPoly<mpq_class>;

/// Per-alphabet substitution: one optional value per variable; variables
/// without a value stay symbolic. An empty vector keeps the whole alphabet.
using Assignment = std::vector<std::vector<std::optional<mpq_class>>>;

/// Exact substitution. Substituted variables are removed from their
/// alphabet; the remaining ones keep their relative order.
RationalPoly specialize(const MultiPoly& p, const Assignment& values);
/// Sets every variable of `alphabet` to `value`.
Assignment fill_alphabet(const MultiPoly& p, int alphabet, const mpq_class& value,
                         Assignment base = {});
/// Value of a polynomial with no symbolic variables left.
mpq_class constant_value(const RationalPoly& p);
/// Integer polynomial view; throws InvalidArgument on a non-integer coefficient.
MultiPoly to_integer_poly(const RationalPoly& p);

/// Letters x, y, z, w, v, u for alphabets 1..6, then a7, a8, ...
std::string alphabet_letter(int alphabet);
/// e.g. "2 x1^2 x2 y1^3 + x1 y1". Terms are listed by decreasing degree
/// in the first alphabet, then by key.
std::string pretty(const MultiPoly& p);
std::string pretty(const RationalPoly& p);

/// {"alphabets": [...], "terms": [{"exps": [[..], ..], "coeff": "..."}]}.
nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

}  // namespace hdpart
