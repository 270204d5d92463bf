#include "hdpart/groth.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "hdpart/enumerate.hpp"
#include "hdpart/errors.hpp"
#include "hdpart/parallel.hpp"

namespace hdpart {

// --- Composition -------------------------------------------------------------

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
  }
}

int Composition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Composition strip_zeros(const std::vector<Entry>& values) {
  std::vector<int> parts;
  for (Entry v : values) {
    if (v > 0) parts.push_back(static_cast<int>(v));
  }
  return Composition(std::move(parts));
}

// --- corner weights ------------------------------------------------------------

namespace {

using Key = std::vector<int>;
using LocalTerms = std::map<Key, std::uint64_t>;

// Adds the corner weight of a partition over a fixed box to a key.
class CornerWeigher {
 public:
  explicit CornerWeigher(const Box& box) : box_(box) {
    const int d = box.rank();
    std::vector<int> offsets(d + 1, 0);
    for (int l = 0; l < d; ++l) offsets[l + 1] = offsets[l] + box.extent(l);
    key_length_ = offsets[d];
    std::vector<int> c(d);
    for (std::size_t i = 0; i < box.size(); ++i) {
      box.coords_of(i, c);
      std::uint32_t mask = 0;
      for (int l = 0; l < d; ++l) {
        slots_.push_back(offsets[l] + c[l] - 1);
        if (c[l] < box.extent(l)) mask |= 1u << l;
      }
      succ_.push_back(mask);
    }
  }

  int key_length() const { return key_length_; }

  void weigh(const NdArray& pi, Key& key) const {
    std::fill(key.begin(), key.end(), 0);
    const int d = box_.rank();
    for (std::size_t i = 0; i < box_.size(); ++i) {
      const Entry v = pi.at_linear(i);
      if (v == 0) continue;
      Entry succ = 0;
      for (int l = 0; l < d; ++l) {
        if (succ_[i] & (1u << l)) succ = std::max(succ, pi.at_linear(i + box_.stride(l)));
      }
      const int c = static_cast<int>(v - succ);
      if (c == 0) continue;
      for (int l = 0; l < d; ++l) key[slots_[i * d + l]] += c;
    }
  }

 private:
  Box box_;
  int key_length_ = 0;
  std::vector<int> slots_;
  std::vector<std::uint32_t> succ_;
};

void check_dims(const std::vector<int>& dims) {
  if (dims.size() < 2) throw InvalidArgument("a box needs n_1, ..., n_{d+1} with d >= 1");
  long cells = 1;
  for (std::size_t l = 0; l < dims.size(); ++l) {
    if (dims[l] < 1) throw InvalidArgument("box bounds must be positive");
    if (l + 1 < dims.size()) cells *= dims[l];
  }
  if (cells > kMaxPolyCells) {
    throw LimitExceeded("polynomial construction is limited to " + std::to_string(kMaxPolyCells) +
                        " cells in the first d coordinates");
  }
}

MultiPoly collect(const std::vector<int>& alphabets, const std::vector<LocalTerms>& parts) {
  LocalTerms merged;
  for (const auto& part : parts) {
    for (const auto& [k, c] : part) merged[k] += c;
  }
  MultiPoly out(alphabets);
  for (const auto& [k, c] : merged) out.add_term(k, mpz_class(static_cast<unsigned long>(c)));
  return out;
}

MultiPoly weigh_search(const PartitionSearch& search, const std::vector<int>& alphabets, bool parallel) {
  const CornerWeigher weigher(search.box());
  if (!parallel) {
    LocalTerms terms;
    Key key(weigher.key_length());
    search.run([&](const NdArray& pi, Entry) {
      weigher.weigh(pi, key);
      ++terms[key];
    });
    return collect(alphabets, {terms});
  }
  const auto tasks = search.split(static_cast<std::size_t>(16 * thread_count()));
  std::vector<LocalTerms> local(tasks.size());
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t t = 0; t < n; ++t) {
    Key key(weigher.key_length());
    auto& terms = local[t];
    search.run_from(tasks[t], [&](const NdArray& pi, Entry) {
      weigher.weigh(pi, key);
      ++terms[key];
    });
  }
  return collect(alphabets, local);
}

PartitionSearch groth_search(const DiagramSet& rho, const std::vector<int>& dims) {
  check_dims(dims);
  const int d = static_cast<int>(dims.size()) - 1;
  if (d < 2) throw UnsupportedRank("Grothendieck polynomials need d >= 2");
  if (rho.rank() != d) throw RankMismatch("rho must be a diagram of rank d = " + std::to_string(d));
  if (!rho.is_lower_set()) throw InvalidPartition("rho is not a lower set");
  for (const auto& c : rho) {
    for (int l = 0; l < d; ++l) {
      if (c[l] > dims[l + 1]) throw InvalidArgument("rho does not fit inside P(n_2, ..., n_{d+1})");
    }
  }
  const std::vector<int> slice_bounds(dims.begin() + 1, dims.end() - 1);
  NdArray slice = partition_from_diagram(rho).array();
  if (!rho.empty()) slice = slice.reboxed(slice_bounds);
  auto search = PartitionSearch::boxed(dims);
  search.fix_first_slice(slice);
  return search;
}

std::vector<int> first_d(const std::vector<int>& dims) { return {dims.begin(), dims.end() - 1}; }

}  // namespace

MultiPoly groth_poly(const DiagramSet& rho, const std::vector<int>& dims) {
  return weigh_search(groth_search(rho, dims), first_d(dims), true);
}

MultiPoly groth_poly(const DdPartition& rho, const std::vector<int>& dims) {
  return groth_poly(diagram(rho), dims);
}

MultiPoly groth_poly_serial(const DiagramSet& rho, const std::vector<int>& dims) {
  return weigh_search(groth_search(rho, dims), first_d(dims), false);
}

MultiPoly boxed_poly(const std::vector<int>& dims) {
  check_dims(dims);
  return weigh_search(PartitionSearch::boxed(dims), first_d(dims), true);
}

MultiPoly boxed_poly_serial(const std::vector<int>& dims) {
  check_dims(dims);
  return weigh_search(PartitionSearch::boxed(dims), first_d(dims), false);
}

std::vector<int> corner_weight_key(const DdPartition& pi, const std::vector<int>& alphabets) {
  if (static_cast<int>(alphabets.size()) != pi.rank()) throw RankMismatch("one alphabet per axis");
  for (int l = 0; l < pi.rank(); ++l) {
    if (pi.bounds()[l] > alphabets[l] && !pi.array().trimmed().is_zero() &&
        pi.array().trimmed().bounds()[l] > alphabets[l]) {
      throw InvalidArgument("partition does not fit the alphabets");
    }
  }
  const NdArray boxed = pi.array().trimmed().reboxed(alphabets);
  const CornerWeigher weigher{Box(alphabets)};
  Key key(weigher.key_length());
  weigher.weigh(boxed, key);
  return key;
}

// --- lower subsets ------------------------------------------------------------

std::vector<DiagramSet> lower_subsets(const DiagramSet& rho) {
  if (!rho.is_lower_set()) throw InvalidPartition("not a lower set");
  std::set<std::vector<IndexVec>> seen;
  std::vector<DiagramSet> out;
  std::function<void(const DiagramSet&)> peel = [&](const DiagramSet& s) {
    if (!seen.insert(s.cells()).second) return;
    out.push_back(s);
    for (const auto& cell : s.maximal_cells()) {
      std::vector<IndexVec> rest;
      rest.reserve(s.size() - 1);
      for (const auto& c : s) {
        if (c != cell) rest.push_back(c);
      }
      peel(DiagramSet(s.rank(), std::move(rest)));
    }
  };
  peel(rho);
  std::sort(out.begin(), out.end(), [](const DiagramSet& a, const DiagramSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.cells() < b.cells();
  });
  return out;
}

// --- symmetry checks ----------------------------------------------------------

namespace {

struct Split {
  Key other;
  Key segment;
};

Split split_key(const MultiPoly& p, const Key& k, int alphabet) {
  Split s;
  const int lo = p.offset(alphabet), hi = p.offset(alphabet + 1);
  s.segment.assign(k.begin() + lo, k.begin() + hi);
  s.other.assign(k.begin(), k.begin() + lo);
  s.other.insert(s.other.end(), k.begin() + hi, k.end());
  return s;
}

Key join_key(const MultiPoly& p, const Key& other, const Key& segment, int alphabet) {
  const int lo = p.offset(alphabet);
  Key k(other.begin(), other.begin() + lo);
  k.insert(k.end(), segment.begin(), segment.end());
  k.insert(k.end(), other.begin() + lo, other.end());
  return k;
}

// Within each orbit, compares every member against the first one present and
// reports a missing member (coefficient 0) when the orbit is incomplete.
// `members` enumerates the whole orbit of a representative segment.
SymmetryCheck check_orbits(const MultiPoly& p, int alphabet,
                           const std::function<Key(const Key&)>& orbit_label,
                           const std::function<std::vector<Key>(const Key&)>& members) {
  if (alphabet < 0 || alphabet >= p.alphabet_count()) throw InvalidArgument("alphabet out of range");
  std::map<std::pair<Key, Key>, std::map<Key, mpz_class>> orbits;
  for (const auto& [k, c] : p.terms()) {
    Split s = split_key(p, k, alphabet);
    orbits[{s.other, orbit_label(s.segment)}].emplace(s.segment, c);
  }
  SymmetryCheck result;
  for (const auto& [label, present] : orbits) {
    const auto& [first_seg, first_c] = *present.begin();
    for (const auto& seg : members(first_seg)) {
      auto it = present.find(seg);
      const mpz_class c = it == present.end() ? mpz_class(0) : it->second;
      if (c != first_c) {
        result.holds = false;
        result.witness = std::make_pair(join_key(p, label.first, first_seg, alphabet),
                                        join_key(p, label.first, seg, alphabet));
        result.first_coeff = first_c;
        result.second_coeff = c;
        return result;
      }
    }
  }
  return result;
}

// All 0/1 selections of k positions out of n, in lexicographic order of the
// chosen index sets.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Key nonzero_pattern(const Key& seg) {
  Key out;
  for (int e : seg) {
    if (e) out.push_back(e);
  }
  return out;
}

}  // namespace

SymmetryCheck check_quasisymmetric(const MultiPoly& p, int alphabet) {
  return check_orbits(p, alphabet, nonzero_pattern, [](const Key& seg) {
    const Key pattern = nonzero_pattern(seg);
    std::vector<Key> out;
    for_each_subset(static_cast<int>(seg.size()), static_cast<int>(pattern.size()),
                    [&](const std::vector<int>& idx) {
                      Key m(seg.size(), 0);
                      for (std::size_t j = 0; j < idx.size(); ++j) m[idx[j]] = pattern[j];
                      out.push_back(std::move(m));
                    });
    return out;
  });
}

SymmetryCheck check_symmetric(const MultiPoly& p, int alphabet) {
  auto sorted = [](const Key& seg) {
    Key s = seg;
    std::sort(s.begin(), s.end());
    return s;
  };
  return check_orbits(p, alphabet, sorted, [&](const Key& seg) {
    Key perm = sorted(seg);
    std::vector<Key> out;
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  });
}

// --- monomial quasisymmetric functions ----------------------------------------

MultiPoly monomial_qsym(const Composition& alpha, int n) {
  return monomial_qsym_in(alpha, {n}, 0);
}

MultiPoly monomial_qsym_in(const Composition& alpha, const std::vector<int>& alphabets, int alphabet) {
  MultiPoly out(alphabets);
  if (alphabet < 0 || alphabet >= out.alphabet_count()) throw InvalidArgument("alphabet out of range");
  const int n = alphabets[alphabet];
  Key key(out.key_length(), 0);
  for_each_subset(n, alpha.length(), [&](const std::vector<int>& idx) {
    std::fill(key.begin(), key.end(), 0);
    for (std::size_t j = 0; j < idx.size(); ++j) key[out.offset(alphabet) + idx[j]] = alpha.parts()[j];
    out.add_term(key, 1);
  });
  return out;
}

MonomialExpansion monomial_expansion(const std::vector<int>& dims) {
  check_dims(dims);
  const std::vector<int> bounds = first_d(dims);
  const int d = static_cast<int>(bounds.size());
  std::map<std::vector<Composition>, std::uint64_t> counts;
  iter_packed_matrices(bounds, dims.back(), [&](const NdArray& a) {
    std::vector<Composition> key;
    key.reserve(d);
    for (int l = 0; l < d; ++l) key.push_back(strip_zeros(slice_sums(a, l)));
    ++counts[key];
  });
  MonomialExpansion out;
  for (const auto& [k, c] : counts) out.emplace(k, mpz_class(static_cast<unsigned long>(c)));
  return out;
}

MultiPoly reconstruct(const MonomialExpansion& expansion, const std::vector<int>& alphabets) {
  MultiPoly out(alphabets);
  for (const auto& [comps, m] : expansion) {
    if (comps.size() != alphabets.size()) throw RankMismatch("one composition per alphabet");
    MultiPoly term = MultiPoly::constant(alphabets, m);
    for (std::size_t l = 0; l < comps.size(); ++l) {
      term = term * monomial_qsym_in(comps[l], alphabets, static_cast<int>(l));
    }
    out = out + term;
  }
  return out;
}

MultiPoly top_component(const MultiPoly& p, int alphabet) {
  if (p.is_zero()) throw InvalidArgument("the zero polynomial has no top component");
  if (alphabet < 0 || alphabet >= p.alphabet_count()) throw InvalidArgument("alphabet out of range");
  int top = 0;
  for (const auto& [k, c] : p.terms()) top = std::max(top, p.degree_in(k, alphabet));
  MultiPoly out(p.alphabets());
  for (const auto& [k, c] : p.terms()) {
    if (p.degree_in(k, alphabet) == top) out.add_term(k, c);
  }
  return out;
}

}  // namespace hdpart
