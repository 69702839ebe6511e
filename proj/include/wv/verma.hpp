/*
 * verma.hpp
 * ---------
 * Induced modules over the Virasoro algebra: M = U(V) tensor_{U(b+)} M',
 * where n+ acts trivially on M', c acts as kappa, and e_0 acts by a given
 * rational matrix (Verma modules are the 1-dimensional case e_0 = lambda;
 * Jordan blocks give the logarithmic modules).  The module basis is
 * e_{lambda_1} ... e_{lambda_k} (x) m_j over negative partitions
 * lambda_1 <= ... <= lambda_k <= -1, so grade -n has dimension d * P(n).
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wv/brackets.hpp"
#include "wv/elements.hpp"
#include "wv/growth.hpp"

namespace wv {

struct InducedSpec {
  Rational kappa;
  std::vector<std::vector<Rational>> e0_action;  // square, d >= 1

  static InducedSpec verma(Rational kappa, Rational lambda) {
    return InducedSpec{std::move(kappa), {{std::move(lambda)}}};
  }

  std::size_t dim() const { return e0_action.size(); }

  void validate() const {
    if (e0_action.empty()) throw PreconditionViolated("e0 action matrix must be nonempty");
    for (const auto& row : e0_action)
      if (row.size() != e0_action.size())
        throw PreconditionViolated("e0 action matrix must be square");
  }

  AlgebraKind quotient_kind() const { return AlgebraKind::virasoro_quotient(kappa); }
};

/// Basis label: a negative partition (nondecreasing, all parts <= -1)
/// plus a coordinate of M'.
struct ModuleBasisKey {
  std::vector<std::int64_t> partition;
  std::size_t index = 0;

  std::int64_t grade() const {
    std::int64_t g = 0;
    for (std::int64_t p : partition) g = checked_add(g, p);
    return g;
  }

  auto operator<=>(const ModuleBasisKey&) const = default;
};

class ModuleVector {
 public:
  using TermMap = std::map<ModuleBasisKey, Rational>;

  ModuleVector() = default;

  static ModuleVector basis(ModuleBasisKey key) {
    ModuleVector v;
    v.add(std::move(key), Rational(1));
    return v;
  }

  static ModuleVector highest_weight(std::size_t index = 0) {
    return basis(ModuleBasisKey{{}, index});
  }

  void add(ModuleBasisKey key, const Rational& coeff) {
    if (coeff == 0) return;
    for (std::int64_t p : key.partition)
      if (p >= 0) throw PreconditionViolated("partition parts must be negative");
    if (!std::is_sorted(key.partition.begin(), key.partition.end()))
      throw PreconditionViolated("partition parts must be nondecreasing");
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ModuleVector& operator+=(const ModuleVector& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ModuleVector& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend ModuleVector operator*(ModuleVector v, const Rational& s) { return v *= s; }
  bool operator==(const ModuleVector&) const = default;

 private:
  TermMap terms_;
};

namespace detail {

/// A^p applied to the j-th unit vector.
inline std::vector<Rational> e0_power_column(const InducedSpec& spec, std::int64_t p,
                                             std::size_t j) {
  std::vector<Rational> v(spec.dim(), Rational(0));
  v[j] = 1;
  for (std::int64_t t = 0; t < p; ++t) {
    std::vector<Rational> w(spec.dim(), Rational(0));
    for (std::size_t r = 0; r < spec.dim(); ++r)
      for (std::size_t s = 0; s < spec.dim(); ++s)
        w[r] += spec.e0_action[r][s] * v[s];
    v = std::move(w);
  }
  return v;
}

/// Evaluates a standard word (in the central quotient) on e_lambda (x) m_j.
inline void evaluate_word(const InducedSpec& spec, const NCWord& word, const Rational& coeff,
                          std::size_t j, ModuleVector& out) {
  std::size_t pos_start = word.letters.size();
  std::size_t zero_start = word.letters.size();
  for (std::size_t t = 0; t < word.letters.size(); ++t) {
    if (word.letters[t] >= 0 && zero_start == word.letters.size()) zero_start = t;
    if (word.letters[t] > 0) {
      pos_start = t;
      break;
    }
  }
  if (pos_start != word.letters.size()) return;  // n+ kills M'
  std::int64_t zeros = static_cast<std::int64_t>(word.letters.size() - zero_start);
  std::vector<std::int64_t> partition(word.letters.begin(),
                                      word.letters.begin() + zero_start);
  std::vector<Rational> col = e0_power_column(spec, zeros, j);
  for (std::size_t r = 0; r < col.size(); ++r)
    if (col[r] != 0) out.add(ModuleBasisKey{partition, r}, coeff * col[r]);
}

}  // namespace detail

/// The module action.  u must live over Virasoro (c evaluated at kappa)
/// or over the matching central quotient.
inline ModuleVector act(const NCElement& u, const ModuleVector& v, const InducedSpec& spec) {
  spec.validate();
  AlgebraKind q = spec.quotient_kind();
  switch (u.kind().family()) {
    case Family::Virasoro:
      break;
    case Family::VirasoroQuotient:
      if (u.kind().kappa() != spec.kappa)
        throw KindMismatch("element central charge differs from the module's");
      break;
    default:
      throw KindMismatch("module action is defined over virasoro kinds, got " +
                         u.kind().name());
  }
  ModuleVector out;
  for (auto& [w, cu] : u.terms()) {
    Rational factor = cu;
    if (w.cpow > 0)
      factor *= rational_pow(spec.kappa, static_cast<std::uint64_t>(w.cpow));
    for (auto& [key, cv] : v.terms()) {
      // (w * e_partition) in the quotient, then evaluate on (x) m_j
      std::vector<std::int64_t> cat = w.letters;
      cat.insert(cat.end(), key.partition.begin(), key.partition.end());
      NCElement prod = normalize_pbw(q, cat);
      for (auto& [sw, cs] : prod.terms())
        detail::evaluate_word(spec, sw, factor * cv * cs, key.index, out);
    }
  }
  return out;
}

/// dim of grade -n: d * P(n).
inline Integer induced_graded_dim(const InducedSpec& spec, std::int64_t n) {
  spec.validate();
  return Integer(static_cast<unsigned long>(spec.dim())) * partition_count(n);
}

/// Verma case: P(n).
inline Integer verma_graded_dim(std::int64_t n) { return partition_count(n); }

/// Cumulative dimension of grades 0..-N: d * sum P(n).
inline Integer growth_of_module(const InducedSpec& spec, std::int64_t N) {
  spec.validate();
  std::vector<Integer> table = partition_table(N);
  Integer sum(0);
  for (const Integer& p : table) sum += p;
  return Integer(static_cast<unsigned long>(spec.dim())) * sum;
}

/// Negative partitions of grade -n in lexicographic order.
inline std::vector<std::vector<std::int64_t>> negative_partitions(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
    std::vector<std::int64_t> neg;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) neg.push_back(-*it);
    out.push_back(std::move(neg));
  });
  std::sort(out.begin(), out.end());
  return out;
}

struct WitnessResult {
  bool found = false;
  ModuleBasisKey witness;
  ModuleVector image;
  std::int64_t depth_searched = 0;
};

/// Searches basis vectors breadth-first by grade (then lexicographically on
/// partitions, then by M' coordinate) for a vector not killed by u.
inline WitnessResult annihilator_falsify(const NCElement& u, const InducedSpec& spec,
                                         std::int64_t depth) {
  spec.validate();
  WitnessResult result;
  result.depth_searched = depth;
  for (std::int64_t n = 0; n <= depth; ++n) {
    for (const auto& partition : negative_partitions(n)) {
      for (std::size_t j = 0; j < spec.dim(); ++j) {
        ModuleBasisKey key{partition, j};
        ModuleVector image = act(u, ModuleVector::basis(key), spec);
        if (!image.is_zero()) {
          result.found = true;
          result.witness = std::move(key);
          result.image = std::move(image);
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace wv
