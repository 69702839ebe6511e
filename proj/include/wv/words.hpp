/*
 * words.hpp
 * ---------
 * Monomial carriers.  CommMonomial is the exponent-compressed commutative
 * monomial (strictly increasing indices, exponents >= 1); NCWord is a flat
 * letter sequence, standard iff nondecreasing.  Both carry a nonnegative
 * power of the central symbol c, which contributes 0 to length and degree.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wv/errors.hpp"

namespace wv {

struct CommMonomial {
  // (index, exponent) pairs, indices strictly increasing, exponents >= 1
  std::vector<std::pair<std::int64_t, std::int64_t>> factors;
  std::int64_t cpow = 0;

  static CommMonomial one() { return {}; }

  static CommMonomial variable(std::int64_t i) {
    CommMonomial m;
    m.factors.emplace_back(i, 1);
    return m;
  }

  static CommMonomial central(std::int64_t pow = 1) {
    CommMonomial m;
    m.cpow = pow;
    return m;
  }

  /// Builds from an arbitrary letter multiset.
  static CommMonomial from_letters(std::vector<std::int64_t> letters, std::int64_t cpow = 0) {
    std::sort(letters.begin(), letters.end());
    CommMonomial m;
    m.cpow = cpow;
    for (std::int64_t x : letters) {
      if (!m.factors.empty() && m.factors.back().first == x)
        m.factors.back().second++;
      else
        m.factors.emplace_back(x, 1);
    }
    return m;
  }

  bool is_one() const { return factors.empty() && cpow == 0; }

  std::int64_t length() const {
    std::int64_t n = 0;
    for (auto& [i, e] : factors) n = checked_add(n, e);
    return n;
  }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (auto& [i, e] : factors) d = checked_add(d, checked_mul(i, e));
    return d;
  }

  std::int64_t abs_degree0() const {
    std::int64_t d = 0;
    for (auto& [i, e] : factors) d = checked_add(d, checked_mul(checked_abs(i), e));
    return d;
  }

  /// Ascending flat letter list.
  std::vector<std::int64_t> letters() const {
    std::vector<std::int64_t> out;
    for (auto& [i, e] : factors)
      for (std::int64_t t = 0; t < e; ++t) out.push_back(i);
    return out;
  }

  CommMonomial times(const CommMonomial& o) const {
    CommMonomial r;
    r.cpow = checked_add(cpow, o.cpow);
    std::size_t a = 0, b = 0;
    while (a < factors.size() || b < o.factors.size()) {
      if (b == o.factors.size() ||
          (a < factors.size() && factors[a].first < o.factors[b].first)) {
        r.factors.push_back(factors[a++]);
      } else if (a == factors.size() || o.factors[b].first < factors[a].first) {
        r.factors.push_back(o.factors[b++]);
      } else {
        r.factors.emplace_back(factors[a].first,
                               checked_add(factors[a].second, o.factors[b].second));
        ++a, ++b;
      }
    }
    return r;
  }

  /// Exact division; precondition: o divides *this.
  CommMonomial divide_by(const CommMonomial& o) const {
    CommMonomial r;
    r.cpow = checked_sub(cpow, o.cpow);
    if (r.cpow < 0) throw InvariantViolation("monomial division: cpow underflow");
    std::size_t b = 0;
    for (auto& [i, e] : factors) {
      std::int64_t rem = e;
      if (b < o.factors.size() && o.factors[b].first == i) {
        rem -= o.factors[b].second;
        ++b;
      }
      if (rem < 0) throw InvariantViolation("monomial division: not divisible");
      if (rem > 0) r.factors.emplace_back(i, rem);
    }
    if (b != o.factors.size()) throw InvariantViolation("monomial division: not divisible");
    return r;
  }

  std::int64_t count_ge(std::int64_t n) const {
    std::int64_t c = 0;
    for (auto& [i, e] : factors)
      if (i >= n) c += e;
    return c;
  }

  std::int64_t count_le(std::int64_t n) const {
    std::int64_t c = 0;
    for (auto& [i, e] : factors)
      if (i <= n) c += e;
    return c;
  }

  bool operator==(const CommMonomial&) const = default;
};

struct NCWord {
  std::vector<std::int64_t> letters;
  std::int64_t cpow = 0;

  static NCWord one() { return {}; }

  static NCWord generator(std::int64_t i) { return {{i}, 0}; }

  static NCWord central(std::int64_t pow = 1) { return {{}, pow}; }

  bool is_standard() const { return std::is_sorted(letters.begin(), letters.end()); }

  bool is_one() const { return letters.empty() && cpow == 0; }

  std::int64_t length() const { return static_cast<std::int64_t>(letters.size()); }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (std::int64_t i : letters) d = checked_add(d, i);
    return d;
  }

  std::int64_t abs_degree0() const {
    std::int64_t d = 0;
    for (std::int64_t i : letters) d = checked_add(d, checked_abs(i));
    return d;
  }

  std::int64_t count_ge(std::int64_t n) const {
    return static_cast<std::int64_t>(
        std::count_if(letters.begin(), letters.end(), [n](std::int64_t i) { return i >= n; }));
  }

  std::int64_t count_le(std::int64_t n) const {
    return static_cast<std::int64_t>(
        std::count_if(letters.begin(), letters.end(), [n](std::int64_t i) { return i <= n; }));
  }

  NCWord concat(const NCWord& o) const {
    NCWord r;
    r.letters = letters;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    r.cpow = checked_add(cpow, o.cpow);
    return r;
  }

  bool operator==(const NCWord&) const = default;
};

/// Sum of |index| over letters, plus the constant C.
template <class M>
std::int64_t abs_degree(const M& m, std::int64_t C) {
  return checked_add(m.abs_degree0(), C);
}

}  // namespace wv
