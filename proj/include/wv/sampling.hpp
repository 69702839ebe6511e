/*
 * sampling.hpp
 * ------------
 * Seeded, platform-deterministic samplers for property tests and checks.
 * mt19937_64 output is fixed by the standard; the mappings below avoid
 * distribution objects, whose streams are implementation-defined.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wv/elements.hpp"
#include "wv/reduction.hpp"

namespace wv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool chance(std::int64_t num, std::int64_t den) { return uniform(1, den) <= num; }

  /// Nonzero rational with small numerator and denominator.
  Rational small_rational(std::int64_t max_abs_num = 9, std::int64_t max_den = 4) {
    std::int64_t num = 0;
    while (num == 0) num = uniform(-max_abs_num, max_abs_num);
    return make_rational(num, uniform(1, max_den));
  }

 private:
  std::mt19937_64 eng_;
};

/// Random letter admissible for the kind within |i| <= max_abs.
inline std::int64_t sample_index(Rng& rng, const AlgebraKind& kind, std::int64_t max_abs) {
  for (;;) {
    std::int64_t lo = kind.full_line() ? -max_abs
                      : kind.family() == Family::Cartan1 ? -1
                                                         : 1;
    std::int64_t i = rng.uniform(lo, max_abs);
    if (kind.admits_index(i)) return i;
  }
}

/// Raw (unordered) word of the given length.
inline std::vector<std::int64_t> sample_raw_word(Rng& rng, const AlgebraKind& kind,
                                                 std::int64_t length, std::int64_t max_abs) {
  std::vector<std::int64_t> letters;
  for (std::int64_t t = 0; t < length; ++t)
    letters.push_back(sample_index(rng, kind, max_abs));
  return letters;
}

/// Random element in standard form: up to max_terms words of length up to
/// max_len, letters bounded by max_abs, small nonzero coefficients.
inline NCElement sample_nc_element(Rng& rng, const AlgebraKind& kind, std::int64_t max_terms,
                                   std::int64_t max_len, std::int64_t max_abs,
                                   bool allow_central = false) {
  NCElement e(kind);
  std::int64_t terms = rng.uniform(1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::int64_t len = rng.uniform(0, max_len);
    std::vector<std::int64_t> letters = sample_raw_word(rng, kind, len, max_abs);
    std::int64_t cpow =
        allow_central && kind.has_central_symbol() ? rng.uniform(0, 2) : 0;
    e.add_scaled(normalize_pbw(kind, letters, cpow), rng.small_rational());
  }
  return e;
}

inline CommPoly sample_comm_poly(Rng& rng, const AlgebraKind& kind, std::int64_t max_terms,
                                 std::int64_t max_len, std::int64_t max_abs) {
  CommPoly p(kind);
  std::int64_t terms = rng.uniform(1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    std::int64_t len = rng.uniform(0, max_len);
    p.add_term(CommMonomial::from_letters(sample_raw_word(rng, kind, len, max_abs), 0),
               rng.small_rational());
  }
  return p;
}

/// Standard normal word (NS(k,n) member) with delta_0 <= delta_cap and
/// bounded length.
inline NCWord sample_normal_word(Rng& rng, const ReductionParams& params,
                                 const AlgebraKind& kind, std::int64_t delta_cap,
                                 std::int64_t max_len) {
  std::vector<std::int64_t> letters;
  std::int64_t delta = 0;
  std::int64_t lows = 0, highs = 0;
  std::int64_t target_len = rng.uniform(0, max_len);
  for (std::int64_t t = 0; t < target_len; ++t) {
    std::int64_t room = delta_cap - delta;
    if (room <= 0 && delta > 0) break;
    bool placed = false;
    for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
      std::int64_t bound = std::max<std::int64_t>(room, 1);
      std::int64_t i = sample_index(rng, kind, bound);
      std::int64_t a = checked_abs(i);
      if (a > room) continue;
      std::int64_t nl = lows + (i <= -params.n ? 1 : 0);
      std::int64_t nh = highs + (i >= params.n ? 1 : 0);
      if (nl >= params.k || nh >= params.k) continue;
      letters.push_back(i);
      delta += a;
      lows = nl;
      highs = nh;
      placed = true;
    }
    if (!placed) break;
  }
  std::sort(letters.begin(), letters.end());
  return NCWord{std::move(letters), 0};
}

}  // namespace wv
