/*
 * brackets.hpp
 * ------------
 * Lie and Poisson brackets for the Witt/Virasoro family,
 *
 *   [e_i, e_j] = (j - i) e_{i+j} + (i^3 - i)/12 delta_{i+j,0} c,
 *
 * PBW normalization of arbitrary words onto standard (nondecreasing)
 * monomials, the adjoint operators del_a = [., e_a] and derivations
 * d_a = {., x_a}, the associated-graded map gr, and the index-negation
 * automorphism.
 */
#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "wv/elements.hpp"

namespace wv {

/// Coefficient of c in [e_i, e_{-i}]: (i^3 - i)/12, computed in Z to avoid
/// index-cube overflow.
inline Rational central_cocycle(std::int64_t i) {
  Integer z(static_cast<long>(i));
  return make_rational(z * z * z - z, Integer(12));
}

struct Generator {
  bool central = false;
  std::int64_t index = 0;
  static Generator e(std::int64_t i) { return {false, i}; }
  static Generator c() { return {true, 0}; }
};

/// [g1, g2] as an element of U; central generators bracket to zero.
inline NCElement lie_bracket(const AlgebraKind& kind, const Generator& g1,
                             const Generator& g2) {
  if (g1.central || g2.central) {
    if (g1.central && !kind.has_central_symbol() && !kind.central_is_scalar())
      throw IndexOutOfRange("central symbol not admissible for " + kind.name());
    if (g2.central && !kind.has_central_symbol() && !kind.central_is_scalar())
      throw IndexOutOfRange("central symbol not admissible for " + kind.name());
    return NCElement::zero(kind);
  }
  std::int64_t i = g1.index, j = g2.index;
  require_index(kind, i);
  require_index(kind, j);
  NCElement out(kind);
  out.add_term(NCWord::generator(checked_add(i, j)), make_rational(checked_sub(j, i)));
  if (checked_add(i, j) == 0 &&
      (kind.has_central_symbol() || kind.central_is_scalar()))
    out.add_term(NCWord::central(), central_cocycle(i));
  return out;
}

inline NCElement lie_bracket(const AlgebraKind& kind, std::int64_t i, std::int64_t j) {
  return lie_bracket(kind, Generator::e(i), Generator::e(j));
}

// -- Poisson bracket ----------------------------------------------------------

/// {x_i, x_j} as an element; includes the central term for Virasoro kinds.
inline CommPoly poisson_pair(const AlgebraKind& kind, std::int64_t i, std::int64_t j) {
  CommPoly out(kind);
  out.add_term(CommMonomial::variable(checked_add(i, j)), make_rational(checked_sub(j, i)));
  if (checked_add(i, j) == 0 &&
      (kind.has_central_symbol() || kind.central_is_scalar()))
    out.add_term(CommMonomial::central(), central_cocycle(i));
  return out;
}

/// Biderivation extension of {x_i, x_j} = (j-i)x_{i+j} (+ central term);
/// {., c} = 0, so c-powers pass through multiplicatively.
inline CommPoly poisson_bracket(const CommPoly& p, const CommPoly& q) {
  require_same_kind(p.kind(), q.kind());
  const AlgebraKind& kind = p.kind();
  CommPoly out(kind);
  for (auto& [m1, c1] : p.terms()) {
    for (auto& [m2, c2] : q.terms()) {
      for (auto& [i, e1] : m1.factors) {
        CommMonomial rest1 = m1.divide_by(CommMonomial::variable(i));
        for (auto& [j, e2] : m2.factors) {
          CommMonomial rest2 = m2.divide_by(CommMonomial::variable(j));
          CommPoly pb = poisson_pair(kind, i, j);
          Rational scale = c1 * c2 * make_rational(e1) * make_rational(e2);
          CommMonomial context = rest1.times(rest2);
          for (auto& [mb, cb] : pb.terms())
            out.add_term(context.times(mb), scale * cb);
        }
      }
    }
  }
  return out;
}

/// d_a(p) = {p, x_a}: a graded derivation of degree a.
inline CommPoly d_a(const CommPoly& p, std::int64_t a) {
  require_index(p.kind(), a);
  const AlgebraKind& kind = p.kind();
  CommPoly out(kind);
  for (auto& [m, c] : p.terms()) {
    for (auto& [i, e] : m.factors) {
      CommMonomial rest = m.divide_by(CommMonomial::variable(i));
      CommPoly pb = poisson_pair(kind, i, a);
      for (auto& [mb, cb] : pb.terms())
        out.add_term(rest.times(mb), c * make_rational(e) * cb);
    }
  }
  return out;
}

// -- PBW normalization ---------------------------------------------------------

enum class SwapSchedule { LeftmostDescent, RightmostDescent };

namespace detail {

struct PbwCacheKey {
  int family;
  Rational kappa;
  std::vector<std::int64_t> letters;
  bool operator<(const PbwCacheKey& o) const {
    if (family != o.family) return family < o.family;
    if (int c = cmp(kappa, o.kappa); c != 0) return c < 0;
    return letters < o.letters;
  }
};

using PbwCache = std::map<PbwCacheKey, NCElement>;

inline PbwCache& pbw_cache() {
  thread_local PbwCache cache;
  return cache;
}

inline constexpr std::size_t kPbwCacheCap = 1 << 18;

inline NCElement normalize_letters(const AlgebraKind& kind,
                                   const std::vector<std::int64_t>& letters,
                                   SwapSchedule schedule) {
  // locate the descent to process
  std::size_t pos = letters.size();
  if (schedule == SwapSchedule::LeftmostDescent) {
    for (std::size_t t = 0; t + 1 < letters.size(); ++t)
      if (letters[t] > letters[t + 1]) {
        pos = t;
        break;
      }
  } else {
    for (std::size_t t = letters.size(); t >= 2; --t)
      if (letters[t - 2] > letters[t - 1]) {
        pos = t - 2;
        break;
      }
  }
  if (pos == letters.size()) {
    NCElement e(kind);
    e.add_term(NCWord{letters, 0}, Rational(1));
    return e;
  }

  const bool cache_this = schedule == SwapSchedule::LeftmostDescent;
  PbwCacheKey key;
  if (cache_this) {
    key = PbwCacheKey{static_cast<int>(kind.family()),
                      kind.central_is_scalar() ? kind.kappa() : Rational(0), letters};
    auto& cache = pbw_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::int64_t i = letters[pos], j = letters[pos + 1];  // i > j
  // e_i e_j = e_j e_i + (j-i) e_{i+j} + (i^3-i)/12 delta_{i+j,0} c
  std::vector<std::int64_t> swapped = letters;
  std::swap(swapped[pos], swapped[pos + 1]);
  NCElement result = normalize_letters(kind, swapped, schedule);

  std::vector<std::int64_t> merged;
  merged.reserve(letters.size() - 1);
  merged.insert(merged.end(), letters.begin(), letters.begin() + pos);
  merged.push_back(checked_add(i, j));
  merged.insert(merged.end(), letters.begin() + pos + 2, letters.end());
  result.add_scaled(normalize_letters(kind, merged, schedule),
                    make_rational(checked_sub(j, i)));

  if (checked_add(i, j) == 0 &&
      (kind.has_central_symbol() || kind.central_is_scalar())) {
    std::vector<std::int64_t> dropped;
    dropped.reserve(letters.size() - 2);
    dropped.insert(dropped.end(), letters.begin(), letters.begin() + pos);
    dropped.insert(dropped.end(), letters.begin() + pos + 2, letters.end());
    NCElement tail = normalize_letters(kind, dropped, schedule);
    Rational cc = central_cocycle(i);
    if (kind.central_is_scalar()) {
      result.add_scaled(tail, cc * kind.kappa());
    } else {
      for (auto& [w, coeff] : tail.terms()) {
        NCWord wc = w;
        wc.cpow = checked_add(wc.cpow, 1);
        result.add_term(std::move(wc), coeff * cc);
      }
    }
  }

  if (cache_this) {
    auto& cache = pbw_cache();
    if (cache.size() >= kPbwCacheCap) cache.clear();
    cache.emplace(std::move(key), result);
  }
  return result;
}

}  // namespace detail

/// Standard form of coeff * (word product) * c^cpow.  Independent of the
/// swap schedule (PBW); the schedule parameter exists so tests can check
/// that.
inline NCElement normalize_pbw(const AlgebraKind& kind,
                               const std::vector<std::int64_t>& letters,
                               std::int64_t cpow = 0, Rational coeff = Rational(1),
                               SwapSchedule schedule = SwapSchedule::LeftmostDescent) {
  for (std::int64_t i : letters) require_index(kind, i);
  NCElement out = detail::normalize_letters(kind, letters, schedule);
  if (cpow != 0) {
    NCElement shifted(kind);
    for (auto& [w, c] : out.terms()) {
      NCWord wc = w;
      wc.cpow = checked_add(wc.cpow, cpow);
      shifted.add_term(std::move(wc), c);
    }
    out = std::move(shifted);
  }
  return out * coeff;
}

inline NCElement nc_multiply(const NCElement& u, const NCElement& v) {
  require_same_kind(u.kind(), v.kind());
  NCElement out(u.kind());
  for (auto& [w1, c1] : u.terms())
    for (auto& [w2, c2] : v.terms()) {
      NCWord cat = w1.concat(w2);
      out.add_scaled(normalize_pbw(u.kind(), cat.letters, cat.cpow), c1 * c2);
    }
  return out;
}

inline NCElement nc_commutator(const NCElement& u, const NCElement& v) {
  return nc_multiply(u, v) - nc_multiply(v, u);
}

/// del_a(u) = [u, e_a] = u e_a - e_a u.
inline NCElement del_a(const NCElement& u, std::int64_t a) {
  require_index(u.kind(), a);
  NCElement ea = nc_generator(u.kind(), a);
  return nc_multiply(u, ea) - nc_multiply(ea, u);
}

// -- Associated graded ---------------------------------------------------------

/// Sum of the maximal-length terms with e_i -> x_i (c carried through).
inline CommPoly gr(const NCElement& u) {
  if (u.is_zero()) throw ZeroElement("gr of the zero element");
  std::int64_t top = u.max_length();
  CommPoly out(u.kind());
  for (auto& [w, c] : u.terms())
    if (w.length() == top)
      out.add_term(CommMonomial::from_letters(w.letters, w.cpow), c);
  return out;
}

// -- Index negation -------------------------------------------------------------

namespace detail {

/// Kind of the image algebra under e_i -> -e_{-i} (c -> -c, kappa -> -kappa).
inline AlgebraKind mirror_kind(const AlgebraKind& kind) {
  switch (kind.family()) {
    case Family::Witt: return kind;
    case Family::VirasoroQuotient:
      return AlgebraKind::virasoro_quotient(-kind.kappa());
    default:
      throw KindMismatch("index negation undefined for " + kind.name());
  }
}

/// The algebra map extending e_i -> -e_{-i} into mirror_kind(kind).
inline NCElement mirror(const NCElement& u) {
  AlgebraKind target = mirror_kind(u.kind());
  NCElement out(target);
  for (auto& [w, c] : u.terms()) {
    std::vector<std::int64_t> neg;
    neg.reserve(w.letters.size());
    for (std::int64_t i : w.letters) neg.push_back(checked_neg(i));
    Rational sign = (w.letters.size() % 2 == 0) ? Rational(1) : Rational(-1);
    // cpow can only be nonzero for symbolic-c kinds, which are rejected above
    out.add_scaled(normalize_pbw(target, neg, w.cpow), c * sign);
  }
  return out;
}

inline CommPoly mirror(const CommPoly& p) {
  AlgebraKind target = mirror_kind(p.kind());
  CommPoly out(target);
  for (auto& [m, c] : p.terms()) {
    std::vector<std::int64_t> neg;
    for (std::int64_t i : m.letters()) neg.push_back(checked_neg(i));
    Rational sign = (neg.size() % 2 == 0) ? Rational(1) : Rational(-1);
    out.add_term(CommMonomial::from_letters(std::move(neg), m.cpow), c * sign);
  }
  return out;
}

}  // namespace detail

/// The automorphism of U(W) (or S over the full line) extending
/// e_i -> -e_{-i}; an involution.  Only the Witt kind is closed under it.
template <class Elem>
Elem phi(const Elem& u) {
  if (!u.kind().negation_closed())
    throw KindMismatch("phi requires a kind closed under index negation, got " +
                       u.kind().name());
  return detail::mirror(u);
}

}  // namespace wv
