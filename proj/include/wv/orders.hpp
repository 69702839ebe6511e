/*
 * orders.hpp
 * ----------
 * The two monomial orderings.  Both compare by length, then degree, then
 * lexicographically: IncLex writes monomials in increasing order and
 * compares left to right (smallest letters first); DecLex writes them in
 * decreasing order and compares left to right (biggest letters first).
 * c contributes 0 to length and degree; cpow is a final tiebreaker, inert
 * on every reduction path since no derivation acts on c.
 *
 * NCWord comparisons are defined on standard words only.
 */
#pragma once

#include <compare>

#include "wv/words.hpp"

namespace wv {

enum class OrderKind { IncLex, DecLex };

namespace detail {

inline std::strong_ordering cmp_i64(std::int64_t a, std::int64_t b) {
  return a <=> b;
}

// Lex comparison of compressed factor lists in increasing-order writing,
// without expansion.  Assumes equal total length.
inline std::strong_ordering inc_lex_factors(const CommMonomial& m1, const CommMonomial& m2) {
  std::size_t a = 0, b = 0;
  while (a < m1.factors.size() && b < m2.factors.size()) {
    auto [ia, ea] = m1.factors[a];
    auto [ib, eb] = m2.factors[b];
    if (ia != ib) return ia <=> ib;  // smaller letter first => smaller monomial
    if (ea != eb) return eb <=> ea;  // longer run of the shared letter => smaller
    ++a, ++b;
  }
  return std::strong_ordering::equal;  // equal lengths: both exhausted together
}

// Same for decreasing-order writing: scan runs from the top.
inline std::strong_ordering dec_lex_factors(const CommMonomial& m1, const CommMonomial& m2) {
  std::size_t a = m1.factors.size(), b = m2.factors.size();
  while (a > 0 && b > 0) {
    auto [ia, ea] = m1.factors[a - 1];
    auto [ib, eb] = m2.factors[b - 1];
    if (ia != ib) return ia <=> ib;  // bigger top letter => bigger monomial
    if (ea != eb) return ea <=> eb;  // longer run of the shared top letter => bigger
    --a, --b;
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare(const CommMonomial& m1, const CommMonomial& m2,
                                    OrderKind order) {
  if (auto c = detail::cmp_i64(m1.length(), m2.length()); c != 0) return c;
  if (auto c = detail::cmp_i64(m1.degree(), m2.degree()); c != 0) return c;
  auto c = order == OrderKind::IncLex ? detail::inc_lex_factors(m1, m2)
                                      : detail::dec_lex_factors(m1, m2);
  if (c != 0) return c;
  return detail::cmp_i64(m1.cpow, m2.cpow);
}

inline std::strong_ordering compare(const NCWord& w1, const NCWord& w2, OrderKind order) {
  if (auto c = detail::cmp_i64(w1.length(), w2.length()); c != 0) return c;
  if (auto c = detail::cmp_i64(w1.degree(), w2.degree()); c != 0) return c;
  const auto& a = w1.letters;
  const auto& b = w2.letters;
  if (order == OrderKind::IncLex) {
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t] != b[t]) return a[t] <=> b[t];
  } else {
    for (std::size_t t = a.size(); t > 0; --t)
      if (a[t - 1] != b[t - 1]) return a[t - 1] <=> b[t - 1];
  }
  return detail::cmp_i64(w1.cpow, w2.cpow);
}

/// Strict-less functor over DecLex; the canonical container order.
struct CanonicalLess {
  template <class M>
  bool operator()(const M& a, const M& b) const {
    return compare(a, b, OrderKind::DecLex) < 0;
  }
};

/// Order-maximal term of a nonzero element together with its coefficient.
template <class Elem>
auto leading_term(const Elem& p, OrderKind order) {
  if (p.is_zero()) throw ZeroElement("leading term of the zero element");
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (compare(it->first, best->first, order) > 0) best = it;
  return std::make_pair(best->first, best->second);
}

}  // namespace wv
