/*
 * elements.hpp
 * ------------
 * Elements of the symmetric and enveloping algebras: finite term maps
 * monomial -> nonzero coefficient over a fixed AlgebraKind.  Values are
 * immutable in spirit: every operation returns a fresh canonical element,
 * zero coefficients are never stored, and in a central quotient c-powers
 * are folded into the coefficient as kappa^cpow on insertion.
 */
#pragma once

#include <map>
#include <utility>

#include "wv/algebra.hpp"
#include "wv/orders.hpp"
#include "wv/rational.hpp"
#include "wv/words.hpp"

namespace wv {

namespace detail {

template <class M>
void validate_monomial(const AlgebraKind& kind, const M& m);

template <>
inline void validate_monomial<CommMonomial>(const AlgebraKind& kind, const CommMonomial& m) {
  for (auto& [i, e] : m.factors) require_index(kind, i);
  if (m.cpow < 0) throw InvariantViolation("negative cpow");
  if (m.cpow > 0 && !kind.has_central_symbol() && !kind.central_is_scalar())
    throw IndexOutOfRange("central symbol not admissible for " + kind.name());
}

template <>
inline void validate_monomial<NCWord>(const AlgebraKind& kind, const NCWord& w) {
  for (std::int64_t i : w.letters) require_index(kind, i);
  if (w.cpow < 0) throw InvariantViolation("negative cpow");
  if (w.cpow > 0 && !kind.has_central_symbol() && !kind.central_is_scalar())
    throw IndexOutOfRange("central symbol not admissible for " + kind.name());
}

}  // namespace detail

template <class M>
class Element {
 public:
  using Monomial = M;
  using TermMap = std::map<M, Rational, CanonicalLess>;

  explicit Element(AlgebraKind kind) : kind_(std::move(kind)) {}

  static Element zero(const AlgebraKind& kind) { return Element(kind); }

  static Element unit(const AlgebraKind& kind, Rational coeff = Rational(1)) {
    Element e(kind);
    e.add_term(M::one(), std::move(coeff));
    return e;
  }

  const AlgebraKind& kind() const { return kind_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const M& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Accumulates coeff * m, validating against the kind and folding
  /// c -> kappa in a central quotient.  Erases the term if it cancels.
  void add_term(M m, Rational coeff) {
    if (coeff == 0) return;
    detail::validate_monomial<M>(kind_, m);
    if (kind_.central_is_scalar() && m.cpow > 0) {
      coeff *= rational_pow(kind_.kappa(), static_cast<std::uint64_t>(m.cpow));
      m.cpow = 0;
      if (coeff == 0) return;
    }
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Element& o, const Rational& scale) {
    require_same_kind(kind_, o.kind_);
    if (scale == 0) return;
    for (auto& [m, c] : o.terms_) add_term(m, c * scale);
  }

  Element& operator+=(const Element& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  Element& operator-=(const Element& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  Element& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& s) { return a *= s; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  bool operator==(const Element& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  /// Maximal term length (0 for scalars); the |g| of an element.
  std::int64_t max_length() const {
    std::int64_t k = 0;
    for (auto& [m, c] : terms_) k = std::max(k, m.length());
    return k;
  }

  /// Degree if the element is degree-homogeneous.
  bool is_degree_homogeneous(std::int64_t* degree_out = nullptr) const {
    bool first = true;
    std::int64_t d = 0;
    for (auto& [m, c] : terms_) {
      if (first) {
        d = m.degree();
        first = false;
      } else if (m.degree() != d) {
        return false;
      }
    }
    if (degree_out) *degree_out = d;
    return true;
  }

 private:
  AlgebraKind kind_;
  TermMap terms_;
};

using CommPoly = Element<CommMonomial>;
using NCElement = Element<NCWord>;

// -- Generators -------------------------------------------------------------

inline CommPoly comm_generator(const AlgebraKind& kind, std::int64_t i) {
  require_index(kind, i);
  CommPoly p(kind);
  p.add_term(CommMonomial::variable(i), Rational(1));
  return p;
}

/// c as an element: the symbol in Virasoro, the scalar kappa in a quotient.
inline CommPoly comm_central(const AlgebraKind& kind) {
  CommPoly p(kind);
  p.add_term(CommMonomial::central(), Rational(1));  // validates admissibility
  return p;
}

inline NCElement nc_generator(const AlgebraKind& kind, std::int64_t i) {
  require_index(kind, i);
  NCElement e(kind);
  e.add_term(NCWord::generator(i), Rational(1));
  return e;
}

inline NCElement nc_central(const AlgebraKind& kind) {
  NCElement e(kind);
  e.add_term(NCWord::central(), Rational(1));
  return e;
}

inline NCElement nc_word_element(const AlgebraKind& kind, NCWord w,
                                 Rational coeff = Rational(1)) {
  if (!w.is_standard()) throw InvariantViolation("nc_word_element requires a standard word");
  NCElement e(kind);
  e.add_term(std::move(w), std::move(coeff));
  return e;
}

inline CommPoly comm_monomial_element(const AlgebraKind& kind, CommMonomial m,
                                      Rational coeff = Rational(1)) {
  CommPoly p(kind);
  p.add_term(std::move(m), std::move(coeff));
  return p;
}

// -- Commutative multiplication ----------------------------------------------

inline CommPoly comm_multiply(const CommPoly& p, const CommPoly& q) {
  require_same_kind(p.kind(), q.kind());
  CommPoly r(p.kind());
  for (auto& [m1, c1] : p.terms())
    for (auto& [m2, c2] : q.terms()) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

inline CommPoly operator*(const CommPoly& p, const CommPoly& q) { return comm_multiply(p, q); }

}  // namespace wv
