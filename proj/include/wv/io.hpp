/*
 * io.hpp
 * ------
 * The element grammar (ASCII, whitespace-insensitive):
 *
 *   element   := ['-'] term (('+' | '-') term)* | '0'
 *   term      := coeff ['*' factorseq] | factorseq
 *   factorseq := factor (['*'] factor)*
 *   coeff     := integer | integer '/' positive-integer
 *   factor    := 'e[' integer ']' | 'x[' integer ']' | 'c'
 *
 * '*' between factors is accepted and emitted; parse positions in errors
 * are 1-based character offsets.  print/parse round-trip exactly; terms
 * are printed in descending DecLex order, leading term first.
 *
 * JSON schema (schema_version 1):
 *   {"kind": str, "kappa": {"num","den"}?, "terms":
 *     [{"coeff": {"num","den"}, "cpow": int, "word": [int,...]}]}
 * with words listed in descending DecLex order.
 */
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "wv/brackets.hpp"
#include "wv/elements.hpp"

namespace wv {

inline constexpr int kSchemaVersion = 1;

/// A parsed term before commutative sorting / PBW normalization:
/// letters are kept in written order.
struct RawTerm {
  Rational coeff;
  std::vector<std::int64_t> letters;
  std::int64_t cpow = 0;
};

enum class ElementFlavor { Symmetric, Enveloping, Scalar };

struct RawElement {
  ElementFlavor flavor = ElementFlavor::Scalar;
  std::vector<RawTerm> terms;
};

namespace detail {

class ElementParser {
 public:
  explicit ElementParser(std::string_view text) : text_(text) {}

  RawElement parse() {
    RawElement out;
    skip_ws();
    if (done()) fail("empty element");
    bool neg = consume_sign();
    out.terms.push_back(parse_term(neg, out));
    skip_ws();
    while (!done()) {
      char c = peek();
      bool minus = c == '-';
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      advance();
      skip_ws();
      out.terms.push_back(parse_term(minus, out));
      skip_ws();
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_ + 1);  // 1-based
  }

  bool consume_sign() {
    if (!done() && peek() == '-') {
      advance();
      skip_ws();
      return true;
    }
    if (!done() && peek() == '+') {
      advance();
      skip_ws();
    }
    return false;
  }

  bool at_digit() const {
    return !done() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  bool at_factor() const {
    return !done() && (peek() == 'e' || peek() == 'x' || peek() == 'c');
  }

  std::string parse_digits() {
    if (!at_digit()) fail("expected digit");
    std::string s;
    while (at_digit()) {
      s.push_back(peek());
      advance();
    }
    return s;
  }

  std::int64_t parse_integer() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    std::size_t at = pos_;
    std::string digits = parse_digits();
    try {
      std::int64_t v = std::stoll(digits);
      return neg ? -v : v;
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", at + 1);
    }
  }

  Rational parse_coeff() {
    std::string num = parse_digits();
    skip_ws();
    if (!done() && peek() == '/') {
      advance();
      skip_ws();
      std::size_t at = pos_;
      std::string den = parse_digits();
      if (Integer(den) <= 0) throw ParseError("denominator must be positive", at + 1);
      return make_rational(Integer(num), Integer(den));
    }
    return Rational(Integer(num));
  }

  // factor := 'e[' int ']' | 'x[' int ']' | 'c'
  void parse_factor(RawTerm& term, RawElement& elem) {
    char tag = peek();
    if (tag == 'c') {
      advance();
      term.cpow = checked_add(term.cpow, 1);
      return;
    }
    ElementFlavor f = tag == 'e' ? ElementFlavor::Enveloping : ElementFlavor::Symmetric;
    if (elem.flavor == ElementFlavor::Scalar)
      elem.flavor = f;
    else if (elem.flavor != f)
      fail("mixed 'e' and 'x' generators in one element");
    advance();
    skip_ws();
    if (done() || peek() != '[') fail("expected '['");
    advance();
    skip_ws();
    std::int64_t idx = parse_integer();
    skip_ws();
    if (done() || peek() != ']') fail("expected ']'");
    advance();
    term.letters.push_back(idx);
  }

  RawTerm parse_term(bool negative, RawElement& elem) {
    RawTerm term;
    term.coeff = Rational(1);
    bool have_coeff = false;
    if (at_digit()) {
      term.coeff = parse_coeff();
      have_coeff = true;
      skip_ws();
      if (!done() && peek() == '*') {
        advance();
        skip_ws();
      }
    }
    bool have_factor = false;
    while (at_factor()) {
      parse_factor(term, elem);
      have_factor = true;
      skip_ws();
      if (!done() && peek() == '*') {
        advance();
        skip_ws();
        if (!at_factor()) fail("expected factor after '*'");
      }
    }
    if (!have_coeff && !have_factor) fail("expected term");
    if (negative) term.coeff = -term.coeff;
    return term;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the element grammar; letter order is preserved for later
/// normalization of noncommutative inputs.
inline RawElement parse_raw_element(std::string_view text) {
  return detail::ElementParser(text).parse();
}

inline CommPoly to_comm_poly(const RawElement& raw, const AlgebraKind& kind) {
  if (raw.flavor == ElementFlavor::Enveloping)
    throw KindMismatch("element uses 'e' generators; a symmetric-algebra element was expected");
  CommPoly p(kind);
  for (const RawTerm& t : raw.terms)
    p.add_term(CommMonomial::from_letters(t.letters, t.cpow), t.coeff);
  return p;
}

inline CommPoly parse_comm_poly(std::string_view text, const AlgebraKind& kind) {
  return to_comm_poly(parse_raw_element(text), kind);
}

/// PBW-normalizes a raw combination into standard form.
inline NCElement to_nc_element(const RawElement& raw, const AlgebraKind& kind,
                               SwapSchedule schedule = SwapSchedule::LeftmostDescent) {
  if (raw.flavor == ElementFlavor::Symmetric)
    throw KindMismatch("element uses 'x' generators; an enveloping-algebra element was expected");
  NCElement e(kind);
  for (const RawTerm& t : raw.terms)
    e.add_scaled(normalize_pbw(kind, t.letters, t.cpow, Rational(1), schedule), t.coeff);
  return e;
}

inline NCElement parse_nc_element(std::string_view text, const AlgebraKind& kind,
                                  SwapSchedule schedule = SwapSchedule::LeftmostDescent) {
  return to_nc_element(parse_raw_element(text), kind, schedule);
}

// -- Printing ----------------------------------------------------------------

namespace detail {

inline void print_letters(std::string& out, char symbol,
                          const std::vector<std::int64_t>& letters, std::int64_t cpow,
                          bool have_coeff) {
  bool first = !have_coeff;
  for (std::int64_t t = 0; t < cpow; ++t) {
    if (!first) out += '*';
    out += 'c';
    first = false;
  }
  for (std::int64_t i : letters) {
    if (!first) out += '*';
    out += symbol;
    out += '[';
    out += std::to_string(i);
    out += ']';
    first = false;
  }
}

template <class Elem>
std::string print_element_impl(const Elem& p, char symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending DecLex: leading term first.
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& m = it->first;
    Rational c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    Rational a = neg ? Rational(-c) : c;
    std::vector<std::int64_t> letters;
    if constexpr (std::is_same_v<Elem, CommPoly>)
      letters = m.letters();
    else
      letters = m.letters;
    bool monomial_trivial = letters.empty() && m.cpow == 0;
    bool show_coeff = a != 1 || monomial_trivial;
    if (show_coeff) out += to_string(a);
    if (!monomial_trivial) {
      if (show_coeff) out += '*';
      print_letters(out, symbol, letters, m.cpow, false);
    }
  }
  return out;
}

}  // namespace detail

inline std::string print_element(const CommPoly& p) {
  return detail::print_element_impl(p, 'x');
}

inline std::string print_element(const NCElement& e) {
  return detail::print_element_impl(e, 'e');
}

// -- JSON --------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const Json& j) {
  return make_rational(Integer(j.at("num").get<std::string>()),
                       Integer(j.at("den").get<std::string>()));
}

inline Json kind_to_json(const AlgebraKind& kind) {
  Json j;
  j["kind"] = kind.name();
  if (kind.central_is_scalar()) j["kappa"] = rational_to_json(kind.kappa());
  return j;
}

inline AlgebraKind kind_from_json(const Json& j) {
  auto fam = AlgebraKind::family_from_name(j.at("kind").get<std::string>());
  if (!fam) throw Error("unknown algebra kind '" + j.at("kind").get<std::string>() + "'");
  if (*fam == Family::VirasoroQuotient)
    return AlgebraKind::virasoro_quotient(rational_from_json(j.at("kappa")));
  switch (*fam) {
    case Family::WittPositive: return AlgebraKind::witt_positive();
    case Family::Witt: return AlgebraKind::witt();
    case Family::Cartan1: return AlgebraKind::cartan1();
    case Family::Virasoro: return AlgebraKind::virasoro();
    default: break;
  }
  throw Error("unreachable kind");
}

template <class Elem>
Json element_to_json(const Elem& p) {
  Json j = kind_to_json(p.kind());
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t;
    t["coeff"] = rational_to_json(it->second);
    t["cpow"] = it->first.cpow;
    if constexpr (std::is_same_v<Elem, CommPoly>)
      t["word"] = it->first.letters();
    else
      t["word"] = it->first.letters;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline CommPoly comm_poly_from_json(const Json& j) {
  CommPoly p(kind_from_json(j));
  for (const Json& t : j.at("terms"))
    p.add_term(CommMonomial::from_letters(t.at("word").get<std::vector<std::int64_t>>(),
                                          t.value("cpow", std::int64_t(0))),
               rational_from_json(t.at("coeff")));
  return p;
}

inline NCElement nc_element_from_json(const Json& j) {
  NCElement e(kind_from_json(j));
  for (const Json& t : j.at("terms")) {
    NCWord w{t.at("word").get<std::vector<std::int64_t>>(), t.value("cpow", std::int64_t(0))};
    if (!w.is_standard()) throw Error("JSON element contains a non-standard word");
    e.add_term(std::move(w), rational_from_json(t.at("coeff")));
  }
  return e;
}

}  // namespace wv
