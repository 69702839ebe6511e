/*
 * algebra.hpp
 * -----------
 * The algebra family.  A kind fixes the admissible generator indices and
 * how the central symbol c behaves: symbolic in the Virasoro algebra,
 * evaluated to the scalar kappa in a central quotient, absent otherwise.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wv/errors.hpp"
#include "wv/rational.hpp"

namespace wv {

enum class Family {
  WittPositive,      // indices i >= 1
  Witt,              // all i in Z
  Cartan1,           // indices i >= -1
  Virasoro,          // all i in Z, central symbol c
  VirasoroQuotient,  // all i in Z, c evaluated at kappa
};

class AlgebraKind {
 public:
  static AlgebraKind witt_positive() { return AlgebraKind(Family::WittPositive); }
  static AlgebraKind witt() { return AlgebraKind(Family::Witt); }
  static AlgebraKind cartan1() { return AlgebraKind(Family::Cartan1); }
  static AlgebraKind virasoro() { return AlgebraKind(Family::Virasoro); }
  static AlgebraKind virasoro_quotient(Rational kappa) {
    AlgebraKind k(Family::VirasoroQuotient);
    k.kappa_ = std::move(kappa);
    return k;
  }

  Family family() const { return family_; }

  /// Central charge; only meaningful for VirasoroQuotient.
  const Rational& kappa() const { return kappa_; }

  bool admits_index(std::int64_t i) const {
    switch (family_) {
      case Family::WittPositive: return i >= 1;
      case Family::Cartan1: return i >= -1;
      default: return true;
    }
  }

  /// True when c is carried symbolically (as a cpow exponent).
  bool has_central_symbol() const { return family_ == Family::Virasoro; }

  /// True when c is evaluated eagerly to kappa.
  bool central_is_scalar() const { return family_ == Family::VirasoroQuotient; }

  /// Kinds whose index set is all of Z.
  bool full_line() const {
    return family_ == Family::Witt || family_ == Family::Virasoro ||
           family_ == Family::VirasoroQuotient;
  }

  /// Kinds closed under index negation with kappa fixed.
  bool negation_closed() const { return family_ == Family::Witt; }

  std::string name() const {
    switch (family_) {
      case Family::WittPositive: return "witt-positive";
      case Family::Witt: return "witt";
      case Family::Cartan1: return "cartan1";
      case Family::Virasoro: return "virasoro";
      case Family::VirasoroQuotient: return "virasoro-quotient";
    }
    return "?";
  }

  static std::optional<Family> family_from_name(const std::string& s) {
    if (s == "witt-positive") return Family::WittPositive;
    if (s == "witt") return Family::Witt;
    if (s == "cartan1") return Family::Cartan1;
    if (s == "virasoro") return Family::Virasoro;
    if (s == "virasoro-quotient") return Family::VirasoroQuotient;
    return std::nullopt;
  }

  bool operator==(const AlgebraKind& o) const {
    if (family_ != o.family_) return false;
    if (family_ == Family::VirasoroQuotient) return kappa_ == o.kappa_;
    return true;
  }
  bool operator!=(const AlgebraKind& o) const { return !(*this == o); }

 private:
  explicit AlgebraKind(Family f) : family_(f), kappa_(0) {}
  Family family_;
  Rational kappa_;
};

inline void require_index(const AlgebraKind& kind, std::int64_t i) {
  if (!kind.admits_index(i))
    throw IndexOutOfRange("index " + std::to_string(i) + " not admissible for " + kind.name());
}

inline void require_same_kind(const AlgebraKind& a, const AlgebraKind& b) {
  if (a != b) throw KindMismatch("operands over different algebra kinds");
}

}  // namespace wv
