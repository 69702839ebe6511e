/*
 * linalg.hpp
 * ----------
 * Exact incremental row reduction over Q.  Rows are sparse vectors keyed
 * by monomial; stored rows are kept as primitive integer vectors and
 * elimination cross-multiplies, so no floating point and no fraction
 * growth beyond content.
 */
#pragma once

#include <map>

#include "wv/orders.hpp"
#include "wv/rational.hpp"

namespace wv {

template <class Key, class Less = CanonicalLess>
class RowSpan {
 public:
  using Vec = std::map<Key, Rational, Less>;

  /// Reduces v against the echelon set; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(Vec v) {
    while (!v.empty()) {
      const Key& lead = v.rbegin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        make_primitive(v);
        rows_.emplace(lead, std::move(v));
        return true;
      }
      // v <- pivot_lead * v - v_lead * pivot
      const Vec& pivot = it->second;
      Rational vl = v.rbegin()->second;
      Rational pl = pivot.rbegin()->second;
      for (auto& [k, c] : v) c *= pl;
      for (auto& [k, c] : pivot) {
        auto [jt, inserted] = v.emplace(k, -vl * c);
        if (!inserted) {
          jt->second -= vl * c;
          if (jt->second == 0) v.erase(jt);
        }
      }
    }
    return false;
  }

  /// True iff v lies in the current span.
  bool contains(Vec v) const {
    while (!v.empty()) {
      const Key& lead = v.rbegin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) return false;
      const Vec& pivot = it->second;
      Rational vl = v.rbegin()->second;
      Rational pl = pivot.rbegin()->second;
      for (auto& [k, c] : v) c *= pl;
      for (auto& [k, c] : pivot) {
        auto [jt, inserted] = v.emplace(k, -vl * c);
        if (!inserted) {
          jt->second -= vl * c;
          if (jt->second == 0) v.erase(jt);
        }
      }
    }
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  const std::map<Key, Vec, Less>& rows() const { return rows_; }

 private:
  static void make_primitive(Vec& v) {
    Integer den_lcm(1);
    for (auto& [k, c] : v) {
      Integer d = c.get_den();
      den_lcm = lcm(den_lcm, d);
    }
    Integer num_gcd(0);
    for (auto& [k, c] : v) {
      Integer n = c.get_num() * (den_lcm / c.get_den());
      num_gcd = gcd(num_gcd, n);
    }
    if (num_gcd == 0) return;
    Rational scale = make_rational(den_lcm, num_gcd);
    if (v.rbegin()->second * scale < 0) scale = -scale;  // positive leading entry
    for (auto& [k, c] : v) c *= scale;
  }

  std::map<Key, Vec, Less> rows_;  // leading key -> primitive row
};

}  // namespace wv
