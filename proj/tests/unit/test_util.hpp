#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "wv/wv.hpp"

namespace wvtest {

using namespace wv;

inline AlgebraKind WP() { return AlgebraKind::witt_positive(); }
inline AlgebraKind W() { return AlgebraKind::witt(); }
inline AlgebraKind VIR() { return AlgebraKind::virasoro(); }
inline AlgebraKind VQ(const char* kappa) {
  return AlgebraKind::virasoro_quotient(rational_from_string(kappa));
}

inline CommPoly cp(const char* text, const AlgebraKind& kind) {
  return parse_comm_poly(text, kind);
}

inline NCElement nc(const char* text, const AlgebraKind& kind) {
  return parse_nc_element(text, kind);
}

inline CommMonomial cm(std::initializer_list<std::int64_t> letters, std::int64_t cpow = 0) {
  return CommMonomial::from_letters(std::vector<std::int64_t>(letters), cpow);
}

inline NCWord word(std::initializer_list<std::int64_t> letters, std::int64_t cpow = 0) {
  return NCWord{std::vector<std::int64_t>(letters), cpow};
}

}  // namespace wvtest
