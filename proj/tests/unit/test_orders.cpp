#include <algorithm>

#include "test_util.hpp"

using namespace wvtest;

TEST_CASE("length, degree, absolute degree") {
  CHECK(cm({1, 1, 3}).length() == 3);
  CHECK(CommMonomial::one().length() == 0);
  CHECK(word({-2, 0, 3}).length() == 3);

  CHECK(cm({1, 1, 3}).degree() == 5);
  CHECK(word({-2, 0, 3}).degree() == 1);
  CHECK(CommMonomial::one().degree() == 0);

  CHECK(abs_degree(word({-2, 0, 3}), 0) == 5);
  CHECK(abs_degree(NCWord::one(), 16) == 16);
  CHECK(abs_degree(word({5}), 1) == 6);

  // c contributes 0 to length and degree
  CHECK(cm({2}, 3).length() == 1);
  CHECK(cm({2}, 3).degree() == 2);
}

TEST_CASE("compare: the three clauses") {
  // length clause
  CHECK(compare(cm({3}), cm({1, 2}), OrderKind::IncLex) < 0);
  // lex clause of <: smallest letters first
  CHECK(compare(cm({1, 4}), cm({2, 3}), OrderKind::IncLex) < 0);
  // lex clause of the dec order: biggest letters first
  CHECK(compare(cm({1, 4}), cm({2, 3}), OrderKind::DecLex) > 0);
  // degree clause
  CHECK(compare(cm({1, 2}), cm({1, 3}), OrderKind::IncLex) < 0);
  CHECK(compare(cm({2, 2}), cm({2, 2}), OrderKind::DecLex) == 0);

  // words compare the same way
  CHECK(compare(word({1, 4}), word({2, 3}), OrderKind::IncLex) < 0);
  CHECK(compare(word({1, 4}), word({2, 3}), OrderKind::DecLex) > 0);

  // exponent runs: x1 x1 x3 vs x1 x2 x2
  CHECK(compare(cm({1, 1, 3}), cm({1, 2, 2}), OrderKind::IncLex) < 0);
  CHECK(compare(cm({1, 3, 3}), cm({2, 2, 3}), OrderKind::DecLex) > 0);

  // cpow is a final tiebreaker
  CHECK(compare(cm({1}, 0), cm({1}, 1), OrderKind::IncLex) < 0);
}

TEST_CASE("leading terms") {
  AlgebraKind wp = WP();
  CommPoly p = cp("x[2]x[2] + x[1]x[3]", wp);
  auto [dec_m, dec_c] = leading_term(p, OrderKind::DecLex);
  CHECK(dec_m == cm({1, 3}));
  CHECK(dec_c == 1);
  auto [inc_m, inc_c] = leading_term(p, OrderKind::IncLex);
  CHECK(inc_m == cm({2, 2}));
  CHECK_THROWS_AS(leading_term(CommPoly::zero(wp), OrderKind::DecLex), ZeroElement);
}

namespace {

std::vector<CommMonomial> enumerate_monomials(std::int64_t lo, std::int64_t hi,
                                              std::int64_t max_len) {
  std::vector<CommMonomial> out;
  std::vector<std::int64_t> letters;
  std::function<void(std::int64_t)> rec = [&](std::int64_t min_letter) {
    out.push_back(CommMonomial::from_letters(letters, 0));
    if (static_cast<std::int64_t>(letters.size()) == max_len) return;
    for (std::int64_t x = min_letter; x <= hi; ++x) {
      letters.push_back(x);
      rec(x);
      letters.pop_back();
    }
  };
  rec(lo);
  return out;
}

}  // namespace

TEST_CASE("orders are total and multiplication-compatible on small monomials") {
  auto monos = enumerate_monomials(1, 5, 3);
  for (OrderKind order : {OrderKind::IncLex, OrderKind::DecLex}) {
    auto sorted = monos;
    std::sort(sorted.begin(), sorted.end(),
              [order](const CommMonomial& a, const CommMonomial& b) {
                return compare(a, b, order) < 0;
              });
    // totality: distinct monomials never compare equal
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      CHECK(compare(sorted[i], sorted[i + 1], order) < 0);
    // compatibility with multiplication
    auto units = enumerate_monomials(1, 4, 2);
    for (std::size_t i = 0; i < monos.size(); i += 7)
      for (std::size_t j = 0; j < monos.size(); j += 11)
        for (std::size_t u = 0; u < units.size(); u += 3) {
          auto c1 = compare(monos[i], monos[j], order);
          auto c2 = compare(monos[i].times(units[u]), monos[j].times(units[u]), order);
          if (c1 < 0) CHECK(c2 < 0);
          if (c1 == 0) CHECK(c2 == 0);
          if (c1 > 0) CHECK(c2 > 0);
        }
  }
}

TEST_CASE("descending chains below a monomial are finite in a letter window") {
  // surrogate for the well-ordering claim: within letters [1,6] and length
  // <= 3 the predecessor set is finite and enumerable
  auto monos = enumerate_monomials(1, 6, 3);
  CommMonomial m = cm({3, 3});
  std::size_t below = 0;
  for (const auto& x : monos)
    if (compare(x, m, OrderKind::IncLex) < 0) ++below;
  CHECK(below > 0);
  CHECK(below < monos.size());
}

TEST_CASE("metric properties") {
  // degree and length are additive under multiplication
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    CommMonomial a = cm({rng.uniform(1, 9), rng.uniform(1, 9)});
    CommMonomial b = cm({rng.uniform(1, 9)});
    CHECK(a.times(b).degree() == a.degree() + b.degree());
    CHECK(a.times(b).length() == a.length() + b.length());
  }
  // delta_C >= length when all indices are nonzero; invariant under negation
  for (int t = 0; t < 50; ++t) {
    std::vector<std::int64_t> ls;
    for (int q = 0; q < 4; ++q) {
      std::int64_t x = 0;
      while (x == 0) x = rng.uniform(-9, 9);
      ls.push_back(x);
    }
    std::sort(ls.begin(), ls.end());
    NCWord w{ls, 0};
    CHECK(abs_degree(w, 2) >= w.length());
    std::vector<std::int64_t> neg;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) neg.push_back(-*it);
    CHECK(abs_degree(NCWord{neg, 0}, 2) == abs_degree(w, 2));
  }
}
