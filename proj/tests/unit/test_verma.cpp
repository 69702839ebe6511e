#include "test_util.hpp"

using namespace wvtest;

namespace {

InducedSpec verma(const char* kappa, const char* lambda) {
  return InducedSpec::verma(rational_from_string(kappa), rational_from_string(lambda));
}

ModuleVector basis(std::initializer_list<std::int64_t> partition, std::size_t index = 0) {
  return ModuleVector::basis(ModuleBasisKey{std::vector<std::int64_t>(partition), index});
}

}  // namespace

TEST_CASE("graded dimensions are partition numbers") {
  CHECK(verma_graded_dim(0) == 1);
  CHECK(verma_graded_dim(4) == 5);
  CHECK(verma_graded_dim(5) == 7);
  for (std::int64_t n = 0; n <= 20; ++n) {
    std::int64_t brute = 0;
    for_each_partition(n, [&](const std::vector<std::int64_t>&) { ++brute; });
    CHECK(verma_graded_dim(n) == brute);
  }
  InducedSpec log2 = InducedSpec{Rational(1), {{Rational(0), Rational(1)},
                                               {Rational(0), Rational(0)}}};
  CHECK(induced_graded_dim(log2, 4) == 10);  // d * P(n)
}

TEST_CASE("act: pinned values") {
  InducedSpec spec = verma("1", "1/2");
  AlgebraKind q = spec.quotient_kind();

  // e_1 . (e_{-1} (x) 1) = -2 lambda (1 (x) 1)
  ModuleVector out = act(nc("e[1]", q), basis({-1}), spec);
  ModuleVector expect = ModuleVector::highest_weight() * make_rational(-1);
  CHECK(out == expect);  // -2 * 1/2 = -1

  // (e_0 - lambda) . (e_{-1} (x) 1) = -1 * (e_{-1} (x) 1)
  ModuleVector out2 = act(nc("e[0] - 1/2", q), basis({-1}), spec);
  CHECK(out2 == basis({-1}) * make_rational(-1));

  // (c - kappa) acts as zero (tested through the symbolic algebra)
  AlgebraKind vir = VIR();
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::int64_t> parts;
    std::int64_t n = rng.uniform(0, 4);
    std::int64_t remaining = n;
    while (remaining > 0) {
      std::int64_t p = rng.uniform(1, remaining);
      parts.push_back(-p);
      remaining -= p;
    }
    std::sort(parts.begin(), parts.end());
    ModuleVector v = ModuleVector::basis(ModuleBasisKey{parts, 0});
    CHECK(act(nc("c - 1", vir), v, spec).is_zero());
  }
}

TEST_CASE("act: highest-weight annihilation and grading") {
  InducedSpec spec = verma("2/3", "5");
  AlgebraKind q = spec.quotient_kind();
  for (std::int64_t m = 1; m <= 6; ++m)
    CHECK(act(nc_generator(q, m), ModuleVector::highest_weight(), spec).is_zero());

  // degree-homogeneous u maps grade -n to grade -n + deg u
  ModuleVector v = basis({-3, -2});
  ModuleVector moved = act(nc("e[-1]", q), v, spec);
  for (auto& [key, c] : moved.terms()) CHECK(key.grade() == -6);
  ModuleVector raised = act(nc("e[2]", q), v, spec);
  for (auto& [key, c] : raised.terms()) CHECK(key.grade() == -3);
}

TEST_CASE("act is a representation") {
  InducedSpec spec = verma("-3/2", "1/3");
  AlgebraKind q = spec.quotient_kind();
  Rng rng(37);
  for (int t = 0; t < 15; ++t) {
    NCElement u = sample_nc_element(rng, q, 2, 2, 3);
    NCElement w = sample_nc_element(rng, q, 2, 2, 3);
    ModuleVector v = basis({-2, -1});
    CHECK(act(nc_multiply(u, w), v, spec) == act(u, act(w, v, spec), spec));
  }
}

TEST_CASE("logarithmic modules: non-semisimple e_0") {
  // Jordan block: e_0 m_0 = lambda m_0, e_0 m_1 = m_0 + lambda m_1
  Rational lambda = make_rational(2);
  InducedSpec spec{Rational(1), {{lambda, Rational(1)}, {Rational(0), lambda}}};
  AlgebraKind q = spec.quotient_kind();
  ModuleVector v0 = ModuleVector::highest_weight(0);
  ModuleVector v1 = ModuleVector::highest_weight(1);
  CHECK(act(nc("e[0]", q), v0, spec) == v0 * lambda);
  ModuleVector out = act(nc("e[0]", q), v1, spec);
  ModuleVector expect = v1 * lambda;
  expect += v0;
  CHECK(out == expect);
}

TEST_CASE("annihilator falsification: pinned witnesses") {
  InducedSpec spec = verma("1", "1/2");
  AlgebraKind q = spec.quotient_kind();

  // u = e_0 - lambda: killed at depth 0, witnessed at depth 1
  WitnessResult r1 = annihilator_falsify(nc("e[0] - 1/2", q), spec, 1);
  REQUIRE(r1.found);
  CHECK(r1.witness.partition == std::vector<std::int64_t>{-1});

  // u = 0 never finds a witness
  WitnessResult r0 = annihilator_falsify(NCElement::zero(q), spec, 4);
  CHECK_FALSE(r0.found);

  // u = e_1 with lambda != 0: witness at grade -1
  WitnessResult r2 = annihilator_falsify(nc("e[1]", q), spec, 2);
  REQUIRE(r2.found);
  CHECK(r2.witness.partition == std::vector<std::int64_t>{-1});

  // u = e_1 with lambda = 0: grade -1 dies, the witness is e_{-2} (x) 1
  // with image -3 e_{-1} (x) 1
  InducedSpec spec0 = verma("1", "0");
  WitnessResult r3 = annihilator_falsify(nc("e[1]", spec0.quotient_kind()), spec0, 2);
  REQUIRE(r3.found);
  CHECK(r3.witness.partition == std::vector<std::int64_t>{-2});
  CHECK(r3.image == basis({-1}) * make_rational(-3));
}

TEST_CASE("module growth") {
  InducedSpec spec = verma("1", "1/2");
  CHECK(growth_of_module(spec, 2) == 4);  // 1 + 1 + 2
  InducedSpec d3{Rational(0), {{Rational(0), Rational(0), Rational(0)},
                               {Rational(0), Rational(0), Rational(0)},
                               {Rational(0), Rational(0), Rational(0)}}};
  CHECK(growth_of_module(d3, 0) == 3);

  // superpolynomial signature: the tail log-log slope keeps climbing
  std::vector<DimensionSeriesEntry> cum;
  for (std::int64_t n = 1; n <= 40; ++n) cum.push_back({n, growth_of_module(spec, n)});
  double early = gk_slope(cum, 5, 15);
  double late = gk_slope(cum, 30, 40);
  CHECK(late > early);
  CHECK(late > 6.0);
}

TEST_CASE("act rejects incompatible kinds") {
  InducedSpec spec = verma("1", "0");
  CHECK_THROWS_AS(act(nc("e[1]", W()), ModuleVector::highest_weight(), spec), KindMismatch);
  CHECK_THROWS_AS(act(nc("e[1]", VQ("2")), ModuleVector::highest_weight(), spec),
                  KindMismatch);
  CHECK_NOTHROW(act(nc("e[1]", VQ("1")), ModuleVector::highest_weight(), spec));
}
