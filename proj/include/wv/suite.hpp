/*
 * suite.hpp
 * ---------
 * The acceptance battery: every tolerance and threshold is pinned here as
 * a named constant.  Overrides exist for negative controls (for example
 * forcing a slope bound to 0 to watch a criterion fail); they never loosen
 * the defaults.
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wv/brackets.hpp"
#include "wv/growth.hpp"
#include "wv/io.hpp"
#include "wv/reduction.hpp"
#include "wv/sampling.hpp"
#include "wv/verma.hpp"

namespace wv {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string observed;
  std::string bound;
  double seconds = 0.0;
  std::string detail;  // first failure, when any
};

struct SuiteOptions {
  std::uint64_t seed = 0x5eed2024ULL;
  std::map<std::string, double> overrides;  // knob name -> value
  std::optional<std::string> only;          // comma-separated criterion ids
  bool timings = true;
};

namespace suite_detail {

// Pinned tolerances and sizes.
inline constexpr std::int64_t kLieMaxIndex = 12;
inline constexpr std::int64_t kPbwWords = 500;
inline constexpr std::int64_t kPbwWordLen = 6;
inline constexpr std::int64_t kPbwMaxIndex = 8;
inline constexpr std::int64_t kAssocTriples = 200;
inline constexpr std::int64_t kGrPairs = 200;
inline constexpr std::int64_t kGrMaxLen = 4;
inline constexpr std::int64_t kGrAdjLo = 1, kGrAdjHi = 6;
inline constexpr std::int64_t kReductionMaxDegree = 30;
inline constexpr std::int64_t kSoundnessInputs = 100;
inline constexpr std::int64_t kSpanningMaxDegree = 20;
inline constexpr std::int64_t kGrowthMaxDegree = 25;
inline constexpr std::int64_t kSlopeWindowLo = 15, kSlopeWindowHi = 25;
inline constexpr double kGrowthSlopeBound = 4.3;
inline constexpr double kFreeSlopeMin = 4.0;
inline constexpr std::int64_t kFiltrationSamples = 100;
inline constexpr std::int64_t kFiltrationDeltaCap = 20;
inline constexpr std::int64_t kFiltrationConstant = 16;  // 4 k^2 l for g = e_1^2
inline constexpr std::int64_t kVermaMaxGrade = 20;
inline constexpr std::int64_t kVermaGrowthMax = 40;
inline constexpr std::int64_t kVermaTailLo = 30, kVermaTailHi = 40;
inline constexpr double kVermaTailSlopeMin = 6.0;
inline constexpr std::int64_t kWitnessElements = 50;
inline constexpr std::int64_t kWitnessDepth = 10;
inline constexpr std::int64_t kWitnessWordLen = 3;
inline constexpr std::int64_t kWitnessMaxIndex = 5;
inline constexpr std::int64_t kPhiPairs = 200;
inline constexpr double kSkSlopeBound = 1.3;

inline double knob(const SuiteOptions& opt, const std::string& name, double fallback) {
  auto it = opt.overrides.find(name);
  return it == opt.overrides.end() ? fallback : it->second;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

using Clock = std::chrono::steady_clock;

struct Runner {
  const SuiteOptions& opt;
  std::vector<CriterionResult> results;

  bool wanted(const std::string& id) const {
    if (!opt.only) return true;
    std::string list = *opt.only;
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t comma = list.find(',', pos);
      std::string item = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      if (item == id) return true;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return false;
  }

  void run(const std::string& id, const std::function<void(CriterionResult&)>& body) {
    if (!wanted(id)) return;
    CriterionResult r;
    r.id = id;
    auto t0 = Clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!opt.timings) r.seconds = 0.0;
    results.push_back(std::move(r));
  }
};

// -- c01: Lie axioms -----------------------------------------------------------

inline void c01_lie_axioms(CriterionResult& r, const SuiteOptions& opt) {
  std::int64_t B = static_cast<std::int64_t>(knob(opt, "c01_max_index", kLieMaxIndex));
  AlgebraKind vir = AlgebraKind::virasoro();
  std::int64_t checked = 0;
  for (std::int64_t i = -B; i <= B; ++i) {
    for (std::int64_t j = -B; j <= B; ++j) {
      if (lie_bracket(vir, i, j) != -lie_bracket(vir, j, i)) {
        r.detail = "antisymmetry fails at (" + str(i) + "," + str(j) + ")";
        return;
      }
    }
  }
  for (std::int64_t i = -B; i <= B; ++i)
    for (std::int64_t j = -B; j <= B; ++j)
      for (std::int64_t k = -B; k <= B; ++k) {
        NCElement jac =
            nc_commutator(nc_generator(vir, i), lie_bracket(vir, j, k)) +
            nc_commutator(nc_generator(vir, j), lie_bracket(vir, k, i)) +
            nc_commutator(nc_generator(vir, k), lie_bracket(vir, i, j));
        if (!jac.is_zero()) {
          r.detail = "jacobi fails at (" + str(i) + "," + str(j) + "," + str(k) + ")";
          return;
        }
        ++checked;
      }
  r.pass = true;
  r.observed = str(checked) + " triples exact";
  r.bound = "zero tolerance";
}

// -- c02: PBW confluence --------------------------------------------------------

inline void c02_pbw_confluence(CriterionResult& r, const SuiteOptions& opt) {
  AlgebraKind vir = AlgebraKind::virasoro();
  Rng rng(opt.seed + 2);
  for (std::int64_t t = 0; t < kPbwWords; ++t) {
    std::int64_t len = rng.uniform(0, kPbwWordLen);
    std::vector<std::int64_t> w = sample_raw_word(rng, vir, len, kPbwMaxIndex);
    NCElement left = normalize_pbw(vir, w, 0, Rational(1), SwapSchedule::LeftmostDescent);
    NCElement right = normalize_pbw(vir, w, 0, Rational(1), SwapSchedule::RightmostDescent);
    if (left != right) {
      r.detail = "schedules disagree on word #" + str(t);
      return;
    }
  }
  for (std::int64_t t = 0; t < kAssocTriples; ++t) {
    NCElement u = sample_nc_element(rng, vir, 2, 3, 5, true);
    NCElement v = sample_nc_element(rng, vir, 2, 3, 5, true);
    NCElement w = sample_nc_element(rng, vir, 2, 3, 5, true);
    if (nc_multiply(nc_multiply(u, v), w) != nc_multiply(u, nc_multiply(v, w))) {
      r.detail = "associativity fails on triple #" + str(t);
      return;
    }
  }
  r.pass = true;
  r.observed = str(kPbwWords) + " words, " + str(kAssocTriples) + " triples exact";
  r.bound = "zero tolerance";
}

// -- c03: gr-compatibility -------------------------------------------------------

inline void c03_gr_compat(CriterionResult& r, const SuiteOptions& opt) {
  AlgebraKind witt = AlgebraKind::witt();
  Rng rng(opt.seed + 3);
  std::int64_t nonzero = 0;
  for (std::int64_t t = 0; t < kGrPairs; ++t) {
    NCElement u = sample_nc_element(rng, witt, 2, kGrMaxLen, 8);
    while (u.is_zero()) u = sample_nc_element(rng, witt, 2, kGrMaxLen, 8);
    std::int64_t a = rng.uniform(kGrAdjLo, kGrAdjHi);
    CommPoly dgr = d_a(gr(u), a);
    if (dgr.is_zero()) continue;
    ++nonzero;
    NCElement del = del_a(u, a);
    if (del.is_zero() || gr(del) != dgr) {
      r.detail = "gr del_a != d_a gr on pair #" + str(t) + " (a=" + str(a) + ")";
      return;
    }
  }
  r.pass = nonzero >= kGrPairs / 4;
  if (!r.pass) r.detail = "too few applicable pairs: " + str(nonzero);
  r.observed = str(nonzero) + "/" + str(kGrPairs) + " applicable pairs exact";
  r.bound = "zero tolerance";
}

// -- c04: reduction formula -------------------------------------------------------

inline std::vector<CommPoly> witt_plus_test_generators() {
  AlgebraKind wp = AlgebraKind::witt_positive();
  CommPoly g1 = comm_generator(wp, 1) * comm_generator(wp, 1);
  CommPoly g2 = comm_generator(wp, 1) * comm_generator(wp, 2);
  CommPoly g3 = comm_generator(wp, 2) * comm_generator(wp, 2) +
                comm_generator(wp, 1) * comm_generator(wp, 3);
  return {g1, g2, g3};
}

inline void c04_reduction_formula(CriterionResult& r, const SuiteOptions& opt) {
  (void)opt;
  std::int64_t total = 0;
  for (const CommPoly& g : witt_plus_test_generators()) {
    CommReductionEngine engine(g, IdealSide::Poisson);
    const ReductionParams& p = engine.params();
    // every monomial with exactly k letters all >= n and degree <= 30
    std::vector<std::int64_t> letters(static_cast<std::size_t>(p.k));
    std::function<bool(std::int64_t, std::int64_t)> rec = [&](std::int64_t pos,
                                                              std::int64_t min_letter) {
      if (pos == p.k) {
        CommMonomial m = CommMonomial::from_letters(letters, 0);
        auto cr = engine.chain_high(m);
        Rational c = cr.target_coeff;
        if (!(is_integer(c) && c > 0)) {
          r.detail = "target coefficient " + to_string(c) + " not a positive integer at " +
                     print_element(comm_monomial_element(g.kind(), m));
          return false;
        }
        std::int64_t mdeg = m.degree();
        for (auto& [w, cw] : cr.h.terms()) {
          if (w.degree() != mdeg) {
            r.detail = "degree not preserved in chain output";
            return false;
          }
          if (w == m) continue;
          if (compare(w, m, OrderKind::IncLex) >= 0) {
            r.detail = "non-target term not IncLex-smaller at " +
                       print_element(comm_monomial_element(g.kind(), m));
            return false;
          }
        }
        ++total;
        return true;
      }
      for (std::int64_t x = min_letter;; ++x) {
        std::int64_t used = 0;
        for (std::int64_t q = 0; q < pos; ++q) used += letters[static_cast<std::size_t>(q)];
        if (used + x * (p.k - pos) > kReductionMaxDegree) break;
        letters[static_cast<std::size_t>(pos)] = x;
        if (!rec(pos + 1, x)) return false;
      }
      return true;
    };
    if (!rec(0, p.n)) return;
  }
  r.pass = true;
  r.observed = str(total) + " target monomials, zero failures";
  r.bound = "coefficient a positive integer; strict IncLex descent; degree preserved";
}

// -- c05: normal-form soundness and spanning ---------------------------------------

inline void c05_normal_form_soundness(CriterionResult& r, const SuiteOptions& opt) {
  Rng rng(opt.seed + 5);
  std::int64_t verified = 0;
  std::int64_t ranks = 0;
  for (const CommPoly& g : witt_plus_test_generators()) {
    CommReductionEngine engine(g, IdealSide::Poisson);
    for (std::int64_t t = 0; t < kSoundnessInputs; ++t) {
      CommPoly input = sample_comm_poly(rng, g.kind(), 4, 4, 12);
      CommNormalForm nf = engine.normal_form(input);
      if (!engine.verify(input, nf)) {
        r.detail = "certificate replay failed on input #" + str(t);
        return;
      }
      for (auto& [w, c] : nf.combination.terms())
        if (!engine.is_normal_word(w)) {
          r.detail = "non-normal output word on input #" + str(t);
          return;
        }
      ++verified;
    }
    // spanning at fixed degree: normal words + ideal rows fill the space
    QuotientGradedDims dims(IdealSpec::poisson(g));
    const ReductionParams& p = engine.params();
    for (std::int64_t N = 0; N <= kSpanningMaxDegree; ++N) {
      RowSpan<CommMonomial> span;
      for_each_partition(N, [&](const std::vector<std::int64_t>& parts) {
        CommMonomial m = CommMonomial::from_letters(parts, 0);
        if (m.count_ge(p.n) < p.k) {
          typename RowSpan<CommMonomial>::Vec v;
          v.emplace(m, Rational(1));
          span.insert(std::move(v));
        }
      });
      dims.visit_poisson_rows(N, [&](RowSpan<CommMonomial>::Vec row) {
        span.insert(std::move(row));
      });
      if (Integer(static_cast<unsigned long>(span.rank())) != partition_count(N)) {
        r.detail = "span(normal) + I_N != full space at degree " + str(N);
        return;
      }
      ++ranks;
    }
  }
  r.pass = true;
  r.observed = str(verified) + " certificates verified, " + str(ranks) + " degrees full-rank";
  r.bound = "exact replay; exact rank";
}

// -- c06: growth bound --------------------------------------------------------------

inline void c06_growth_bound(CriterionResult& r, const SuiteOptions& opt) {
  double slope_bound = knob(opt, "c06_slope_bound", kGrowthSlopeBound);
  double free_min = knob(opt, "c06_free_slope_min", kFreeSlopeMin);
  AlgebraKind wp = AlgebraKind::witt_positive();
  CommPoly g = comm_generator(wp, 1) * comm_generator(wp, 1);
  QuotientGradedDims dims(IdealSpec::poisson(g));
  const ReductionParams p = compute_params(IdealSpec::poisson(g));
  Integer cum(0), free_cum(0);
  std::vector<DimensionSeriesEntry> cum_series, free_series;
  for (std::int64_t N = 0; N <= kGrowthMaxDegree; ++N) {
    cum += dims.quotient_dim(N);
    free_cum += dims.free_dim(N);
    cum_series.push_back({N, cum});
    free_series.push_back({N, free_cum});
    Integer spanning = count_spanning(p, wp, N, GrowthMetric::Degree);
    if (cum > spanning) {
      r.detail = "cumulative dim " + cum.get_str() + " exceeds spanning count " +
                 spanning.get_str() + " at N=" + str(N);
      return;
    }
  }
  double slope = gk_slope(cum_series, kSlopeWindowLo, kSlopeWindowHi);
  double free_slope = gk_slope(free_series, kSlopeWindowLo, kSlopeWindowHi);
  r.observed = "quotient slope " + fmt_double(slope) + ", free slope " + fmt_double(free_slope);
  r.bound = "quotient <= " + fmt_double(slope_bound) + ", free > " + fmt_double(free_min) +
            ", cumulative <= spanning at every N";
  if (slope > slope_bound) {
    r.detail = "quotient slope above bound";
    return;
  }
  if (free_slope <= free_min) {
    r.detail = "free slope not above intermediate-growth control";
    return;
  }
  r.pass = true;
}

// -- c07: filtration constant --------------------------------------------------------

inline void c07_filtration_constant(CriterionResult& r, const SuiteOptions& opt) {
  AlgebraKind witt = AlgebraKind::witt();
  NCElement g = nc_multiply(nc_generator(witt, 1), nc_generator(witt, 1));
  IdealSpec spec = IdealSpec::two_sided(g);
  std::int64_t C = filtration_constant(spec);
  if (C != kFiltrationConstant) {
    r.detail = "expected C = 16 for g = e_1^2, got " + str(C);
    return;
  }
  FiltrationReport report =
      filtration_check(spec, kFiltrationSamples, opt.seed + 7, kFiltrationDeltaCap);
  r.observed = str(report.samples_pass) + "/" + str(report.samples_total) +
               " pairs within delta bound, C = " + str(C);
  r.bound = "max output delta_0 <= delta_0(m1) + delta_0(m2) + 16; zero failures";
  if (!report.all_pass()) {
    for (const auto& s : report.samples)
      if (!s.pass) {
        r.detail = "pair with max delta " + str(s.max_output_delta0) + " > bound " +
                   str(s.bound);
        break;
      }
    return;
  }
  r.pass = true;
}

// -- c08: Verma grading ---------------------------------------------------------------

inline void c08_verma_grading(CriterionResult& r, const SuiteOptions& opt) {
  double tail_min = knob(opt, "c08_tail_slope_min", kVermaTailSlopeMin);
  // independent oracle: direct enumeration
  for (std::int64_t n = 0; n <= kVermaMaxGrade; ++n) {
    Integer enumerated(0);
    for_each_partition(n, [&](const std::vector<std::int64_t>&) { ++enumerated; });
    if (verma_graded_dim(n) != enumerated) {
      r.detail = "dim mismatch at grade " + str(n);
      return;
    }
  }
  InducedSpec verma = InducedSpec::verma(Rational(1), make_rational(1, 2));
  std::vector<DimensionSeriesEntry> cum_series;
  for (std::int64_t N = 0; N <= kVermaGrowthMax; ++N)
    cum_series.push_back({N, growth_of_module(verma, N)});
  double slope = gk_slope(cum_series, kVermaTailLo, kVermaTailHi);
  r.observed = "dims exact to grade " + str(kVermaMaxGrade) + ", tail slope " +
               fmt_double(slope);
  r.bound = "tail slope > " + fmt_double(tail_min) + " (beats every polynomial of degree <= 6)";
  if (slope <= tail_min) {
    r.detail = "tail slope too small";
    return;
  }
  r.pass = true;
}

// -- c09: annihilator falsification ----------------------------------------------------

inline void c09_annihilator_falsification(CriterionResult& r, const SuiteOptions& opt) {
  Rng rng(opt.seed + 9);
  std::int64_t rejected = 0;
  for (std::int64_t t = 0; t < kWitnessElements; ++t) {
    Rational kappa = rng.small_rational();
    Rational lambda = rng.small_rational();
    InducedSpec spec = InducedSpec::verma(kappa, lambda);
    AlgebraKind q = AlgebraKind::virasoro_quotient(kappa);
    NCElement u(q);
    for (;;) {
      u = sample_nc_element(rng, q, 3, kWitnessWordLen, kWitnessMaxIndex);
      if (u.is_zero()) continue;
      // depth-bounded witnesses are impossible on grading grounds alone
      // when every component has degree beyond the depth; resample those
      std::int64_t min_deg = 0;
      bool first = true;
      for (auto& [w, c] : u.terms()) {
        if (first || w.degree() < min_deg) min_deg = w.degree();
        first = false;
      }
      if (min_deg > kWitnessDepth) {
        ++rejected;
        continue;
      }
      break;
    }
    WitnessResult res = annihilator_falsify(u, spec, kWitnessDepth);
    if (!res.found) {
      r.detail = "no witness at depth " + str(kWitnessDepth) + " for sample #" + str(t) +
                 " (u = " + print_element(u) + ", kappa = " + to_string(kappa) +
                 ", lambda = " + to_string(lambda) + ")";
      return;
    }
  }
  r.pass = true;
  r.observed = str(kWitnessElements) + " witnesses found (" + str(rejected) +
               " grading-infeasible draws resampled)";
  r.bound = "witness within depth " + str(kWitnessDepth) + " for every sample";
}

// -- c10: phi -----------------------------------------------------------------------

inline void c10_phi_automorphism(CriterionResult& r, const SuiteOptions& opt) {
  AlgebraKind witt = AlgebraKind::witt();
  Rng rng(opt.seed + 10);
  for (std::int64_t t = 0; t < kPhiPairs; ++t) {
    NCElement u = sample_nc_element(rng, witt, 2, 4, 6);
    NCElement v = sample_nc_element(rng, witt, 2, 4, 6);
    if (phi(phi(u)) != u) {
      r.detail = "phi not an involution on pair #" + str(t);
      return;
    }
    if (phi(nc_multiply(u, v)) != nc_multiply(phi(u), phi(v))) {
      r.detail = "phi not multiplicative on pair #" + str(t);
      return;
    }
  }
  r.pass = true;
  r.observed = str(kPhiPairs) + " pairs exact";
  r.bound = "zero tolerance";
}

// -- c11: S^k criticality probe -------------------------------------------------------

inline void c11_sk_criticality(CriterionResult& r, const SuiteOptions& opt) {
  double slope_bound = knob(opt, "c11_slope_bound", kSkSlopeBound);
  AlgebraKind wp = AlgebraKind::witt_positive();
  CommPoly g = comm_generator(wp, 1) * comm_generator(wp, 3);
  DimensionSeries series = sk_criticality_probe(2, g, kGrowthMaxDegree);
  Integer cum(0);
  std::vector<DimensionSeriesEntry> cum_series;
  for (const auto& e : series.values) {
    cum += e.dim;
    cum_series.push_back({e.grade, cum});
  }
  double slope = gk_slope(cum_series, kSlopeWindowLo, kSlopeWindowHi);
  r.observed = "cumulative slope " + fmt_double(slope);
  r.bound = "slope <= " + fmt_double(slope_bound) + " (consistent with GK <= k-1 = 1)";
  if (slope > slope_bound) {
    r.detail = "slope above bound";
    return;
  }
  r.pass = true;
}

}  // namespace suite_detail

inline std::vector<std::string> criterion_ids() {
  return {"c01_lie_axioms",         "c02_pbw_confluence",
          "c03_gr_compat",          "c04_reduction_formula",
          "c05_normal_form_soundness", "c06_growth_bound",
          "c07_filtration_constant", "c08_verma_grading",
          "c09_annihilator_falsification", "c10_phi_automorphism",
          "c11_sk_criticality"};
}

inline std::vector<CriterionResult> run_suite(const SuiteOptions& opt = {}) {
  using namespace suite_detail;
  static const std::set<std::string> known_knobs = {
      "c01_max_index", "c06_slope_bound", "c06_free_slope_min", "c08_tail_slope_min",
      "c11_slope_bound"};
  for (auto& [k, v] : opt.overrides)
    if (!known_knobs.count(k)) throw Error("unknown override knob '" + k + "'");
  Runner runner{opt, {}};
  runner.run("c01_lie_axioms", [&](CriterionResult& r) { c01_lie_axioms(r, opt); });
  runner.run("c02_pbw_confluence", [&](CriterionResult& r) { c02_pbw_confluence(r, opt); });
  runner.run("c03_gr_compat", [&](CriterionResult& r) { c03_gr_compat(r, opt); });
  runner.run("c04_reduction_formula",
             [&](CriterionResult& r) { c04_reduction_formula(r, opt); });
  runner.run("c05_normal_form_soundness",
             [&](CriterionResult& r) { c05_normal_form_soundness(r, opt); });
  runner.run("c06_growth_bound", [&](CriterionResult& r) { c06_growth_bound(r, opt); });
  runner.run("c07_filtration_constant",
             [&](CriterionResult& r) { c07_filtration_constant(r, opt); });
  runner.run("c08_verma_grading", [&](CriterionResult& r) { c08_verma_grading(r, opt); });
  runner.run("c09_annihilator_falsification",
             [&](CriterionResult& r) { c09_annihilator_falsification(r, opt); });
  runner.run("c10_phi_automorphism",
             [&](CriterionResult& r) { c10_phi_automorphism(r, opt); });
  runner.run("c11_sk_criticality", [&](CriterionResult& r) { c11_sk_criticality(r, opt); });
  return runner.results;
}

}  // namespace wv
