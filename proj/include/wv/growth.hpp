/*
 * growth.hpp
 * ----------
 * Exact graded-dimension computation for quotients, spanning-set counting,
 * growth-slope estimation, and the absolute-degree filtration check.
 *
 * Poisson graded ideal pieces are spanned by {u * D(g)} with D a chain of
 * single-generator derivations (Leibniz reduces general brackets to these);
 * two-sided pieces are spanned by PBW sandwiches {u * g * v}.  All ranks
 * are exact over Q.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wv/linalg.hpp"
#include "wv/reduction.hpp"
#include "wv/sampling.hpp"

namespace wv {

// -- Partitions ---------------------------------------------------------------

/// Visits every partition of n as an ascending vector of parts >= 1
/// (the empty partition for n = 0).
inline void for_each_partition(std::int64_t n,
                               const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem,
                                                            std::int64_t min_part) {
    if (rem == 0) {
      fn(parts);
      return;
    }
    for (std::int64_t p = min_part; p <= rem; ++p) {
      parts.push_back(p);
      rec(rem - p, p);
      parts.pop_back();
    }
  };
  rec(n, 1);
}

/// Partition numbers P(0..n) by the Euler recurrence.
inline std::vector<Integer> partition_table(std::int64_t n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    Integer acc(0);
    for (std::int64_t k = 1;; ++k) {
      std::int64_t g1 = k * (3 * k - 1) / 2;
      std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > i && g2 > i) break;
      Integer sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= i) acc += sign * p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i) acc += sign * p[static_cast<std::size_t>(i - g2)];
    }
    p[static_cast<std::size_t>(i)] = acc;
  }
  return p;
}

inline Integer partition_count(std::int64_t n) {
  if (n < 0) return 0;
  return partition_table(n).back();
}

/// Partitions of n into exactly k parts.
inline Integer partition_count_exact_length(std::int64_t n, std::int64_t k) {
  if (k == 0) return n == 0 ? 1 : 0;
  if (n < k) return 0;
  Integer count(0);
  for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
    if (static_cast<std::int64_t>(parts.size()) == k) ++count;
  });
  return count;
}

// -- Spanning-set counting ------------------------------------------------------

enum class GrowthMetric { Degree, AbsDegree };

struct DimensionSeriesEntry {
  std::int64_t grade;
  Integer dim;
};

struct DimensionSeries {
  std::vector<DimensionSeriesEntry> values;
  GrowthMetric grading = GrowthMetric::Degree;
  std::int64_t abs_degree_base = 0;  // the C of AbsDegree(C)
  std::string context;
};

/// Exact count of normal words with metric value <= N, by enumeration.
///
/// Degree metric (WittPositive): monomials on x_1, x_2, ... with fewer
/// than k letters >= n and degree <= N.  AbsDegree(C) metric (full-line
/// kinds): standard words in NS(k,n) with max(sum |i|, length) + C <= N;
/// the length component keeps the count finite in the presence of e_0.
inline Integer count_spanning(const ReductionParams& params, const AlgebraKind& kind,
                              std::int64_t N, GrowthMetric metric,
                              std::int64_t abs_degree_base = 0,
                              std::int64_t node_budget = 50'000'000) {
  if (N < 0) return 0;
  std::int64_t nodes = 0;
  auto spend = [&]() {
    if (++nodes > node_budget)
      throw ResourceLimit("spanning-set enumeration exceeded its node budget");
  };
  Integer count(0);
  if (metric == GrowthMetric::Degree) {
    if (kind.family() != Family::WittPositive)
      throw UnsupportedKind("degree counting is finite only for witt-positive");
    // letters ascending; track remaining degree and big letters used
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t min_letter, std::int64_t rem, std::int64_t bigs) {
          ++count;
          for (std::int64_t x = min_letter; x <= rem; ++x) {
            std::int64_t nb = bigs + (x >= params.n ? 1 : 0);
            if (nb >= params.k) continue;
            spend();
            rec(x, rem - x, nb);
          }
        };
    rec(1, N, 0);
    return count;
  }
  if (!kind.full_line())
    throw UnsupportedKind("absolute-degree counting applies to full-line kinds");
  std::int64_t budget = N - abs_degree_base;  // max(sum|i|, length) <= budget
  if (budget < 0) return 0;
  // letters ascending from -budget; track abs-degree and length budgets
  std::function<void(std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t)>
      rec = [&](std::int64_t min_letter, std::int64_t abs_rem, std::int64_t len_rem,
                std::int64_t lows, std::int64_t highs) {
        ++count;
        if (len_rem == 0) return;
        for (std::int64_t x = min_letter; x <= abs_rem; ++x) {
          std::int64_t a = x < 0 ? -x : x;
          if (a > abs_rem) continue;
          std::int64_t nl = lows + (x <= -params.n ? 1 : 0);
          std::int64_t nh = highs + (x >= params.n ? 1 : 0);
          if (nl >= params.k || nh >= params.k) continue;
          spend();
          rec(x, abs_rem - a, len_rem - 1, nl, nh);
        }
      };
  rec(-budget, budget, budget, 0, 0);
  return count;
}

// -- Graded dimensions of quotients ---------------------------------------------

namespace detail {

template <class Key>
using SpanVec = typename RowSpan<Key>::Vec;

template <class Elem>
SpanVec<typename Elem::Monomial> to_vec(const Elem& e) {
  SpanVec<typename Elem::Monomial> v;
  for (auto& [m, c] : e.terms()) v.emplace(m, c);
  return v;
}

}  // namespace detail

/// Degree-graded dimension data for S(W+)/{(g)} or U(W+)/(g).
/// Spans of adjoint chains D(g) are grown incrementally by chain degree.
class QuotientGradedDims {
 public:
  explicit QuotientGradedDims(IdealSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind().family() != Family::WittPositive)
      throw UnsupportedKind("degree-graded dimensions require witt-positive");
    params_ = compute_params(spec_);
    std::visit([&](const auto& g) {
      if (!g.is_degree_homogeneous(&gen_degree_))
        throw NotHomogeneous("graded dimensions require a homogeneous generator");
    }, spec_.generator);
  }

  const ReductionParams& params() const { return params_; }
  std::int64_t generator_degree() const { return gen_degree_; }

  /// dim of the degree-N component of the free algebra (= P(N)).
  Integer free_dim(std::int64_t N) const { return partition_count(N); }

  /// dim of the degree-N component of the quotient, as free dim minus the
  /// exact rank of the ideal's degree-N piece.
  Integer quotient_dim(std::int64_t N) {
    if (N < 0) return 0;
    if (spec_.side == IdealSide::Poisson) {
      RowSpan<CommMonomial> span;
      visit_poisson_rows(N, [&](detail::SpanVec<CommMonomial> row) {
        span.insert(std::move(row));
      });
      return free_dim(N) - Integer(static_cast<unsigned long>(span.rank()));
    }
    RowSpan<NCWord> span;
    visit_two_sided_rows(N, [&](detail::SpanVec<NCWord> row) {
      span.insert(std::move(row));
    });
    return free_dim(N) - Integer(static_cast<unsigned long>(span.rank()));
  }

  /// Emits a spanning family of the ideal's degree-N piece.
  void visit_poisson_rows(std::int64_t N,
                          const std::function<void(detail::SpanVec<CommMonomial>)>& fn) {
    const CommPoly& g = std::get<CommPoly>(spec_.generator);
    std::int64_t tmax = N - gen_degree_;
    if (tmax < 0) return;
    extend_adjoint_spans(tmax);
    for (std::int64_t t = 0; t <= tmax; ++t) {
      std::int64_t udeg = tmax - t;
      for (auto& [lead, row] : adjoint_spans_[static_cast<std::size_t>(t)].rows()) {
        for_each_partition(udeg, [&](const std::vector<std::int64_t>& parts) {
          CommMonomial u = CommMonomial::from_letters(parts, 0);
          detail::SpanVec<CommMonomial> out;
          for (auto& [m, c] : row) out.emplace(u.times(m), c);
          fn(std::move(out));
        });
      }
    }
    (void)g;
  }

  void visit_two_sided_rows(std::int64_t N,
                            const std::function<void(detail::SpanVec<NCWord>)>& fn) {
    const NCElement& g = std::get<NCElement>(spec_.generator);
    std::int64_t rem = N - gen_degree_;
    if (rem < 0) return;
    for (std::int64_t du = 0; du <= rem; ++du) {
      std::int64_t dv = rem - du;
      for_each_partition(du, [&](const std::vector<std::int64_t>& uparts) {
        NCElement ue = nc_word_element(g.kind(), NCWord{uparts, 0});
        NCElement ug = nc_multiply(ue, g);
        for_each_partition(dv, [&](const std::vector<std::int64_t>& vparts) {
          NCElement ugv = nc_multiply(ug, nc_word_element(g.kind(), NCWord{vparts, 0}));
          fn(detail::to_vec(ugv));
        });
      });
    }
  }

 private:
  // adjoint_spans_[t] = reduced basis of span{D(g) : deg D = t}
  void extend_adjoint_spans(std::int64_t tmax) {
    const CommPoly& g = std::get<CommPoly>(spec_.generator);
    if (adjoint_spans_.empty()) {
      adjoint_spans_.emplace_back();
      adjoint_spans_[0].insert(detail::to_vec(g));
    }
    while (static_cast<std::int64_t>(adjoint_spans_.size()) <= tmax) {
      std::int64_t t = static_cast<std::int64_t>(adjoint_spans_.size());
      RowSpan<CommMonomial> next;
      for (std::int64_t a = 1; a <= t; ++a) {
        for (auto& [lead, row] : adjoint_spans_[static_cast<std::size_t>(t - a)].rows()) {
          CommPoly e(g.kind());
          for (auto& [m, c] : row) e.add_term(m, c);
          next.insert(detail::to_vec(d_a(e, a)));
        }
      }
      adjoint_spans_.push_back(std::move(next));
    }
  }

  IdealSpec spec_;
  ReductionParams params_;
  std::int64_t gen_degree_ = 0;
  std::vector<RowSpan<CommMonomial>> adjoint_spans_;
};

// -- GK slope --------------------------------------------------------------------

/// Least-squares slope of log(cumulative dim) against log N over
/// grades lo..hi (inclusive).  Values must be positive.
inline double gk_slope(const std::vector<DimensionSeriesEntry>& cumulative,
                       std::int64_t lo, std::int64_t hi) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : cumulative) {
    if (e.grade < lo || e.grade > hi) continue;
    if (e.grade <= 0 || e.dim <= 0) throw InsufficientData("nonpositive point in slope window");
    pts.emplace_back(std::log(static_cast<double>(e.grade)),
                     std::log(e.dim.get_d()));
  }
  if (pts.size() < 3) throw InsufficientData("slope window needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw InsufficientData("degenerate slope window");
  return (n * sxy - sx * sy) / denom;
}

// -- Filtration check --------------------------------------------------------------

/// C = 4 k^2 l with l = max |i| over letters featured in g.
inline std::int64_t filtration_constant(const IdealSpec& spec) {
  ReductionParams p = compute_params(spec);
  std::int64_t ell = std::max(checked_abs(p.ell_low), checked_abs(p.ell_high));
  return checked_mul(checked_mul(4, checked_mul(p.k, p.k)), ell);
}

struct FiltrationSample {
  NCWord m1;
  NCWord m2;
  std::int64_t max_output_delta0 = 0;
  std::int64_t bound = 0;
  bool pass = false;
};

struct FiltrationReport {
  std::int64_t constant = 0;  // the C used
  std::int64_t samples_pass = 0;
  std::int64_t samples_total = 0;
  std::vector<FiltrationSample> samples;
  bool all_pass() const { return samples_pass == samples_total; }
};

/// Samples pairs of normal words, computes a normal form of each product,
/// and checks max delta_0 over output words against
/// delta_0(m1) + delta_0(m2) + C.
inline FiltrationReport filtration_check(const IdealSpec& spec, std::int64_t sample_count,
                                         std::uint64_t seed, std::int64_t delta_cap = 20,
                                         std::int64_t max_len = 12,
                                         std::int64_t max_steps =
                                             NCReductionEngine::kDefaultMaxSteps) {
  const NCElement& g = std::get<NCElement>(spec.generator);
  NCReductionEngine engine(g, spec.side, max_steps);
  FiltrationReport report;
  report.constant = filtration_constant(spec);
  Rng rng(seed);
  for (std::int64_t s = 0; s < sample_count; ++s) {
    NCWord m1 = sample_normal_word(rng, engine.params(), g.kind(), delta_cap, max_len);
    NCWord m2 = sample_normal_word(rng, engine.params(), g.kind(), delta_cap, max_len);
    NCElement prod = nc_multiply(nc_word_element(g.kind(), m1), nc_word_element(g.kind(), m2));
    NCNormalForm nf = engine.normal_form(prod);
    std::int64_t max_delta = 0;
    for (auto& [w, c] : nf.combination.terms())
      max_delta = std::max(max_delta, w.abs_degree0());
    std::int64_t bound =
        checked_add(checked_add(m1.abs_degree0(), m2.abs_degree0()), report.constant);
    FiltrationSample sample{m1, m2, max_delta, bound, max_delta <= bound};
    report.samples_total++;
    if (sample.pass) report.samples_pass++;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

// -- Symmetric-power criticality probe ----------------------------------------------

/// Graded dims of S^k(W+)/(W+-adjoint module of g) for degrees <= n_max,
/// where g is homogeneous and supported on length-k monomials.
inline DimensionSeries sk_criticality_probe(std::int64_t k, const CommPoly& g,
                                            std::int64_t n_max) {
  if (g.is_zero()) throw ZeroGenerator("probe generator is zero");
  if (g.kind().family() != Family::WittPositive)
    throw UnsupportedKind("symmetric-power probe lives over witt-positive");
  std::int64_t gdeg = 0;
  if (!g.is_degree_homogeneous(&gdeg))
    throw NotHomogeneous("probe generator must be degree-homogeneous");
  for (auto& [m, c] : g.terms())
    if (m.length() != k)
      throw NotHomogeneous("probe generator must be supported on length-k monomials");

  DimensionSeries series;
  series.grading = GrowthMetric::Degree;
  series.context = "S^" + std::to_string(k) + "(W+) / adjoint module";
  // module closure: spans of adjoint chains only, no polynomial multiples
  std::vector<RowSpan<CommMonomial>> spans;
  spans.emplace_back();
  spans[0].insert(detail::to_vec(g));
  for (std::int64_t t = 1; t <= n_max - gdeg; ++t) {
    RowSpan<CommMonomial> next;
    for (std::int64_t a = 1; a <= t; ++a) {
      for (auto& [lead, row] : spans[static_cast<std::size_t>(t - a)].rows()) {
        CommPoly e(g.kind());
        for (auto& [m, c] : row) e.add_term(m, c);
        next.insert(detail::to_vec(d_a(e, a)));
      }
    }
    spans.push_back(std::move(next));
  }
  for (std::int64_t N = 0; N <= n_max; ++N) {
    Integer dim = partition_count_exact_length(N, k);
    std::int64_t t = N - gdeg;
    if (t >= 0 && t < static_cast<std::int64_t>(spans.size()))
      dim -= Integer(static_cast<unsigned long>(spans[static_cast<std::size_t>(t)].rank()));
    series.values.push_back({N, dim});
  }
  return series;
}

}  // namespace wv
