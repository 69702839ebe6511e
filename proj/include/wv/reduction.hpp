/*
 * reduction.hpp
 * -------------
 * The reduction engine: rewrites elements onto the spanning sets of
 * normal words modulo a one-generator ideal, with replayable rewrite
 * certificates.
 *
 * A target block of k letters, all >= n, is hit by the adjoint chain
 *
 *   h = D(g) = del_{j_1 - i_k} del_{j_2 - i_{k-1}} ... del_{j_k - i_1} (g),
 *
 * where i_1 <= ... <= i_k are the letters of the DecLex-leading monomial
 * of g; h lies in the ideal, contains the block with a nonzero
 * coefficient, and every other term makes strict IncLex progress.  The
 * low side (blocks of letters <= -n, full-line kinds only) runs the
 * negated chain, which agrees with conjugating by the index-negation
 * automorphism.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "wv/brackets.hpp"
#include "wv/elements.hpp"

namespace wv {

enum class IdealSide { Poisson, TwoSided };

inline const char* side_name(IdealSide s) {
  return s == IdealSide::Poisson ? "poisson" : "two-sided";
}

/// One-generator ideal: Poisson ideal {(g)} of a symmetric algebra or
/// two-sided ideal (g) of an enveloping algebra.
struct IdealSpec {
  IdealSide side;
  std::variant<CommPoly, NCElement> generator;

  static IdealSpec poisson(CommPoly g) { return {IdealSide::Poisson, std::move(g)}; }
  static IdealSpec two_sided(NCElement g) { return {IdealSide::TwoSided, std::move(g)}; }

  const AlgebraKind& kind() const {
    return std::visit([](const auto& g) -> const AlgebraKind& { return g.kind(); }, generator);
  }
};

/// k = |g|; n = big-letter threshold; [ell_low, ell_high] = letter range of g.
struct ReductionParams {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t ell_low = 0;
  std::int64_t ell_high = 0;
};

namespace detail {

template <class Elem>
ReductionParams compute_params_impl(const Elem& g, IdealSide side) {
  if (g.is_zero()) throw ZeroGenerator("ideal generator is zero");
  const AlgebraKind& kind = g.kind();
  switch (kind.family()) {
    case Family::WittPositive:
    case Family::Witt:
    case Family::VirasoroQuotient:
      break;
    default:
      throw UnsupportedKind("reduction is defined for witt-positive, witt, and "
                            "virasoro-quotient kinds, got " + kind.name());
  }
  ReductionParams p;
  p.k = g.max_length();
  if (p.k == 0)
    throw PreconditionViolated("scalar generator generates the unit ideal");
  bool first = true;
  for (auto& [m, c] : g.terms()) {
    std::vector<std::int64_t> ls;
    if constexpr (std::is_same_v<Elem, CommPoly>)
      ls = m.letters();
    else
      ls = m.letters;
    for (std::int64_t i : ls) {
      if (first) {
        p.ell_low = p.ell_high = i;
        first = false;
      } else {
        p.ell_low = std::min(p.ell_low, i);
        p.ell_high = std::max(p.ell_high, i);
      }
    }
  }
  if (kind.family() == Family::WittPositive) {
    if (!g.is_degree_homogeneous())
      throw NotHomogeneous("witt-positive reduction requires a degree-homogeneous generator");
    auto [lead, lc] = leading_term(g, OrderKind::DecLex);
    std::vector<std::int64_t> ls;
    if constexpr (std::is_same_v<Elem, CommPoly>)
      ls = lead.letters();
    else
      ls = lead.letters;
    p.n = checked_add(checked_mul(2, ls.back()), 1);
  } else {
    std::int64_t maxabs = std::max(checked_abs(p.ell_low), checked_abs(p.ell_high));
    p.n = checked_add(checked_mul(2, maxabs), 1);
  }
  (void)side;
  return p;
}

}  // namespace detail

inline ReductionParams compute_params(const IdealSpec& spec) {
  if (spec.side == IdealSide::Poisson &&
      !std::holds_alternative<CommPoly>(spec.generator))
    throw KindMismatch("poisson ideals take symmetric-algebra generators");
  if (spec.side == IdealSide::TwoSided &&
      !std::holds_alternative<NCElement>(spec.generator))
    throw KindMismatch("two-sided ideals take enveloping-algebra generators");
  return std::visit(
      [&](const auto& g) { return detail::compute_params_impl(g, spec.side); },
      spec.generator);
}

/// One certificate step: the element was decreased by
/// scalar * left * D(g) * right, where D is the recorded adjoint chain
/// (single-generator adjoints, listed in application order).
template <class Word>
struct CertStepT {
  Word word;  // the standard word that was rewritten
  std::vector<std::int64_t> chain;
  Rational scalar;
  Word left;
  Word right;
};

template <class Elem>
struct NormalFormT {
  using Word = typename Elem::Monomial;
  Elem combination;
  std::vector<CertStepT<Word>> certificate;
  NormalFormT(Elem comb) : combination(std::move(comb)) {}
};

using CommNormalForm = NormalFormT<CommPoly>;
using NCNormalForm = NormalFormT<NCElement>;

namespace detail {

// Flavor-specific plumbing for the shared engine.
struct CommReductionOps {
  using Elem = CommPoly;
  using Word = CommMonomial;
  static Elem adjoint(const Elem& e, std::int64_t a) { return d_a(e, a); }
  static Elem word_elem(const AlgebraKind& k, const Word& w) {
    return comm_monomial_element(k, w);
  }
  static std::vector<std::int64_t> letters(const Word& w) { return w.letters(); }
  static Word from_letters(std::vector<std::int64_t> ls, std::int64_t cpow) {
    return Word::from_letters(std::move(ls), cpow);
  }
  // Commutative sandwich: the right multiplier is inert.
  static Elem sandwich(const AlgebraKind& k, const Word& left, const Elem& mid,
                       const Word& right) {
    return comm_multiply(word_elem(k, left.times(right)), mid);
  }
};

struct NCReductionOps {
  using Elem = NCElement;
  using Word = NCWord;
  static Elem adjoint(const Elem& e, std::int64_t a) { return del_a(e, a); }
  static Elem word_elem(const AlgebraKind& k, const Word& w) {
    return nc_word_element(k, w);
  }
  static std::vector<std::int64_t> letters(const Word& w) { return w.letters; }
  static Word from_letters(std::vector<std::int64_t> ls, std::int64_t cpow) {
    return Word{std::move(ls), cpow};
  }
  static Elem sandwich(const AlgebraKind& k, const Word& left, const Elem& mid,
                       const Word& right) {
    return nc_multiply(word_elem(k, left), nc_multiply(mid, word_elem(k, right)));
  }
};

}  // namespace detail

template <class Ops>
class ReductionEngineT {
 public:
  using Elem = typename Ops::Elem;
  using Word = typename Ops::Word;
  using CertStep = CertStepT<Word>;
  using NormalForm = NormalFormT<Elem>;

  struct ChainResult {
    Elem h;                           // D(g), an element of the ideal
    Rational target_coeff;            // coefficient of the target block in h
    std::vector<std::int64_t> chain;  // application order
  };

  static constexpr std::int64_t kDefaultMaxSteps = 1'000'000;

  ReductionEngineT(Elem generator, IdealSide side,
                   std::int64_t max_steps = kDefaultMaxSteps)
      : g_(std::move(generator)),
        side_(side),
        kind_(g_.kind()),
        max_steps_(max_steps) {
    IdealSpec spec{side_, g_};
    params_ = compute_params(spec);
    auto [lead, lc] = leading_term(g_, OrderKind::DecLex);
    lead_high_ = Ops::letters(lead);
  }

  const Elem& generator() const { return g_; }
  IdealSide side() const { return side_; }
  const AlgebraKind& kind() const { return kind_; }
  const ReductionParams& params() const { return params_; }

  /// Normal words: big-letter blocks at each end shorter than k.
  bool is_normal_word(const Word& w) const {
    if (w.count_ge(params_.n) >= params_.k) return false;
    if (kind_.full_line() && w.count_le(-params_.n) >= params_.k) return false;
    return true;
  }

  /// Adjoint chain hitting a block of k letters, all >= n.
  ChainResult chain_high(const Word& block) const {
    std::vector<std::int64_t> j = Ops::letters(block);
    require_block(j, /*low=*/false);
    std::vector<std::int64_t> seq(params_.k);
    // application order: pair the t-th smallest target letter with the
    // (k-t+1)-th leading-monomial letter, innermost first
    for (std::int64_t t = 0; t < params_.k; ++t)
      seq[params_.k - 1 - t] = checked_sub(j[t], lead_high_[params_.k - 1 - t]);
    return finish_chain(block, std::move(seq));
  }

  /// Mirrored chain hitting a block of k letters, all <= -n.
  ChainResult chain_low(const Word& block) const {
    if (!kind_.full_line())
      throw PreconditionViolated("low-side reduction requires a full-line kind");
    std::vector<std::int64_t> j = Ops::letters(block);
    require_block(j, /*low=*/true);
    ensure_lead_low();
    std::vector<std::int64_t> seq(params_.k);
    // mirrored pairing: \hat j_t = -j_{k-t+1} against the mirrored leading
    // monomial, then the whole chain is negated
    for (std::int64_t t = 0; t < params_.k; ++t) {
      std::int64_t jhat = checked_neg(j[params_.k - 1 - t]);
      seq[params_.k - 1 - t] =
          checked_neg(checked_sub(jhat, lead_low_[params_.k - 1 - t]));
    }
    return finish_chain(block, std::move(seq));
  }

  struct ReduceOutcome {
    Elem combination;  // what the word equals modulo the ideal
    Elem member;       // left * D(g) * right, the ideal element used
    CertStep step;
  };

  /// One rewrite of a single word containing a reducible block.
  ReduceOutcome reduce_once(const Word& m) const {
    auto plan = plan_for(m);
    if (!plan) throw NotReducible("word has no reducible block");
    return apply_plan(m, Rational(1), *plan);
  }

  /// Full rewrite onto normal words, high blocks first, deterministic.
  NormalForm normal_form(const Elem& input) const {
    require_same_kind(kind_, input.kind());
    NormalForm nf(input);
    std::int64_t steps = 0;
    for (;;) {
      std::optional<Word> w = pick_high(nf.combination);
      if (!w) w = pick_low(nf.combination);
      if (!w) break;
      if (++steps > max_steps_)
        throw IterationBudgetExceeded("normal form exceeded " +
                                      std::to_string(max_steps_) + " steps");
      Rational alpha = nf.combination.coefficient(*w);
      auto plan = plan_for(*w);
      ReduceOutcome out = apply_plan(*w, alpha, *plan);
      nf.combination -= out.step.scalar * out.member;
      nf.certificate.push_back(std::move(out.step));
    }
    return nf;
  }

  /// Replays every step by explicit expansion: true iff
  /// input - nf.combination == sum of scalar * left * D(g) * right.
  bool verify(const Elem& input, const NormalForm& nf) const {
    if (input.kind() != kind_ || nf.combination.kind() != kind_) return false;
    Elem sum = Elem::zero(kind_);
    for (const CertStep& step : nf.certificate) {
      if (step.chain.size() != static_cast<std::size_t>(params_.k)) return false;
      sum += step.scalar * ideal_member(step);
    }
    return input - nf.combination == sum;
  }

 private:
  void require_block(const std::vector<std::int64_t>& j, bool low) const {
    if (static_cast<std::int64_t>(j.size()) != params_.k)
      throw PreconditionViolated("block must have exactly k = " +
                                 std::to_string(params_.k) + " letters");
    for (std::int64_t x : j) {
      if (!low && x < params_.n)
        throw PreconditionViolated("block letter below n = " + std::to_string(params_.n));
      if (low && x > -params_.n)
        throw PreconditionViolated("block letter above -n = " + std::to_string(-params_.n));
    }
  }

  void ensure_lead_low() const {
    if (!lead_low_.empty()) return;
    Elem mirrored = detail::mirror(g_);
    auto [lead, lc] = leading_term(mirrored, OrderKind::DecLex);
    lead_low_ = Ops::letters(lead);
  }

  ChainResult finish_chain(const Word& block, std::vector<std::int64_t> seq) const {
    const Elem* cur = &g_;
    std::vector<std::int64_t> prefix;
    prefix.reserve(seq.size());
    for (std::int64_t a : seq) {
      prefix.push_back(a);
      auto it = chain_cache_.find(prefix);
      if (it == chain_cache_.end())
        it = chain_cache_.emplace(prefix, Ops::adjoint(*cur, a)).first;
      cur = &it->second;
    }
    Rational c = cur->coefficient(block);
    if (c == 0)
      throw InvariantViolation("adjoint chain missed its target block");
    return ChainResult{*cur, c, std::move(seq)};
  }

  struct Plan {
    bool low;
    Word block;
    Word left;
    Word right;
  };

  std::optional<Plan> plan_for(const Word& m) const {
    std::vector<std::int64_t> ls = Ops::letters(m);
    if (m.count_ge(params_.n) >= params_.k) {
      // block: the k largest letters (the suffix of the sorted word)
      std::vector<std::int64_t> block(ls.end() - params_.k, ls.end());
      std::vector<std::int64_t> rest(ls.begin(), ls.end() - params_.k);
      return Plan{false, Ops::from_letters(std::move(block), 0),
                  Ops::from_letters(std::move(rest), m.cpow), Ops::from_letters({}, 0)};
    }
    if (kind_.full_line() && m.count_le(-params_.n) >= params_.k) {
      std::vector<std::int64_t> block(ls.begin(), ls.begin() + params_.k);
      std::vector<std::int64_t> rest(ls.begin() + params_.k, ls.end());
      return Plan{true, Ops::from_letters(std::move(block), 0), Ops::from_letters({}, 0),
                  Ops::from_letters(std::move(rest), m.cpow)};
    }
    return std::nullopt;
  }

  ReduceOutcome apply_plan(const Word& m, const Rational& alpha, const Plan& plan) const {
    ChainResult cr = plan.low ? chain_low(plan.block) : chain_high(plan.block);
    CertStep step{m, cr.chain, alpha / cr.target_coeff, plan.left, plan.right};
    Elem member = Ops::sandwich(kind_, plan.left, cr.h, plan.right);
    Elem combination =
        Ops::word_elem(kind_, m) - (Rational(1) / cr.target_coeff) * member;
    return ReduceOutcome{std::move(combination), std::move(member), std::move(step)};
  }

  Elem ideal_member(const CertStep& step) const {
    const Elem* cur = &g_;
    std::vector<std::int64_t> prefix;
    prefix.reserve(step.chain.size());
    for (std::int64_t a : step.chain) {
      prefix.push_back(a);
      auto it = chain_cache_.find(prefix);
      if (it == chain_cache_.end())
        it = chain_cache_.emplace(prefix, Ops::adjoint(*cur, a)).first;
      cur = &it->second;
    }
    return Ops::sandwich(kind_, step.left, *cur, step.right);
  }

  // IncLex-greatest reducible high block, ties by word then cpow.
  std::optional<Word> pick_high(const Elem& e) const {
    std::optional<Word> best;
    std::optional<Word> best_block;
    for (auto& [w, c] : e.terms()) {
      if (w.count_ge(params_.n) < params_.k) continue;
      std::vector<std::int64_t> ls = Ops::letters(w);
      Word block = Ops::from_letters(
          std::vector<std::int64_t>(ls.end() - params_.k, ls.end()), 0);
      if (!best) {
        best = w;
        best_block = block;
        continue;
      }
      auto cb = compare(block, *best_block, OrderKind::IncLex);
      if (cb > 0 || (cb == 0 && compare(w, *best, OrderKind::IncLex) > 0)) {
        best = w;
        best_block = block;
      }
    }
    return best;
  }

  // Mirror-IncLex-greatest reducible low block.
  std::optional<Word> pick_low(const Elem& e) const {
    if (!kind_.full_line()) return std::nullopt;
    std::optional<Word> best;
    std::optional<Word> best_key;
    for (auto& [w, c] : e.terms()) {
      if (w.count_le(-params_.n) < params_.k) continue;
      std::vector<std::int64_t> ls = Ops::letters(w);
      std::vector<std::int64_t> mirrored;
      for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        mirrored.push_back(checked_neg(*it));
      Word key = Ops::from_letters(
          std::vector<std::int64_t>(mirrored.end() - params_.k, mirrored.end()), 0);
      if (!best || compare(key, *best_key, OrderKind::IncLex) > 0) {
        best = w;
        best_key = key;
      }
    }
    return best;
  }

  Elem g_;
  IdealSide side_;
  AlgebraKind kind_;
  ReductionParams params_;
  std::int64_t max_steps_;
  std::vector<std::int64_t> lead_high_;
  mutable std::vector<std::int64_t> lead_low_;
  mutable std::map<std::vector<std::int64_t>, Elem> chain_cache_;
};

using CommReductionEngine = ReductionEngineT<detail::CommReductionOps>;
using NCReductionEngine = ReductionEngineT<detail::NCReductionOps>;

}  // namespace wv
