/*
 * wvkit — command-line front end.
 *
 * One binary, one subcommand per engine operation.  Exit codes: 0 success,
 * 1 failed verification / unexpected error, 2 input or parse error,
 * 3 resource-limit error.  Output on stdout is deterministic for fixed
 * argv and seed; the resolved configuration and all errors go to stderr.
 */
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wv/wv.hpp"

namespace {

using namespace wv;

struct CommonOpts {
  std::string algebra = "witt";
  std::string kappa = "0";
  std::string side = "poisson";
  std::string ideal;
  std::string input;
  std::string format = "text";
  std::int64_t max_degree = 25;
  std::int64_t depth = 10;
  std::int64_t samples = 100;
  std::uint64_t seed = 0x5eed2024ULL;
  std::int64_t budget = NCReductionEngine::kDefaultMaxSteps;
  std::int64_t max_delta = 20;
};

AlgebraKind resolve_kind(const CommonOpts& o) {
  auto fam = AlgebraKind::family_from_name(o.algebra);
  if (!fam) throw Error("unknown algebra '" + o.algebra + "'");
  switch (*fam) {
    case Family::WittPositive: return AlgebraKind::witt_positive();
    case Family::Witt: return AlgebraKind::witt();
    case Family::Cartan1: return AlgebraKind::cartan1();
    case Family::Virasoro: return AlgebraKind::virasoro();
    case Family::VirasoroQuotient:
      return AlgebraKind::virasoro_quotient(rational_from_string(o.kappa));
  }
  throw Error("unreachable");
}

IdealSide resolve_side(const CommonOpts& o) {
  if (o.side == "poisson") return IdealSide::Poisson;
  if (o.side == "two-sided") return IdealSide::TwoSided;
  throw Error("side must be 'poisson' or 'two-sided'");
}

IdealSpec resolve_ideal(const CommonOpts& o, const AlgebraKind& kind) {
  if (o.ideal.empty()) throw Error("--ideal is required");
  IdealSide side = resolve_side(o);
  RawElement raw = parse_raw_element(o.ideal);
  if (side == IdealSide::Poisson) return IdealSpec::poisson(to_comm_poly(raw, kind));
  return IdealSpec::two_sided(to_nc_element(raw, kind));
}

void log_config(const std::string& cmd, const CommonOpts& o) {
  std::cerr << "config: " << cmd << " algebra=" << o.algebra << " kappa=" << o.kappa
            << " side=" << o.side << " format=" << o.format << " seed=" << o.seed
            << " max-degree=" << o.max_degree << " depth=" << o.depth
            << " samples=" << o.samples << " budget=" << o.budget
            << " max-delta=" << o.max_delta;
  if (!o.ideal.empty()) std::cerr << " ideal=" << o.ideal;
  if (!o.input.empty()) std::cerr << " input=" << o.input;
  std::cerr << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_ideal = true) {
  cmd->add_option("--algebra,-a", o.algebra,
                  "algebra kind: witt-positive|witt|cartan1|virasoro|virasoro-quotient");
  cmd->add_option("--kappa", o.kappa, "central charge (rational) for virasoro-quotient");
  cmd->add_option("--format", o.format, "output format: text|json|csv");
  if (with_ideal) {
    cmd->add_option("--ideal", o.ideal, "ideal generator (element text)");
    cmd->add_option("--side", o.side, "ideal side: poisson|two-sided");
  }
}

void emit(const Json& j, const CommonOpts& o) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    throw Error("this subcommand emits json; pass --format json");
}

std::string read_file_or_stdin(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InducedSpec resolve_module(const std::string& kappa, const std::string& lambda,
                           const std::string& e0_matrix) {
  Rational k = rational_from_string(kappa);
  if (e0_matrix.empty()) return InducedSpec::verma(k, rational_from_string(lambda));
  Json j = Json::parse(e0_matrix);
  InducedSpec spec;
  spec.kappa = k;
  for (const Json& row : j) {
    std::vector<Rational> r;
    for (const Json& cell : row) {
      if (cell.is_string())
        r.push_back(rational_from_string(cell.get<std::string>()));
      else
        r.push_back(Rational(cell.get<long>()));
    }
    spec.e0_action.push_back(std::move(r));
  }
  spec.validate();
  return spec;
}

// -- subcommand bodies ---------------------------------------------------------

int cmd_bracket(const CommonOpts& o, const std::string& lhs, const std::string& rhs) {
  AlgebraKind kind = resolve_kind(o);
  RawElement a = parse_raw_element(lhs);
  RawElement b = parse_raw_element(rhs);
  bool symmetric = a.flavor == ElementFlavor::Symmetric || b.flavor == ElementFlavor::Symmetric;
  if ((a.flavor == ElementFlavor::Symmetric && b.flavor == ElementFlavor::Enveloping) ||
      (a.flavor == ElementFlavor::Enveloping && b.flavor == ElementFlavor::Symmetric))
    throw KindMismatch("cannot bracket an 'x' element with an 'e' element");
  if (symmetric) {
    CommPoly out = poisson_bracket(to_comm_poly(a, kind), to_comm_poly(b, kind));
    if (o.format == "json")
      std::cout << element_to_json(out).dump(2) << "\n";
    else
      std::cout << print_element(out) << "\n";
  } else {
    NCElement out = nc_commutator(to_nc_element(a, kind), to_nc_element(b, kind));
    if (o.format == "json")
      std::cout << element_to_json(out).dump(2) << "\n";
    else
      std::cout << print_element(out) << "\n";
  }
  return 0;
}

int cmd_normalize(const CommonOpts& o, const std::string& text) {
  AlgebraKind kind = resolve_kind(o);
  NCElement out = parse_nc_element(text, kind);
  if (o.format == "json")
    std::cout << element_to_json(out).dump(2) << "\n";
  else
    std::cout << print_element(out) << "\n";
  return 0;
}

int cmd_gr(const CommonOpts& o, const std::string& text) {
  AlgebraKind kind = resolve_kind(o);
  CommPoly out = gr(parse_nc_element(text, kind));
  if (o.format == "json")
    std::cout << element_to_json(out).dump(2) << "\n";
  else
    std::cout << print_element(out) << "\n";
  return 0;
}

int cmd_phi(const CommonOpts& o, const std::string& text) {
  AlgebraKind kind = resolve_kind(o);
  RawElement raw = parse_raw_element(text);
  if (raw.flavor == ElementFlavor::Symmetric) {
    CommPoly out = phi(to_comm_poly(raw, kind));
    std::cout << (o.format == "json" ? element_to_json(out).dump(2) : print_element(out))
              << "\n";
  } else {
    NCElement out = phi(to_nc_element(raw, kind));
    std::cout << (o.format == "json" ? element_to_json(out).dump(2) : print_element(out))
              << "\n";
  }
  return 0;
}

template <class Word>
Word single_word(const RawElement& raw, const AlgebraKind& kind);

template <>
CommMonomial single_word<CommMonomial>(const RawElement& raw, const AlgebraKind& kind) {
  CommPoly p = to_comm_poly(raw, kind);
  if (p.term_count() != 1 || p.terms().begin()->second != 1)
    throw Error("expected a single monomial with coefficient 1");
  return p.terms().begin()->first;
}

template <>
NCWord single_word<NCWord>(const RawElement& raw, const AlgebraKind& kind) {
  if (raw.terms.size() != 1 || raw.terms[0].coeff != 1)
    throw Error("expected a single standard word with coefficient 1");
  NCWord w{raw.terms[0].letters, raw.terms[0].cpow};
  for (std::int64_t i : w.letters) require_index(kind, i);
  if (!w.is_standard())
    throw Error("word is not standard (letters must be nondecreasing)");
  return w;
}

int cmd_order(const CommonOpts& o, const std::string& order_name, const std::string& m1,
              const std::string& m2) {
  AlgebraKind kind = resolve_kind(o);
  OrderKind order;
  if (order_name == "inc" || order_name == "inclex")
    order = OrderKind::IncLex;
  else if (order_name == "dec" || order_name == "declex")
    order = OrderKind::DecLex;
  else
    throw Error("--order must be inc or dec");
  RawElement a = parse_raw_element(m1);
  RawElement b = parse_raw_element(m2);
  std::strong_ordering cmp = std::strong_ordering::equal;
  if (a.flavor == ElementFlavor::Enveloping || b.flavor == ElementFlavor::Enveloping)
    cmp = compare(single_word<NCWord>(a, kind), single_word<NCWord>(b, kind), order);
  else
    cmp = compare(single_word<CommMonomial>(a, kind), single_word<CommMonomial>(b, kind),
                  order);
  std::cout << (cmp < 0 ? "Less" : cmp > 0 ? "Greater" : "Equal") << "\n";
  return 0;
}

int cmd_params(const CommonOpts& o) {
  AlgebraKind kind = resolve_kind(o);
  ReductionParams p = compute_params(resolve_ideal(o, kind));
  if (o.format == "text")
    std::cout << "k=" << p.k << " n=" << p.n << " ell_low=" << p.ell_low
              << " ell_high=" << p.ell_high << "\n";
  else
    std::cout << params_to_json(p).dump(2) << "\n";
  return 0;
}

template <class Engine, class ElemFromRaw>
int run_reduce(const CommonOpts& o, const IdealSpec& spec, ElemFromRaw word_of) {
  using Word = typename Engine::Word;
  Engine engine(std::get<typename Engine::Elem>(spec.generator), spec.side, o.budget);
  Word m = word_of(parse_raw_element(o.input));
  auto outcome = engine.reduce_once(m);
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["combination"] = element_to_json(outcome.combination);
    j["step"] = cert_step_to_json(outcome.step);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_element(outcome.combination) << "\n";
  }
  return 0;
}

int cmd_reduce(const CommonOpts& o) {
  AlgebraKind kind = resolve_kind(o);
  IdealSpec spec = resolve_ideal(o, kind);
  if (o.input.empty()) throw Error("--input is required");
  if (spec.side == IdealSide::Poisson)
    return run_reduce<CommReductionEngine>(
        o, spec, [&](const RawElement& raw) { return single_word<CommMonomial>(raw, kind); });
  return run_reduce<NCReductionEngine>(
      o, spec, [&](const RawElement& raw) { return single_word<NCWord>(raw, kind); });
}

int cmd_normal_form(const CommonOpts& o) {
  AlgebraKind kind = resolve_kind(o);
  IdealSpec spec = resolve_ideal(o, kind);
  if (o.input.empty()) throw Error("--input is required");
  if (spec.side == IdealSide::Poisson) {
    CommReductionEngine engine(std::get<CommPoly>(spec.generator), spec.side, o.budget);
    CommPoly input = parse_comm_poly(o.input, kind);
    CommNormalForm nf = engine.normal_form(input);
    if (o.format == "json")
      std::cout << normal_form_to_json(input, nf).dump(2) << "\n";
    else
      std::cout << print_element(nf.combination) << "\n";
  } else {
    NCReductionEngine engine(std::get<NCElement>(spec.generator), spec.side, o.budget);
    NCElement input = parse_nc_element(o.input, kind);
    NCNormalForm nf = engine.normal_form(input);
    if (o.format == "json")
      std::cout << normal_form_to_json(input, nf).dump(2) << "\n";
    else
      std::cout << print_element(nf.combination) << "\n";
  }
  return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& nf_path) {
  AlgebraKind kind = resolve_kind(o);
  IdealSpec spec = resolve_ideal(o, kind);
  Json j = Json::parse(read_file_or_stdin(nf_path));
  bool ok;
  if (spec.side == IdealSide::Poisson) {
    CommReductionEngine engine(std::get<CommPoly>(spec.generator), spec.side, o.budget);
    CommPoly input(kind);
    CommNormalForm nf = comm_normal_form_from_json(j, &input);
    if (!o.input.empty()) input = parse_comm_poly(o.input, kind);
    ok = engine.verify(input, nf);
  } else {
    NCReductionEngine engine(std::get<NCElement>(spec.generator), spec.side, o.budget);
    NCElement input(kind);
    NCNormalForm nf = nc_normal_form_from_json(j, &input);
    if (!o.input.empty()) input = parse_nc_element(o.input, kind);
    ok = engine.verify(input, nf);
  }
  std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int cmd_growth(const CommonOpts& o) {
  AlgebraKind kind = resolve_kind(o);
  if (o.format != "csv") throw Error("growth emits csv; pass --format csv");
  std::cout << "# schema_version=" << kSchemaVersion << "\n";
  std::cout << "N,dim_N,cumulative,spanning_count,bound\n";
  if (o.ideal.empty()) {
    Integer cum(0);
    for (std::int64_t N = 0; N <= o.max_degree; ++N) {
      Integer d = partition_count(N);
      cum += d;
      std::cout << N << "," << d.get_str() << "," << cum.get_str() << "," << cum.get_str()
                << "," << cum.get_str() << "\n";
    }
    return 0;
  }
  IdealSpec spec = resolve_ideal(o, kind);
  QuotientGradedDims dims(spec);
  ReductionParams p = compute_params(spec);
  Integer cum(0);
  for (std::int64_t N = 0; N <= o.max_degree; ++N) {
    Integer d = dims.quotient_dim(N);
    cum += d;
    Integer spanning = count_spanning(p, kind, N, GrowthMetric::Degree);
    // closed-form envelope from the q(N) r(N) factorization
    Integer q_bound(1);
    for (std::int64_t t = 1; t <= p.n; ++t)
      q_bound = q_bound * Integer(static_cast<long>(N + t)) / Integer(static_cast<long>(t));
    Integer r_bound(1);
    for (std::int64_t t = 1; t < p.k; ++t)
      r_bound *= Integer(static_cast<long>(std::max<std::int64_t>(N, 1)));
    Integer envelope = q_bound * r_bound;
    std::cout << N << "," << d.get_str() << "," << cum.get_str() << "," << spanning.get_str()
              << "," << envelope.get_str() << "\n";
  }
  return 0;
}

int cmd_filtration_check(const CommonOpts& o) {
  AlgebraKind kind = resolve_kind(o);
  CommonOpts opts = o;
  opts.side = "two-sided";
  IdealSpec spec = resolve_ideal(opts, kind);
  FiltrationReport report =
      filtration_check(spec, o.samples, o.seed, o.max_delta, 12, o.budget);
  emit(filtration_report_to_json(report), o);
  return report.all_pass() ? 0 : 1;
}

int cmd_sk_probe(const CommonOpts& o, std::int64_t k) {
  AlgebraKind kind = resolve_kind(o);
  if (o.format != "csv") throw Error("sk-probe emits csv; pass --format csv");
  if (o.ideal.empty()) throw Error("--ideal is required");
  CommPoly g = parse_comm_poly(o.ideal, kind);
  DimensionSeries series = sk_criticality_probe(k, g, o.max_degree);
  std::cout << "# schema_version=" << kSchemaVersion << "\n";
  std::cout << "N,dim_N,cumulative\n";
  Integer cum(0);
  for (const auto& e : series.values) {
    cum += e.dim;
    std::cout << e.grade << "," << e.dim.get_str() << "," << cum.get_str() << "\n";
  }
  return 0;
}

int cmd_verma(const CommonOpts& o, const std::string& lambda, const std::string& e0_matrix) {
  if (o.format != "csv") throw Error("verma emits csv; pass --format csv");
  InducedSpec spec = resolve_module(o.kappa, lambda, e0_matrix);
  std::cout << "# schema_version=" << kSchemaVersion << "\n";
  std::cout << "n,dim\n";
  for (std::int64_t n = 0; n <= o.max_degree; ++n)
    std::cout << n << "," << induced_graded_dim(spec, n).get_str() << "\n";
  return 0;
}

int cmd_act(const CommonOpts& o, const std::string& lambda, const std::string& e0_matrix,
            const std::string& vector_json) {
  InducedSpec spec = resolve_module(o.kappa, lambda, e0_matrix);
  AlgebraKind q = spec.quotient_kind();
  if (o.input.empty()) throw Error("--input is required");
  NCElement u = parse_nc_element(o.input, q);
  ModuleVector v = vector_json.empty()
                       ? ModuleVector::highest_weight()
                       : module_vector_from_json(Json::parse(vector_json));
  ModuleVector image = act(u, v, spec);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["image"] = module_vector_to_json(image);
  emit(j, o);
  return 0;
}

int cmd_ann_falsify(const CommonOpts& o, const std::string& lambda,
                    const std::string& e0_matrix) {
  InducedSpec spec = resolve_module(o.kappa, lambda, e0_matrix);
  AlgebraKind q = spec.quotient_kind();
  if (o.input.empty()) throw Error("--input is required");
  NCElement u = parse_nc_element(o.input, q);
  WitnessResult res = annihilator_falsify(u, spec, o.depth);
  emit(witness_to_json(res), o);
  return 0;
}

int cmd_suite(const CommonOpts& o, bool list, const std::vector<std::string>& overrides,
              const std::string& only, bool no_timings) {
  if (list) {
    for (const std::string& id : criterion_ids()) std::cout << id << "\n";
    return 0;
  }
  SuiteOptions opts;
  opts.seed = o.seed;
  opts.timings = !no_timings;
  if (!only.empty()) opts.only = only;
  for (const std::string& kv : overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error("override must look like knob=value");
    opts.overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  std::vector<CriterionResult> results = run_suite(opts);
  bool all = true;
  if (o.format == "json") {
    std::cout << suite_results_to_json(results).dump(2) << "\n";
    for (const auto& r : results) all = all && r.pass;
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " observed=[" << r.observed
                << "] bound=[" << r.bound << "]";
      char buf[32];
      std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
      std::cout << buf;
      if (!r.detail.empty()) std::cout << " detail=[" << r.detail << "]";
      std::cout << "\n";
    }
    std::cout << (all ? "SUITE PASS" : "SUITE FAIL") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wvkit — exact computation in enveloping and symmetric algebras of the "
               "Witt and Virasoro algebras"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key-value config file mirroring flags (flags win)");
  app.allow_config_extras(true);

  CommonOpts o;
  std::string pos1, pos2;
  std::string order_name = "inc";
  std::string lambda = "0", e0_matrix, vector_json, nf_path = "-", only;
  std::int64_t sk_k = 2;
  bool suite_list = false, no_timings = false;
  std::vector<std::string> overrides;

  auto* bracket = app.add_subcommand("bracket", "Lie or Poisson bracket of two elements");
  add_common(bracket, o, false);
  bracket->add_option("lhs", pos1, "left element")->required();
  bracket->add_option("rhs", pos2, "right element")->required();

  auto* normalize = app.add_subcommand("normalize", "PBW-normalize a raw word combination");
  add_common(normalize, o, false);
  normalize->add_option("element", pos1, "raw element")->required();

  auto* grc = app.add_subcommand("gr", "associated-graded image of an element");
  add_common(grc, o, false);
  grc->add_option("element", pos1, "element")->required();

  auto* phic = app.add_subcommand("phi", "index-negation automorphism e_i -> -e_{-i}");
  add_common(phic, o, false);
  phic->add_option("element", pos1, "element")->required();

  auto* order = app.add_subcommand("order", "compare two monomials");
  add_common(order, o, false);
  order->add_option("--order", order_name, "inc (compare smallest letters first) or dec");
  order->add_option("m1", pos1, "first monomial")->required();
  order->add_option("m2", pos2, "second monomial")->required();

  auto* params = app.add_subcommand("params", "reduction parameters (k, n, letter bounds)");
  add_common(params, o);

  auto* reduce = app.add_subcommand("reduce", "one reduction step of a monomial");
  add_common(reduce, o);
  reduce->add_option("--input", o.input, "target monomial");
  reduce->add_option("--max-steps", o.budget, "iteration budget");

  auto* nform = app.add_subcommand("normal-form", "full normal form with certificate");
  add_common(nform, o);
  nform->add_option("--input", o.input, "input element");
  nform->add_option("--max-steps", o.budget, "iteration budget");

  auto* verify = app.add_subcommand("verify", "replay a normal-form certificate");
  add_common(verify, o);
  verify->add_option("--nf", nf_path, "normal-form JSON file ('-' for stdin)");
  verify->add_option("--input", o.input, "override the input element");
  verify->add_option("--max-steps", o.budget, "iteration budget");

  auto* growth = app.add_subcommand("growth", "graded dimensions of a quotient (CSV)");
  add_common(growth, o);
  growth->add_option("--max-degree", o.max_degree, "largest degree");

  auto* filt = app.add_subcommand("filtration-check", "absolute-degree filtration check");
  add_common(filt, o, false);
  filt->add_option("--ideal", o.ideal, "ideal generator (two-sided)");
  filt->add_option("--samples", o.samples, "number of sampled pairs");
  filt->add_option("--seed", o.seed, "sampler seed");
  filt->add_option("--max-delta", o.max_delta, "delta_0 cap for sampled words");
  filt->add_option("--budget", o.budget, "iteration budget");

  auto* skp = app.add_subcommand("sk-probe", "symmetric-power criticality probe (CSV)");
  add_common(skp, o, false);
  skp->add_option("--ideal", o.ideal, "homogeneous length-k generator");
  skp->add_option("--k", sk_k, "symmetric power");
  skp->add_option("--max-degree", o.max_degree, "largest degree");

  auto* verma = app.add_subcommand("verma", "graded dimensions of an induced module (CSV)");
  add_common(verma, o, false);
  verma->add_option("--lambda", lambda, "highest weight (rational)");
  verma->add_option("--e0-matrix", e0_matrix, "e_0 action as a JSON matrix");
  verma->add_option("--max-degree", o.max_degree, "largest grade");

  auto* actc = app.add_subcommand("act", "apply an element to a module vector");
  add_common(actc, o, false);
  actc->add_option("--lambda", lambda, "highest weight (rational)");
  actc->add_option("--e0-matrix", e0_matrix, "e_0 action as a JSON matrix");
  actc->add_option("--input", o.input, "acting element");
  actc->add_option("--vector", vector_json, "module vector JSON (default: highest weight)");

  auto* annf = app.add_subcommand("ann-falsify", "search for a non-annihilated vector");
  add_common(annf, o, false);
  annf->add_option("--lambda", lambda, "highest weight (rational)");
  annf->add_option("--e0-matrix", e0_matrix, "e_0 action as a JSON matrix");
  annf->add_option("--input", o.input, "element to test");
  annf->add_option("--depth", o.depth, "search depth (grades)");

  auto* suite = app.add_subcommand("suite", "run the acceptance battery");
  add_common(suite, o, false);
  suite->add_flag("--list", suite_list, "print criterion identifiers and exit");
  suite->add_option("--only", only, "comma-separated criterion ids");
  suite->add_option("--override", overrides, "tolerance override knob=value (negative controls)");
  suite->add_option("--seed", o.seed, "base seed");
  suite->add_flag("--no-timings", no_timings, "zero the reported seconds for golden output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // format conventions: structured reports default to json, tables to csv
  for (CLI::App* c : {params, reduce, nform, filt, actc, annf})
    if (c->parsed() && c->count("--format") == 0) o.format = "json";
  for (CLI::App* c : {growth, skp, verma})
    if (c->parsed() && c->count("--format") == 0) o.format = "csv";

  try {
    if (bracket->parsed()) {
      log_config("bracket", o);
      return cmd_bracket(o, pos1, pos2);
    }
    if (normalize->parsed()) {
      log_config("normalize", o);
      return cmd_normalize(o, pos1);
    }
    if (grc->parsed()) {
      log_config("gr", o);
      return cmd_gr(o, pos1);
    }
    if (phic->parsed()) {
      log_config("phi", o);
      return cmd_phi(o, pos1);
    }
    if (order->parsed()) {
      log_config("order", o);
      return cmd_order(o, order_name, pos1, pos2);
    }
    if (params->parsed()) {
      log_config("params", o);
      return cmd_params(o);
    }
    if (reduce->parsed()) {
      log_config("reduce", o);
      return cmd_reduce(o);
    }
    if (nform->parsed()) {
      log_config("normal-form", o);
      return cmd_normal_form(o);
    }
    if (verify->parsed()) {
      log_config("verify", o);
      return cmd_verify(o, nf_path);
    }
    if (growth->parsed()) {
      log_config("growth", o);
      return cmd_growth(o);
    }
    if (filt->parsed()) {
      log_config("filtration-check", o);
      return cmd_filtration_check(o);
    }
    if (skp->parsed()) {
      log_config("sk-probe", o);
      return cmd_sk_probe(o, sk_k);
    }
    if (verma->parsed()) {
      log_config("verma", o);
      return cmd_verma(o, lambda, e0_matrix);
    }
    if (actc->parsed()) {
      log_config("act", o);
      return cmd_act(o, lambda, e0_matrix, vector_json);
    }
    if (annf->parsed()) {
      log_config("ann-falsify", o);
      return cmd_ann_falsify(o, lambda, e0_matrix);
    }
    if (suite->parsed()) {
      log_config("suite", o);
      return cmd_suite(o, suite_list, overrides, only, no_timings);
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IterationBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
