/*
 * report_io.hpp
 * -------------
 * JSON serialization for engine outputs: reduction parameters, rewrite
 * certificates, normal forms, filtration reports, module vectors, and
 * witness reports.  All schemas carry schema_version.
 */
#pragma once

#include "wv/growth.hpp"
#include "wv/io.hpp"
#include "wv/reduction.hpp"
#include "wv/suite.hpp"
#include "wv/verma.hpp"

namespace wv {

inline Json params_to_json(const ReductionParams& p) {
  return Json{{"schema_version", kSchemaVersion},
              {"k", p.k},
              {"n", p.n},
              {"ell_low", p.ell_low},
              {"ell_high", p.ell_high}};
}

namespace detail {

template <class Word>
Json word_to_json(const Word& w) {
  Json j;
  if constexpr (std::is_same_v<Word, CommMonomial>)
    j["word"] = w.letters();
  else
    j["word"] = w.letters;
  j["cpow"] = w.cpow;
  return j;
}

inline CommMonomial comm_word_from_json(const Json& j) {
  return CommMonomial::from_letters(j.at("word").get<std::vector<std::int64_t>>(),
                                    j.value("cpow", std::int64_t(0)));
}

inline NCWord nc_word_from_json(const Json& j) {
  return NCWord{j.at("word").get<std::vector<std::int64_t>>(),
                j.value("cpow", std::int64_t(0))};
}

}  // namespace detail

template <class Word>
Json cert_step_to_json(const CertStepT<Word>& s) {
  Json j;
  j["reduced"] = detail::word_to_json(s.word);
  j["chain"] = s.chain;
  j["scalar"] = rational_to_json(s.scalar);
  j["left"] = detail::word_to_json(s.left);
  j["right"] = detail::word_to_json(s.right);
  return j;
}

template <class Elem>
Json normal_form_to_json(const Elem& input, const NormalFormT<Elem>& nf) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = element_to_json(input);
  j["combination"] = element_to_json(nf.combination);
  Json steps = Json::array();
  for (const auto& s : nf.certificate) steps.push_back(cert_step_to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

inline CommNormalForm comm_normal_form_from_json(const Json& j, CommPoly* input_out) {
  if (input_out) *input_out = comm_poly_from_json(j.at("input"));
  CommNormalForm nf(comm_poly_from_json(j.at("combination")));
  for (const Json& s : j.at("steps")) {
    CertStepT<CommMonomial> step{detail::comm_word_from_json(s.at("reduced")),
                                 s.at("chain").get<std::vector<std::int64_t>>(),
                                 rational_from_json(s.at("scalar")),
                                 detail::comm_word_from_json(s.at("left")),
                                 detail::comm_word_from_json(s.at("right"))};
    nf.certificate.push_back(std::move(step));
  }
  return nf;
}

inline NCNormalForm nc_normal_form_from_json(const Json& j, NCElement* input_out) {
  if (input_out) *input_out = nc_element_from_json(j.at("input"));
  NCNormalForm nf(nc_element_from_json(j.at("combination")));
  for (const Json& s : j.at("steps")) {
    CertStepT<NCWord> step{detail::nc_word_from_json(s.at("reduced")),
                           s.at("chain").get<std::vector<std::int64_t>>(),
                           rational_from_json(s.at("scalar")),
                           detail::nc_word_from_json(s.at("left")),
                           detail::nc_word_from_json(s.at("right"))};
    nf.certificate.push_back(std::move(step));
  }
  return nf;
}

inline Json filtration_report_to_json(const FiltrationReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["constant"] = report.constant;
  j["samples_pass"] = report.samples_pass;
  j["samples_total"] = report.samples_total;
  j["all_pass"] = report.all_pass();
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    Json e;
    e["m1"] = s.m1.letters;
    e["m2"] = s.m2.letters;
    e["max_output_delta0"] = s.max_output_delta0;
    e["bound"] = s.bound;
    e["pass"] = s.pass;
    samples.push_back(std::move(e));
  }
  j["samples"] = std::move(samples);
  return j;
}

inline Json module_vector_to_json(const ModuleVector& v) {
  Json terms = Json::array();
  for (auto& [key, coeff] : v.terms()) {
    Json t;
    t["partition"] = key.partition;
    t["index"] = key.index;
    t["coeff"] = rational_to_json(coeff);
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

inline ModuleVector module_vector_from_json(const Json& j) {
  ModuleVector v;
  for (const Json& t : j.at("terms"))
    v.add(ModuleBasisKey{t.at("partition").get<std::vector<std::int64_t>>(),
                         t.value("index", std::size_t(0))},
          rational_from_json(t.at("coeff")));
  return v;
}

inline Json witness_to_json(const WitnessResult& w) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["found"] = w.found;
  j["depth_searched"] = w.depth_searched;
  if (w.found) {
    j["witness"] = Json{{"partition", w.witness.partition}, {"index", w.witness.index}};
    j["image"] = module_vector_to_json(w.image);
  }
  return j;
}

inline Json suite_results_to_json(const std::vector<CriterionResult>& results) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    Json e;
    e["criterion_id"] = r.id;
    e["status"] = r.pass ? "pass" : "fail";
    e["observed"] = r.observed;
    e["bound"] = r.bound;
    e["seconds"] = r.seconds;
    if (!r.detail.empty()) e["detail"] = r.detail;
    arr.push_back(std::move(e));
  }
  j["criteria"] = std::move(arr);
  j["pass"] = all;
  return j;
}

}  // namespace wv
