#include "svf/svf.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "svf/closed_forms.hpp"
#include "svf/contraction.hpp"
#include "svf/efp.hpp"
#include "svf/errors.hpp"
#include "svf/bench.hpp"
#include "svf/params.hpp"
#include "svf/verify.hpp"

struct svf_params {
  svf::ModelParams value;
};

namespace {

using svf::ordered_json;

constexpr const char* kVersion = "0.1.0";

thread_local std::string tl_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

svf_status fail(svf_status code, const std::string& message) {
  tl_error = message;
  return code;
}

// Runs `body`, mapping exceptions to statuses. When `error_doc_out` is
// non-null, failures also produce an {"error": ...} document there.
template <typename Fn>
svf_status guarded(Fn&& body, char** error_doc_out = nullptr) {
  try {
    return body();
  } catch (const svf::EvalError& e) {
    if (error_doc_out) {
      ordered_json doc;
      doc["error"] = {{"code", 2},
                      {"kind", e.kind_name()},
                      {"factor", e.factor()},
                      {"message", e.what()}};
      *error_doc_out = dup_string(doc.dump());
    }
    return fail(SVF_ERR_POLE, e.what());
  } catch (const svf::InputError& e) {
    if (error_doc_out) {
      ordered_json doc;
      doc["error"] = {{"code", 1}, {"kind", "input"}, {"message", e.what()}};
      *error_doc_out = dup_string(doc.dump());
    }
    return fail(SVF_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(SVF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SVF_ERR_INTERNAL, "unknown error");
  }
}

std::pair<int, int> require_split(const svf::ModelParams& p,
                                  const char* quantity) {
  if (!p.split)
    throw svf::InputError(std::string(quantity) +
                          " requires a 'split' field [n, m]");
  const auto [n, m] = *p.split;
  if (p.v.size() != static_cast<std::size_t>(n) + static_cast<std::size_t>(m))
    throw svf::InputError(std::string(quantity) + ": v has " +
                          std::to_string(p.v.size()) +
                          " entries but split is [" + std::to_string(n) +
                          ", " + std::to_string(m) + "]");
  return {n, m};
}

svf::Rational eval_value(const svf::ModelParams& p, const std::string& quantity,
                         std::string& method) {
  const auto pick = [&](const char* fallback) {
    if (method.empty()) method = fallback;
  };

  if (quantity == "triangular") {
    pick("factorized");
    if (p.u.empty()) throw svf::InputError("triangular requires a nonempty u");
    if (method == "contraction")
      return svf::triangular_contract(p.u, p.c, p.vectors.east,
                                      p.vectors.south);
    if (method == "factorized")
      return svf::triangular_factorized(p.u, p.c, p.vectors.east,
                                        p.vectors.south);
  } else if (quantity == "gdw") {
    pick("determinant");
    if (p.u.empty() || p.v.empty())
      throw svf::InputError("gdw requires nonempty u and v");
    if (method == "contraction") return svf::gdw_contract(p);
    if (method == "subset-sum") return svf::gdw_subset_sum(p);
    if (method == "determinant") return svf::gdw_determinant(p);
  } else if (quantity == "trapezoid") {
    pick("factorized");
    const auto [n, m] = require_split(p, "trapezoid");
    if (method == "contraction")
      return svf::trapezoid_value(p.v, n, m, p.c, p.vectors);
    if (method == "factorized")
      return svf::trapezoid_factorized(p.v, n, m, p.c, p.vectors);
  } else if (quantity == "efp") {
    pick("determinant");
    const auto [n, m] = require_split(p, "efp");
    svf::EfpParams ep{n, m, p.v, p.c, p.vectors};
    if (method == "determinant") return svf::efp_determinant(ep);
    if (method == "components") return svf::efp_components(ep);
  } else if (quantity == "z11") {
    pick("factorized");
    if (p.u.size() != 1 || p.v.size() != 1)
      throw svf::InputError("z11 requires exactly one u and one v");
    if (method == "factorized")
      return svf::z11_explicit(p.u[0], p.v[0], p.c, p.vectors);
    if (method == "contraction") return svf::gdw_contract(p);
  } else if (quantity == "beta") {
    pick("formula");
    if (method == "formula") return svf::beta_constant(p.vectors);
  } else if (quantity == "gamma") {
    pick("formula");
    if (method == "formula") return svf::gamma_constant(p.vectors);
  } else {
    throw svf::InputError("unknown quantity '" + quantity + "'");
  }
  throw svf::InputError("method '" + method + "' is not applicable to '" +
                        quantity + "'");
}

}  // namespace

extern "C" {

const char* svf_version(void) { return kVersion; }

const char* svf_last_error(void) { return tl_error.c_str(); }

void svf_free(char* s) { std::free(s); }

svf_status svf_params_parse(const char* json_text, svf_params** out) {
  if (!json_text || !out)
    return fail(SVF_ERR_INPUT, "svf_params_parse: null argument");
  *out = nullptr;
  return guarded([&]() -> svf_status {
    auto parsed = svf::params_from_json(json_text);
    *out = new svf_params{std::move(parsed)};
    return SVF_OK;
  });
}

void svf_params_free(svf_params* params) { delete params; }

svf_status svf_rational_normalize(const char* text, char** out) {
  if (!text || !out)
    return fail(SVF_ERR_INPUT, "svf_rational_normalize: null argument");
  *out = nullptr;
  return guarded([&]() -> svf_status {
    *out = dup_string(svf::Rational::parse(text).str());
    return SVF_OK;
  });
}

svf_status svf_eval(const svf_params* params, const char* quantity,
                    const char* method, int float_digits, char** json_out) {
  if (json_out) *json_out = nullptr;
  if (!params || !quantity)
    return fail(SVF_ERR_INPUT, "svf_eval: null argument");
  return guarded(
      [&]() -> svf_status {
        std::string method_name = method ? method : "";
        const svf::Rational value =
            eval_value(params->value, quantity, method_name);
        ordered_json doc;
        doc["quantity"] = quantity;
        doc["method"] = method_name;
        doc["value"] = value.str();
        if (float_digits >= 0) doc["float"] = value.decimal(float_digits);
        doc["params"] = svf::params_to_json(params->value);
        if (json_out) *json_out = dup_string(doc.dump());
        return SVF_OK;
      },
      json_out);
}

svf_status svf_verify(const char* suite, unsigned trials,
                      unsigned long long seed, unsigned max_size,
                      char** report_out, unsigned* failures_out) {
  if (report_out) *report_out = nullptr;
  if (failures_out) *failures_out = 0;
  if (!suite) return fail(SVF_ERR_INPUT, "svf_verify: null suite");
  return guarded([&]() -> svf_status {
    svf::SuiteOptions options{trials, seed, max_size};
    const ordered_json report = svf::run_suites(suite, options);
    if (failures_out) *failures_out = svf::report_failures(report);
    if (report_out) *report_out = dup_string(report.dump(2));
    return SVF_OK;
  });
}

svf_status svf_suite_names(char** out) {
  if (!out) return fail(SVF_ERR_INPUT, "svf_suite_names: null argument");
  std::string joined;
  for (const auto& name : svf::suite_names()) {
    joined += name;
    joined += '\n';
  }
  *out = dup_string(joined);
  return SVF_OK;
}

svf_status svf_bench(const char* quantity, const char* method, int size_lo,
                     int size_hi, char** csv_out) {
  if (csv_out) *csv_out = nullptr;
  if (!quantity || !method)
    return fail(SVF_ERR_INPUT, "svf_bench: null argument");
  return guarded([&]() -> svf_status {
    const std::string csv = svf::bench_csv(quantity, method, size_lo, size_hi);
    if (csv_out) *csv_out = dup_string(csv);
    return SVF_OK;
  });
}

}  // extern "C"
