// SPDX-License-Identifier: Apache-2.0
#include "ergodic_lab/ergodic_lab.h"

#include "ergodic/counterexample.hpp"
#include "ergodic/rearrangement.hpp"
#include "ergodic/spaces.hpp"
#include "ergodic/json_io.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <sstream>

using namespace ergodic;

struct erg_function {
  SpaceFunction value;
};

struct erg_operator {
  DSOperator value;
};

struct erg_certificate {
  io::CertificateBundle value;
};

namespace {

thread_local std::string last_error;

erg_status fail(erg_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Caller passed a null pointer or an out-of-range flag.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class... Ptrs>
void require(Ptrs... ptrs) {
  if (((ptrs == nullptr) || ...)) throw InvalidArgument("null argument");
}

template <class F>
erg_status run(F&& fn) {
  try {
    last_error.clear();
    fn();
    return ERG_OK;
  } catch (const InvalidArgument& e) {
    return fail(ERG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(ERG_ERR_PARSE, e.what());
  } catch (const PreconditionError& e) {
    return fail(ERG_ERR_PRECONDITION, e.what());
  } catch (const RepresentationError& e) {
    return fail(ERG_ERR_REPRESENTATION, e.what());
  } catch (const DomainError& e) {
    return fail(ERG_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(ERG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ERG_ERR_INTERNAL, "unexpected failure");
  }
}

io::Json norm_value_json(const NormValue& n) {
  if (n.infinite) return "inf";
  if (n.exact) return to_string(*n.exact);
  return n.approx;
}

std::vector<SpaceFunction> ds_probes(const SpaceFunction& f) {
  const SpaceModel& space = f.space();
  std::vector<SpaceFunction> probes{f, SpaceFunction::constant(space, Rational(1))};
  for (Part part : kAllParts) {
    if (!space.has_part(part)) continue;
    const Index count = part == Part::exceptional ? space.exceptional_weights().size() : 4;
    for (Index i = 1; i <= count; ++i) probes.push_back(SpaceFunction::indicator(space, {part, i}));
  }
  return probes;
}

io::Json ds_report_json(const DSReport& report) {
  io::Json violations = io::Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"sample", v.sample}, {"check", v.check}, {"detail", v.detail}});
  return {{"ok", report.ok()}, {"samples", report.samples_checked}, {"violations", violations}};
}

}  // namespace

extern "C" {

const char* erg_last_error(void) { return last_error.c_str(); }

const char* erg_status_name(erg_status status) {
  switch (status) {
    case ERG_OK: return "ok";
    case ERG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ERG_ERR_PARSE: return "parse error";
    case ERG_ERR_DOMAIN: return "domain error";
    case ERG_ERR_PRECONDITION: return "precondition violated";
    case ERG_ERR_REPRESENTATION: return "representation error";
    case ERG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void erg_string_free(char* s) { std::free(s); }

erg_status erg_function_parse(const char* json, erg_function** out) {
  return run([&] {
    require(json, out);
    *out = new erg_function{io::function_from_json(io::parse_json(json))};
  });
}

void erg_function_free(erg_function* f) { delete f; }

erg_status erg_function_to_json(const erg_function* f, char** out_json) {
  return run([&] {
    require(f, out_json);
    *out_json = copy_string(io::dump(io::function_to_json(f->value)));
  });
}

erg_status erg_function_eval(const erg_function* f, const char* location, char** out_rational) {
  return run([&] {
    require(f, location, out_rational);
    *out_rational = copy_string(to_string(f->value.eval(parse_location(location))));
  });
}

erg_status erg_function_level_measure(const erg_function* f, const char* lambda, char** out_extended) {
  return run([&] {
    require(f, lambda, out_extended);
    *out_extended = copy_string(to_string(level_measure(f->value, parse_rational(lambda))));
  });
}

erg_status erg_function_in_r_mu(const erg_function* f, int* out) {
  return run([&] {
    require(f, out);
    *out = in_R_mu(f->value) ? 1 : 0;
  });
}

erg_status erg_rearrange_csv(const erg_function* f, char** out_csv) {
  return run([&] {
    require(f, out_csv);
    const Rearrangement r = rearrange(f->value);
    std::string csv;
    for (const auto& step : r.steps()) csv += to_string(step.value) + "," + to_string(step.width) + "\n";
    *out_csv = copy_string(csv);
  });
}

erg_status erg_rearrange_json(const erg_function* f, char** out_json) {
  return run([&] {
    require(f, out_json);
    const Rearrangement r = rearrange(f->value);
    io::Json steps = io::Json::array();
    for (const auto& step : r.steps())
      steps.push_back({{"value", to_string(step.value)}, {"width", to_string(step.width)}});
    *out_json = copy_string(io::dump(steps));
  });
}

erg_status erg_norms_report(const erg_function* f, const char* space, double rel_tol, char** out_json) {
  return run([&] {
    require(f, space, out_json);
    if (!(rel_tol > 0) || !std::isfinite(rel_tol)) throw InvalidArgument("tolerance must be positive");
    const SpaceDescriptor descriptor = parse_space(space);
    const NormReport report = norm_report(f->value, descriptor, rel_tol);
    io::Json doc = {{"space", describe(descriptor)},
                    {"norm", norm_value_json(report.norm)},
                    {"in_space", report.in_space},
                    {"contains_one", report.contains_one},
                    {"has_iet", report.has_iet}};
    *out_json = copy_string(io::dump(doc));
  });
}

erg_status erg_membership_report(const erg_function* f, char** out_json) {
  return run([&] {
    require(f, out_json);
    const SpaceFunction& fn = f->value;
    io::Json levels = io::Json::array();
    for (const auto& v : distinct_abs_values(fn)) {
      const Rational lambda = v / 2;
      levels.push_back({{"lambda", to_string(lambda)}, {"measure", to_string(level_measure(fn, lambda))}});
    }
    io::Json doc = {{"in_R_mu", in_R_mu(fn)},
                    {"tail_value", to_string(rearrange(fn).tail_value())},
                    {"level_measures", levels},
                    {"norm_l1", to_string(norm_l1(fn))},
                    {"norm_linf", to_string(norm_linf(fn))},
                    {"norm_l1_plus_linf", to_string(norm_l1_plus_linf(fn))}};
    *out_json = copy_string(io::dump(doc));
  });
}

erg_status erg_operator_parse(const char* json, erg_operator** out) {
  return run([&] {
    require(json, out);
    io::Json doc = io::parse_json(json);
    if (doc.is_object() && doc.contains("operator") && !doc.contains("kind"))
      *out = new erg_operator{io::operator_from_json(doc["operator"])};
    else
      *out = new erg_operator{io::operator_from_json(doc)};
  });
}

void erg_operator_free(erg_operator* op) { delete op; }

erg_status erg_operator_to_json(const erg_operator* op, char** out_json) {
  return run([&] {
    require(op, out_json);
    *out_json = copy_string(io::dump(io::operator_to_json(op->value)));
  });
}

erg_status erg_operator_apply(const erg_operator* op, const erg_function* f, erg_function** out) {
  return run([&] {
    require(op, f, out);
    *out = new erg_function{apply(op->value, f->value)};
  });
}

erg_status erg_operator_verify_ds(const erg_operator* op, const erg_function* f, int* out_ok, char** out_json) {
  return run([&] {
    require(op, f, out_ok, out_json);
    const DSReport report = verify_ds(op->value, ds_probes(f->value));
    *out_ok = report.ok() ? 1 : 0;
    *out_json = copy_string(io::dump(ds_report_json(report)));
  });
}

erg_status erg_simulate(const erg_operator* op, const erg_function* f, const char* location, uint64_t n_max, int json,
                        char** out) {
  return run([&] {
    require(op, f, location, out);
    if (n_max == 0) throw InvalidArgument("n_max must be positive");
    std::vector<Index> ns(n_max);
    std::iota(ns.begin(), ns.end(), Index{1});
    const auto trace = averages_at(op->value, f->value, parse_location(location), ns);
    if (json) {
      io::Json rows = io::Json::array();
      for (std::size_t i = 0; i < ns.size(); ++i) rows.push_back({{"n", ns[i]}, {"average", to_string(trace[i])}});
      *out = copy_string(io::dump(rows));
    } else {
      std::string csv;
      for (std::size_t i = 0; i < ns.size(); ++i) csv += std::to_string(ns[i]) + "," + to_string(trace[i]) + "\n";
      *out = copy_string(csv);
    }
  });
}

erg_status erg_synthesize(const erg_function* f, uint32_t depth, erg_certificate** out) {
  return run([&] {
    require(f, out);
    if (depth < 2) throw InvalidArgument("depth must be at least 2");
    Synthesis s = synthesize(f->value, depth);
    *out = new erg_certificate{{std::move(s.certificate), std::move(s.op), f->value}};
  });
}

erg_status erg_certificate_parse(const char* json, erg_certificate** out) {
  return run([&] {
    require(json, out);
    *out = new erg_certificate{io::certificate_from_json(io::parse_json(json))};
  });
}

void erg_certificate_free(erg_certificate* cert) { delete cert; }

erg_status erg_certificate_to_json(const erg_certificate* cert, char** out_json) {
  return run([&] {
    require(cert, out_json);
    const auto& b = cert->value;
    *out_json = copy_string(io::dump(io::certificate_to_json(b.certificate, b.op, b.function)));
  });
}

erg_status erg_certificate_operator(const erg_certificate* cert, erg_operator** out) {
  return run([&] {
    require(cert, out);
    *out = new erg_operator{cert->value.op};
  });
}

erg_status erg_certificate_verify(const erg_certificate* cert, int* out_verified, char** out_diagnostic) {
  return run([&] {
    require(cert, out_verified, out_diagnostic);
    const auto& b = cert->value;
    CertificateCheck check = check_certificate(b.certificate, b.op, b.function);
    std::string diagnostic = check.diagnostic;
    if (check.verified) {
      const DSReport report = verify_ds(b.op, ds_probes(b.function));
      if (!report.ok()) {
        check.verified = false;
        diagnostic = "operator is not Dunford-Schwartz: " + report.violations.front().check + " " +
                     report.violations.front().detail;
      }
    }
    *out_verified = check.verified ? 1 : 0;
    *out_diagnostic = copy_string(diagnostic);
  });
}

}  // extern "C"
