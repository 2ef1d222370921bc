// SPDX-License-Identifier: Apache-2.0
//
// ergodic-lab: command-line front end over the C API.
//
// Exit codes: 0 success / verified, 1 verification failed, 2 input error.

#include "ergodic_lab/ergodic_lab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionDeleter {
  void operator()(erg_function* f) const { erg_function_free(f); }
};
struct OperatorDeleter {
  void operator()(erg_operator* op) const { erg_operator_free(op); }
};
struct CertificateDeleter {
  void operator()(erg_certificate* c) const { erg_certificate_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { erg_string_free(s); }
};

using FunctionHandle = std::unique_ptr<erg_function, FunctionDeleter>;
using OperatorHandle = std::unique_ptr<erg_operator, OperatorDeleter>;
using CertificateHandle = std::unique_ptr<erg_certificate, CertificateDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(erg_status status, const std::string& context) {
  if (status != ERG_OK)
    throw InputError(context + ": " + erg_status_name(status) + ": " + erg_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

FunctionHandle load_function(const std::string& path) {
  erg_function* raw = nullptr;
  check(erg_function_parse(read_file(path).c_str(), &raw), path);
  return FunctionHandle(raw);
}

OperatorHandle load_operator(const std::string& path) {
  erg_operator* raw = nullptr;
  check(erg_operator_parse(read_file(path).c_str(), &raw), path);
  return OperatorHandle(raw);
}

template <class F>
std::string collect(F&& call, const std::string& context) {
  char* raw = nullptr;
  check(call(&raw), context);
  OwnedString owned(raw);
  return std::string(owned.get());
}

struct Options {
  std::string fn;
  std::string op;
  std::string out;
  std::string op_out;
  std::string at;
  std::string space = "l1plus";
  std::string format = "csv";
  std::string certificate;
  double tol = 1e-9;
  std::uint32_t depth = 8;
  std::uint64_t n_max = 100;
};

int cmd_rearrange(const Options& o) {
  auto f = load_function(o.fn);
  const bool json = o.format == "json";
  write_output(o.out, collect([&](char** s) { return json ? erg_rearrange_json(f.get(), s) : erg_rearrange_csv(f.get(), s); },
                              "rearrange"));
  return 0;
}

int cmd_norms(const Options& o) {
  auto f = load_function(o.fn);
  write_output(o.out, collect([&](char** s) { return erg_norms_report(f.get(), o.space.c_str(), o.tol, s); }, "norms"));
  return 0;
}

int cmd_membership(const Options& o) {
  auto f = load_function(o.fn);
  write_output(o.out, collect([&](char** s) { return erg_membership_report(f.get(), s); }, "membership"));
  return 0;
}

int cmd_simulate(const Options& o) {
  auto f = load_function(o.fn);
  auto op = load_operator(o.op);
  const int json = o.format == "json" ? 1 : 0;
  write_output(o.out, collect([&](char** s) { return erg_simulate(op.get(), f.get(), o.at.c_str(), o.n_max, json, s); },
                              "simulate"));
  return 0;
}

int cmd_check_ds(const Options& o) {
  auto f = load_function(o.fn);
  auto op = load_operator(o.op);
  int ok = 0;
  write_output(o.out, collect([&](char** s) { return erg_operator_verify_ds(op.get(), f.get(), &ok, s); }, "check-ds"));
  return ok ? 0 : kVerificationFailed;
}

int cmd_synthesize(const Options& o) {
  auto f = load_function(o.fn);
  erg_certificate* raw = nullptr;
  check(erg_synthesize(f.get(), o.depth, &raw), "synthesize");
  CertificateHandle cert(raw);
  if (!o.op_out.empty()) {
    erg_operator* op_raw = nullptr;
    check(erg_certificate_operator(cert.get(), &op_raw), "synthesize");
    OperatorHandle op(op_raw);
    write_output(o.op_out, collect([&](char** s) { return erg_operator_to_json(op.get(), s); }, "synthesize"));
  }
  write_output(o.out, collect([&](char** s) { return erg_certificate_to_json(cert.get(), s); }, "synthesize"));
  return 0;
}

int cmd_verify(const Options& o) {
  erg_certificate* raw = nullptr;
  check(erg_certificate_parse(read_file(o.certificate).c_str(), &raw), o.certificate);
  CertificateHandle cert(raw);
  int verified = 0;
  const std::string diagnostic =
      collect([&](char** s) { return erg_certificate_verify(cert.get(), &verified, s); }, "verify");
  if (verified) {
    std::cout << "verified\n";
    return 0;
  }
  std::cerr << "certificate rejected: " << diagnostic << "\n";
  return kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rearrangements, symmetric norms, ergodic averages and divergence certificates"};
  app.require_subcommand(1);
  Options o;

  auto add_fn = [&](CLI::App* sub) { sub->add_option("--fn", o.fn, "function JSON file")->required()->check(CLI::ExistingFile); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path (default stdout)"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* rearrange = app.add_subcommand("rearrange", "decreasing rearrangement as value,width rows");
  add_fn(rearrange);
  add_out(rearrange);
  add_format(rearrange);

  auto* norms = app.add_subcommand("norms", "norm and membership report for one symmetric space");
  add_fn(norms);
  add_out(norms);
  norms->add_option("--space", o.space, "l1 | linf | l1cap | l1plus | orlicz:<kind>:<params> | lorentz:<kind>:<param>");
  norms->add_option("--tol", o.tol, "relative tolerance for the Luxemburg bisection")->check(CLI::PositiveNumber);

  auto* membership = app.add_subcommand("membership", "R_mu membership and level-set measures");
  add_fn(membership);
  add_out(membership);

  auto* simulate = app.add_subcommand("simulate", "trace of ergodic averages at one location");
  add_fn(simulate);
  add_out(simulate);
  add_format(simulate);
  simulate->add_option("--op", o.op, "operator (or certificate) JSON file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--at", o.at, "location part:index, e.g. atoms:1")->required();
  simulate->add_option("--n-max", o.n_max, "largest n")->check(CLI::PositiveNumber);

  auto* check_ds = app.add_subcommand("check-ds", "Dunford-Schwartz contraction and majorization checks");
  add_fn(check_ds);
  add_out(check_ds);
  check_ds->add_option("--op", o.op, "operator JSON file")->required()->check(CLI::ExistingFile);

  auto* synthesize = app.add_subcommand("synthesize", "divergence certificate for a function outside R_mu");
  add_fn(synthesize);
  add_out(synthesize);
  synthesize->add_option("--depth", o.depth, "number of oscillation indices K")->check(CLI::Range(2u, 64u));
  synthesize->add_option("--op-out", o.op_out, "also write the operator JSON here");

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("certificate", o.certificate, "certificate JSON")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*rearrange) return cmd_rearrange(o);
    if (*norms) return cmd_norms(o);
    if (*membership) return cmd_membership(o);
    if (*simulate) return cmd_simulate(o);
    if (*check_ds) return cmd_check_ds(o);
    if (*synthesize) return cmd_synthesize(o);
    if (*verify) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
