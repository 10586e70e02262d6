// Command-line surface: generate instances, reconstruct witnesses, verify a
// witness against an instance, validate the symmetry property, and round-trip
// a projection through the resolving set.
//
// Exit codes: 0 success, 1 mathematical failure, 2 input/IO error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wigner/generators.hpp"
#include "wigner/io.hpp"
#include "wigner/reconstruct.hpp"
#include "wigner/resolving.hpp"

namespace {

using nlohmann::json;
using namespace wigner;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitIoError = 2;

struct Options {
  std::string kind;
  Index n = 0;
  Index m = 0;
  Index j = 0;
  std::uint64_t seed = 0;
  int samples = 1000;
  double tol_verify = 0.0;  // 0 means default
  std::string in_path;
  std::string out_path;
  std::string witness_path;
};

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", &tm);
  return buf;
}

Tolerances tolerances_of(const Options& opt) {
  Tolerances tol;
  if (opt.tol_verify > 0.0) tol.verify = opt.tol_verify;
  return tol;
}

GeneratorSpec spec_from_flags(const Options& opt) {
  if (opt.kind.empty() || opt.n < 1) {
    throw IoError("need --in, or --kind and --n to describe an instance");
  }
  GeneratorSpec spec;
  spec.kind = generator_kind_from_string(opt.kind);
  spec.n = opt.n;
  spec.m = opt.m;
  spec.seed = opt.seed;
  spec.j = opt.j;
  return spec;
}

SymmetryMap load_instance(const Options& opt, const Tolerances& tol) {
  if (!opt.in_path.empty()) {
    return symmetry_from_record(read_operator_file(opt.in_path), opt.seed, tol);
  }
  return make_symmetry(spec_from_flags(opt), tol);
}

void emit_report(const Options& opt, json report) {
  report["timestamp"] = timestamp_now();
  if (!opt.out_path.empty()) {
    write_json_atomic(opt.out_path, report);
  }
  std::cout << report.dump(2) << '\n';
}

int cmd_generate(const Options& opt) {
  const GeneratorSpec spec = spec_from_flags(opt);
  json record;
  if (spec.kind == GeneratorSpec::Kind::PartialConjugation ||
      spec.kind == GeneratorSpec::Kind::Constant) {
    make_symmetry(spec);  // surface parameter errors before writing
    record = generator_record(spec);
  } else {
    record = witness_record(
        witness_of(spec),
        json{{"seed", spec.seed}, {"generator", to_string(spec.kind)}});
  }
  if (opt.out_path.empty()) {
    std::cout << record.dump(2) << '\n';
  } else {
    write_json_atomic(opt.out_path, record);
  }
  return kExitOk;
}

int cmd_reconstruct(const Options& opt) {
  const Tolerances tol = tolerances_of(opt);
  const SymmetryMap f = load_instance(opt, tol);

  auto failure = [&](const std::string& reason, const std::string& message,
                     json extra = json::object()) {
    json report{{"status", "failed"}, {"reason", reason}, {"message", message}};
    report.update(extra);
    emit_report(opt, std::move(report));
    return kExitMathFailure;
  };

  try {
    const ReconstructionReport report = reconstruct(f, opt.samples, opt.seed, tol);
    emit_report(opt, report_to_json(report, "ok", ""));
    return kExitOk;
  } catch (const VerificationError& e) {
    return failure("verification", e.what(),
                   json{{"max_gap_residual", e.max_residual},
                        {"mean_gap_residual", e.mean_residual}});
  } catch (const NotASymmetryError& e) {
    return failure("not_a_symmetry", e.what());
  } catch (const PhaseRelationError& e) {
    return failure("phase_relation", e.what());
  } catch (const ParsevalError& e) {
    return failure("parseval", e.what());
  }
}

int cmd_validate(const Options& opt) {
  const Tolerances tol = tolerances_of(opt);
  const SymmetryMap f = load_instance(opt, tol);
  const double residual = validate_symmetry(f, opt.samples, opt.seed, tol);
  const bool ok = residual <= tol.verify;
  emit_report(opt, json{{"status", ok ? "ok" : "failed"},
                        {"reason", ok ? "" : "validation"},
                        {"max_probability_residual", residual},
                        {"sample_count", opt.samples}});
  return ok ? kExitOk : kExitMathFailure;
}

int cmd_verify(const Options& opt) {
  const Tolerances tol = tolerances_of(opt);
  if (opt.witness_path.empty()) {
    throw IoError("verify needs --witness");
  }
  const OperatorRecord record = read_operator_file(opt.witness_path);
  const auto* w = std::get_if<IsometryWitness>(&record.payload);
  if (w == nullptr) {
    throw IoError("--witness file does not contain a witness record");
  }
  const SymmetryMap f = load_instance(opt, tol);
  if (f.domain_dim != w->domain_dim() || f.codomain_dim != w->codomain_dim()) {
    throw IoError("witness and instance dimensions do not match");
  }

  std::vector<Vector> samples;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < opt.samples; ++s) {
    Vector v(f.domain_dim);
    for (Index k = 0; k < f.domain_dim; ++k) v[k] = Complex(gauss(rng), gauss(rng));
    samples.push_back(v / v.norm());
  }
  for (const Projection& p : build_resolving_set(f.domain_dim, tol).elements) {
    samples.push_back(p.rep());
  }

  const auto [max_res, mean_res] = verify_witness(f, *w, samples, tol);
  const bool ok = max_res <= tol.verify;
  emit_report(opt, json{{"status", ok ? "ok" : "failed"},
                        {"reason", ok ? "" : "verification"},
                        {"max_gap_residual", max_res},
                        {"mean_gap_residual", mean_res},
                        {"sample_count", samples.size()}});
  return ok ? kExitOk : kExitMathFailure;
}

int cmd_resolve(const Options& opt) {
  const Tolerances tol = tolerances_of(opt);
  Projection p = [&] {
    if (!opt.in_path.empty()) {
      const OperatorRecord record = read_operator_file(opt.in_path);
      const auto* v = std::get_if<Vector>(&record.payload);
      if (v == nullptr) throw IoError("resolve expects a vector record");
      return canonicalize(*v, tol);
    }
    if (opt.n < 1) throw IoError("need --in or --n");
    // Random element of D: all coordinates bounded away from zero.
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    Vector v(opt.n);
    for (Index k = 0; k < opt.n; ++k) {
      const double mod = 0.2 + std::abs(gauss(rng));
      const double a = angle(rng);
      v[k] = Complex(mod * std::cos(a), mod * std::sin(a));
    }
    return canonicalize(v, tol);
  }();

  const ResolvingSet r = build_resolving_set(p.dim(), tol);
  const DistanceProfile profile = profile_of(p, r);
  try {
    const Projection recovered = recover_from_profile(profile, tol);
    const double residual = gap_distance(p, recovered);
    const bool ok = residual <= tol.eq;
    emit_report(opt, json{{"status", ok ? "ok" : "failed"},
                          {"reason", ok ? "" : "round_trip"},
                          {"n", p.dim()},
                          {"moduli_basis", profile.moduli_basis},
                          {"moduli_diff", profile.moduli_diff},
                          {"moduli_idiff", profile.moduli_idiff},
                          {"round_trip_gap", residual}});
    return ok ? kExitOk : kExitMathFailure;
  } catch (const NotInDomainError& e) {
    emit_report(opt, json{{"status", "failed"},
                          {"reason", "not_in_domain"},
                          {"message", e.what()},
                          {"n", p.dim()},
                          {"moduli_basis", profile.moduli_basis}});
    return kExitMathFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner symmetry reconstruction toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_instance) {
    if (with_instance) {
      cmd->add_option("--kind", opt.kind, "generator kind");
      cmd->add_option("--n", opt.n, "domain dimension");
      cmd->add_option("--m", opt.m, "codomain dimension");
      cmd->add_option("--j", opt.j, "conjugation start index (one-based)");
    }
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--samples", opt.samples, "verification sample count");
    cmd->add_option("--tol-verify", opt.tol_verify, "verification tolerance");
    cmd->add_option("--in", opt.in_path, "input operator file");
    cmd->add_option("--out", opt.out_path, "output file");
  };

  auto* generate = app.add_subcommand("generate", "write a ground-truth instance file");
  add_common(generate, true);
  auto* rec = app.add_subcommand("reconstruct", "reconstruct the inducing isometry");
  add_common(rec, true);
  auto* validate = app.add_subcommand("validate", "check transition-probability preservation");
  add_common(validate, true);
  auto* verify = app.add_subcommand("verify", "check a witness file against an instance");
  add_common(verify, true);
  verify->add_option("--witness", opt.witness_path, "witness operator file");
  auto* resolve = app.add_subcommand("resolve", "profile round-trip through the resolving set");
  add_common(resolve, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIoError;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt);
    if (rec->parsed()) return cmd_reconstruct(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (resolve->parsed()) return cmd_resolve(opt);
    return kExitIoError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMathFailure;
  }
}
