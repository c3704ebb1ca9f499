#include "gorbit/cli.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "gorbit/audit.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/go_checker.hpp"
#include "gorbit/io.hpp"
#include "gorbit/structure.hpp"

namespace gorbit {

namespace {

struct Options {
  std::string file;
  std::string output;
  std::string format = "json";
  std::string expect;
  std::string suite;
  std::string subspace;
  std::string levi;
  std::string kind;
  std::string alpha = "2";
  std::string c_scale = "1";
  std::string variant = "killing_orthogonal";
  std::size_t n = 2;
  std::size_t copies = 3;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  bool hypotheses = false;
  bool no_enforce = false;
  bool isometry = false;
};

struct Expectation {
  bool requested = false;
  bool matched = true;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_bytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << bytes;
}

SampleConfig sample_config(const Options& o) {
  SampleConfig c;
  c.sample_count = o.samples;
  c.seed = o.seed;
  return c;
}

Json envelope(const std::string& command, const std::string& digest, const Options& o) {
  return {{"format", kReportFormat},
          {"tool", {{"name", "gorbit"}, {"version", kToolVersion}}},
          {"command", command},
          {"input_digest", "sha256:" + digest},
          {"seed", o.seed},
          {"samples", o.samples},
          {"verdicts", Json::array()},
          {"audits", Json::array()}};
}

Json verdict_entry(const std::string& check, const GOVerdict& v) {
  return {{"check", check}, {"verdict", v.to_json()}};
}

Json series_json(const SeriesReport& s) {
  Json derived = Json::array(), lower = Json::array();
  for (const auto& t : s.derived_series) derived.push_back(t.dim());
  for (const auto& t : s.lower_central_series) lower.push_back(t.dim());
  Json out = {{"derived_dims", derived},
              {"lower_central_dims", lower},
              {"solvable", s.is_solvable},
              {"nilpotent", s.is_nilpotent}};
  out["nilpotency_class"] = s.nilpotency_class ? Json(*s.nilpotency_class) : Json(nullptr);
  return out;
}

Json analysis_json(const MetricReductiveSpace& space) {
  const LieAlgebra& g = space.g();
  const Subspace r = radical(g);
  const Subspace n = nilradical(g);
  const Subspace rm = intersection(r, space.m());
  Json out = {{"dimension", g.dim()},
              {"dim_h", space.dim_h()},
              {"dim_m", space.dim_m()},
              {"series", series_json(series_analysis(g))},
              {"radical", to_json(r)},
              {"nilradical", to_json(n)},
              {"nilradical_series", series_json(series_analysis(g, n))},
              {"center", to_json(center(g))},
              {"nilradical_in_m", space.m().contains(n)},
              {"radical_cap_m", to_json(rm)},
              {"nilradical_equals_radical_cap_m", n == rm}};

  const KillingOperatorSpectrum spec = killing_operator_decomposition(space);
  Json eig = Json::array();
  for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
    eig.push_back({{"value", to_json(spec.eigenvalues[k])},
                   {"multiplicity", spec.eigenspaces[k].dim()},
                   {"eigenspace", to_json(spec.eigenspaces[k])}});
  }
  Json chi = Json::array();
  for (const auto& c : spec.characteristic.coefficients()) chi.push_back(to_json(c));
  Json numeric = Json::array();
  for (double d : spec.numeric_eigenvalues) numeric.push_back(d);
  out["spectrum"] = {{"mode", spec.mode == KillingOperatorSpectrum::Mode::Exact ? "exact" : "numeric"},
                     {"characteristic", chi},
                     {"eigenvalues", eig},
                     {"numeric_eigenvalues", numeric},
                     {"warnings", spec.warnings}};
  out["spectrum"]["zero_eigenspace_is_ideal"] =
      spec.zero_eigenspace_is_ideal ? Json(*spec.zero_eigenspace_is_ideal) : Json(nullptr);

  Json mods = Json::array();
  for (const auto& mod : submodule_decomposition(space)) {
    mods.push_back({{"dim", mod.space.dim()},
                    {"eigenvalue", mod.eigenvalue ? to_json(*mod.eigenvalue) : Json(nullptr)},
                    {"irreducible_certified", mod.irreducible_certified},
                    {"commutant_dim", mod.commutant_dim},
                    {"basis", to_json(mod.space)}});
  }
  out["submodules"] = mods;
  return out;
}

Expectation check_verdict_expectation(const std::string& expect, const GOVerdict& v) {
  Expectation e;
  if (expect.empty()) return e;
  e.requested = true;
  if (expect == "nr") e.matched = v.kind == GOVerdict::Kind::CertifiedNaturallyReductive;
  else if (expect == "go") e.matched = v.is_go();
  else if (expect == "not-go") e.matched = v.kind == GOVerdict::Kind::NotGO;
  else throw Error(ErrorKind::InvalidArgument, "--expect must be nr, go or not-go");
  return e;
}

std::optional<Subspace> subspace_option(const std::string& text, std::size_t n, const char* flag) {
  if (text.empty()) return std::nullopt;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what(), flag);
  }
  return Subspace(n, vectors_at(doc, flag, n));
}

ConstructionParams construction_params(const Options& o) {
  const auto kind = parse_construction_kind(o.kind);
  if (!kind) throw Error(ErrorKind::InvalidArgument, "unknown construction kind '" + o.kind + "'");
  ConstructionParams p;
  p.kind = *kind;
  p.alpha = parse_rational(o.alpha);
  p.c_scale = parse_rational(o.c_scale);
  p.n = o.n;
  p.copies = o.copies;
  p.variant = o.variant;
  p.samples = sample_config(o);
  return p;
}

Json params_json(const Options& o) {
  return {{"kind", o.kind}, {"alpha", o.alpha}, {"c_scale", o.c_scale}, {"n", o.n},
          {"copies", o.copies}, {"variant", o.variant}, {"isometry_extension", o.isometry}};
}

void print_text_clauses(std::ostream& os, const Json& audit) {
  os << "audit " << audit.value("audit", "") << " on " << audit.value("target", "") << ": "
     << (audit.value("passed", false) ? "pass" : "not passed") << " (precondition " << audit.value("precondition", "")
     << (audit.value("precondition_met", false) ? ", met" : ", not met") << ")\n";
  for (const auto& c : audit["clauses"]) {
    os << "  [" << c.value("status", "") << "] " << c.value("claim_id", "") << ": " << c.value("anchor", "");
    const std::string detail = c.value("detail", "");
    if (!detail.empty()) os << " -- " << detail;
    os << "\n";
  }
}

class Runner {
 public:
  Runner(Options o, std::ostream& out) : o_(std::move(o)), out_(out) {}

  int analyze() {
    const std::string bytes = read_bytes(o_.file);
    const MetricReductiveSpace space = build_space(parse_algebra_text(bytes));
    Json env = envelope("analyze", sha256_hex(bytes), o_);
    env["analysis"] = analysis_json(space);
    return emit(env, {});
  }

  int go_check_command() {
    const std::string bytes = read_bytes(o_.file);
    const MetricReductiveSpace space = build_space(parse_algebra_text(bytes));
    const GOVerdict v = go_check(space, sample_config(o_));
    Json env = envelope("go-check", sha256_hex(bytes), o_);
    Json entry = verdict_entry("go_check", v);
    if (v.witness) entry["witness_rechecked"] = recheck_witness(space, *v.witness);
    env["verdicts"].push_back(entry);
    return emit(env, check_verdict_expectation(o_.expect, v));
  }

  int nil_go_check_command() {
    const std::string bytes = read_bytes(o_.file);
    const MetricReductiveSpace space = build_space(parse_algebra_text(bytes));
    if (!space.h().is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "nil-go-check needs a metric algebra file with empty isotropy",
                  "$.isotropy");
    }
    const TwoStepNilpotent data(space.g(), space.ip());
    const GOVerdict v = nil_go_check(data, sample_config(o_));
    Json env = envelope("nil-go-check", sha256_hex(bytes), o_);
    Json entry = verdict_entry("nil_go_check", v);
    entry["nilpotency_class"] = data.nilpotency_class();
    entry["skew_derivation_dim"] = data.skew_derivations().size();
    entry["center_dim"] = data.z().dim();
    env["verdicts"].push_back(entry);
    if (o_.hypotheses) {
      const DerivationSplit split = split_derivations(data);
      const Gonil2Hypotheses hyp = check_gonil2_hypotheses(data, split, sample_config(o_));
      env["extension_hypotheses"] = {{"samples", hyp.samples},
                                     {"hypothesis1_holds", hyp.hypothesis1_holds},
                                     {"hypothesis2_holds", hyp.hypothesis2_holds},
                                     {"max_d1_solution_dim", hyp.max_d1_solution_dim},
                                     {"complement_dim", split.d.size()}};
      if (hyp.first_failure) {
        env["extension_hypotheses"]["first_failure"] = {to_json(hyp.first_failure->first),
                                                        to_json(hyp.first_failure->second)};
      }
    }
    return emit(env, check_verdict_expectation(o_.expect, v));
  }

  int audit_command() {
    const std::string bytes = read_bytes(o_.file);
    const AlgebraFile file = parse_algebra_text(bytes);
    const MetricReductiveSpace space = build_space(file);
    const std::size_t n = space.g().dim();
    const SampleConfig config = sample_config(o_);
    AuditOptions options;
    options.enforce_precondition = !o_.no_enforce;
    const GOVerdict v = go_check(space, config);
    Json env = envelope("audit", sha256_hex(bytes), o_);
    env["verdicts"].push_back(verdict_entry("go_check", v));
    const auto sub = subspace_option(o_.subspace, n, "--subspace");

    AuditReport report;
    if (o_.suite == "strucrad1") {
      report = strucrad1_audit(space, v, options);
    } else if (o_.suite == "strucnilr") {
      report = strucnilr_audit(space, v, options);
    } else if (o_.suite == "skew") {
      report = skew_centralizer_audit(space, v, config, options);
    } else if (o_.suite == "irred1") {
      report = irred1_audit(space, sub.value_or(space.m()));
    } else if (o_.suite == "goodlevi") {
      if (!sub) throw Error(ErrorKind::InvalidArgument, "goodlevi needs --subspace for k");
      auto levi = subspace_option(o_.levi, n, "--levi");
      if (!levi) levi = levi_of(file);
      if (!levi) throw Error(ErrorKind::InvalidArgument, "goodlevi needs --levi or complement.levi");
      report = goodlevi_audit(space.g(), *sub, *levi);
    } else if (o_.suite == "eigenspace") {
      report = eigenspace_bracket_audit(space, killing_operator_decomposition(space), v, config, options);
    } else if (o_.suite == "normalized") {
      if (!sub) throw Error(ErrorKind::InvalidArgument, "normalized needs --subspace for k");
      report = normalized_orbit_audit(space, *sub, v, options);
    } else if (o_.suite == "quotient") {
      report = quotient_go_construction(space, v, config, options).report;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown audit suite '" + o_.suite + "'");
    }
    env["audits"].push_back(report.to_json());
    Expectation e;
    if (!o_.expect.empty()) {
      if (o_.expect != "pass" && o_.expect != "fail") {
        throw Error(ErrorKind::InvalidArgument, "--expect for audits must be pass or fail");
      }
      e.requested = true;
      e.matched = report.passed() == (o_.expect == "pass");
    }
    return emit(env, e);
  }

  int quotient_command() {
    const std::string bytes = read_bytes(o_.file);
    const AlgebraFile file = parse_algebra_text(bytes);
    const MetricReductiveSpace space = build_space(file);
    const SampleConfig config = sample_config(o_);
    const GOVerdict v = go_check(space, config);
    AuditOptions options;
    options.enforce_precondition = !o_.no_enforce;
    const QuotientConstruction q = quotient_go_construction(space, v, config, options);
    Json env = envelope("quotient", sha256_hex(bytes), o_);
    env["verdicts"].push_back(verdict_entry("go_check", v));
    if (q.verdict) env["verdicts"].push_back(verdict_entry("quotient_go_check", *q.verdict));
    env["audits"].push_back(q.report.to_json());
    env["quotient"] = {{"degenerate", q.degenerate}, {"k", to_json(q.k)}, {"l", to_json(q.l)}};
    if (q.space) {
      const std::string written = canonical_dump(to_json(algebra_file_of(*q.space))) + "\n";
      env["quotient"]["dimension"] = q.space->g().dim();
      env["quotient"]["dim_m"] = q.space->dim_m();
      env["quotient"]["digest"] = "sha256:" + sha256_hex(written);
      if (!o_.output.empty()) write_bytes(o_.output, written);
    }
    return emit_stdout(env, {});
  }

  int construct_command() {
    const ConstructionParams p = construction_params(o_);
    const Construction c = construct(p);
    AlgebraFile file;
    std::string label = c.label;
    if (o_.isometry) {
      if (!c.nil_metric) throw Error(ErrorKind::InvalidArgument, "--isometry-extension needs a metric algebra kind");
      const MetricReductiveSpace iso = isometry_extension(c.space.g(), *c.nil_metric);
      file = algebra_file_of(iso);
      label += " isometry extension";
    } else {
      file = algebra_file_of(c.space, c.levi);
    }
    const std::string written = canonical_dump(to_json(file)) + "\n";
    if (o_.output.empty()) {
      out_ << written;
      return kExitOk;
    }
    write_bytes(o_.output, written);
    Json env = envelope("construct", sha256_hex(canonical_dump(params_json(o_))), o_);
    env["construction"] = {{"label", label},
                           {"dimension", file.dimension},
                           {"dim_h", file.isotropy.size()},
                           {"digest", "sha256:" + sha256_hex(written)}};
    return emit_stdout(env, {});
  }

  int report_command() {
    const std::string bytes = read_bytes(o_.file);
    Json env;
    try {
      env = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what(), "$");
    }
    if (!env.is_object() || env.value("format", "") != kReportFormat) {
      throw Error(ErrorKind::SchemaError, std::string("expected a ") + kReportFormat + " envelope", "$.format");
    }
    out_ << (o_.format == "text" ? render_text(env) : canonical_dump(env) + "\n");
    return kExitOk;
  }

  void start() { started_ = std::chrono::steady_clock::now(); }

 private:
  int emit(Json env, const Expectation& e) { return write(std::move(env), e, o_.output); }
  int emit_stdout(Json env, const Expectation& e) { return write(std::move(env), e, {}); }

  int write(Json env, const Expectation& e, const std::string& path) {
    if (e.requested) env["expect"] = {{"value", o_.expect}, {"matched", e.matched}};
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    env["timing"] = {{"seconds", seconds}};
    const std::string text = o_.format == "text" ? render_text(env) : canonical_dump(env) + "\n";
    if (path.empty()) out_ << text;
    else write_bytes(path, text);
    return e.matched ? kExitOk : kExitExpectMismatch;
  }

  Options o_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point started_;
};

}  // namespace

std::string render_text(const Json& env) {
  std::ostringstream os;
  os << "gorbit " << env["tool"].value("version", "") << "  " << env.value("command", "") << "  seed "
     << env.value("seed", 0) << "  samples " << env.value("samples", 0) << "\n";
  os << "input " << env.value("input_digest", "") << "\n";
  for (const auto& v : env.value("verdicts", Json::array())) {
    const Json& verdict = v["verdict"];
    os << v.value("check", "") << ": " << verdict.value("kind", "") << " (" << verdict.value("directions_checked", 0)
       << " directions)\n";
    if (!verdict["witness"].is_null()) {
      os << "  witness rank " << verdict["witness"].value("rank_coefficients", 0) << " < "
         << verdict["witness"].value("rank_augmented", 0) << ", dual " << verdict["witness"]["dual"].dump() << "\n";
    }
    if (v.contains("skew_derivation_dim")) os << "  dim D(n) = " << v["skew_derivation_dim"] << "\n";
  }
  if (env.contains("extension_hypotheses")) {
    const Json& h = env["extension_hypotheses"];
    os << "extension hypotheses: (1) " << h["hypothesis1_holds"] << "/" << h["samples"] << ", (2) "
       << h["hypothesis2_holds"] << "/" << h["samples"] << "\n";
  }
  if (env.contains("analysis")) {
    const Json& a = env["analysis"];
    os << "dim g " << a["dimension"] << ", dim h " << a["dim_h"] << ", dim m " << a["dim_m"] << "\n";
    os << "radical dim " << a["radical"].size() << ", nilradical dim " << a["nilradical"].size()
       << ", nilradical in m: " << a["nilradical_in_m"] << "\n";
    os << "Killing operator (" << a["spectrum"].value("mode", "") << "):";
    for (const auto& e : a["spectrum"]["eigenvalues"]) {
      os << " " << e.value("value", "") << " x" << e["multiplicity"];
    }
    os << "\nsubmodules:";
    for (const auto& m : a["submodules"]) os << " " << m["dim"] << (m.value("irreducible_certified", false) ? "" : "?");
    os << "\n";
  }
  for (const auto& audit : env.value("audits", Json::array())) print_text_clauses(os, audit);
  if (env.contains("quotient")) {
    os << "quotient: " << (env["quotient"].value("degenerate", false) ? "degenerate" : "built") << "\n";
  }
  if (env.contains("construction")) {
    os << "constructed " << env["construction"].value("label", "") << " (dim " << env["construction"]["dimension"]
       << ")\n";
  }
  if (env.contains("expect")) {
    os << "expect " << env["expect"].value("value", "") << ": "
       << (env["expect"].value("matched", false) ? "matched" : "MISMATCH") << "\n";
  }
  return os.str();
}

Json strip_timing(Json envelope) {
  envelope.erase("timing");
  return envelope;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact geodesic-orbit analysis of homogeneous spaces", "gorbit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto sampled = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "Random samples")->capture_default_str();
    sub->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Series, radical, nilradical, spectrum and submodules");
  analyze->add_option("file", o.file, "Algebra file")->required();
  analyze->add_option("-o,--output", o.output, "Report path");
  common(analyze);

  auto* go = app.add_subcommand("go-check", "Geodesic orbit check");
  go->add_option("file", o.file, "Algebra file")->required();
  go->add_option("--expect", o.expect, "nr | go | not-go")->check(CLI::IsMember({"nr", "go", "not-go"}));
  go->add_option("-o,--output", o.output, "Report path");
  sampled(go);
  common(go);

  auto* nil = app.add_subcommand("nil-go-check", "Derivation test for two-step nilpotent metric algebras");
  nil->add_option("file", o.file, "Metric algebra file (empty isotropy)")->required();
  nil->add_option("--expect", o.expect, "go | not-go")->check(CLI::IsMember({"nr", "go", "not-go"}));
  nil->add_option("-o,--output", o.output, "Report path");
  nil->add_flag("--hypotheses", o.hypotheses, "Also check the solvable-extension hypotheses");
  sampled(nil);
  common(nil);

  auto* audit = app.add_subcommand("audit", "Structure audits");
  audit->add_option("file", o.file, "Algebra file")->required();
  audit->add_option("--suite", o.suite, "Audit suite")
      ->required()
      ->check(CLI::IsMember({"strucrad1", "strucnilr", "skew", "irred1", "goodlevi", "eigenspace", "normalized",
                             "quotient"}));
  audit->add_option("--subspace", o.subspace, "JSON list of vectors: p for irred1, k for goodlevi/normalized");
  audit->add_option("--levi", o.levi, "JSON list of vectors spanning a Levi factor");
  audit->add_option("--expect", o.expect, "pass | fail")->check(CLI::IsMember({"pass", "fail"}));
  audit->add_flag("--no-enforce", o.no_enforce, "Run clauses even without a GO verdict");
  audit->add_option("-o,--output", o.output, "Report path");
  sampled(audit);
  common(audit);

  auto* quotient = app.add_subcommand("quotient", "Quotient by the largest ideal inside C_g(h) + [h,h]");
  quotient->add_option("file", o.file, "Algebra file")->required();
  quotient->add_option("-o,--output", o.output, "Quotient algebra file");
  quotient->add_flag("--no-enforce", o.no_enforce, "Build even without a GO verdict");
  sampled(quotient);
  common(quotient);

  auto* build = app.add_subcommand("construct", "Emit a built-in construction as an algebra file");
  build->add_option("kind", o.kind, "Construction kind")->required();
  build->add_option("--alpha", o.alpha, "u2_sphere parameter")->capture_default_str();
  build->add_option("--n", o.n, "euclidean_go rank")->capture_default_str();
  build->add_option("--c-scale", o.c_scale, "gonil2_extension scale")->capture_default_str();
  build->add_option("--copies", o.copies, "ledger_obata copies")->capture_default_str();
  build->add_option("--variant", o.variant, "ledger_obata complement")
      ->check(CLI::IsMember({"killing_orthogonal", "ideal"}));
  build->add_flag("--isometry-extension", o.isometry, "Present a metric algebra as (n + D(n)) / D(n)");
  build->add_option("-o,--output", o.output, "Algebra file path");
  sampled(build);
  common(build);

  auto* report = app.add_subcommand("report", "Render a saved report");
  report->add_option("file", o.file, "Report envelope")->required();
  common(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Runner runner(o, out);
  runner.start();
  try {
    if (*analyze) return runner.analyze();
    if (*go) return runner.go_check_command();
    if (*nil) return runner.nil_go_check_command();
    if (*audit) return runner.audit_command();
    if (*quotient) return runner.quotient_command();
    if (*build) return runner.construct_command();
    if (*report) return runner.report_command();
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind());
    if (!e.location().empty()) err << " at " << e.location();
    err << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kExitInternal : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace gorbit
