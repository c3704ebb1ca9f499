// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/corpus.hpp"
#include "../unit/oracles.hpp"
#include "gorbit/audit.hpp"
#include "gorbit/cli.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/structure.hpp"

#ifndef GORBIT_CLI
#error "GORBIT_CLI must name the command-line binary"
#endif

using namespace gorbit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) why << what;
      else why << "; " << what;
      ok = false;
    }
  }
};

ConstructionParams params(ConstructionKind kind) {
  ConstructionParams p;
  p.kind = kind;
  return p;
}

MetricReductiveSpace u2(const Rational& alpha) {
  ConstructionParams p = params(ConstructionKind::U2Sphere);
  p.alpha = alpha;
  return construct(p).space;
}

struct GoEntry {
  std::string label;
  MetricReductiveSpace space;
  GOVerdict verdict;
};

// Every positive construction, nilmanifolds through their isometry
// extension, with the default sampling (64 directions, seed 0).
std::vector<GoEntry> go_corpus() {
  std::vector<ConstructionParams> list;
  for (const Rational a : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
    ConstructionParams p = params(ConstructionKind::U2Sphere);
    p.alpha = a;
    list.push_back(p);
  }
  for (const std::size_t n : {2u, 3u}) {
    ConstructionParams p = params(ConstructionKind::EuclideanGo);
    p.n = n;
    list.push_back(p);
  }
  for (const char* v : {"killing_orthogonal", "ideal"}) {
    ConstructionParams p = params(ConstructionKind::LedgerObata);
    p.variant = v;
    list.push_back(p);
  }
  list.push_back(params(ConstructionKind::Sphere2));
  list.push_back(params(ConstructionKind::Heisenberg3));
  list.push_back(params(ConstructionKind::Heisenberg13));
  list.push_back(params(ConstructionKind::Gonil2Extension));

  std::vector<GoEntry> out;
  for (const auto& p : list) {
    Construction c = construct(p);
    MetricReductiveSpace space = c.nil_metric ? isometry_extension(c.space.g(), *c.nil_metric) : c.space;
    GOVerdict v = go_check(space);
    out.push_back({c.label, std::move(space), std::move(v)});
  }
  return out;
}

void criterion1(Outcome& o) {
  for (const Rational a : {Rational(1, 2), Rational(1), Rational(2), Rational(5)}) {
    const std::string tag = "alpha=" + a.get_str();
    const MetricReductiveSpace s = u2(a);
    o.require(go_check(s).kind == GOVerdict::Kind::CertifiedNaturallyReductive, tag + " not certified");
    const Subspace n = nilradical(s.g());
    o.require(n == Subspace(4, {unit_vector(4, 3)}), tag + " nilradical != span{e4}");
    o.require(!s.m().contains(n), tag + " n(g) inside the form-orthogonal m");
    const MetricReductiveSpace k = build_reductive(s.g(), s.h(), MetricSpec::explicit_matrix(Matrix::identity(3)),
                                                   ComplementSpec{});
    o.require(k.m().contains(n), tag + " n(g) not inside the Killing-orthogonal m");
  }
}

void criterion2(Outcome& o) {
  ConstructionParams p = params(ConstructionKind::EuclideanGo);
  p.n = 2;
  const MetricReductiveSpace s = construct(p).space;
  o.require(s.g().dim() == 8 && s.dim_m() == 5, "shape is not 8/5");
  SampleConfig cfg;
  cfg.sample_count = 64;
  cfg.seed = 0;
  o.require(go_check(s, cfg).kind == GOVerdict::Kind::SampledGO, "verdict is not SampledGO");
  const Subspace r = radical(s.g()), n = nilradical(s.g());
  o.require(r.dim() == 5, "radical dim " + std::to_string(r.dim()));
  o.require(n.dim() == 4, "nilradical dim " + std::to_string(n.dim()));
  o.require(n != intersection(r, s.m()), "n(g) == r(g) & m");
}

void criterion3(Outcome& o) {
  const Construction c = construct(params(ConstructionKind::Heisenberg13));
  const TwoStepNilpotent data(c.space.g(), *c.nil_metric);
  o.require(data.skew_derivations().size() == 11, "dim D(n) = " + std::to_string(data.skew_derivations().size()));
  SampleConfig cfg;
  cfg.sample_count = 64;
  o.require(nil_go_check(data, cfg).kind == GOVerdict::Kind::SampledGO, "nil_go_check not SampledGO");
  const Gonil2Hypotheses h = check_gonil2_hypotheses(data, split_derivations(data), cfg);
  o.require(h.samples >= 64 && h.hypothesis1_holds == h.samples && h.hypothesis2_holds == h.samples,
            "hypotheses hold at " + std::to_string(h.hypothesis1_holds) + "/" + std::to_string(h.hypothesis2_holds) +
                " of " + std::to_string(h.samples));
  for (const Rational scale : {Rational(1, 2), Rational(1), Rational(3)}) {
    ConstructionParams p = params(ConstructionKind::Gonil2Extension);
    p.c_scale = scale;
    const MetricReductiveSpace s = construct(p).space;
    o.require(s.dim_m() == 14, "gonil2 dim m " + std::to_string(s.dim_m()));
    o.require(go_check(s, cfg).kind == GOVerdict::Kind::SampledGO, "gonil2 c_scale=" + scale.get_str() + " not GO");
  }
}

void criterion4(Outcome& o, const std::vector<GoEntry>& corpus) {
  std::size_t checked = 0;
  for (const auto& e : corpus) {
    if (!e.verdict.is_go()) continue;
    ++checked;
    o.require(strucrad1_audit(e.space, e.verdict).passed(), e.label + " fails strucrad1");
  }
  o.require(checked >= 10, "only " + std::to_string(checked) + " GO entries");
  const MetricReductiveSpace neg = construct(params(ConstructionKind::ComplexWeightSolvable)).space;
  const Subspace kb = kernel(killing_form(neg.g())), n = nilradical(neg.g());
  o.require(kb.contains(n) && kb.dim() > n.dim(), "complex_weight: ker B does not strictly contain n(g)");
  AuditOptions loose;
  loose.enforce_precondition = false;
  const AuditReport r = strucrad1_audit(neg, go_check(neg), loose);
  const AuditClause* c = r.find("nilradical_is_killing_kernel");
  o.require(c && c->status == ClauseStatus::Fail, "negative control does not fail the kernel clause");
}

void criterion5(Outcome& o, const std::vector<GoEntry>& corpus) {
  for (const auto& e : corpus) {
    if (!e.verdict.is_go()) continue;
    const SeriesReport s = series_analysis(e.space.g(), nilradical(e.space.g()));
    o.require(s.nilpotency_class.value_or(0) <= 2, e.label + " nilradical class > 2");
    o.require(strucnilr_audit(e.space, e.verdict).passed(), e.label + " fails strucnilr");
  }
  const MetricReductiveSpace f = construct(params(ConstructionKind::Filiform4)).space;
  o.require(series_analysis(f.g()).nilpotency_class == std::optional<std::size_t>(3), "filiform4 class != 3");
  const GOVerdict v = go_check(f);
  o.require(v.kind == GOVerdict::Kind::NotGO && v.witness, "filiform4 not NotGO with witness");
  if (v.witness) o.require(recheck_witness(f, *v.witness), "witness does not recheck");
}

void criterion6(Outcome& o) {
  const MetricReductiveSpace s = u2(2);
  const QuotientConstruction q = quotient_go_construction(s, go_check(s));
  o.require(!q.degenerate && q.space.has_value(), "no quotient");
  if (!q.space) return;
  const LieAlgebra& gt = q.space->g();
  o.require(gt.dim() == 3 && q.space->dim_m() == 2, "quotient shape");
  o.require(is_negative_definite(killing_form(gt)), "quotient is not compact semisimple");
  const Subspace rt = radical(gt), nt = nilradical(gt);
  o.require(rt.is_zero() && nt.is_zero(), "quotient radical nonzero");
  o.require(nt == bracket_space(gt, Subspace::full(3), rt), "n != [g, r] on the quotient");
  o.require(q.verdict && q.verdict->is_go(), "quotient not GO");
  o.require(q.report.passed(), "quotient audit fails");
  const AuditClause* sub = q.report.find("no_trivial_submodule");
  o.require(sub && sub->status == ClauseStatus::Pass, "submodule clause not passing");
}

void criterion7(Outcome& o) {
  const MetricReductiveSpace s = u2(2);
  const KillingOperatorSpectrum sp = killing_operator_decomposition(s);
  o.require(sp.mode == KillingOperatorSpectrum::Mode::Exact, "numeric spectrum");
  o.require(sp.eigenvalues == std::vector<Rational>{-2, Rational(-4, 3)}, "eigenvalues");
  if (sp.eigenspaces.size() == 2) {
    o.require(sp.eigenspaces[0].dim() == 2 && sp.eigenspaces[1].dim() == 1, "multiplicities");
    const Subspace plane(4, {unit_vector(4, 0), unit_vector(4, 1)});
    o.require(plane.contains(bracket_space(s.g(), sp.eigenspaces[1], plane)), "[A_-4/3, span{e1,e2}] escapes");
  }
  o.require(eigenspace_bracket_audit(s, sp, go_check(s)).passed(), "eigenspace audit fails");
  o.require(principal_isotropy_dim(s, Subspace(4, {unit_vector(4, 0), unit_vector(4, 1)})).dim == 0,
            "principal isotropy of span{e1,e2} nonzero");
}

void criterion8(Outcome& o) {
  const auto corpus = gorbit::testing::small_corpus();
  o.require(corpus.size() >= 12, "corpus too small");
  for (const auto& e : corpus) {
    o.require(nilradical(e.g) == gorbit::testing::nilradical_oracle(e.g), e.g.name() + " disagrees with oracle");
  }
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\n<exit " + std::to_string(status) + ">\n";
}

std::string normalise(const std::string& text) {
  // Reports are JSON documents; drop timing before comparing.
  std::string out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.front() == '{') {
      try {
        out += strip_timing(Json::parse(line)).dump() + "\n";
        continue;
      } catch (const Json::exception&) {
      }
    }
    out += line + "\n";
  }
  return out;
}

std::string cli_suite(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string cli = GORBIT_CLI;
  std::string all;
  auto run = [&](const std::string& args) { all += normalise(capture("\"" + cli + "\" " + args + " 2>&1")); };
  const std::vector<std::pair<std::string, std::string>> kinds{
      {"u2", "u2_sphere --alpha 2"}, {"euclid", "euclidean_go --n 2"}, {"lo", "ledger_obata"},
      {"s2", "sphere2"},             {"fil", "filiform4"},          {"cw", "complex_weight_solvable"},
      {"h3", "heisenberg3"},         {"h3iso", "heisenberg3 --isometry-extension"}};
  for (const auto& [name, args] : kinds) {
    const std::string file = (dir / (name + ".json")).string();
    run("construct " + args + " -o \"" + file + "\"");
    std::ifstream in(file);
    all += std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()) + "\n";
    run("analyze \"" + file + "\"");
    run("go-check \"" + file + "\" --seed 0");
    for (const char* suite : {"strucrad1", "strucnilr", "skew"}) {
      run("audit \"" + file + "\" --suite " + suite + " --no-enforce");
    }
  }
  run("audit \"" + (dir / "u2.json").string() + "\" --suite eigenspace");
  run("quotient \"" + (dir / "u2.json").string() + "\" -o \"" + (dir / "u2q.json").string() + "\"");
  run("nil-go-check \"" + (dir / "h3.json").string() + "\" --hypotheses --seed 0");
  return all;
}

void criterion9(Outcome& o) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "gorbit_acceptance";
  fs::remove_all(base);
  // Same directory both times so embedded paths agree.
  const std::string first = cli_suite(base / "run");
  fs::remove_all(base / "run");
  const std::string second = cli_suite(base / "run");
  fs::remove_all(base);
  o.require(first.size() > 1000, "suite produced too little output");
  o.require(first == second, "reports differ between runs");
  o.require(first.find("<exit 256>") == std::string::npos, "a command failed with an internal error");
}

}  // namespace

int main() {
  const std::vector<GoEntry> corpus = go_corpus();
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"1 u2 family: certified, n(g) = span{e4}, complement dependence", criterion1},
      {"2 euclidean_go(n=2): SampledGO, radical 5, nilradical 4, n(g) != r(g) & m", criterion2},
      {"3 heisenberg13: dim D(n) = 11, nil GO, hypotheses, gonil2 extensions GO", criterion3},
      {"4 strucrad1 on GO corpus, complex_weight negative control", [&](Outcome& o) { criterion4(o, corpus); }},
      {"5 strucnilr on GO corpus, filiform4 witness", [&](Outcome& o) { criterion5(o, corpus); }},
      {"6 quotient of u2_sphere(2)", criterion6},
      {"7 eigenspace audit and spectrum of u2_sphere(2)", criterion7},
      {"8 nilradical oracle on small corpus", criterion8},
      {"9 deterministic CLI reports", criterion9},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.ok) std::cout << " -- " << o.why.str();
    std::cout << "\n";
    failures += !o.ok;
  }
  return failures;
}
