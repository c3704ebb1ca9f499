#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gorbit/cli.hpp"
#include "gorbit/constructions.hpp"
#include "gorbit/error.hpp"
#include "gorbit/io.hpp"

using namespace gorbit;
namespace fs = std::filesystem;

namespace {

const char* kSphere = R"({"basis":["e1","e2","e3"],"brackets":[{"i":0,"j":1,"terms":[{"c":"1","k":2}]},
{"i":0,"j":2,"terms":[{"c":"-1","k":1}]},{"i":1,"j":2,"terms":[{"c":"1","k":0}]}],"dimension":3,
"isotropy":[["0","0","1"]],"metric":{"type":"killing_multiple","factor":"1"},"name":"su2"})";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("gorbit_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string error_location(const std::string& text) {
  try {
    build_space(parse_algebra_text(text));
  } catch (const Error& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, ParsesAndBuildsSphere) {
  const AlgebraFile f = parse_algebra_text(kSphere);
  EXPECT_EQ(f.dimension, 3u);
  const MetricReductiveSpace s = build_space(f);
  EXPECT_EQ(s.dim_m(), 2u);
  EXPECT_EQ(s.ip(), Rational(2) * Matrix::identity(2));
}

TEST(Io, RoundTripOfEveryConstructionIsExact) {
  for (const auto kind : all_construction_kinds()) {
    ConstructionParams p;
    p.kind = kind;
    p.samples.sample_count = 4;
    const Construction c = construct(p);
    const AlgebraFile file = algebra_file_of(c.space, c.levi);
    const std::string text = canonical_dump(to_json(file));
    const AlgebraFile back = parse_algebra_text(text);
    EXPECT_EQ(canonical_dump(to_json(back)), text) << to_string(kind);
    const MetricReductiveSpace s = build_space(back);
    EXPECT_EQ(s.g().table(), c.space.g().table());
    EXPECT_EQ(s.h(), c.space.h());
    EXPECT_EQ(s.m(), c.space.m());
    EXPECT_EQ(s.ip(), c.space.ip());
  }
}

TEST(Io, ErrorsCarryJsonPaths) {
  std::string bad = kSphere;
  bad.replace(bad.find(R"("c":"1","k":2)"), 13, R"("c":"1/0","k":2)");
  EXPECT_EQ(error_location(bad), "$.brackets[0].terms[0].c");

  std::string extra = kSphere;
  extra.replace(extra.rfind('}'), 1, R"(,"extra":1})");
  EXPECT_EQ(error_location(extra), "$.extra");

  // [e2, e3] = e3 breaks the Jacobi identity on (e1, e2, e3).
  std::string jacobi = kSphere;
  jacobi.replace(jacobi.find(R"("c":"1","k":0)"), 13, R"("c":"1","k":2)");
  EXPECT_EQ(error_location(jacobi), "$.brackets");

  std::string metric = kSphere;
  metric.replace(metric.find(R"("factor":"1")"), 12, R"("factor":"-1")");
  EXPECT_EQ(error_location(metric), "$.metric");

  std::string iso = kSphere;
  iso.replace(iso.find(R"([["0","0","1"]])"), 15, R"([["1","0","0"],["0","1","0"]])");
  EXPECT_EQ(error_location(iso), "$.isotropy");
}

TEST(Io, RejectsDuplicateBrackets) {
  std::string dup = kSphere;
  dup.replace(dup.find(R"({"i":0,"j":2)"), 12, R"({"i":0,"j":1)");
  EXPECT_THROW(parse_algebra_text(dup), Error);
}

TEST(Io, Sha256KnownAnswer) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cli, GoCheckAndExpect) {
  TempDir dir;
  const std::string path = dir.write("sphere.json", kSphere);
  const CliRun ok = run({"go-check", path, "--expect", "nr"});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  const Json env = Json::parse(ok.out);
  EXPECT_EQ(env["format"], kReportFormat);
  EXPECT_EQ(env["verdicts"][0]["verdict"]["kind"], "CertifiedNaturallyReductive");
  EXPECT_EQ(env["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);

  EXPECT_EQ(run({"go-check", path, "--expect", "not-go"}).code, kExitExpectMismatch);
}

TEST(Cli, InputErrorsExitWithTwo) {
  TempDir dir;
  EXPECT_EQ(run({"go-check", dir.file("missing.json")}).code, kExitInputError);
  const std::string broken = dir.write("broken.json", "{\"name\": 1}");
  const CliRun r = run({"analyze", broken});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("SchemaError"), std::string::npos) << r.err;
  EXPECT_NE(run({"no-such-command"}).code, kExitOk);
}

TEST(Cli, ConstructThenAuditRoundTrip) {
  TempDir dir;
  const std::string out = dir.file("u2.json");
  ASSERT_EQ(run({"construct", "u2_sphere", "--alpha", "2", "-o", out}).code, kExitOk);
  const CliRun audit = run({"audit", out, "--suite", "strucrad1", "--expect", "pass"});
  EXPECT_EQ(audit.code, kExitOk) << audit.err << audit.out;
  const CliRun quotient = run({"quotient", out, "-o", dir.file("q.json")});
  EXPECT_EQ(quotient.code, kExitOk) << quotient.err;
  const CliRun q = run({"go-check", dir.file("q.json"), "--expect", "go"});
  EXPECT_EQ(q.code, kExitOk) << q.err;
}

TEST(Cli, ReportsAreDeterministicApartFromTiming) {
  TempDir dir;
  const std::string path = dir.write("sphere.json", kSphere);
  const CliRun a = run({"analyze", path});
  const CliRun b = run({"analyze", path});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(strip_timing(Json::parse(a.out)).dump(), strip_timing(Json::parse(b.out)).dump());
  EXPECT_FALSE(strip_timing(Json::parse(a.out)).contains("timing"));
}

TEST(Cli, TextRendering) {
  TempDir dir;
  const std::string path = dir.write("sphere.json", kSphere);
  const CliRun r = run({"go-check", path, "--format", "text"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("CertifiedNaturallyReductive"), std::string::npos) << r.out;
}
