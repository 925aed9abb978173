#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "rtorsion/cli.hpp"
#include "rtorsion/io.hpp"

using namespace rtorsion;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "rtorsion");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(RTORSION_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, LensAllEta) {
  const CliRun r = run({"lens", "--p", "7", "--q", "1,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  ASSERT_EQ(j.at("torsions").size(), 6u);
  EXPECT_NEAR(j["torsions"][0]["modulus_squared"].get<double>(), std::pow(2.0 * std::sin(std::numbers::pi / 7.0), -4), 1e-12);
  EXPECT_EQ(j["integral_homology"], Json({"Z", "Z_7", "0", "Z"}));
}

TEST(Cli, LensSingleEtaAndProfile) {
  const CliRun one = run({"lens", "--p", "7", "--q", "1,2", "--eta", "3"});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_NEAR(one.json()["torsion"]["modulus_squared"].get<double>(), 0.108, 5e-4);
  const CliRun profile = run({"lens", "--p", "7", "--q", "1,2", "--profile"});
  ASSERT_EQ(profile.code, kExitOk);
  EXPECT_EQ(profile.json()["profile"].size(), 6u);
}

TEST(Cli, LensTrivialEtaIsPrecondition) {
  EXPECT_EQ(run({"lens", "--p", "7", "--q", "1,1", "--eta", "7"}).code, kExitPrecondition);
}

TEST(Cli, LensBadResidueIsUsage) {
  EXPECT_EQ(run({"lens", "--p", "6", "--q", "1,2"}).code, kExitUsage);
}

TEST(Cli, Classify) {
  const CliRun r = run({"classify", "--p", "7", "--q1", "1,1", "--q2", "1,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_TRUE(j["homotopy"].get<bool>());
  EXPECT_EQ(j["witness_m"], 2);
  EXPECT_FALSE(j["simple_homotopy"].get<bool>());
  EXPECT_FALSE(j["homeomorphic_3d"].get<bool>());
  EXPECT_FALSE(j["profile_equal"].get<bool>());
}

TEST(Cli, ClassifyHomeomorphic) {
  const CliRun r = run({"classify", "--p", "5", "--q1", "1,2", "--q2", "1,3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.json()["homeomorphic_3d"].get<bool>());
  EXPECT_TRUE(r.json()["simple_homotopy"].get<bool>());
}

TEST(Cli, CircleCompareAnalytic) {
  const CliRun r = run({"circle", "--psi", "1.0", "--cells", "8", "--compare-analytic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_LT(j["rel_error"].get<double>(), 1e-9);
  EXPECT_NEAR(j["cellular"].get<double>(), 4 * std::sin(0.5) * std::sin(0.5), 1e-12);
}

TEST(Cli, CircleTrivialHolonomy) {
  const CliRun r = run({"circle", "--psi", "0"});
  EXPECT_EQ(r.code, kExitPrecondition);
  EXPECT_NE(r.err.find("non-acyclic"), std::string::npos);
}

TEST(Cli, CrossCheckFailureExitCode) {
  EXPECT_EQ(run({"--tol", "1e-300", "circle", "--psi", "1.0", "--cells", "8", "--compare-analytic"}).code,
            kExitCrossCheck);
}

TEST(Cli, ComplexFixtures) {
  for (const char* name : {"random_acyclic.json", "diag_2_3.json", "circle.json", "circle_4.json",
                           "product_circle_interval.json", "product_circle_sphere.json"}) {
    std::vector<std::string> args{"complex", "--file", fixture(name)};
    const std::string n = name;
    if (n.rfind("circle", 0) == 0 || n.rfind("product", 0) == 0) {
      args.push_back("--rep");
      args.push_back("complex:2,1");
    }
    const CliRun r = run(args);
    ASSERT_EQ(r.code, kExitOk) << name << ": " << r.err;
    EXPECT_TRUE(r.json()["agreement"]["classes_equal"].get<bool>()) << name;
  }
}

TEST(Cli, ComplexDiagonal) {
  const CliRun r = run({"complex", "--file", fixture("diag_2_3.json"), "--method", "alternating"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(r.json()["torsions"]["alternating"]["value"]["re"].get<double>(), 1.0 / 6.0, 1e-14);
}

TEST(Cli, ComplexLensWithDiagnostics) {
  const CliRun r = run({"complex", "--file", fixture("lens_7_1_2.json"), "--rep", "eta:7:1", "--diagnostics"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["torsions"]["milnor"]["ambiguity"]["kind"], "mod_sign_and_powers");
  EXPECT_NEAR(j["torsions"]["milnor"]["modulus_squared"].get<double>(), 0.349, 5e-4);
  EXPECT_EQ(j["diagnostics"]["milnor_degrees"].size(), 4u);
}

TEST(Cli, ComplexErrors) {
  EXPECT_EQ(run({"complex", "--file", fixture("corrupted.json")}).code, kExitPrecondition);
  EXPECT_EQ(run({"complex", "--file", fixture("bad_shape.json")}).code, kExitUsage);
  EXPECT_EQ(run({"complex", "--file", fixture("lens_5_1_2.json")}).code, kExitUsage);
  EXPECT_EQ(run({"complex", "--file", fixture("diag_2_3.json"), "--rep", "eta:5:1"}).code, kExitUsage);
  EXPECT_EQ(run({"complex", "--file", fixture("circle.json"), "--rep", "complex:1,0"}).code, kExitPrecondition);
  EXPECT_EQ(run({"complex", "--file", fixture("missing.json")}).code, kExitUsage);
}

TEST(Cli, Franz) {
  const CliRun r = run({"franz", "--p", "5", "--bound", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["solutions"].size(), 1u);
}

TEST(Cli, TableFormat) {
  const CliRun r = run({"--format", "table", "lens", "--p", "5", "--q", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("torsions[0].modulus_squared"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"lens", "--p", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"--tol", "-1", "lens", "--p", "7", "--q", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "lens", "--p", "7", "--q", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"lens", "--p", "7", "--q", "1", "--eta", "1", "--profile"}).code, kExitUsage);
}

TEST(Cli, Help) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lens"), std::string::npos);
}
