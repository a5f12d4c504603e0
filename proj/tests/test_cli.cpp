// Runs the built command-line tool and inspects its output.
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliRun run(const std::string& args) {
  const std::string stem = ::testing::TempDir() + ::testing::UnitTest::GetInstance()->current_test_info()->name();
  const std::string out = stem + ".stdout", err = stem + ".stderr";
  const std::string cmd = std::string(STICKEL_CLI) + " " + args + " >" + out + " 2>" + err;
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, TableCsvForS3) {
  const CliRun r = run("table --group S3 --format csv");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "chi,(),\"(1,2)\",\"(1,2,3)\"\n"
            "chi0,cyclo(1; 1),cyclo(1; 1),cyclo(1; 1)\n"
            "chi1,cyclo(1; 1),cyclo(1; -1),cyclo(1; 1)\n"
            "chi2,cyclo(1; 2),cyclo(1; 0),cyclo(1; -1)\n");
}

TEST(Cli, TableForC2) {
  const CliRun r = run("table --group C2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["characters"], nlohmann::json::parse(R"j([["cyclo(1; 1)","cyclo(1; 1)"],["cyclo(1; 1)","cyclo(1; -1)"]])j"));
}

TEST(Cli, BadGroupFileNamesAxiom) {
  const std::string path = write_temp("bad.grp", "group n=2\ntable:\n0 1\n0 1\n");
  const CliRun r = run("table --group file:" + path);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("group axiom 'identity'"), std::string::npos) << r.err;
}

TEST(Cli, NonAssociativeFile) {
  const std::string path = write_temp("nonassoc.grp",
                                      "group n=5\ntable:\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
  const CliRun r = run("table --group file:" + path);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("associativity"), std::string::npos) << r.err;
}

TEST(Cli, GoodGroupFile) {
  const std::string path = write_temp("s3.grp", "group n=6\nperm 1: (1,2,3)\nperm 2: (1,2)\n");
  const CliRun r = run("ag --group file:" + path + " --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json_of(r)["ag"]["index"], 2);
}

TEST(Cli, UnknownGroup) {
  const CliRun r = run("table --group X9");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err.rfind("error:", 0), 0u);
}

TEST(Cli, PairingForS3) {
  const CliRun r = run("pairing --group S3 --q 2 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  bool found = false;
  for (const auto& row : j["pairing"]) {
    if (row["class"] == "(1,2,3)") {
      found = true;
      EXPECT_EQ(row["values"], nlohmann::json::parse(R"j(["0","0","1"])j"));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["ag"]["index"], 2);
  EXPECT_EQ(j["sigma"][0]["class_representatives"], nlohmann::json::parse(R"j(["()","(1,2,3)"])j"));
}

TEST(Cli, PairingCsv) {
  const CliRun r = run("pairing --group S3 --q 2 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"(1,2,3)\",2,0,0,1\n"), std::string::npos);
}

TEST(Cli, Theta) {
  const CliRun r = run("theta --group S3 --chi 0,0,1 --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["theta"][0]["integral"], false);
  EXPECT_EQ(j["theta"][0]["in_AG"], false);
}

TEST(Cli, Fingerprint) {
  const CliRun r = run("fingerprint --group D4 --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json_of(r)["injective"], true);
}

TEST(Cli, DetResolvend) {
  const CliRun r = run("det-resolvend --group S3 --q 7 --format json");
  ASSERT_EQ(r.status, 0);
  for (const auto& v : json_of(r)["values"]) EXPECT_EQ(v["match"], true);
}

TEST(Cli, Factorise) {
  const CliRun r = run("factorise --group S3 --q 2 --s \"(1,2,3)\" --t \"(1,2)\" --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  for (const auto& c : json_of(r)["checks"]) EXPECT_EQ(c["status"], "pass");
  const CliRun bad = run("factorise --group S3 --q 2 --s \"(1,2,3)\" --t \"(1,2,3)\"");
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, Disc) {
  const CliRun r = run("disc --group S3 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "s,order,valuation\n(),1,0\n\"(1,2)\",2,3\n\"(1,2,3)\",3,4\n");
}

TEST(Cli, VerifyS3) {
  const CliRun r = run("verify --group S3 --q 2,7 --format json");
  EXPECT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["q"], nlohmann::json::parse("[2,7]"));
}

TEST(Cli, VerifyTamperedTable) {
  const CliRun t = run("table --group S3 --format json");
  auto j = json_of(t);
  j["characters"][2][1] = "cyclo(1; 1)";
  const std::string path = write_temp("tampered.json", j.dump());
  const CliRun r = run("verify --group S3 --table " + path + " --format json");
  EXPECT_EQ(r.status, 1);
  const auto rep = json_of(r);
  bool found = false;
  for (const auto& c : rep["checks"]) {
    if (c["id"] == "chartab.table_valid") {
      found = true;
      EXPECT_EQ(c["status"], "fail");
      EXPECT_EQ(c["counterexample"]["check"], "row_orthogonality");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, OutFileMatchesStdout) {
  const std::string path = ::testing::TempDir() + "pairing_out.csv";
  const CliRun a = run("pairing --group D4 --format csv");
  const CliRun b = run("pairing --group D4 --format csv --out " + path);
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(slurp(path), a.out);
}

TEST(Cli, StrictModeRejectsCompositeQ) {
  EXPECT_EQ(run("sigma --group S3 --q 6").status, 2);
  EXPECT_EQ(run("sigma --group S3 --q 6 --no-strict").status, 0);
}
