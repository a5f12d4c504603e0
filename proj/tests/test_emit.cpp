#include <gtest/gtest.h>

#include <fstream>

#include "oracles.hpp"
#include "stickel/emit.hpp"
#include "stickel/verify.hpp"

using namespace stickel;

namespace {

TablePtr table_of(const std::string& name) {
  return std::make_shared<const CharacterTable>(character_table(oracle::group(name)));
}

const CheckResult* find_check(const VerificationReport& r, const std::string& id, const std::string& group) {
  for (const auto& c : r.checks) {
    if (c.id == id && c.group == group) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Emit, CsvQuoting) {
  const Section s{"t", {"a", "b,c"}, {{"x\"y", "plain"}, {"1", "line\nbreak"}}};
  EXPECT_EQ(to_csv({s}), "a,\"b,c\"\n\"x\"\"y\",plain\n1,\"line\nbreak\"\n");
  EXPECT_EQ(to_csv({s, s}).find("\n\na,"), to_csv({s}).size() - 1);
}

TEST(Emit, PrettyAlignment) {
  const Section s{"title", {"a", "bb"}, {{"ccc", "d"}}};
  EXPECT_EQ(to_pretty({s}), "title\n  a    bb\n  ccc  d\n");
}

TEST(Emit, ReadableValues) {
  EXPECT_EQ(readable(raise(Cyclotomic(ratio(3, 4)), 12)), "3/4");
  EXPECT_EQ(readable(Cyclotomic::zeta(3)), "cyclo(3; 0, 1)");
  EXPECT_EQ(cyclo_text(Cyclotomic::zeta(12, 4)), "cyclo(3; 0, 1)");
}

TEST(Emit, TableJsonRoundTrip) {
  for (const char* name : {"C3", "S3", "Q8", "A4"}) {
    const auto t = table_of(name);
    const Json j = table_json(*t);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["order"], t->group()->order());
    EXPECT_EQ(table_from_json(j, t->group()), *t);
    EXPECT_EQ(table_from_json(Json::parse(j.dump()), t->group()), *t);
  }
  EXPECT_THROW(table_from_json(Json{{"rows", 1}}, oracle::group("C2")), ParseError);
  EXPECT_THROW(table_from_json(Json{{"characters", {{1.5, 1}}}}, oracle::group("C2")), ParseError);
}

TEST(Verify, S3PassesWithTwoResidueOrders) {
  VerifyConfig cfg;
  cfg.groups = {"S3"};
  cfg.qs = {2, 7};
  const VerificationReport r = run_verification(cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.passed(), static_cast<long>(r.checks.size()));
  for (const auto& c : r.checks) EXPECT_TRUE(c.counterexample.is_null()) << c.id;
}

TEST(Verify, ReportShape) {
  VerifyConfig cfg;
  cfg.groups = {"C3"};
  cfg.qs = {2};
  const Json j = run_verification(cfg).to_json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["seed"], 0);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "anchor", "group", "status", "cases", "counterexample"}) EXPECT_TRUE(c.contains(key));
  }
  EXPECT_EQ(j["summary"]["failed"], 0);
  std::set<std::string> ids;
  for (const auto& c : j["checks"]) ids.insert(c["id"].get<std::string>());
  for (const auto& [id, anchor] : check_registry()) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Verify, Deterministic) {
  VerifyConfig cfg;
  cfg.groups = {"D4", "C6"};
  cfg.qs = {3, 5};
  cfg.seed = 17;
  EXPECT_EQ(run_verification(cfg).to_json().dump(), run_verification(cfg).to_json().dump());
}

TEST(Verify, TamperedTableFailsOrthogonality) {
  const auto t = table_of("S3");
  Json j = table_json(*t);
  j["characters"][2][1] = "cyclo(1; 1)";
  const std::string path = ::testing::TempDir() + "tampered_s3.json";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  VerifyConfig cfg;
  cfg.groups = {"S3"};
  cfg.table_path = path;
  const VerificationReport r = run_verification(cfg);
  EXPECT_FALSE(r.ok());
  const CheckResult* c = find_check(r, "chartab.table_valid", "S3");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_EQ(c->counterexample["check"], "row_orthogonality");
  EXPECT_NE(c->counterexample["detail"].get<std::string>().find("rows 0,2"), std::string::npos);
}

TEST(Verify, TableOverrideNeedsSingleGroup) {
  VerifyConfig cfg;
  cfg.groups = {"S3", "C2"};
  cfg.table_path = "unused.json";
  EXPECT_THROW(run_verification(cfg), DomainError);
}
