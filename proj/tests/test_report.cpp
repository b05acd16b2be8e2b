#include <array>
#include <cstdio>
#include <memory>

#include "test_util.hpp"

using namespace lmsym;

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LMSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_file(const std::string& name) { return std::string(LMSYM_DATA_DIR) + "/groups/" + name; }

}  // namespace

TEST(Classify, Q8) {
  const json r = cmd_classify(catalog_group("Q8"));
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["order"], 8);
  EXPECT_TRUE(r["theorem1"]["c3"].get<bool>());
  EXPECT_TRUE(r["theorem1"]["c4"].get<bool>());
  EXPECT_TRUE(r["theorem1"]["verdict"].get<bool>());
  EXPECT_FALSE(r.contains("brute"));
  EXPECT_FALSE(r.contains("agreement"));
}

TEST(Classify, S4FromFile) {
  const json r = cmd_classify(load_group(data_file("s4.group")));
  for (const char* c : {"c1", "c2", "c3", "c4", "verdict"}) EXPECT_FALSE(r["theorem1"][c].get<bool>()) << c;
}

TEST(Classify, C2) {
  const json r = cmd_classify(catalog_group("C2"));
  EXPECT_TRUE(r["theorem1"]["c1"].get<bool>());
  EXPECT_TRUE(r["theorem1"]["verdict"].get<bool>());
}

TEST(Brute, Examples) {
  EXPECT_TRUE(cmd_brute(catalog_group("D8"))["brute"]["lie_metabelian"].get<bool>());

  const json sd = cmd_brute(catalog_group("SD16"));
  EXPECT_FALSE(sd["brute"]["lie_metabelian"].get<bool>());
  EXPECT_EQ(sd["brute"]["witness"]["indices"].size(), 4u);
  EXPECT_FALSE(sd["brute"]["witness"]["double_bracket"].empty());

  const json e = cmd_brute(catalog_group("C2^3"));
  EXPECT_TRUE(e["brute"]["lie_metabelian"].get<bool>());
  EXPECT_EQ(e["brute"]["bracket_count"], 0);
  EXPECT_TRUE(e["plus_commutative"].get<bool>());
}

TEST(Brute, BudgetExceeded) {
  EXPECT_THROW(cmd_brute(catalog_group("S4"), 16), Error);
}

TEST(Validate, UpTo16AllAgree) {
  const auto res = cmd_validate(16);
  EXPECT_EQ(res.exit_code, kExitOk);
  EXPECT_TRUE(res.report["all_agree"].get<bool>());
  EXPECT_EQ(res.report["groups"].size(), catalog(16).size());
  for (const auto& g : res.report["groups"]) {
    EXPECT_TRUE(g["agreement"].get<bool>()) << g["group"];
    EXPECT_TRUE(g["agreement_theorem2"].get<bool>()) << g["group"];
  }
}

TEST(Validate, EmptyCatalog) {
  const auto res = cmd_validate(0);
  EXPECT_EQ(res.exit_code, kExitOk);
  EXPECT_TRUE(res.report["groups"].empty());
}

TEST(Validate, AgreementPresentOnlyWithBothVerdicts) {
  const json r = cross_validate(catalog_group("Q16"), kDefaultBruteBudget);
  EXPECT_EQ(r["agreement"].get<bool>(),
            r["theorem1"]["verdict"].get<bool>() == r["brute"]["lie_metabelian"].get<bool>());
}

TEST(Audit, Examples) {
  auto status_of = [](const CommandResult& r, const std::string& id) {
    for (const auto& a : r.report["audits"])
      if (a["identity"] == id) return a["status"].get<std::string>();
    return std::string("missing");
  };
  const auto q8 = cmd_audit(catalog_group("Q8"), "eq2");
  EXPECT_EQ(status_of(q8, "eq2"), "passed");
  EXPECT_EQ(q8.exit_code, kExitOk);

  const auto d8 = cmd_audit(catalog_group("D8"), "eq2");
  EXPECT_EQ(status_of(d8, "eq2"), "skipped");
  EXPECT_EQ(d8.exit_code, kExitOk);

  const auto s3 = cmd_audit(catalog_group("S3"), "expansions");
  EXPECT_EQ(status_of(s3, "bracket_expansions"), "passed");
  EXPECT_EQ(status_of(s3, "involutions_expansion"), "passed");
  std::size_t tuples = 0;
  for (const auto& a : s3.report["audits"]) tuples += a["tuples_checked"].get<std::size_t>();
  EXPECT_GE(tuples, 27u);
}

TEST(Audit, AllOnQ8xC2) {
  const auto r = cmd_audit(catalog_group("Q8xC2"), "all");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_GE(r.report["audits"].size(), 18u);
  for (const auto& a : r.report["audits"]) EXPECT_NE(a["status"], "failed") << a["identity"];
}

TEST(Render, DeterministicAndTable) {
  const auto a = render(cmd_validate(16).report, "json");
  const auto b = render(cmd_validate(16).report, "json");
  EXPECT_EQ(a, b);
  const auto t = render(cmd_validate(8).report, "table");
  EXPECT_NE(t.find("Q8"), std::string::npos);
  EXPECT_NE(t.find("all_agree=yes"), std::string::npos);
}

TEST(Render, HugeCoefficientsAsStrings) {
  const Group c2 = catalog_group("C2");
  RingElement p = RingElement::one(c2);
  const RingElement f = RingElement::one(c2) + RingElement(c2, 1);
  for (int i = 0; i < 100; ++i) p = p * f;
  const json j = ring_to_json(p);
  EXPECT_TRUE(j[0][1].is_string());
  EXPECT_EQ(j[0][1].get<std::string>(), (Integer(1) << 99).str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("classify --name Q8").exit_code, 0);
  EXPECT_EQ(run_cli("classify --file " + data_file("s4.group")).exit_code, 0);
  EXPECT_EQ(run_cli("classify --name NoSuchGroup").exit_code, 2);
  EXPECT_EQ(run_cli("classify --file " + data_file("bad_latin.group")).exit_code, 2);
  EXPECT_EQ(run_cli("classify").exit_code, 2);
  EXPECT_EQ(run_cli("classify --name Q8 --file x.group").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("brute --name S4 --budget 10").exit_code, 3);
  EXPECT_EQ(run_cli("audit --name D8 --identity eq2").exit_code, 0);
  EXPECT_EQ(run_cli("validate --max-order 0").exit_code, 0);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run_cli("brute --name SD16");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j["brute"]["lie_metabelian"].get<bool>());
}

TEST(Cli, ValidateIsByteIdentical) {
  const auto a = run_cli("validate --max-order 16 --seed 0");
  const auto b = run_cli("validate --max-order 16 --seed 0");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
