#include "schur/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "schur/verify.hpp"

namespace schur {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = std::string(SCHUR_CLI_PATH) + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file;
  cmd += " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

VerificationReport tiny_bounds_report() {
  VerifyOptions o;
  o.primes = {2};
  return verify_bounds(o, /*max_order=*/16);
}

TEST(Report, JsonRoundTripIsLossFree) {
  VerificationReport rep = tiny_bounds_report();
  ASSERT_GT(rep.total(), 0);
  std::string text = report_json_text(rep);
  VerificationReport again =
      report_from_json(nlohmann::json::parse(text));
  EXPECT_EQ(again.suite, rep.suite);
  EXPECT_EQ(again.config, rep.config);
  EXPECT_EQ(again.total(), rep.total());
  for (int i = 0; i < rep.total(); ++i) {
    EXPECT_EQ(again.cases[i].id, rep.cases[i].id);
    EXPECT_EQ(again.cases[i].computed, rep.cases[i].computed);
    EXPECT_EQ(again.cases[i].pass, rep.cases[i].pass);
    EXPECT_EQ(again.cases[i].elapsed_ms, rep.cases[i].elapsed_ms);
  }
  EXPECT_TRUE(reports_equal_ignoring_timing(rep, again));
}

TEST(Report, DeterministicModuloTiming) {
  VerificationReport a = tiny_bounds_report();
  VerificationReport b = tiny_bounds_report();
  EXPECT_TRUE(reports_equal_ignoring_timing(a, b));
  // and the non-timing JSON bytes are literally identical
  auto strip = [](VerificationReport r) {
    r.generated_at = "";
    for (auto& c : r.cases) c.elapsed_ms = 0;
    return report_json_text(r);
  };
  EXPECT_EQ(strip(a), strip(b));
}

TEST(Report, EmptyCorpusIsVacuousPassWithWarning) {
  VerifyOptions o;
  o.primes = {};
  VerificationReport rep = verify_bounds(o);
  EXPECT_TRUE(rep.all_pass());
  ASSERT_EQ(rep.total(), 1);  // only the corpus-size claim
  EXPECT_NE(rep.cases[0].note.find("warning"), std::string::npos);
}

TEST(Report, CsvAndTableRender) {
  VerificationReport rep = tiny_bounds_report();
  std::string csv = report_csv_text(rep);
  EXPECT_NE(csv.find("id,group,expected"), std::string::npos);
  EXPECT_NE(csv.find("item11/p=2"), std::string::npos);
  std::string table = report_table_text(rep);
  EXPECT_NE(table.find("suite: bounds"), std::string::npos);
  EXPECT_NE(table.find("PASS"), std::string::npos);
}

TEST(Cli, InfoAndMultiplier) {
  EXPECT_EQ(run_cli("info D16", "/tmp/schur_info.txt"), 0);
  std::string out = slurp("/tmp/schur_info.txt");
  EXPECT_NE(out.find("order:          16"), std::string::npos);
  EXPECT_NE(out.find("|Z(G)|:         2"), std::string::npos);

  EXPECT_EQ(run_cli("info item6 --p 3", "/tmp/schur_info2.txt"), 0);
  std::string out2 = slurp("/tmp/schur_info2.txt");
  EXPECT_NE(out2.find("81"), std::string::npos);

  EXPECT_EQ(run_cli("multiplier Q8 --format json", "/tmp/schur_q8.json"), 0);
  auto j = nlohmann::json::parse(slurp("/tmp/schur_q8.json"));
  EXPECT_EQ(j["multiplier_order"], "1");
  EXPECT_EQ(j["t"], 3);

  EXPECT_EQ(run_cli("multiplier item1 --format json", "/tmp/schur_i1.json"),
            0);
  auto j1 = nlohmann::json::parse(slurp("/tmp/schur_i1.json"));
  EXPECT_EQ(j1["p_exponent"], 10);
  EXPECT_EQ(j1["t"], 5);

  EXPECT_EQ(run_cli("multiplier Z3^2 --format json", "/tmp/schur_z.json"), 0);
  auto jz = nlohmann::json::parse(slurp("/tmp/schur_z.json"));
  EXPECT_EQ(jz["invariants"].size(), 1u);
  EXPECT_EQ(jz["invariants"][0], "3");
}

TEST(Cli, ExitCodes) {
  // usage error
  EXPECT_EQ(run_cli("no-such-command"), 2);
  // unknown group name
  EXPECT_EQ(run_cli("info not-a-group"), 2);
  // parse error in a file, reported at a position
  {
    std::ofstream f("/tmp/schur_bad.grp");
    f << "gens a; rels a^;\n";
  }
  EXPECT_EQ(run_cli("parse /tmp/schur_bad.grp"), 2);
  EXPECT_EQ(run_cli("multiplier /tmp/schur_bad.grp"), 2);
  // verification failure: a coset cap too small for item16 forces a failing
  // claim, which must exit 1 (not crash, not 0)
  EXPECT_EQ(run_cli("verify-classification --primes 2 --max-cosets 10 "
                    "--no-oracle --format json",
                    "/tmp/schur_fail.json"),
            1);
  auto j = nlohmann::json::parse(slurp("/tmp/schur_fail.json"));
  EXPECT_GT(j["summary"]["failed"].get<int>(), 0);
}

TEST(Cli, ParseDumpsAst) {
  {
    std::ofstream f("/tmp/schur_item12.grp");
    f << "gens a,b; rels a^4=b^4=1, a^-1*b*a=b^-1;\n";
  }
  EXPECT_EQ(run_cli("parse /tmp/schur_item12.grp", "/tmp/schur_p.txt"), 0);
  std::string out = slurp("/tmp/schur_p.txt");
  EXPECT_NE(out.find("2 generators, 3 relators"), std::string::npos);
}

TEST(Cli, PcFileRoundTrip) {
  {
    std::ofstream f("/tmp/schur_d8.pc");
    f << "pcgroup D8 {\n  p = 2; n = 3;\n  comm 2 1 = g3;\n}\n";
  }
  EXPECT_EQ(run_cli("multiplier /tmp/schur_d8.pc --format json",
                    "/tmp/schur_d8.json"),
            0);
  auto j = nlohmann::json::parse(slurp("/tmp/schur_d8.json"));
  EXPECT_EQ(j["multiplier_order"], "2");
}

TEST(Cli, VerifyBoundsDeterministicJson) {
  EXPECT_EQ(run_cli("verify-bounds --primes 2 --max-order 32 --format json",
                    "/tmp/schur_b1.json"),
            0);
  EXPECT_EQ(run_cli("verify-bounds --primes 2 --max-order 32 --format json",
                    "/tmp/schur_b2.json"),
            0);
  auto a = report_from_json(nlohmann::json::parse(slurp("/tmp/schur_b1.json")));
  auto b = report_from_json(nlohmann::json::parse(slurp("/tmp/schur_b2.json")));
  EXPECT_TRUE(reports_equal_ignoring_timing(a, b));
}

TEST(Cli, VerifyBoundsExtras) {
  {
    std::ofstream f("/tmp/schur_extra.pc");
    f << "pcgroup myD8 {\n  p = 2; n = 3;\n  comm 2 1 = g3;\n}\n";
  }
  EXPECT_EQ(run_cli("verify-bounds --primes 2 --max-order 8 --extra "
                    "/tmp/schur_extra.pc --format json",
                    "/tmp/schur_extra.json"),
            0);
  auto j = nlohmann::json::parse(slurp("/tmp/schur_extra.json"));
  bool found = false;
  for (const auto& c : j["cases"])
    if (c["id"].get<std::string>().rfind("extra:", 0) == 0) found = true;
  EXPECT_TRUE(found);
}

TEST(Cli, GrpFileRealization) {
  {
    std::ofstream f("/tmp/schur_h16.grp");
    f << item16_inner_source() << "\n";
  }
  EXPECT_EQ(run_cli("info /tmp/schur_h16.grp", "/tmp/schur_h16.txt"), 0);
  std::string out = slurp("/tmp/schur_h16.txt");
  EXPECT_NE(out.find("order:          16"), std::string::npos);
}

}  // namespace
}  // namespace schur
