#include <doctest.h>

#include <sstream>

#include "sumkit_cli/commands.hpp"
#include "sumkit_cli/report_io.hpp"

using namespace sumkit;
using namespace sumkit::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("compute") {
  auto a = run_cli({"compute", "--set", "0,1,3", "--h", "2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "0 1 2 3 4 6 (|·|=6)\n");

  auto b = run_cli({"compute", "--set", "1,2,3", "--subset-sums", "--alpha", "2"});
  CHECK(b.code == kExitOk);
  CHECK(b.out == "3 4 5 6 (|·|=4)\n");

  auto c = run_cli({"compute", "--values", "1,2", "--mult", "2,1", "--subseq-sums"});
  CHECK(c.code == kExitOk);
  CHECK(c.out == "1 2 3 4 (|·|=4)\n");

  auto oracle = run_cli({"compute", "--set", "0,1,3", "--h", "2", "--restricted", "--oracle"});
  CHECK(oracle.code == kExitOk);
  CHECK(oracle.out == "1 3 4 (|·|=3)\n");
}

TEST_CASE("compute usage errors name the flag") {
  auto bad = run_cli({"compute", "--set", "1,x", "--h", "2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("--set") != std::string::npos);

  auto range = run_cli({"compute", "--set", "0,1,3", "--h", "4", "--restricted"});
  CHECK(range.code == kExitUsage);

  CHECK(run_cli({"compute", "--h", "2"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--set", "1,2", "--values", "1", "--mult", "1", "--h", "2"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
}

TEST_CASE("verify") {
  auto ok = run_cli({"verify", "--theorem", "SUBSET_MIN_LEMMA_A", "--k", "4", "--max-elem", "12", "--format", "json"});
  CHECK(ok.code == kExitOk);
  auto doc = Json::parse(ok.out);
  CHECK(doc["counts"]["violation"] == 0);
  CHECK(doc["equality_witnesses"] == Json::array({"1,2,3,4"}));
  CHECK(doc["params"]["k_min"] == 4);
  CHECK(doc["cursor"] == "done");

  auto nope = run_cli({"verify", "--theorem", "NOPE", "--k", "4", "--max-elem", "12"});
  CHECK(nope.code == kExitUsage);
  CHECK(nope.err.find("LEV_RESTRICTED") != std::string::npos);

  auto lower = run_cli({"verify", "--theorem", "subset_min_lemma_a", "--k", "4", "--max-elem", "12"});
  CHECK(lower.code == kExitOk);
}

TEST_CASE("verify exits 1 on violations of a published formula") {
  auto r = run_cli({"verify", "--theorem", "ALPHA_SUBSET_ZERO", "--k", "4", "--max-elem", "3", "--as-stated"});
  CHECK(r.code == kExitViolation);
  auto fixed = run_cli({"verify", "--theorem", "ALPHA_SUBSET_ZERO", "--k", "4", "--max-elem", "3"});
  CHECK(fixed.code == kExitOk);
}

TEST_CASE("verify conjecture exits 0 when no counterexample is found") {
  auto r = run_cli({"verify", "--theorem", "FREIMAN_LEV_CONJECTURE", "--k", "8", "--max-elem", "12", "--jobs", "2"});
  CHECK(r.code == kExitOk);
}

TEST_CASE("verify output is identical across --jobs") {
  std::vector<std::string> base{"verify", "--theorem", "NATHANSON_RESTRICTED", "--k-min", "3", "--k-max", "6",
                                "--max-elem", "12", "--format", "json"};
  auto one = base, three = base;
  one.insert(one.end(), {"--jobs", "1"});
  three.insert(three.end(), {"--jobs", "3"});
  auto a = run_cli(one), b = run_cli(three);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);

  base.back() = "csv";
  one = base, three = base;
  one.insert(one.end(), {"--jobs", "1"});
  three.insert(three.end(), {"--jobs", "3"});
  CHECK(run_cli(one).out == run_cli(three).out);
}

TEST_CASE("JSON report round-trip") {
  for (TheoremId id : {TheoremId::NathansonHFold, TheoremId::AlphaSubsetZero, TheoremId::AlphaSeqZeroR1}) {
    SweepConfig cfg;
    cfg.theorem = id;
    cfg.k_min = 3;
    cfg.k_max = 4;
    cfg.max_elem = 8;
    cfg.mult_max = 2;
    cfg.witness_cap = 3;
    auto rep = verify_range(cfg);
    auto back = report_from_json(Json::parse(render_report(rep, Format::Json)));
    CHECK(back == rep);
    CHECK(report_to_json(back).dump() == report_to_json(rep).dump());
  }
  SweepConfig stated;
  stated.theorem = TheoremId::AlphaSubsetZero;
  stated.k_min = stated.k_max = 4;
  stated.max_elem = 5;
  stated.variant = BoundVariant::AsStated;
  auto rep = verify_range(stated);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(report_from_json(report_to_json(rep)) == rep);
  CHECK_THROWS_AS((void)report_from_json(Json::parse(R"({"theorem":"LEV_HFOLD"})")), Error);
}

TEST_CASE("catalog") {
  auto plain = run_cli({"catalog"});
  CHECK(plain.code == kExitOk);

  auto json = run_cli({"catalog", "--format", "json"});
  auto doc = Json::parse(json.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 28);
  for (const auto& e : doc)
    for (const char* key : {"id", "statement", "hypotheses", "measures", "conjecture"}) CHECK(e.contains(key));

  auto csv = run_cli({"catalog", "--format", "csv"});
  CHECK(csv.out.starts_with("id,statement,hypotheses,measures,conjecture\n"));
  CHECK(count_lines(csv.out) == 29);
}

TEST_CASE("tightness") {
  auto a = run_cli({"tightness", "--k", "9", "--a-last", "20"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("expected 20") != std::string::npos);
  CHECK(a.out.find("measured 20") != std::string::npos);
  CHECK(run_cli({"tightness", "--k", "9", "--a-last", "13"}).code == kExitOk);
  CHECK(run_cli({"tightness", "--k", "5"}).code == kExitUsage);
  CHECK(run_cli({"tightness", "--k", "10"}).code == kExitOk);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("0,1,3") == "\"0,1,3\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
