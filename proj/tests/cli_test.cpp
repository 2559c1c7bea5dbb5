// SPDX-License-Identifier: Apache-2.0

#include "ctbound/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ctbound/document.hpp"
#include "ctbound/error.hpp"
#include "ctbound/report.hpp"
#include "support.hpp"

namespace ctbound {
namespace {

const std::string kData = CTBOUND_TEST_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/data/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliWct, AbstractProductMatchesGoldenFile) {
  const CliRun r = run({"wct", data("abstract_product.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, slurp(kData + "/golden/abstract_product.txt"));
}

TEST(CliWct, Sp2BoundsStrictCoveringType) {
  const CliRun r = run({"wct", data("sp2.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("sct ≥ 24\nΔ ≥ 24\n", 0), 0u) << r.out;
}

TEST(CliWct, RefinementsFromDocumentAndFlag) {
  const CliRun doc = run({"wct", data("sp2_nonweighted.json")});
  EXPECT_EQ(doc.out.rfind("ct ≥ 21\n", 0), 0u) << doc.out;
  EXPECT_NE(doc.out.find("INDEPENDENT_MIN_WEIGHT +1"), std::string::npos);
  const CliRun flag = run({"wct", data("lens_times_sphere.json"), "--refine", "indep,hdim"});
  EXPECT_EQ(flag.code, kExitOk) << flag.err;
  EXPECT_EQ(flag.out.rfind("ct ≥ 24\n", 0), 0u) << flag.out;
  EXPECT_NE(flag.out.find("HDIM +0"), std::string::npos);
}

TEST(CliWct, ZeroProductIsAnInputError) {
  const CliRun r = run({"wct", data("zero_product.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("ZERO_PRODUCT"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliWct, MalformedDocumentsAreLocated) {
  const CliRun parse = run({"wct", data("malformed.json")});
  EXPECT_EQ(parse.code, kExitInputError);
  EXPECT_NE(parse.err.find("PARSE_ERROR"), std::string::npos);
  const CliRun field = run({"wct", data("bad_field.json")});
  EXPECT_EQ(field.code, kExitInputError);
  EXPECT_NE(field.err.find("/generators/0/degree"), std::string::npos) << field.err;
  const CliRun missing = run({"wct", data("does_not_exist.json")});
  EXPECT_EQ(missing.code, kExitInputError);
  const CliRun no_sequence = run({"wct", data("rp5.json")});
  EXPECT_EQ(no_sequence.code, kExitInputError);
  EXPECT_NE(no_sequence.err.find("/sequence"), std::string::npos);
}

TEST(CliWct, OracleAgrees) {
  const CliRun r = run({"--oracle", "wct", data("abstract_product.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const CliRun after = run({"wct", data("abstract_product.json"), "--oracle"});
  EXPECT_EQ(after.code, kExitOk) << after.err;
}

TEST(CliWct, JsonRoundTripsByteForByte) {
  const CliRun r = run({"wct", data("abstract_product.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(parsed["final_value"], 70);
  EXPECT_EQ(parsed["bound_target"], "CT");
  EXPECT_EQ(report_to_json(report_from_json(parsed)).dump(2) + "\n", r.out);
}

TEST(ReportJson, RoundTripOnRandomReports) {
  std::mt19937 rng(301);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedSequence s = testing::random_sequence(rng);
    const WctReport report = wct(s);
    const std::string text = report_to_json(report).dump();
    const WctReport back = report_from_json(nlohmann::ordered_json::parse(text));
    EXPECT_EQ(back, report);
    EXPECT_EQ(report_to_json(back).dump(), text);
  }
}

TEST(ReportJson, RejectsMalformedReports) {
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::parse("{}")), Error);
  EXPECT_THROW(report_from_json(nlohmann::ordered_json::parse("[1,2]")), Error);
}

TEST(CliSwct, Examples) {
  const CliRun rp = run({"swct", data("rp5.json")});
  EXPECT_EQ(rp.code, kExitOk) << rp.err;
  EXPECT_EQ(rp.out.rfind("swct ≥ 21\nwitness: (x×5)\n", 0), 0u) << rp.out;
  const CliRun lens = run({"swct", data("lens5.json")});
  EXPECT_EQ(lens.out.rfind("swct ≥ 21\nwitness: (x, y×2)\n", 0), 0u) << lens.out;
  const CliRun sphere = run({"swct", data("sphere7.json"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(sphere.out)["value"], 9);
  const CliRun capped = run({"swct", data("rp5.json"), "--max-degree", "3"});
  EXPECT_EQ(capped.out.rfind("swct ≥ 10\n", 0), 0u) << capped.out;
  const CliRun pair = run({"swct", data("rp5.json"), "--max-factors", "1", "--oracle"});
  EXPECT_EQ(pair.out.rfind("swct ≥ 7\n", 0), 0u) << pair.out;
}

TEST(CliSwct, NonStrictWeightsAreRejected) {
  const CliRun r = run({"swct", data("sp2.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("NOT_STRICT"), std::string::npos);
}

TEST(CliCatalog, Examples) {
  const CliRun su = run({"catalog", "su_quotient", "n=3", "p=3", "r=1"});
  EXPECT_EQ(su.code, kExitOk) << su.err;
  EXPECT_NE(su.out.find("computed: 40\nexpected: 40"), std::string::npos) << su.out;
  EXPECT_NE(su.out.find("status: PASS"), std::string::npos);

  const CliRun st = run({"catalog", "stiefel", "dims=9,11,13", "i=3"});
  EXPECT_NE(st.out.find("computed: 398"), std::string::npos) << st.out;
  EXPECT_NE(st.out.find("status: PASS"), std::string::npos);

  const CliRun dold = run({"catalog", "dold", "r=1", "s=1", "--format", "json"});
  EXPECT_EQ(dold.code, kExitOk);
  const auto j = nlohmann::json::parse(dold.out);
  EXPECT_EQ(j["computed"], 8);
  EXPECT_EQ(j["status"], "FLAGGED");
  bool saw_six = false;
  for (const auto& ref : j["references"]) saw_six = saw_six || ref["value"] == 6;
  EXPECT_TRUE(saw_six);
}

TEST(CliCatalog, InputErrors) {
  EXPECT_EQ(run({"catalog", "nope"}).code, kExitInputError);
  EXPECT_EQ(run({"catalog", "lens", "n=x"}).code, kExitInputError);
  EXPECT_EQ(run({"catalog", "lens", "n"}).code, kExitInputError);
  EXPECT_EQ(run({"catalog", "lens", "n=1", "n=2"}).code, kExitInputError);
  EXPECT_EQ(run({"catalog"}).code, kExitInputError);
  EXPECT_EQ(run({"catalog", "lens", "n=2", "--all"}).code, kExitInputError);
}

TEST(CliCatalog, All) {
  const CliRun r = run({"catalog", "--all"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("0 failing entries"), std::string::npos);
  EXPECT_EQ(r.out.find("\nFAIL "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"wct"}).code, kExitInputError);
  EXPECT_EQ(run({"wct", data("sp2.json"), "--format", "xml"}).code, kExitInputError);
  EXPECT_EQ(run({"wct", data("sp2.json"), "--refine", "magic"}).code, kExitInputError);
  EXPECT_EQ(run({"swct", data("rp5.json"), "--max-factors", "0"}).code, kExitInputError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

// Hand-mutated documents must never crash the front end.
TEST(Cli, MutatedDocumentsNeverEscape) {
  const std::string base = slurp(data("abstract_product.json"));
  std::mt19937 rng(302);
  const std::string alphabet = "{}[]\",:0123456789-xyz ";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = base;
    const int edits = testing::uniform(rng, 1, 4);
    for (int e = 0; e < edits; ++e) {
      const auto pos = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(text.size()) - 1));
      text[pos] = alphabet[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(alphabet.size()) - 1))];
    }
    try {
      const ProblemDocument doc = parse_document_text(text);
      if (doc.sequence) (void)wct(*doc.sequence);
    } catch (const Error&) {
    }
  }
}

}  // namespace
}  // namespace ctbound
