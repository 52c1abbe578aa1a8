#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frobkit_cli/session.hpp"

using json = nlohmann::json;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(FROBKIT_TEST_DATA) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct SessionRun {
  int code;
  std::vector<json> records;
  std::string raw;
};

SessionRun run_text(const std::string& text) {
  std::ostringstream out, log;
  SessionRun r;
  r.code = frobkit::cli::run_session(text, out, log);
  r.raw = out.str();
  std::istringstream lines(r.raw);
  for (std::string line; std::getline(lines, line);) r.records.push_back(json::parse(line));
  return r;
}

SessionRun run_file(const std::string& name) { return run_text(read(name)); }

}  // namespace

TEST(Cli, BasicSession) {
  const SessionRun r = run_file("basic.json");
  EXPECT_EQ(r.code, 0);
  ASSERT_EQ(r.records.size(), 14u);
  for (const auto& rec : r.records) EXPECT_EQ(rec["status"], "ok") << rec.dump();
  EXPECT_EQ(r.records[0]["verdict"], "Nilpotent");
  EXPECT_EQ(r.records[0]["index"], 1);
  EXPECT_EQ(r.records[1]["verdict"], "NotNilpotent");
  EXPECT_EQ(r.records[5]["matrix"][0][0], "x*y + 1");
  EXPECT_EQ(r.records[11]["equal"], true);
  EXPECT_EQ(r.records[13]["dim"], 1);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run_file("basic.json").raw, run_file("basic.json").raw);
  EXPECT_EQ(run_file("quotient.json").raw, run_file("quotient.json").raw);
}

TEST(Cli, ArtinSchreierAtAllPoints) {
  const SessionRun r = run_file("artin_schreier.json");
  EXPECT_EQ(r.code, 0);
  const auto& pts = r.records[0]["points"];
  ASSERT_EQ(pts.size(), 9u);
  for (const auto& pt : pts) {
    EXPECT_EQ(pt["dim"], 1);
    EXPECT_EQ(pt["m"], 2);
  }
}

TEST(Cli, QuotientSession) {
  const SessionRun r = run_file("quotient.json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.records[1]["verdict"], "Nilpotent");
  EXPECT_EQ(r.records[1]["index"], 2);
  EXPECT_EQ(r.records[2]["dim"], 0);
  EXPECT_EQ(r.records[4]["dim"], 2);
}

TEST(Cli, ParseErrorsHaveLineAndColumn) {
  const SessionRun r = run_file("bad_poly.json");
  EXPECT_EQ(r.code, frobkit::cli::kInputError);
  ASSERT_EQ(r.records.size(), 1u);
  const auto& err = r.records[0]["error"];
  EXPECT_EQ(err["kind"], "parse_error");
  EXPECT_EQ(err["object"], "M1");
  EXPECT_EQ(err["line"], 6);
  EXPECT_EQ(err["column"], 31);
}

TEST(Cli, JsonSyntaxError) {
  const SessionRun r = run_text("{\n  \"field\": {\"p\": 2},\n  \"ring\": [\n}");
  EXPECT_EQ(r.code, frobkit::cli::kInputError);
  EXPECT_EQ(r.records[0]["error"]["kind"], "parse_error");
  EXPECT_EQ(r.records[0]["error"]["line"], 4);
}

TEST(Cli, CommandErrorsAreReported) {
  const SessionRun r = run_file("command_error.json");
  EXPECT_EQ(r.code, frobkit::cli::kCommandError);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0]["error"]["kind"], "infinite_dimensional");
  EXPECT_EQ(r.records[1]["error"]["kind"], "invalid_argument");
}

TEST(Cli, ValidationFailuresNameTheObject) {
  const char* text = R"({"field": {"p": 2}, "ring": {"vars": ["x"]},
    "objects": {"bad": {"type": "module", "rank": 1, "relations": ["x"], "kappa": {"0,1": "1"}}},
    "commands": []})";
  const SessionRun r = run_text(text);
  EXPECT_EQ(r.code, frobkit::cli::kInputError);
  EXPECT_EQ(r.records[0]["error"]["kind"], "validation_error");
  EXPECT_EQ(r.records[0]["error"]["object"], "bad");
}

TEST(Cli, UnknownNamesAreCaughtBeforeRunning) {
  const char* text = R"({"field": {"p": 2}, "ring": {"vars": ["x"]},
    "commands": [{"op": "as-kernel", "args": ["4"]}, {"op": "nilpotent", "args": ["M9"]}]})";
  const SessionRun r = run_text(text);
  EXPECT_EQ(r.code, frobkit::cli::kInputError);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0]["error"]["kind"], "unknown_object");
  const SessionRun bad_op = run_text(R"({"field": {"p": 2}, "ring": {"vars": ["x"]}, "commands": [{"op": "frob"}]})");
  EXPECT_EQ(bad_op.code, frobkit::cli::kInputError);
}

TEST(Cli, NamedResultsFeedLaterCommands) {
  const char* text = R"({"field": {"p": 3}, "ring": {"vars": ["x", "y"]},
    "objects": {"N": {"type": "gamma", "kind": "unit"}, "im": {"type": "immersion", "sequence": ["x", "y"]}},
    "commands": [{"op": "pullback", "args": "N im --as Np"},
                 {"op": "twist-to-cartier", "args": ["N"], "as": "W"},
                 {"op": "pullback", "args": ["W", "im"], "as": "Wp"},
                 {"op": "nilpotent", "args": ["Wp"]},
                 {"op": "dualizing", "args": ["im"]}]})";
  const SessionRun r = run_text(text);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.records[3]["verdict"], "NotNilpotent");
  EXPECT_EQ(r.records[2]["kappa"], r.records[4]["kappa"]);
}

TEST(Cli, ExtensionFieldSolutions) {
  const char* text = R"({"field": {"p": 2, "e": 2, "modulus": [1, 1, 1], "gen": "c"}, "ring": {"vars": ["x"]},
    "objects": {"N": {"type": "gamma", "rank": 1, "matrix": [["c"]]}},
    "commands": [{"op": "solutions", "args": "N --point 0"}]})";
  const SessionRun r = run_text(text);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.records[0]["dim"], 1);
  EXPECT_EQ(r.records[0]["basis"][0][0], "(c + 1)");  // c^{-1} = c^2 = c + 1
}

TEST(Cli, VerifySuiteQuick) {
  std::ostringstream out, log;
  EXPECT_EQ(frobkit::cli::run_verify_suite(7, true, out, log), 0);
  const json rec = json::parse(out.str());
  EXPECT_EQ(rec["failed"], 0);
  EXPECT_EQ(rec["checks"].size(), 10u);
}
