#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "toric/corpus.hpp"
#include "toric_cli/commands.hpp"
#include "toric_cli/documents.hpp"
#include "toric_cli/reports.hpp"

namespace toric::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("toric_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_json(const std::string& name, const json& j) { return write(name, j.dump()); }

  fs::path dir_;
};

TEST(Integers, SafeRangeAndStrings) {
  EXPECT_EQ(integer_to_json(Integer(kSafeInteger)), json(kSafeInteger));
  EXPECT_EQ(integer_to_json(Integer(-kSafeInteger)), json(-kSafeInteger));
  EXPECT_EQ(integer_to_json(Integer(kSafeInteger) + 1), json("9007199254740992"));
  const Integer big("-123456789012345678901234567890");
  EXPECT_EQ(integer_to_json(big), json("-123456789012345678901234567890"));
  EXPECT_EQ(integer_from_json(integer_to_json(big), "x"), big);
  EXPECT_EQ(integer_from_json(json(-7), "x"), -7);
  EXPECT_EQ(integer_from_json(json(18446744073709551615ULL), "x"), Integer("18446744073709551615"));
  EXPECT_THROW(integer_from_json(json(1.5), "x"), DocumentError);
  EXPECT_THROW(integer_from_json(json(true), "x"), DocumentError);
  EXPECT_THROW(integer_from_json(json("12a"), "x"), DocumentError);
  EXPECT_THROW(integer_from_json(json("-"), "x"), DocumentError);
  EXPECT_THROW(integer_from_json(json(""), "x"), DocumentError);
}

TEST(Documents, RoundTripNamedCorpus) {
  for (const auto& ex : named_examples()) {
    const Document doc = std::visit([](const auto& x) { return Document(x); }, ex.object);
    const json j = document_to_json(doc);
    EXPECT_EQ(parse_document(j), doc) << ex.name;
    EXPECT_EQ(parse_document_text(j.dump()), doc) << ex.name;
    EXPECT_EQ(document_to_json(parse_document(j)), j) << ex.name;
  }
}

TEST(Documents, RoundTripRandomAndLargeCoordinates) {
  GeneratorConfig cfg;
  cfg.rank = 4;
  cfg.seed = 77;
  for (const auto& c : ConeGenerator(cfg).take(100)) EXPECT_EQ(parse_document(cone_to_json(c)), Document(c));
  const Integer huge = Integer(1) << 80;
  const Cone big = new_cone({LatticeVector(std::vector<Integer>{huge + 1, 1}), LatticeVector{0, 1}}, 2);
  const json j = cone_to_json(big);
  EXPECT_TRUE(j.dump().find("\"1208925819614629174706177\"") != std::string::npos) << j.dump();
  EXPECT_EQ(parse_document(j), Document(big));
}

TEST(Documents, Errors) {
  auto rejects = [](const std::string& text, const std::string& needle) {
    try {
      parse_document_text(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const DocumentError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  rejects("{", "malformed JSON");
  rejects("[1,2]", "JSON object");
  rejects(R"({"generators":[[1,0]]})", "rank");
  rejects(R"({"rank":0,"generators":[]})", "rank must be");
  rejects(R"({"rank":2,"generators":[[1,0]],"cones":[]})", "exactly one");
  rejects(R"({"rank":2,"generators":[[1,0,0]]})", "expected 2 coordinates");
  rejects(R"({"rank":2,"generators":[[1,0.5]]})", "non-integer");
  rejects(R"({"rank":2,"generators":[[1,0],[-1,0]]})", "contains a line");
  rejects(R"({"rank":2,"cones":[[[1,0],[1,2]],[[1,1],[0,1]]]})", "invalid fan");
  EXPECT_NO_THROW(parse_document_text(R"({"rank":2,"generators":[["3","0"]],"note":"extra keys are ignored"})"));
}

TEST_F(CliTest, ExitCodesOnNamedCorpus) {
  for (const auto& ex : named_examples()) {
    const std::string path =
        write_json(ex.name + ".json", std::visit([](const auto& x) { return document_to_json(Document(x)); }, ex.object));
    const auto s = invoke({"smooth", path});
    EXPECT_EQ(s.code, ex.smooth ? kExitYes : kExitNo) << ex.name << s.err;
    EXPECT_EQ(s.report()["smooth"], ex.smooth);
    const auto l = invoke({"locally-free", path, "--format", "json"});
    EXPECT_EQ(l.code, ex.locally_free ? kExitYes : kExitNo) << ex.name << l.err;
    const auto v = invoke({"verify", path});
    EXPECT_EQ(v.code, kExitYes) << ex.name << v.err;
    for (const auto* r : {&s, &l, &v}) {
      EXPECT_EQ(r->report()["tool"], "toric-check");
      EXPECT_EQ(r->report()["version"], std::string(tool_version()));
      const auto rc = invoke({"recheck", write(ex.name + ".report.json", r->out)});
      EXPECT_EQ(rc.code, kExitYes) << ex.name << rc.out << rc.err;
      EXPECT_EQ(rc.report()["valid"], true);
    }
  }
}

TEST_F(CliTest, SpecExamples) {
  const auto a1 = write("a1.json", R"({"rank":2,"generators":[[1,0],[1,2]]})");
  const auto orthant = write("o.json", R"({"rank":2,"generators":[[1,0],[0,1]]})");
  const auto line = write("line.json", R"({"rank":2,"generators":[[1,0],[-1,0]]})");

  auto s = invoke({"smooth", a1});
  EXPECT_EQ(s.code, kExitNo);
  EXPECT_EQ(s.report()["reason"], "invariant factor 2");
  EXPECT_EQ(invoke({"smooth", orthant}).code, kExitYes);
  auto bad = invoke({"smooth", line});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("contains a line"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());

  auto o = invoke({"locally-free", orthant});
  EXPECT_EQ(o.code, kExitYes);
  // witnesses listed against "rays" in canonical ray order
  EXPECT_EQ(o.report()["rays"], json::parse("[[0,1],[1,0]]"));
  EXPECT_EQ(o.report()["witnesses"], json::parse("[[0,1],[1,0]]"));

  auto l = invoke({"locally-free", a1});
  EXPECT_EQ(l.code, kExitNo);
  EXPECT_EQ(l.report()["ray"], json::parse("[1,0]"));
  EXPECT_EQ(l.report()["reason"], "no integral dual weight for ray (1,0)");

  const auto p112 = write("p112.json", R"({"rank":2,"cones":[[[1,0],[0,1]],[[0,1],[-1,-2]],[[-1,-2],[1,0]]]})");
  auto f = invoke({"locally-free", p112});
  EXPECT_EQ(f.code, kExitNo);
  EXPECT_EQ(f.report()["offending"], json::parse(R"([{"rank":2,"generators":[[-1,-2],[1,0]]}])"));
  EXPECT_EQ(f.report()["cones"].size(), 7u);

  auto sec = invoke({"sections", orthant, "--ray", "1,0", "--weight", "-1,3"});
  EXPECT_EQ(sec.code, kExitYes) << sec.err;
  EXPECT_EQ(sec.report()["dimension"], 1);
  EXPECT_EQ(sec.report()["pairing"], -1);
  EXPECT_EQ(invoke({"recheck", write("sec.json", sec.out)}).code, kExitYes);
}

TEST_F(CliTest, RecheckCatchesTampering) {
  const auto orthant = write("o.json", R"({"rank":2,"generators":[[1,0],[0,1]]})");
  const json good = invoke({"locally-free", orthant}).report();

  json wrong_verdict = good;
  wrong_verdict["locally_free"] = false;
  EXPECT_EQ(invoke({"recheck", write_json("r1.json", wrong_verdict)}).code, kExitNo);

  json wrong_cert = good;
  wrong_cert["certificate"][0]["weight"] = json::parse("[1,1]");
  auto r2 = invoke({"recheck", write_json("r2.json", wrong_cert)});
  EXPECT_EQ(r2.code, kExitNo);
  EXPECT_NE(r2.err.find("certificate rejected"), std::string::npos) << r2.err;

  json no_cert = good;
  no_cert.erase("certificate");
  EXPECT_EQ(invoke({"recheck", write_json("r3.json", no_cert)}).code, kExitNo);

  json foreign = good;
  foreign["tool"] = "something-else";
  EXPECT_EQ(invoke({"recheck", write_json("r4.json", foreign)}).code, kExitError);
  EXPECT_EQ(invoke({"recheck", write("r5.json", "{nope")}).code, kExitError);

  const auto p2 = write("p2.json", R"({"rank":2,"cones":[[[1,0],[0,1]],[[0,1],[-1,-1]],[[-1,-1],[1,0]]]})");
  json fan = invoke({"verify", p2}).report();
  fan["cones"].erase(fan["cones"].begin());
  EXPECT_EQ(invoke({"recheck", write_json("r6.json", fan)}).code, kExitNo);
}

TEST_F(CliTest, SweepAndGenerate) {
  auto sw = invoke({"sweep", "--rank", "3", "--bound", "4", "--count", "200", "--seed", "9"});
  ASSERT_EQ(sw.code, kExitYes) << sw.err;
  const json r = sw.report();
  EXPECT_EQ(r["count"], 200);
  EXPECT_EQ(r["agreements"], 200);
  EXPECT_EQ(r["disagreements"], json::array());
  EXPECT_EQ(r["rng"], "mt19937_64");
  EXPECT_EQ(r["seed"], 9);
  for (const char* key : {"smooth_rate", "elapsed", "rank", "bound"}) EXPECT_TRUE(r.contains(key)) << key;
  EXPECT_EQ(invoke({"recheck", write("sweep.json", sw.out)}).code, kExitYes);

  auto gen = invoke({"generate", "--seed", "42", "--count", "5", "--rank", "3"});
  ASSERT_EQ(gen.code, kExitYes);
  GeneratorConfig cfg;
  cfg.rank = 3;
  cfg.seed = 42;
  ConeGenerator expected(cfg);
  std::istringstream lines(gen.out);
  std::string line;
  std::size_t index = 0;
  while (std::getline(lines, line)) {
    const json doc = json::parse(line);
    EXPECT_EQ(parse_document(doc), Document(expected.next()));
    EXPECT_EQ(doc["source"]["index"], index++);
    EXPECT_EQ(doc["source"]["seed"], 42);
  }
  EXPECT_EQ(index, 5u);
}

TEST_F(CliTest, UsageErrors) {
  const auto orthant = write("o.json", R"({"rank":2,"generators":[[1,0],[0,1]]})");
  EXPECT_EQ(invoke({}).code, kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({"smooth"}).code, kExitError);
  EXPECT_EQ(invoke({"smooth", (dir_ / "missing.json").string()}).code, kExitError);
  EXPECT_EQ(invoke({"smooth", orthant, "--format", "xml"}).code, kExitError);
  EXPECT_EQ(invoke({"sweep", "--rank", "9"}).code, kExitError);
  EXPECT_EQ(invoke({"sweep", "--count", "ten"}).code, kExitError);
  EXPECT_EQ(invoke({"sections", orthant, "--ray", "1,0"}).code, kExitError);
  EXPECT_EQ(invoke({"sections", orthant, "--ray", "1,1", "--weight", "0,0"}).code, kExitError);
  EXPECT_EQ(invoke({"sections", orthant, "--ray", "1,0", "--weight", "0,x"}).code, kExitError);
  EXPECT_EQ(invoke({"sections", orthant, "--ray", "1,0", "--weight", "0,0,0"}).code, kExitError);
  EXPECT_EQ(invoke({"example", "nope"}).code, kExitError);
  EXPECT_EQ(invoke({"--help"}).code, kExitYes);
  EXPECT_EQ(invoke({"--version"}).code, kExitYes);
}

TEST_F(CliTest, ExampleCommandMatchesCorpus) {
  const json list = invoke({"example"}).report()["examples"];
  ASSERT_EQ(list.size(), named_examples().size());
  for (const auto& entry : list) {
    const auto one = invoke({"example", entry["name"].get<std::string>()});
    ASSERT_EQ(one.code, kExitYes);
    const auto ex = find_named_example(entry["name"].get<std::string>());
    EXPECT_EQ(parse_document(one.report()), std::visit([](const auto& x) { return Document(x); }, ex->object));
  }
}

}  // namespace
}  // namespace toric::cli
