#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lyu/error.hpp"
#include "lyu/report.hpp"
#include "lyu/script.hpp"

using namespace lyu;

namespace {

std::string demo(const std::string& name) {
  std::ifstream in(std::string(LYU_DEMO_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScriptError parse_error(const std::string& text) {
  try {
    parse(text, "t.lyu");
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("no error for: " << text);
  throw;
}

const char* kSmall =
    "let Y = P1xP1;\n"
    "ample A on Y = e1 + e2;\n"
    "ample B on Y = 2 e1 + e2;\n"
    "report table Y A B;\n";

}  // namespace

TEST_CASE("the demo scripts parse") {
  Script s = parse(demo("theorem1_nonequidim.lyu"), "theorem1_nonequidim.lyu");
  REQUIRE(s.statements.size() == 6);
  CHECK(s.statements[0].kind == Statement::Kind::Let);
  CHECK(s.statements[0].name == "X1");
  CHECK(s.statements[0].expr.ctor == "NCUnion");
  CHECK(s.statements[3].kind == Statement::Kind::Ample);
  CHECK(s.statements[3].target == "X");
  CHECK(s.statements[5].kind == Statement::Kind::Report);
  CHECK(s.statements[5].report_kind == "dependence");
  CHECK(s.statements[5].pos.line == 9);
  for (const char* f : {"qhm_invariance.lyu", "theorem1_equidim.lyu", "blowup_tables.lyu"})
    CHECK_NOTHROW(run(parse(demo(f), f)));
}

TEST_CASE("comments, commas and inline arguments") {
  Script s = parse(
      "// header\n"
      "let X = PerverseProduct(NCUnion(P1xP1, diagonal), NonEquidimX2(3)); # trailing\n"
      "ample L on X = ((e1 + e2)) * h;\n"
      "report table X, L;\n");
  CHECK(s.statements.size() == 3);
  Report r = run(s);
  REQUIRE(r.items.size() == 1);
  CHECK(*r.items[0].tables[0].at(2, 6) == 2);
}

TEST_CASE("syntax errors carry position") {
  ScriptError e = parse_error("let X = P(2;");
  CHECK(e.kind() == ScriptError::Kind::Syntax);
  CHECK(e.pos().line == 1);
  CHECK(e.pos().col == 12);
  CHECK(e.token() == ";");
  CHECK(std::string(e.what()).rfind("t.lyu:1:12:", 0) == 0);

  ScriptError missing = parse_error("let X = P(2)\nlet Y = P(1);");
  CHECK(missing.kind() == ScriptError::Kind::Syntax);
  CHECK(missing.pos().line == 2);
  CHECK(missing.pos().col == 1);
}

TEST_CASE("error kinds") {
  CHECK(parse_error("let X = P(2) $;").kind() == ScriptError::Kind::Lexical);
  CHECK(parse_error("let X = Q(2);").kind() == ScriptError::Kind::UndefinedIdentifier);
  CHECK(parse_error("let X = P(2, 3);").kind() == ScriptError::Kind::Arity);
  CHECK(parse_error("let X = EquidimX2(4);").kind() == ScriptError::Kind::Arity);
  CHECK(parse_error("report frobnicate X;").kind() == ScriptError::Kind::Syntax);
  CHECK(parse_error("let Y = P1xP1;\nample A on Y = 0 e1;").kind() == ScriptError::Kind::Syntax);

  auto run_error = [](const std::string& text) -> ScriptError {
    try {
      run(parse(text, "t.lyu"));
    } catch (const ScriptError& e) {
      return e;
    }
    FAIL("no error for: " << text);
    throw;
  };
  ScriptError undef = run_error("let X = P(2);\nreport table Z L;");
  CHECK(undef.kind() == ScriptError::Kind::UndefinedIdentifier);
  CHECK(undef.pos().line == 2);
  CHECK(run_error("let X = P(2);\nlet X = P(3);").kind() == ScriptError::Kind::Redefinition);
  CHECK(run_error("let X = P(2);\nlet Y = Product(X, Z);").kind() == ScriptError::Kind::UndefinedIdentifier);
}

TEST_CASE("run errors are input errors with a position") {
  auto message = [](const std::string& text) -> std::string {
    try {
      run(parse(text, "t.lyu"));
    } catch (const InternalInconsistency&) {
      FAIL("classified as internal: " << text);
    } catch (const InputError& e) {
      return e.what();
    }
    FAIL("no error for: " << text);
    return {};
  };
  std::string not_ample = message("let Y = P1xP1;\nample A on Y = e1;");
  CHECK(not_ample.find("t.lyu:2:") != std::string::npos);
  std::string wrong_object = message("let Y = P1xP1;\nlet Z = P(1);\nample A on Y = e1 + e2;\nreport table Z A;");
  CHECK(wrong_object.find("t.lyu:4:") != std::string::npos);
  std::string parity = message("let Y = P(2);\nample L on Y = h;\nreport parity Y L L 2 1;");
  CHECK(parity.find("t.lyu:3:") != std::string::npos);
}

TEST_CASE("JSON output is deterministic and versioned") {
  Script s = parse(demo("theorem1_nonequidim.lyu"), "theorem1_nonequidim.lyu");
  std::string a = emit(run(s), Format::Json);
  std::string b = emit(run(s), Format::Json);
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == 1);
  CHECK(j["script"] == "theorem1_nonequidim.lyu");
  REQUIRE(j["tables"].size() == 2);
  REQUIRE(j["diff"].size() == 1);
  CHECK(j["diff"][0]["k"] == 2);
  CHECK(j["diff"][0]["j"] == 6);
  CHECK(j["diff"][0]["lambda_a"] == 2);
  CHECK(j["diff"][0]["lambda_b"] == 1);
  CHECK(j["dependence"][0]["verdict"] == true);
  CHECK(j.contains("metadata"));
  for (const auto& e : j["tables"][0]["entries"]) CHECK(e["k"].get<int>() >= 2);
}

TEST_CASE("entries that are not defined are left out") {
  Script s = parse(demo("theorem1_nonequidim.lyu"), "d.lyu");
  RunOptions o;
  o.krange = Range{0, 1};
  Report r = run(s, o);
  auto j = nlohmann::json::parse(emit(r, Format::Json));
  for (const auto& t : j["tables"]) CHECK(t["entries"].empty());
  std::string csv = emit(r, Format::Csv);
  CHECK(csv == "k,j,ample,lambda\n");
  CHECK(emit(r, Format::Text).find("n/a") != std::string::npos);

  RunOptions bad;
  bad.krange = Range{2, 40};
  CHECK_THROWS_AS(run(s, bad), InputError);
}

TEST_CASE("CSV output") {
  Report r = run(parse(kSmall));
  std::string csv = emit(r, Format::Csv);
  CHECK(csv.rfind("k,j,ample,lambda\n", 0) == 0);
  CHECK(csv.find("3,3,A,1\n") != std::string::npos);
  CHECK(csv.find("3,3,B,1\n") != std::string::npos);
  CHECK(csv.find("2,3,A,0\n") != std::string::npos);
  CHECK(csv.find("0,1,A,") == std::string::npos);
  RunOptions o;
  o.krange = Range{0, 6};
  CHECK(emit(run(parse(kSmall), o), Format::Csv).find("0,1,A,0\n") != std::string::npos);
  CHECK(emit(r, Format::Csv) == csv);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
  CHECK(parse_format("csv") == Format::Csv);
}

TEST_CASE("audit mode adds passing lines") {
  RunOptions o;
  o.audit = true;
  Report r = run(parse(demo("theorem1_equidim.lyu"), "e.lyu"), o);
  bool any = false;
  for (const auto& item : r.items)
    for (const auto& a : item.audits) {
      any = true;
      CHECK(a.passed);
    }
  CHECK(any);
}
