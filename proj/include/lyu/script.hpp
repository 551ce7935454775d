// script.hpp
//
// The construction-script language:
//
//   script  := stmt*
//   stmt    := "let" ID "=" expr ";"
//            | "ample" ID "on" ID "=" ampexpr ";"
//            | "report" kind arg* ";"
//   expr    := "P" "(" INT ")" | "P1xP1" | "BlowupP2" | "Curve" "(" INT ")"
//            | "Product" "(" obj "," obj ")" | "NCUnion" "(" obj "," divisor ")"
//            | "NonEquidimX2" "(" INT ")" | "EquidimX2" "(" INT "," INT ")"
//            | "PerverseProduct" "(" obj "," obj ")"
//   obj     := ID | expr
//   divisor := "diagonal" | "conic" | "hyperplane" | ID | "Curve" "(" INT ")"
//   ampexpr := segre ; segre := factor ("*" factor)*
//   factor  := "(" ampexpr ")" | ["-"] term (("+" | "-") term)*
//   term    := [INT] ID
//   kind    := "table" | "dependence" | "parity"
//
// `#` and `//` start comments that run to the end of the line.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lyu/error.hpp"
#include "lyu/lyubeznik.hpp"
#include "lyu/oracle.hpp"

namespace lyu {

struct Pos {
  int line = 1;
  int col = 1;
};

class ScriptError : public InputError {
 public:
  enum class Kind { Lexical, Syntax, UndefinedIdentifier, Arity, Redefinition };
  ScriptError(Kind kind, Pos pos, std::string token, const std::string& message, const std::string& file = "<input>");
  Kind kind() const { return kind_; }
  Pos pos() const { return pos_; }
  const std::string& token() const { return token_; }

 private:
  Kind kind_;
  Pos pos_;
  std::string token_;
};

std::string to_string(ScriptError::Kind k);

struct Expr;

struct Arg {
  enum class Kind { Int, Name, Expr };
  Kind kind = Kind::Int;
  long value = 0;
  std::string name;
  std::shared_ptr<const Expr> expr;
  Pos pos;
};

struct Expr {
  std::string ctor;
  std::vector<Arg> args;
  Pos pos;
};

struct Statement {
  enum class Kind { Let, Ample, Report };
  Kind kind = Kind::Let;
  Pos pos;
  std::string name;    ///< let / ample identifier
  std::string target;  ///< object of an ample declaration
  Expr expr;
  AmpleSelection ample;
  std::string report_kind;
  std::vector<Arg> args;
};

struct Script {
  std::string file;
  std::vector<Statement> statements;
};

/// Throws ScriptError.
Script parse(const std::string& text, const std::string& file = "<input>");

struct RunOptions {
  std::optional<Range> krange, jrange;
  bool audit = false;
};

struct ReportItem {
  std::string kind;
  Pos pos;
  std::string object;
  bool pure = false;
  std::vector<std::string> ample_names;
  std::vector<std::string> ample_classes;
  std::vector<LyubeznikTable> tables;
  std::optional<DependenceReport> dependence;
  std::optional<ParityReport> parity;
  std::map<std::string, std::string> metadata;
  std::map<std::string, long> parameters;
  std::vector<AuditLine> audits;
};

struct Report {
  std::string file;
  std::vector<ReportItem> items;
};

/// Errors from the modules are rethrown with the statement position.
Report run(const Script& s, const RunOptions& opts = {});

}  // namespace lyu
