#include "lyu/script.hpp"

#include <cctype>
#include <map>
#include <set>

#include "lyu/constructions.hpp"
#include "lyu/error.hpp"

namespace lyu {

namespace {

std::string where(const std::string& file, Pos p) {
  return file + ":" + std::to_string(p.line) + ":" + std::to_string(p.col);
}

}  // namespace

std::string to_string(ScriptError::Kind k) {
  switch (k) {
    case ScriptError::Kind::Lexical: return "lexical error";
    case ScriptError::Kind::Syntax: return "syntax error";
    case ScriptError::Kind::UndefinedIdentifier: return "undefined identifier";
    case ScriptError::Kind::Arity: return "arity mismatch";
    case ScriptError::Kind::Redefinition: return "redefinition";
  }
  return "error";
}

ScriptError::ScriptError(Kind kind, Pos pos, std::string token, const std::string& message, const std::string& file)
    : InputError(where(file, pos) + ": " + to_string(kind) + ": " + message +
                 (token.empty() ? "" : " (at '" + token + "')")),
      kind_(kind),
      pos_(pos),
      token_(std::move(token)) {}

namespace {

struct Token {
  enum class Type { Ident, Int, Punct, End };
  Type type = Type::End;
  std::string text;
  long value = 0;
  Pos pos;
};

std::vector<Token> lex(const std::string& src, const std::string& file) {
  std::vector<Token> out;
  Pos p;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++p.line;
        p.col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++p.col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Token::Type::Ident, src.substr(i, j - i), 0, p});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      std::string digits = src.substr(i, j - i);
      if (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        // "2e1" is almost certainly a missing space.
        std::size_t k = j;
        while (k < src.size() && std::isalnum(static_cast<unsigned char>(src[k]))) ++k;
        throw ScriptError(ScriptError::Kind::Lexical, p, src.substr(i, k - i),
                          "a number must be separated from the following name", file);
      }
      if (digits.size() > 9) throw ScriptError(ScriptError::Kind::Lexical, p, digits, "integer literal too large", file);
      out.push_back({Token::Type::Int, digits, std::stol(digits), p});
      advance(j - i);
    } else if (std::string("()=,;+-*").find(c) != std::string::npos) {
      out.push_back({Token::Type::Punct, std::string(1, c), 0, p});
      advance(1);
    } else {
      std::size_t j = i + 1;
      while (j < src.size() && (static_cast<unsigned char>(src[j]) & 0xC0) == 0x80) ++j;
      throw ScriptError(ScriptError::Kind::Lexical, p, src.substr(i, j - i), "unexpected character", file);
    }
  }
  out.push_back({Token::Type::End, "", 0, p});
  return out;
}

enum class Param { Int, Object, Divisor };

const std::map<std::string, std::vector<Param>>& constructors() {
  static const std::map<std::string, std::vector<Param>> table = {
      {"P", {Param::Int}},
      {"P1xP1", {}},
      {"BlowupP2", {}},
      {"Curve", {Param::Int}},
      {"Product", {Param::Object, Param::Object}},
      {"NCUnion", {Param::Object, Param::Divisor}},
      {"NonEquidimX2", {Param::Int}},
      {"EquidimX2", {Param::Int, Param::Int}},
      {"PerverseProduct", {Param::Object, Param::Object}},
  };
  return table;
}

const std::set<std::string> kKeywords = {"let", "ample", "on", "report"};
const std::set<std::string> kDivisors = {"diagonal", "conic", "hyperplane"};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string file) : toks_(std::move(toks)), file_(std::move(file)) {}

  Script script() {
    Script s;
    s.file = file_;
    while (peek().type != Token::Type::End) s.statements.push_back(statement());
    return s;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::string file_;
  std::map<std::string, std::string> symbols_;  // name ↦ "object" | "ample"

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(at_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] void fail(ScriptError::Kind k, const Token& t, const std::string& msg) const {
    throw ScriptError(k, t.pos, t.type == Token::Type::End ? "end of input" : t.text, msg, file_);
  }

  bool is_punct(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).type == Token::Type::Punct && peek(ahead).text == s;
  }
  bool is_word(const std::string& s) const { return peek().type == Token::Type::Ident && peek().text == s; }

  void expect(const std::string& s) {
    if (!is_punct(s)) fail(ScriptError::Kind::Syntax, peek(), "expected '" + s + "'");
    take();
  }
  void expect_word(const std::string& s) {
    if (!is_word(s)) fail(ScriptError::Kind::Syntax, peek(), "expected '" + s + "'");
    take();
  }

  const Token& identifier(const std::string& what) {
    if (peek().type != Token::Type::Ident) fail(ScriptError::Kind::Syntax, peek(), "expected " + what);
    if (kKeywords.count(peek().text)) fail(ScriptError::Kind::Syntax, peek(), "keyword used as " + what);
    return take();
  }

  void define(const Token& t, const std::string& kind) {
    if (symbols_.count(t.text)) fail(ScriptError::Kind::Redefinition, t, "'" + t.text + "' is already defined");
    if (constructors().count(t.text) || kDivisors.count(t.text))
      fail(ScriptError::Kind::Syntax, t, "'" + t.text + "' is reserved");
    symbols_[t.text] = kind;
  }

  void require(const Token& t, const std::string& kind) const {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end()) fail(ScriptError::Kind::UndefinedIdentifier, t, "'" + t.text + "' is not defined");
    if (it->second != kind) fail(ScriptError::Kind::Syntax, t, "'" + t.text + "' is not an " + kind);
  }

  Statement statement() {
    const Token& head = peek();
    if (is_word("let")) return let_stmt();
    if (is_word("ample")) return ample_stmt();
    if (is_word("report")) return report_stmt();
    fail(ScriptError::Kind::Syntax, head, "expected 'let', 'ample' or 'report'");
  }

  Statement let_stmt() {
    Statement s;
    s.kind = Statement::Kind::Let;
    s.pos = take().pos;
    const Token& name = identifier("a name");
    expect("=");
    s.expr = expr();
    expect(";");
    define(name, "object");
    s.name = name.text;
    return s;
  }

  Statement ample_stmt() {
    Statement s;
    s.kind = Statement::Kind::Ample;
    s.pos = take().pos;
    const Token& name = identifier("an ample name");
    expect_word("on");
    const Token& target = identifier("an object name");
    require(target, "object");
    expect("=");
    s.ample = segre();
    expect(";");
    define(name, "ample");
    s.name = name.text;
    s.target = target.text;
    return s;
  }

  Statement report_stmt() {
    Statement s;
    s.kind = Statement::Kind::Report;
    s.pos = take().pos;
    const Token& kind = identifier("a report kind");
    if (kind.text != "table" && kind.text != "dependence" && kind.text != "parity")
      fail(ScriptError::Kind::Syntax, kind, "unknown report kind; expected 'table', 'dependence' or 'parity'");
    s.report_kind = kind.text;
    std::vector<Token> toks;
    while (!is_punct(";")) {
      if (peek().type == Token::Type::End) fail(ScriptError::Kind::Syntax, peek(), "expected ';'");
      if (is_punct(",")) {
        take();
        continue;
      }
      Arg a;
      a.pos = peek().pos;
      if (is_punct("-") && peek(1).type == Token::Type::Int) {
        take();
        a.kind = Arg::Kind::Int;
        a.value = -take().value;
      } else if (peek().type == Token::Type::Int) {
        a.kind = Arg::Kind::Int;
        a.value = take().value;
      } else if (peek().type == Token::Type::Ident) {
        const Token& t = take();
        if (!symbols_.count(t.text)) fail(ScriptError::Kind::UndefinedIdentifier, t, "'" + t.text + "' is not defined");
        a.kind = Arg::Kind::Name;
        a.name = t.text;
      } else {
        fail(ScriptError::Kind::Syntax, peek(), "unexpected token in report arguments");
      }
      toks.push_back(toks_[at_ - 1]);
      s.args.push_back(a);
    }
    take();

    // table X A [B …] | dependence X A B | parity X A B k0 j0
    const std::size_t n = s.args.size();
    const bool ok = s.report_kind == "table" ? n >= 2 : s.report_kind == "dependence" ? n == 3 : n == 5;
    if (!ok) {
      std::string want = s.report_kind == "table" ? "an object and at least one ample"
                         : s.report_kind == "dependence" ? "an object and two amples"
                                                         : "an object, two amples, k0 and j0";
      fail(ScriptError::Kind::Arity, kind, "report " + s.report_kind + " takes " + want + ", got " + std::to_string(n) +
                                               " argument" + (n == 1 ? "" : "s"));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const bool want_int = s.report_kind == "parity" && i >= 3;
      const Arg& a = s.args[i];
      Token t = toks[i];
      if (want_int) {
        if (a.kind != Arg::Kind::Int) fail(ScriptError::Kind::Syntax, t, "expected an integer");
      } else if (a.kind != Arg::Kind::Name) {
        fail(ScriptError::Kind::Syntax, t, i == 0 ? "expected an object name" : "expected an ample name");
      } else {
        require(t, i == 0 ? "object" : "ample");
      }
    }
    return s;
  }

  Expr expr() {
    const Token& head = peek();
    if (head.type != Token::Type::Ident) fail(ScriptError::Kind::Syntax, head, "expected a construction");
    auto it = constructors().find(head.text);
    if (it == constructors().end()) {
      if (symbols_.count(head.text)) fail(ScriptError::Kind::Syntax, head, "expected a construction, not a name");
      fail(ScriptError::Kind::UndefinedIdentifier, head, "unknown construction '" + head.text + "'");
    }
    take();
    Expr e;
    e.ctor = head.text;
    e.pos = head.pos;
    const auto& params = it->second;
    if (params.empty() && !is_punct("(")) return e;
    expect("(");
    std::vector<Token> arg_toks;
    if (!is_punct(")")) {
      for (;;) {
        arg_toks.push_back(peek());
        e.args.push_back(arg(params.size() > e.args.size() ? params[e.args.size()] : Param::Object));
        if (is_punct(",")) {
          take();
          continue;
        }
        break;
      }
    }
    if (!is_punct(")")) fail(ScriptError::Kind::Syntax, peek(), "expected ',' or ')'");
    if (e.args.size() != params.size())
      fail(ScriptError::Kind::Arity, head, e.ctor + " takes " + std::to_string(params.size()) + " argument" +
                                               (params.size() == 1 ? "" : "s") + ", got " + std::to_string(e.args.size()));
    take();
    for (std::size_t i = 0; i < params.size(); ++i) {
      const Arg& a = e.args[i];
      if (params[i] == Param::Int && a.kind != Arg::Kind::Int)
        fail(ScriptError::Kind::Syntax, arg_toks[i], "expected an integer");
      if (params[i] != Param::Int && a.kind == Arg::Kind::Int)
        fail(ScriptError::Kind::Syntax, arg_toks[i], "expected an object");
    }
    return e;
  }

  Arg arg(Param want) {
    Arg a;
    a.pos = peek().pos;
    if (peek().type == Token::Type::Int || (is_punct("-") && peek(1).type == Token::Type::Int)) {
      long sign = 1;
      if (is_punct("-")) take(), sign = -1;
      a.kind = Arg::Kind::Int;
      a.value = sign * take().value;
      return a;
    }
    const Token& t = peek();
    if (t.type != Token::Type::Ident) fail(ScriptError::Kind::Syntax, t, "expected an argument");
    if (constructors().count(t.text)) {
      a.kind = Arg::Kind::Expr;
      a.expr = std::make_shared<Expr>(expr());
      return a;
    }
    take();
    a.kind = Arg::Kind::Name;
    a.name = t.text;
    if (want == Param::Divisor && kDivisors.count(t.text)) return a;
    require(t, "object");
    return a;
  }

  AmpleSelection segre() {
    AmpleSelection s = factor();
    while (is_punct("*")) {
      take();
      s = AmpleSelection::segre(s, factor());
    }
    return s;
  }

  AmpleSelection factor() {
    if (is_punct("(")) {
      take();
      AmpleSelection s = segre();
      expect(")");
      return s;
    }
    LinearClass c;
    long sign = 1;
    if (is_punct("-")) take(), sign = -1;
    c.terms.push_back(term(sign));
    while (is_punct("+") || is_punct("-")) {
      sign = take().text == "+" ? 1 : -1;
      c.terms.push_back(term(sign));
    }
    return AmpleSelection::of(c);
  }

  std::pair<std::string, long> term(long sign) {
    long coeff = 1;
    if (peek().type == Token::Type::Int) {
      const Token& t = take();
      if (t.value == 0) fail(ScriptError::Kind::Syntax, t, "coefficients must be positive");
      coeff = t.value;
    }
    const Token& name = identifier("a class name");
    return {name.text, sign * coeff};
  }
};

struct Object {
  std::optional<SmoothAtom> atom;
  int curve_degree = 0;
  std::shared_ptr<const PerversePresentation> pres;
};

struct AmpleDecl {
  std::string target;
  AmpleSelection sel;
};

class Runner {
 public:
  Runner(const Script& s, const RunOptions& o) : script_(s), opts_(o) {}

  Report run() {
    Report r;
    r.file = script_.file;
    for (const auto& st : script_.statements) {
      try {
        step(st, r);
      } catch (const ScriptError&) {
        throw;
      } catch (const InternalInconsistency& e) {
        throw InternalInconsistency(context(st) + e.what());
      } catch (const InputError& e) {
        throw InputError(context(st) + e.what());
      }
    }
    return r;
  }

 private:
  const Script& script_;
  RunOptions opts_;
  std::map<std::string, Object> objects_;
  std::map<std::string, AmpleDecl> amples_;

  std::string context(const Statement& st) const {
    std::string what = st.kind == Statement::Kind::Let     ? "let " + st.name
                       : st.kind == Statement::Kind::Ample ? "ample " + st.name
                                                           : "report " + st.report_kind;
    return where(script_.file, st.pos) + ": in '" + what + "': ";
  }

  void step(const Statement& st, Report& r) {
    switch (st.kind) {
      case Statement::Kind::Let:
        objects_[st.name] = eval(st.expr);
        break;
      case Statement::Kind::Ample: {
        const Object& o = objects_.at(st.target);
        o.pres->ops(st.ample);
        amples_[st.name] = {st.target, st.ample};
        break;
      }
      case Statement::Kind::Report:
        r.items.push_back(report(st));
        break;
    }
  }

  static Object from_atom(SmoothAtom a) {
    Object o;
    o.pres = std::make_shared<PerversePresentation>(presentation_of_smooth(a));
    o.atom = std::move(a);
    return o;
  }

  static Object from_presentation(PerversePresentation p) {
    Object o;
    o.pres = std::make_shared<PerversePresentation>(std::move(p));
    return o;
  }

  Object value(const Arg& a) {
    if (a.kind == Arg::Kind::Expr) return eval(*a.expr);
    return objects_.at(a.name);
  }

  SubvarietyData divisor(const Arg& a, const SmoothAtom& y) {
    SubvarietyData sd;
    if (a.kind == Arg::Kind::Name && kDivisors.count(a.name) && !objects_.count(a.name)) {
      if (a.name == "diagonal") sd = diagonal_in_p1xp1();
      if (a.name == "conic") sd = conic_in_blowup();
      if (a.name == "hyperplane") {
        if (y.name().size() < 2 || y.name()[0] != 'P' || !std::isdigit(static_cast<unsigned char>(y.name()[1])))
          throw PreconditionError("hyperplane needs a projective space, got " + y.name());
        sd = hyperplane_in(y.dim());
      }
    } else {
      Object d = value(a);
      if (d.curve_degree == 0) throw PreconditionError("the divisor must be diagonal, conic, hyperplane or a Curve");
      sd = plane_curve_in_p2(d.curve_degree);
    }
    if (sd.ambient.name() != y.name())
      throw PreconditionError(sd.name + " lies in " + sd.ambient.name() + ", not in " + y.name());
    return sd;
  }

  Object eval(const Expr& e) {
    const auto& a = e.args;
    if (e.ctor == "P") {
      if (a[0].value < 1) throw PreconditionError("P(n) needs n >= 1");
      return from_atom(projective_space(static_cast<int>(a[0].value)));
    }
    if (e.ctor == "P1xP1") return from_atom(p1xp1());
    if (e.ctor == "BlowupP2") return from_atom(blowup_p2());
    if (e.ctor == "Curve") {
      if (a[0].value < 1) throw PreconditionError("Curve(d) needs a degree d >= 1");
      Object o = from_atom(plane_curve(static_cast<int>(a[0].value)));
      o.curve_degree = static_cast<int>(a[0].value);
      return o;
    }
    if (e.ctor == "Product") {
      Object x = value(a[0]), y = value(a[1]);
      if (!x.atom || !y.atom) throw PreconditionError("Product takes smooth atoms; use PerverseProduct otherwise");
      return from_atom(atom_product(*x.atom, *y.atom));
    }
    if (e.ctor == "NCUnion") {
      Object y = value(a[0]);
      if (!y.atom) throw PreconditionError("NCUnion needs a smooth atom");
      return from_presentation(nc_union(divisor(a[1], *y.atom)));
    }
    if (e.ctor == "NonEquidimX2") return from_presentation(nonequidim_x2(static_cast<int>(a[0].value)));
    if (e.ctor == "EquidimX2")
      return from_presentation(equidim_x2(static_cast<int>(a[0].value), static_cast<int>(a[1].value)));
    if (e.ctor == "PerverseProduct") {
      Object x = value(a[0]), y = value(a[1]);
      return from_presentation(perverse_product(*x.pres, *y.pres));
    }
    throw UnsupportedError("unknown construction " + e.ctor);
  }

  const AmpleDecl& ample_on(const std::string& name, const std::string& object) const {
    const AmpleDecl& d = amples_.at(name);
    if (d.target != object) throw PreconditionError(name + " is declared on " + d.target + ", not on " + object);
    return d;
  }

  ReportItem report(const Statement& st) {
    ReportItem it;
    it.kind = st.report_kind;
    it.pos = st.pos;
    it.object = st.args[0].name;
    const PerversePresentation& p = *objects_.at(it.object).pres;
    it.pure = p.pure;
    it.metadata = p.metadata;
    it.parameters = p.parameters;
    const std::size_t namb = st.report_kind == "table" ? st.args.size() - 1 : 2;
    std::vector<AmpleSelection> sels;
    for (std::size_t i = 1; i <= namb; ++i) {
      sels.push_back(ample_on(st.args[i].name, it.object).sel);
      it.ample_names.push_back(st.args[i].name);
      it.ample_classes.push_back(sels.back().to_string());
    }
    if (st.report_kind == "table") {
      for (const auto& s : sels) it.tables.push_back(lambda_table(p, s, opts_.krange, opts_.jrange));
    } else if (st.report_kind == "dependence") {
      it.dependence = dependence_report(p, sels[0], sels[1], opts_.krange, opts_.jrange);
      it.tables = {it.dependence->table_a, it.dependence->table_b};
    } else {
      it.parity = parity_report(p, sels[0], sels[1], static_cast<int>(st.args[3].value),
                                static_cast<int>(st.args[4].value));
    }
    if (opts_.audit) {
      it.audits = audit_presentation(p);
      for (std::size_t i = 0; i < sels.size(); ++i)
        for (const auto& [j, op] : p.ops(sels[i]))
          it.audits.push_back({"rank-nullity: " + it.ample_names[i] + " on piece " + std::to_string(j),
                               rank_nullity_holds(op)});
      std::string failed;
      for (const auto& a : it.audits)
        if (!a.passed) failed += "\n  " + a.name;
      if (!failed.empty()) throw InternalInconsistency("audit failed for " + it.object + ":" + failed);
    }
    return it;
  }
};

}  // namespace

Script parse(const std::string& text, const std::string& file) { return Parser(lex(text, file), file).script(); }

Report run(const Script& s, const RunOptions& opts) { return Runner(s, opts).run(); }

}  // namespace lyu
