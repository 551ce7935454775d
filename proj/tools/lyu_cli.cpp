// lyu: run a construction script and print Lyubeznik tables.
//
//   lyu [--format text|json|csv] [--k-range A..B] [--j-range A..B] [--audit] script.lyu
//
// Exit status: 0 on success, 1 on an input error, 2 when an internal audit fails.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "lyu/report.hpp"

namespace {

lyu::Range parse_range(const std::string& s, const std::string& flag) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw lyu::InputError(flag + ": expected A..B, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyubeznik numbers of cones from construction scripts"};
  std::string path, format = "text", krange, jrange;
  bool audit = false, seed_free = false;
  app.add_option("script", path, "script file, or - for standard input")->required();
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--k-range", krange, "k range A..B");
  app.add_option("--j-range", jrange, "j range A..B");
  app.add_flag("--audit", audit, "run exactness, Euler and rank-nullity audits");
  app.add_flag("--seed-free", seed_free, "reserved");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (seed_free) throw lyu::InputError("--seed-free is reserved: nothing in lyu is random");
    std::string text;
    if (path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      text = ss.str();
    } else {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw lyu::InputError("cannot read " + path);
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    lyu::RunOptions opts;
    if (!krange.empty()) opts.krange = parse_range(krange, "--k-range");
    if (!jrange.empty()) opts.jrange = parse_range(jrange, "--j-range");
    opts.audit = audit;
    lyu::Script s = lyu::parse(text, path == "-" ? "<stdin>" : path);
    std::cout << lyu::emit(lyu::run(s, opts), lyu::parse_format(format));
    return 0;
  } catch (const lyu::InternalInconsistency& e) {
    std::cerr << "lyu: internal inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const lyu::InputError& e) {
    std::cerr << "lyu: " << e.what() << "\n";
    return 1;
  }
}
