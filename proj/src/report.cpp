#include "lyu/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lyu {

namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, std::string>& conventions() {
  static const std::map<std::string, std::string> c = {
      {"degrees", "H_(j)^k = H^k(X, pH^{-j} DQ_X); for smooth X of dim d, H_(d)^k = H^{k+d}(X)(d)"},
      {"weights", "H^k of a smooth proper variety has weight k; the Tate twist (m) lowers weights by 2m"},
      {"lambda", "lambda_{k,j} = dim Coker(l on H_(j-1) at k) + dim Ker(l on H_(j-1) at k-1), k >= 2"},
      {"segre", "A * B acts as l_A (x) 1 + 1 (x) l_B"},
  };
  return c;
}

json table_json(std::size_t index, const ReportItem& it, std::size_t t) {
  const LyubeznikTable& tab = it.tables[t];
  json j;
  j["report"] = index;
  j["kind"] = it.kind;
  j["object"] = it.object;
  j["ample"] = it.ample_names[t];
  j["class"] = it.ample_classes[t];
  j["d"] = tab.d;
  j["k_range"] = {tab.krange.lo, tab.krange.hi};
  j["j_range"] = {tab.jrange.lo, tab.jrange.hi};
  j["entries"] = json::array();
  for (const auto& [kj, v] : tab.entries)
    j["entries"].push_back({{"k", kj.first}, {"j", kj.second}, {"lambda", v}, {"formula", tab.formula.at(kj)}});
  return j;
}

std::string emit_json(const Report& r) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["script"] = r.file;
  out["tables"] = json::array();
  out["diff"] = json::array();
  out["dependence"] = json::array();
  out["parity"] = json::array();
  json objects = json::object();
  bool audited = false;
  json audit = json::array();
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const ReportItem& it = r.items[i];
    for (std::size_t t = 0; t < it.tables.size(); ++t) out["tables"].push_back(table_json(i, it, t));
    if (it.dependence) {
      const DependenceReport& d = *it.dependence;
      for (const auto& df : d.diff)
        out["diff"].push_back({{"report", i},
                               {"object", it.object},
                               {"k", df.k},
                               {"j", df.j},
                               {"ample_a", it.ample_names[0]},
                               {"lambda_a", df.lambda_a},
                               {"ample_b", it.ample_names[1]},
                               {"lambda_b", df.lambda_b}});
      json dj = {{"report", i}, {"object", it.object}, {"ample_a", it.ample_names[0]},
                 {"ample_b", it.ample_names[1]}, {"verdict", d.verdict}};
      dj["converse_check"] = d.converse_check ? json(*d.converse_check) : json(nullptr);
      out["dependence"].push_back(dj);
    }
    if (it.parity) {
      const ParityReport& p = *it.parity;
      out["parity"].push_back({{"report", i},
                               {"object", it.object},
                               {"k0", p.k0},
                               {"j0", p.j0},
                               {"mu", {{it.ample_names[0], {{"odd", p.a.mu_odd}, {"even", p.a.mu_even}}},
                                       {it.ample_names[1], {{"odd", p.b.mu_odd}, {"even", p.b.mu_even}}}}},
                               {"delta_odd", p.delta_odd},
                               {"delta_even", p.delta_even},
                               {"g_E", p.g_E},
                               {"d_E", p.d_E},
                               {"delta2", p.delta2}});
    }
    if (!it.audits.empty()) audited = true;
    for (const auto& a : it.audits) audit.push_back({{"report", i}, {"check", a.name}, {"passed", a.passed}});
    if (!objects.contains(it.object)) {
      json o;
      o["pure"] = it.pure;
      o["conventions"] = json::object();
      for (const auto& [k, v] : it.metadata) o["conventions"][k] = v;
      o["parameters"] = json::object();
      for (const auto& [k, v] : it.parameters) o["parameters"][k] = v;
      objects[it.object] = o;
    }
  }
  if (audited) out["audit"] = audit;
  json meta;
  meta["conventions"] = json::object();
  for (const auto& [k, v] : conventions()) meta["conventions"][k] = v;
  meta["objects"] = objects;
  out["metadata"] = meta;
  return out.dump(2) + "\n";
}

std::string emit_csv(const Report& r) {
  std::ostringstream os;
  os << "k,j,ample,lambda\n";
  for (const auto& it : r.items)
    for (std::size_t t = 0; t < it.tables.size(); ++t)
      for (const auto& [kj, v] : it.tables[t].entries)
        os << kj.first << "," << kj.second << "," << it.ample_names[t] << "," << v << "\n";
  return os.str();
}

std::string pad(const std::string& s, std::size_t w) {
  std::size_t len = 0;
  for (unsigned char c : s) len += (c & 0xC0) != 0x80;
  return std::string(w > len ? w - len : 0, ' ') + s;
}

void text_table(std::ostringstream& os, const LyubeznikTable& t, const std::string& ample) {
  os << "  lambda_{k,j} for " << ample << "\n";
  const std::size_t w = 5;
  os << "  " << pad("k\\j", w);
  for (int j = t.jrange.lo; j <= t.jrange.hi; ++j) os << pad(std::to_string(j), w);
  os << "\n";
  for (int k = t.krange.lo; k <= t.krange.hi; ++k) {
    os << "  " << pad(std::to_string(k), w);
    for (int j = t.jrange.lo; j <= t.jrange.hi; ++j) {
      auto v = t.at(k, j);
      os << pad(v ? std::to_string(*v) : "n/a", w);
    }
    os << "\n";
  }
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.items.size(); ++i) {
    const ReportItem& it = r.items[i];
    if (i) os << "\n";
    os << "report " << it.kind << " " << it.object << "  (" << r.file << ":" << it.pos.line << ")\n";
    os << "  " << (it.pure ? "pure" : "not pure") << "\n";
    for (std::size_t a = 0; a < it.ample_names.size(); ++a)
      os << "  " << it.ample_names[a] << " = " << it.ample_classes[a] << "\n";
    for (std::size_t t = 0; t < it.tables.size(); ++t) {
      os << "\n";
      text_table(os, it.tables[t], it.ample_names[t]);
    }
    if (it.dependence) {
      const DependenceReport& d = *it.dependence;
      os << "\n  verdict: "
         << (d.verdict ? "lambda depends on the ample class" : "no dependence in this range") << "\n";
      for (const auto& df : d.diff)
        os << "  differs at (k,j) = (" << df.k << "," << df.j << "): " << it.ample_names[0] << " " << df.lambda_a
           << ", " << it.ample_names[1] << " " << df.lambda_b << "\n";
      if (d.converse_check) os << "  kernel/cokernel sums differ exactly where lambda does\n";
    }
    if (it.parity) {
      const ParityReport& p = *it.parity;
      os << "\n  k0 = " << p.k0 << ", j0 = " << p.j0 << "\n";
      os << "  " << it.ample_names[0] << ": mu_odd = " << p.a.mu_odd << ", mu_even = " << p.a.mu_even << "\n";
      os << "  " << it.ample_names[1] << ": mu_odd = " << p.b.mu_odd << ", mu_even = " << p.b.mu_even << "\n";
      os << "  delta_odd = " << p.delta_odd << ", delta_even = " << p.delta_even << "  (g_E = " << p.g_E
         << ", d_E = " << p.d_E << ", delta2 = " << p.delta2 << ")\n";
    }
    if (!it.audits.empty()) {
      std::size_t ok = std::count_if(it.audits.begin(), it.audits.end(), [](const AuditLine& a) { return a.passed; });
      os << "\n  audit: " << ok << "/" << it.audits.size() << " passed\n";
      for (const auto& a : it.audits) os << "    [" << (a.passed ? "ok" : "FAILED") << "] " << a.name << "\n";
    }
    if (!it.metadata.empty() || !it.parameters.empty()) {
      os << "\n  conventions:\n";
      for (const auto& [k, v] : it.metadata) os << "    " << k << ": " << v << "\n";
      for (const auto& [k, v] : it.parameters) os << "    " << k << " = " << v << "\n";
    }
  }
  return os.str();
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InputError("unknown format '" + s + "'; expected text, json or csv");
}

std::string emit(const Report& r, Format f) {
  switch (f) {
    case Format::Json: return emit_json(r);
    case Format::Csv: return emit_csv(r);
    case Format::Text: return emit_text(r);
  }
  return {};
}

}  // namespace lyu
