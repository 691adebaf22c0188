#include "tensordecomp/io.hpp"

#include <fstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace tensordecomp::io {

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Json symfunc_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) {
    terms.push_back({{"partition", partition_json(p)}, {"coeff", c.get_str()}});
  }
  return {{"basis", std::string(basis_name(f.basis()))}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const Json& j) {
  try {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms")) {
      const Partition p = partition_from_json(term.at("partition"));
      if (f.terms().contains(p)) throw std::invalid_argument("duplicate term " + to_string(p));
      const Rational c = parse_rational(term.at("coeff").get<std::string>());
      if (c == 0) throw std::invalid_argument("zero coefficient stored");
      f.add_term(p, c);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed SymFunc JSON: ") + e.what());
  }
}

Json mults_json(const std::map<Partition, BigInt>& mults) {
  Json out = Json::array();
  for (const auto& [p, m] : mults) {
    Json entry{{"partition", partition_json(p)}};
    if (m.fits_slong_p()) {
      entry["mult"] = m.get_si();
    } else {
      entry["mult"] = m.get_str();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json decomposition_json(const RepDecomposition& rep) {
  return {{"group_degree", rep.group_degree()},
          {"components", mults_json(rep.mults())},
          {"dimension", rep.dimension().get_str()}};
}

Json symbol_json(const DecompSymbol& symbol) {
  return {{"k", symbol.k},
          {"mu", partition_json(symbol.mu)},
          {"nu", partition_json(symbol.nu)},
          {"entries", mults_json(symbol.entries)},
          {"text", render_symbol(symbol)}};
}

Json table_json(const SymbolTable& table) {
  Json rows = Json::array();
  for (const auto& mu : table.partitions) {
    Json cells = Json::array();
    for (const auto& nu : table.partitions) {
      const DecompSymbol& s = table.at(mu, nu);
      cells.push_back({{"nu", partition_json(nu)},
                       {"entries", mults_json(s.entries)},
                       {"text", render_symbol(s)}});
    }
    rows.push_back({{"mu", partition_json(mu)}, {"cells", std::move(cells)}});
  }
  return {{"k", table.k}, {"rows", std::move(rows)}};
}

Json identity_report_json(const IdentityReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"identity", c.name}, {"case", c.label}, {"passed", c.passed}};
    if (!c.passed) {
      entry["lhs"] = symfunc_json(c.lhs);
      entry["rhs"] = symfunc_json(c.rhs);
    }
    checks.push_back(std::move(entry));
  }
  return {{"n", report.n}, {"k", report.k}, {"passed", report.all_passed()}, {"checks", checks}};
}

Json suite_report_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"suite", c.suite}, {"check", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"passed", report.all_passed()},
          {"total", report.checks.size()},
          {"failed", report.failures()},
          {"checks", std::move(checks)}};
}


namespace {

std::string cache_key(const PlethysmEntry& e) {
  return "plethysm:s" + to_string(e.outer) + "[h" + std::to_string(e.inner_degree) + "]";
}

}  // namespace

void save_cache(const std::filesystem::path& path) {
  Json entries = Json::object();
  for (const auto& e : plethysm_cache_entries()) {
    entries[cache_key(e)] = {{"outer", partition_json(e.outer)},
                             {"inner_h", e.inner_degree},
                             {"value", symfunc_json(e.value)}};
  }
  const Json doc{{"schema", kCacheSchema}, {"entries", std::move(entries)}};

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::size_t load_cache(const std::filesystem::path& path, std::string& warning) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return 0;
  std::vector<PlethysmEntry> staged;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("unreadable");
    const Json doc = Json::parse(in);
    if (doc.at("schema") != kCacheSchema) throw std::runtime_error("unknown schema");
    for (const auto& [key, entry] : doc.at("entries").items()) {
      PlethysmEntry e{partition_from_json(entry.at("outer")), entry.at("inner_h").get<int>(),
                      symfunc_from_json(entry.at("value"))};
      if (e.inner_degree < 0 || cache_key(e) != key) throw std::runtime_error("bad key " + key);
      if (e.value.basis() != Basis::Schur) throw std::runtime_error("non-Schur entry " + key);
      for (int d : e.value.degrees()) {
        if (d != e.outer.size() * e.inner_degree) throw std::runtime_error("wrong degree in " + key);
      }
      staged.push_back(std::move(e));
    }
  } catch (const std::exception& e) {
    warning = "ignoring cache file " + path.string() + ": " + e.what();
    return 0;
  }
  for (const auto& e : staged) seed_plethysm_cache(e);
  return staged.size();
}

}  // namespace tensordecomp::io
