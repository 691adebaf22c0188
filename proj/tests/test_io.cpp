#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "tensordecomp/io.hpp"
#include "tensordecomp/table.hpp"

using namespace tensordecomp;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tensordecomp-tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("SymFunc JSON round trip") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> basis_pick(0, 2), num(-9, 9), den(1, 7), deg(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    SymFunc f(static_cast<Basis>(basis_pick(rng)));
    for (int t = 0; t < 5; ++t) {
      f.add_term(oracles::random_partition(deg(rng), rng), Rational(num(rng), den(rng)));
    }
    const auto j = io::symfunc_json(f);
    CHECK(io::symfunc_from_json(j) == f);
    CHECK(io::symfunc_from_json(io::Json::parse(j.dump())) == f);
  }
  CHECK(io::symfunc_json(SymFunc(Basis::Schur)).dump() == R"({"basis":"schur","terms":[]})");
}

TEST_CASE("malformed SymFunc JSON is rejected") {
  const char* bad[] = {
      R"({"terms":[]})",
      R"({"basis":"monomial","terms":[]})",
      R"({"basis":"schur","terms":[{"partition":[1,2],"coeff":"1"}]})",
      R"({"basis":"schur","terms":[{"partition":[2],"coeff":"x"}]})",
      R"({"basis":"schur","terms":[{"partition":[2],"coeff":"0"}]})",
      R"({"basis":"schur","terms":[{"partition":[2],"coeff":"1"},{"partition":[2],"coeff":"2"}]})",
      R"({"basis":"schur","terms":[{"partition":[2.5],"coeff":"1"}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::symfunc_from_json(io::Json::parse(text)), std::invalid_argument);
  }
}

TEST_CASE("plethysm cache persists and reloads") {
  clear_symfunc_caches();
  const SymFunc a = schur_plethysm_h({2, 1}, 2);
  const SymFunc b = schur_plethysm_h({3}, 2);
  const auto before = plethysm_cache_entries();
  REQUIRE(before.size() >= 2);

  const fs::path path = scratch("cache.json");
  io::save_cache(path);
  CHECK(fs::exists(path));
  CHECK_FALSE(fs::exists(fs::path(path.string() + ".tmp")));

  clear_symfunc_caches();
  CHECK(plethysm_cache_entries().empty());
  std::string warning;
  CHECK(io::load_cache(path, warning) == before.size());
  CHECK(warning.empty());
  const auto after = plethysm_cache_entries();
  REQUIRE(after.size() == before.size());
  for (std::size_t i = 0; i < after.size(); ++i) {
    CHECK(after[i].outer == before[i].outer);
    CHECK(after[i].inner_degree == before[i].inner_degree);
    CHECK(after[i].value == before[i].value);
  }
  CHECK(schur_plethysm_h({2, 1}, 2) == a);
  CHECK(schur_plethysm_h({3}, 2) == b);
}

TEST_CASE("broken cache files load nothing and warn") {
  std::string warning;
  CHECK(io::load_cache(scratch("missing.json"), warning) == 0);
  CHECK(warning.empty());

  const auto write = [](const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
  };
  const fs::path path = scratch("corrupt.json");
  const std::string cases[] = {
      "{not json",
      R"({"schema":"other","entries":{}})",
      // Key does not match the entry.
      R"({"schema":"tensor-decomp-cache/1","entries":{"plethysm:s2[h3]":
         {"outer":[2],"inner_h":2,"value":{"basis":"schur","terms":[{"partition":[4],"coeff":"1"}]}}}})",
      // Wrong degree.
      R"({"schema":"tensor-decomp-cache/1","entries":{"plethysm:s2[h2]":
         {"outer":[2],"inner_h":2,"value":{"basis":"schur","terms":[{"partition":[3],"coeff":"1"}]}}}})",
  };
  for (const auto& text : cases) {
    clear_symfunc_caches();
    write(path, text);
    warning.clear();
    CHECK(io::load_cache(path, warning) == 0);
    CHECK_FALSE(warning.empty());
    CHECK(plethysm_cache_entries().empty());
  }
}

TEST_CASE("symbol text") {
  DecompSymbol s{3, {2, 1}, {2, 1}, {}};
  s.entries[Partition{}] = 1;
  s.entries[Partition{1}] = 2;
  s.entries[Partition{2}] = 1;
  s.entries[Partition{1, 1}] = 1;
  CHECK(render_symbol(s) == "∅+2·(1)+(2)+(1^2)");
  CHECK(parse_symbol("∅+2·(1)+(2)+(1^2)") == s.entries);
  CHECK(parse_symbol("∅ + 2*(1) + (2) + (1,1)") == s.entries);
  CHECK(parse_symbol("(21)") == std::map<Partition, BigInt>{{Partition{2, 1}, 1}});
  CHECK(parse_symbol("").empty());
  CHECK(render_symbol(DecompSymbol{3, {3}, {2, 1}, {}}).empty());
  CHECK_THROWS_AS(parse_symbol("(2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("2·"), std::invalid_argument);

  for (int k = 1; k <= 4; ++k) {
    const auto table = build_symbol_table(k);
    for (const auto& [key, symbol] : table.cells) {
      CHECK(parse_symbol(render_symbol(symbol)) == symbol.entries);
    }
  }
}

TEST_CASE("table rendering") {
  const auto table = build_symbol_table(2);
  const std::string md = render_markdown(table);
  CHECK(md.find("| μ \\ ν |") != std::string::npos);
  CHECK(md.find("(1^2)") != std::string::npos);
  const std::string tex = render_tex(table);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("\\emptyset") != std::string::npos);

  const auto j = io::table_json(table);
  CHECK(j.at("k") == 2);
  CHECK(j.at("rows").size() == 2);
  CHECK(io::table_json(build_symbol_table(2)).dump() == j.dump());
}

TEST_CASE("decomposition JSON") {
  const auto rep = compute_rho({1, 1}, {2}, 4);
  const auto j = io::decomposition_json(rep);
  CHECK(j.dump() ==
        R"({"group_degree":4,"components":[{"partition":[4],"mult":1},{"partition":[3,1],"mult":1},)"
        R"({"partition":[2,2],"mult":1}],"dimension":"6"})");
}
