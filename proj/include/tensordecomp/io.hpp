#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "tensordecomp/decomp.hpp"
#include "tensordecomp/symfunc.hpp"
#include "tensordecomp/table.hpp"
#include "tensordecomp/verify.hpp"

namespace tensordecomp::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tensor-decomp/1";
inline constexpr const char* kCacheSchema = "tensor-decomp-cache/1";

Json partition_json(const Partition& p);
/// Accepts a JSON array of positive, weakly decreasing integers.
Partition partition_from_json(const Json& j);

/// {"basis":"schur","terms":[{"partition":[2,1],"coeff":"2"}]}
Json symfunc_json(const SymFunc& f);
/// Inverse of symfunc_json; throws std::invalid_argument on malformed input.
SymFunc symfunc_from_json(const Json& j);

/// [{"partition":[...],"mult":N}, ...] in canonical order.
Json mults_json(const std::map<Partition, BigInt>& mults);
Json decomposition_json(const RepDecomposition& rep);
Json symbol_json(const DecompSymbol& symbol);
Json table_json(const SymbolTable& table);
Json identity_report_json(const IdentityReport& report);
Json suite_report_json(const SuiteReport& report);

/// Persists the plethysm memo. Writes a temporary file next to `path` and
/// renames it over the target.
void save_cache(const std::filesystem::path& path);

/// Seeds the plethysm memo from `path`. Returns the number of entries
/// loaded. A missing file loads nothing; an unreadable or malformed file
/// loads nothing and fills `warning`.
std::size_t load_cache(const std::filesystem::path& path, std::string& warning);

}  // namespace tensordecomp::io
