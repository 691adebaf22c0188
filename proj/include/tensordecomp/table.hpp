#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tensordecomp/decomp.hpp"

namespace tensordecomp {

/// All stable symbols for one valence k, rows mu and columns nu in
/// canonical partition order.
struct SymbolTable {
  int k = 0;
  std::vector<Partition> partitions;
  std::map<std::pair<Partition, Partition>, DecompSymbol> cells;  // (mu, nu)

  const DecompSymbol& at(const Partition& mu, const Partition& nu) const {
    return cells.at({mu, nu});
  }
};

SymbolTable build_symbol_table(int k);

/// "∅+2·(1)+(2)+(1^2)"; the empty symbol renders as "".
std::string render_symbol(const DecompSymbol& symbol);
/// Parses the render_symbol() format back into entries; throws
/// std::invalid_argument on malformed text.
std::map<Partition, BigInt> parse_symbol(const std::string& text);

std::string render_markdown(const SymbolTable& table);
std::string render_tex(const SymbolTable& table);

/// Reference symbol tables for k = 3 and k = 4, cell text keyed by
/// (mu, nu); cells absent from the map are zero.
const std::map<std::pair<Partition, Partition>, std::string>& reference_table(int k);

struct TableMismatch {
  Partition mu;
  Partition nu;
  std::string expected;
  std::string actual;
};

/// Cells where build_symbol_table(k) differs from reference_table(k).
std::vector<TableMismatch> compare_with_reference(const SymbolTable& table);

}  // namespace tensordecomp
