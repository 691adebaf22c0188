#include "tensordecomp/table.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tensordecomp/parallel.hpp"

namespace tensordecomp {

SymbolTable build_symbol_table(int k) {
  if (k < 0) throw std::invalid_argument("build_symbol_table: k must be nonnegative");
  SymbolTable table{k, enumerate(k), {}};
  const std::size_t count = table.partitions.size();
  std::vector<DecompSymbol> slots(count * count);
  parallel_for(slots.size(), [&](std::size_t idx) {
    slots[idx] = stable_symbol(table.partitions[idx / count], table.partitions[idx % count]);
  });
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    table.cells.emplace(std::pair{slots[idx].mu, slots[idx].nu}, std::move(slots[idx]));
  }
  return table;
}

std::string render_symbol(const DecompSymbol& symbol) {
  std::string out;
  for (const auto& [lambda, m] : symbol.entries) {
    if (!out.empty()) out += "+";
    if (m != 1) out += m.get_str() + "·";
    out += to_compact_string(lambda);
  }
  return out;
}

namespace {

const std::string kEmptySet = "∅";
const std::string kDot = "·";

// Parses the body of "(...)" in compact or comma notation.
Partition parse_compact_body(const std::string& body) {
  if (body.find(',') != std::string::npos) return parse_partition(body);
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < body.size()) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw std::invalid_argument("malformed diagram '(" + body + ")'");
    }
    const int part = body[i++] - '0';
    int count = 1;
    if (i < body.size() && body[i] == '^') {
      std::size_t j = ++i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      if (j == i) throw std::invalid_argument("missing exponent in '(" + body + ")'");
      count = std::stoi(body.substr(i, j - i));
      i = j;
    }
    if (part == 0) throw std::invalid_argument("zero part in '(" + body + ")'");
    parts.insert(parts.end(), count, part);
  }
  return Partition::from_parts(std::move(parts));
}

}  // namespace

std::map<Partition, BigInt> parse_symbol(const std::string& text) {
  std::map<Partition, BigInt> entries;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_spaces();
  if (pos == text.size()) return entries;
  while (true) {
    skip_spaces();
    BigInt coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      coeff = BigInt(text.substr(pos, end - pos));
      pos = end;
      skip_spaces();
      if (text.compare(pos, kDot.size(), kDot) == 0) {
        pos += kDot.size();
      } else if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        throw std::invalid_argument("expected '·' after coefficient in '" + text + "'");
      }
      skip_spaces();
    }
    Partition lambda;
    if (text.compare(pos, kEmptySet.size(), kEmptySet) == 0) {
      pos += kEmptySet.size();
    } else if (pos < text.size() && text[pos] == '(') {
      const std::size_t close = text.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in '" + text + "'");
      lambda = parse_compact_body(text.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else {
      throw std::invalid_argument("expected a diagram in '" + text + "'");
    }
    entries[lambda] += coeff;
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw std::invalid_argument("expected '+' in '" + text + "'");
    ++pos;
  }
  return entries;
}

std::string render_markdown(const SymbolTable& table) {
  std::ostringstream out;
  out << "| μ \\ ν |";
  for (const auto& nu : table.partitions) out << ' ' << to_compact_string(nu) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < table.partitions.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& mu : table.partitions) {
    out << "| " << to_compact_string(mu) << " |";
    for (const auto& nu : table.partitions) {
      const std::string cell = render_symbol(table.at(mu, nu));
      out << (cell.empty() ? " " : " " + cell + " ") << '|';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string tex_diagram(const Partition& p) {
  if (p.empty()) return "\\emptyset";
  return to_compact_string(p);
}

std::string tex_symbol(const DecompSymbol& symbol) {
  std::string out;
  for (const auto& [lambda, m] : symbol.entries) {
    if (!out.empty()) out += "+";
    if (m != 1) out += m.get_str() + "\\cdot";
    out += tex_diagram(lambda);
  }
  return out.empty() ? out : "$" + out + "$";
}

}  // namespace

std::string render_tex(const SymbolTable& table) {
  std::ostringstream out;
  out << "\\begin{tabular}{|c|";
  for (std::size_t i = 0; i < table.partitions.size(); ++i) out << "c|";
  out << "}\n\\hline\n$\\mu\\backslash\\nu$";
  for (const auto& nu : table.partitions) out << "&$" << tex_diagram(nu) << "$";
  out << "\\\\\\hline\n";
  for (const auto& mu : table.partitions) {
    out << "$" << tex_diagram(mu) << "$";
    for (const auto& nu : table.partitions) out << "&" << tex_symbol(table.at(mu, nu));
    out << "\\\\\\hline\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

const std::map<std::pair<Partition, Partition>, std::string>& reference_table(int k) {
  using Cells = std::map<std::pair<Partition, Partition>, std::string>;
  static const Cells k3 = [] {
    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    return Cells{
        {{p3, p3}, "∅+(1)"},
        {{p21, p3}, "∅+2·(1)+(2)+(1^2)"},
        {{p21, p21}, "∅+2·(1)+(2)+(1^2)"},
        {{p111, p3}, "∅+(1)+(2)+(3)"},
        {{p111, p21}, "(1)+(2)+(1^2)+(2,1)"},
        {{p111, p111}, "(1^2)+(1^3)"},
    };
  }();
  static const Cells k4 = [] {
    const Partition p4{4}, p31{3, 1}, p22{2, 2}, p211{2, 1, 1}, p1111{1, 1, 1, 1};
    return Cells{
        {{p4, p4}, "∅+(1)"},
        {{p31, p4}, "∅+2·(1)+(2)+(1^2)"},
        {{p31, p31}, "∅+2·(1)+(2)+(1^2)"},
        {{p22, p4}, "∅+(1)+(2)"},
        {{p22, p31}, "(1)+(1^2)"},
        {{p22, p22}, "∅+(1)+(2)"},
        {{p211, p4}, "∅+2·(1)+2·(2)+(1^2)+(3)+(21)"},
        {{p211, p31}, "∅+3·(1)+3·(2)+3·(1^2)+(3)+2·(21)+(1^3)"},
        {{p211, p22}, "∅+2·(1)+2·(2)+(1^2)+(3)+(21)"},
        {{p211, p211}, "(1)+(2)+2·(1^2)+(21)+(1^3)"},
        {{p1111, p4}, "∅+(1)+(2)+(3)+(4)"},
        {{p1111, p31}, "(1)+(2)+(1^2)+(3)+(21)+(31)"},
        {{p1111, p22}, "(2)+(21)+(2^2)"},
        {{p1111, p211}, "(1^2)+(21)+(1^3)+(21^2)"},
        {{p1111, p1111}, "(1^3)+(1^4)"},
    };
  }();
  static const Cells none;
  if (k == 3) return k3;
  if (k == 4) return k4;
  return none;
}

std::vector<TableMismatch> compare_with_reference(const SymbolTable& table) {
  const auto& reference = reference_table(table.k);
  if (reference.empty()) {
    throw std::invalid_argument("no reference table for k = " + std::to_string(table.k));
  }
  std::vector<TableMismatch> out;
  for (const auto& mu : table.partitions) {
    for (const auto& nu : table.partitions) {
      const auto it = reference.find({mu, nu});
      const std::string expected = it == reference.end() ? "" : it->second;
      const DecompSymbol& actual = table.at(mu, nu);
      if (parse_symbol(expected) != actual.entries) {
        out.push_back({mu, nu, expected, render_symbol(actual)});
      }
    }
  }
  return out;
}

}  // namespace tensordecomp
