#include "tensordecomp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tensordecomp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(std::span<const int> mults) {
  std::vector<int> parts;
  for (int i = static_cast<int>(mults.size()); i >= 1; --i) {
    if (mults[i - 1] < 0) throw std::invalid_argument("negative multiplicity");
    parts.insert(parts.end(), mults[i - 1], i);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 0 : parts_.front(), 0);
  for (int part : parts_) ++m[part - 1];
  return m;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic: the larger first part sorts first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

bool dominates(const Partition& upper, const Partition& lower) {
  if (upper.size() != lower.size()) {
    throw std::invalid_argument("dominance is only defined between partitions of the same size");
  }
  int su = 0;
  int sl = 0;
  const std::size_t len = std::max(upper.length(), lower.length());
  for (std::size_t j = 0; j < len; ++j) {
    su += upper[j];
    sl += lower[j];
    if (su < sl) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(p.empty() ? 0 : p.parts().front(), 0);
  for (int part : p.parts()) {
    for (int c = 0; c < part; ++c) ++cols[c];
  }
  return Partition(std::move(cols));
}

BigInt dim(const Partition& p) {
  const Partition pc = conjugate(p);
  BigInt hooks = 1;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      hooks *= (p[i] - j - 1) + (pc[j] - i - 1) + 1;
    }
  }
  BigInt out = factorial(static_cast<unsigned long>(p.size())) / hooks;
  return out;
}

FrobeniusCoordinates frobenius(const Partition& p) {
  const Partition pc = conjugate(p);
  FrobeniusCoordinates f;
  for (int i = 0; p[i] > i; ++i) {
    f.arms.push_back(p[i] - i - 1);
    f.legs.push_back(pc[i] - i - 1);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoordinates& coords) {
  const auto& a = coords.arms;
  const auto& b = coords.legs;
  if (a.size() != b.size()) throw std::invalid_argument("arms and legs differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("negative Frobenius coordinate");
    if (i > 0 && (a[i] >= a[i - 1] || b[i] >= b[i - 1])) {
      throw std::invalid_argument("Frobenius coordinates must be strictly decreasing");
    }
  }
  const int d = static_cast<int>(a.size());
  std::vector<int> rows;
  for (int i = 0; i < d; ++i) rows.push_back(a[i] + i + 1);
  // Below the Durfee square, row r meets column j (< d) iff that column reaches it.
  const int depth = d == 0 ? 0 : b[0] + 1;
  for (int r = d; r < depth; ++r) {
    int len = 0;
    for (int j = 0; j < d; ++j) {
      if (b[j] + j + 1 > r) ++len;
    }
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

bool horizontal_strip(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < outer.length(); ++i) {
    if (inner[i] > outer[i]) return false;
    if (outer[i + 1] > inner[i]) return false;
  }
  return true;
}

namespace {

void strips_into(const Partition& inner, std::size_t row, int left, std::vector<int>& rows,
                 std::vector<Partition>& out) {
  if (row > static_cast<std::size_t>(inner.length())) {
    if (left == 0) out.emplace_back(rows);
    return;
  }
  // Row `row` may grow up to the original length of the row above.
  const int base = inner[row];
  const int cap = row == 0 ? base + left : std::min(inner[row - 1], base + left);
  for (int len = cap; len >= base; --len) {
    rows.push_back(len);
    strips_into(inner, row + 1, left - (len - base), rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strip(const Partition& inner, int cells) {
  if (cells < 0) throw std::invalid_argument("add_horizontal_strip: negative cell count");
  std::vector<Partition> out;
  std::vector<int> rows;
  strips_into(inner, 0, cells, rows, out);
  return out;
}

Partition remove_first_row(const Partition& p) {
  if (p.empty()) return p;
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

Partition prepend_row(const Partition& p, int n) {
  const int first = n - p.size();
  if (first < p[0]) throw std::invalid_argument("prepend_row: n too small for " + to_string(p));
  std::vector<int> parts{first};
  parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (int part : p.parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(part);
  }
  return s;
}

std::string to_compact_string(const Partition& p) {
  if (p.empty()) return "∅";
  const bool separate = p[0] >= 10;
  std::string s = "(";
  for (int i = 0; i < p.length();) {
    int j = i;
    while (j < p.length() && p[j] == p[i]) ++j;
    if (separate && i > 0) s += ',';
    s += std::to_string(p[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s + ")";
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty() || body == "0" || body == "∅") return {};
  std::vector<int> parts;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view token = trim(body.substr(0, comma));
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      const int part = parse_int(token, text);
      if (part == 0) throw std::invalid_argument("zero part in '" + std::string(text) + "'");
      parts.push_back(part);
    } else {
      const int part = parse_int(trim(token.substr(0, caret)), text);
      const int count = parse_int(trim(token.substr(caret + 1)), text);
      if (part == 0) throw std::invalid_argument("zero part in '" + std::string(text) + "'");
      parts.insert(parts.end(), count, part);
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Partition::from_parts(std::move(parts));
}

}  // namespace tensordecomp
