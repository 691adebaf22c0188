#include "tensordecomp/symfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tensordecomp/characters.hpp"
#include "tensordecomp/parallel.hpp"

namespace tensordecomp {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::Schur:
      return "schur";
    case Basis::PowerSum:
      return "powersum";
    case Basis::Homogeneous:
      return "homogeneous";
  }
  return "unknown";
}

Basis parse_basis(std::string_view name) {
  if (name == "schur") return Basis::Schur;
  if (name == "powersum") return Basis::PowerSum;
  if (name == "homogeneous") return Basis::Homogeneous;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// SymFunc value type

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [p, c] : terms) add_term(p, c);
}

SymFunc SymFunc::element(Basis basis, const Partition& p, const Rational& c) {
  SymFunc f(basis);
  f.add_term(p, c);
  return f;
}

SymFunc SymFunc::constant(const Rational& c, Basis basis) { return element(basis, Partition{}, c); }

Rational SymFunc::coeff(const Partition& p) const {
  if (auto it = terms_.find(p); it != terms_.end()) return it->second;
  return 0;
}

std::vector<int> SymFunc::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_) {
    if (out.empty() || out.back() != p.size()) out.push_back(p.size());
  }
  return out;
}

SymFunc SymFunc::degree_part(int degree) const {
  SymFunc out(basis_);
  for (const auto& [p, c] : terms_) {
    if (p.size() == degree) out.terms_.emplace(p, c);
  }
  return out;
}

void SymFunc::add_term(const Partition& p, const Rational& c) {
  Rational value = c;
  value.canonicalize();
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymFunc::require_same_basis(const SymFunc& other) const {
  if (basis_ != other.basis_) {
    throw std::invalid_argument("SymFunc arithmetic across bases (" +
                                std::string(basis_name(basis_)) + " vs " +
                                std::string(basis_name(other.basis_)) + "); convert first");
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_same_basis(other);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  require_same_basis(other);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

SymFunc schur(const Partition& p) { return SymFunc::element(Basis::Schur, p); }
SymFunc power_sum(const Partition& p) { return SymFunc::element(Basis::PowerSum, p); }
SymFunc homogeneous(const Partition& p) { return SymFunc::element(Basis::Homogeneous, p); }

SymFunc complete(int r) {
  if (r < 0) return SymFunc(Basis::Homogeneous);
  return homogeneous(r == 0 ? Partition{} : Partition{r});
}

// ---------------------------------------------------------------------------
// Power-sum arithmetic

namespace {

using Terms = SymFunc::Terms;

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Terms multiply_power_sums(const Terms& a, const Terms& b, std::optional<int> max_degree) {
  SymFunc out(Basis::PowerSum);
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      if (max_degree && pa.size() + pb.size() > *max_degree) continue;
      out.add_term(merge(pa, pb), ca * cb);
    }
  }
  return out.terms();
}

// p_n[g] for g in the power-sum basis: every p_a becomes p_{n*a}.
Terms scale_power_sums(const Terms& g, int n, std::optional<int> max_degree) {
  Terms out;
  for (const auto& [p, c] : g) {
    if (max_degree && p.size() * n > *max_degree) continue;
    std::vector<int> parts = p.parts();
    for (int& part : parts) part *= n;
    out.emplace(Partition(std::move(parts)), c);
  }
  return out;
}

MemoCache<Partition, Terms>& schur_to_p_cache() {
  static MemoCache<Partition, Terms> cache;
  return cache;
}
MemoCache<Partition, Terms>& p_to_schur_cache() {
  static MemoCache<Partition, Terms> cache;
  return cache;
}
MemoCache<Partition, Terms>& h_to_p_cache() {
  static MemoCache<Partition, Terms> cache;
  return cache;
}
MemoCache<Partition, Terms>& schur_to_h_cache() {
  static MemoCache<Partition, Terms> cache;
  return cache;
}

const Terms& empty_terms() {
  static const Terms t;
  return t;
}

// s_l = sum_rho chi^l(rho) / z_rho p_rho
Terms schur_in_p(const Partition& lambda) {
  return schur_to_p_cache().get_or_compute(lambda, [&] {
    SymFunc out(Basis::PowerSum);
    for (const auto& c : classes(lambda.size())) {
      out.add_term(c.cycle_type,
                   Rational(mn_character(lambda, c)) / Rational(c.centralizer_order()));
    }
    return out.terms();
  });
}

// p_rho = sum_l chi^l(rho) s_l
Terms p_in_schur(const Partition& rho) {
  return p_to_schur_cache().get_or_compute(rho, [&] {
    SymFunc out(Basis::Schur);
    for (const auto& lambda : enumerate(rho.size())) {
      out.add_term(lambda, Rational(mn_character(lambda, rho)));
    }
    return out.terms();
  });
}

// h_mu = prod_i h_{mu_i}, with h_r = sum_{rho |- r} p_rho / z_rho
Terms h_in_p(const Partition& mu) {
  return h_to_p_cache().get_or_compute(mu, [&] {
    Terms acc = SymFunc::constant(1, Basis::PowerSum).terms();
    for (int part : mu.parts()) {
      SymFunc hr(Basis::PowerSum);
      for (const auto& rho : enumerate(part)) {
        hr.add_term(rho, Rational(1) / Rational(centralizer_order(rho)));
      }
      acc = multiply_power_sums(acc, hr.terms(), std::nullopt);
    }
    return acc;
  });
}

Terms p_to(const Terms& p_terms, Basis target);

// h_mu = s_mu + sum_{l > mu in dominance} K_{l,mu} s_l, so
// s_mu = h_mu - sum K_{l,mu} s_l; every l here precedes mu canonically.
Terms schur_in_h(const Partition& mu) {
  if (auto hit = schur_to_h_cache().find(mu)) return *hit;
  SymFunc h_as_schur(Basis::Schur, p_to(h_in_p(mu), Basis::Schur));
  SymFunc out = homogeneous(mu);
  for (const auto& [lambda, kostka] : h_as_schur.terms()) {
    if (lambda == mu) {
      if (kostka != 1) throw IntegrityError("Kostka diagonal is not 1 for " + to_string(mu));
      continue;
    }
    out -= SymFunc(Basis::Homogeneous, schur_in_h(lambda)) * kostka;
  }
  schur_to_h_cache().insert(mu, out.terms());
  return out.terms();
}

Terms element_in_p(Basis basis, const Partition& p) {
  switch (basis) {
    case Basis::PowerSum:
      return SymFunc::element(Basis::PowerSum, p).terms();
    case Basis::Schur:
      return schur_in_p(p);
    case Basis::Homogeneous:
      return h_in_p(p);
  }
  return empty_terms();
}

Terms to_p(const SymFunc& f) {
  if (f.basis() == Basis::PowerSum) return f.terms();
  SymFunc out(Basis::PowerSum);
  for (const auto& [p, c] : f.terms()) {
    for (const auto& [q, d] : element_in_p(f.basis(), p)) out.add_term(q, c * d);
  }
  return out.terms();
}

Terms p_to(const Terms& p_terms, Basis target) {
  if (target == Basis::PowerSum) return p_terms;
  SymFunc as_schur(Basis::Schur);
  for (const auto& [rho, c] : p_terms) {
    for (const auto& [lambda, d] : p_in_schur(rho)) as_schur.add_term(lambda, c * d);
  }
  if (target == Basis::Schur) return as_schur.terms();
  SymFunc out(Basis::Homogeneous);
  for (const auto& [lambda, c] : as_schur.terms()) {
    for (const auto& [mu, d] : schur_in_h(lambda)) out.add_term(mu, c * d);
  }
  return out.terms();
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return SymFunc(target, p_to(to_p(f), target));
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.basis() == Basis::PowerSum && g.basis() == Basis::PowerSum) {
    return SymFunc(Basis::PowerSum, multiply_power_sums(f.terms(), g.terms(), std::nullopt));
  }
  const Terms product = multiply_power_sums(to_p(f), to_p(g), std::nullopt);
  return SymFunc(f.basis(), p_to(product, f.basis()));
}

SymFunc pieri(const Partition& p, int r) {
  SymFunc out(Basis::Schur);
  if (r < 0) return out;
  for (const auto& q : add_horizontal_strip(p, r)) out.add_term(q, 1);
  return out;
}

Rational inner_product(const SymFunc& f, const SymFunc& g) {
  Rational total = 0;
  if (f.basis() == Basis::Schur && g.basis() == Basis::Schur) {
    for (const auto& [p, c] : f.terms()) total += c * g.coeff(p);
    return total;
  }
  if (f.basis() == Basis::Schur && g.basis() == Basis::PowerSum) {
    for (const auto& [rho, c] : g.terms()) {
      for (const auto& [lambda, d] : f.terms()) {
        if (lambda.size() == rho.size()) total += c * d * Rational(mn_character(lambda, rho));
      }
    }
    return total;
  }
  if (f.basis() == Basis::PowerSum && g.basis() == Basis::Schur) return inner_product(g, f);
  const Terms fp = to_p(f);
  const Terms gp = to_p(g);
  for (const auto& [rho, c] : fp) {
    if (auto it = gp.find(rho); it != gp.end()) {
      total += c * it->second * Rational(centralizer_order(rho));
    }
  }
  return total;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g, std::optional<int> max_degree) {
  const Terms fp = to_p(f);
  const Terms gp = to_p(g);
  std::map<int, Terms> scaled;  // p_n[g], per cycle length n
  SymFunc result(Basis::PowerSum);
  for (const auto& [rho, c] : fp) {
    Terms acc = SymFunc::constant(1, Basis::PowerSum).terms();
    for (int part : rho.parts()) {
      auto it = scaled.find(part);
      if (it == scaled.end()) it = scaled.emplace(part, scale_power_sums(gp, part, max_degree)).first;
      acc = multiply_power_sums(acc, it->second, max_degree);
      if (acc.empty()) break;
    }
    for (const auto& [q, d] : acc) result.add_term(q, c * d);
  }
  return SymFunc(f.basis(), p_to(result.terms(), f.basis()));
}

namespace {

struct PlethysmKeyHash {
  std::size_t operator()(const std::pair<Partition, int>& key) const noexcept {
    return PartitionHash{}(key.first) * 31u + static_cast<std::size_t>(key.second);
  }
};

MemoCache<std::pair<Partition, int>, SymFunc, PlethysmKeyHash>& plethysm_cache() {
  static MemoCache<std::pair<Partition, int>, SymFunc, PlethysmKeyHash> cache;
  return cache;
}

}  // namespace

SymFunc schur_plethysm_h(const Partition& p, int j) {
  if (j < 0) throw std::invalid_argument("schur_plethysm_h: negative inner degree");
  return plethysm_cache().get_or_compute({p, j}, [&] {
    if (j == 0) {
      // s_p[1] = s_p(1, 0, 0, ...) = 1 for one-row shapes, 0 otherwise.
      return p.length() <= 1 ? SymFunc::constant(1) : SymFunc(Basis::Schur);
    }
    return plethysm(schur(p), complete(j));
  });
}

std::vector<PlethysmEntry> plethysm_cache_entries() {
  std::vector<PlethysmEntry> out;
  plethysm_cache().for_each([&](const auto& key, const SymFunc& value) {
    out.push_back({key.first, key.second, value});
  });
  std::sort(out.begin(), out.end(), [](const PlethysmEntry& a, const PlethysmEntry& b) {
    if (a.inner_degree != b.inner_degree) return a.inner_degree < b.inner_degree;
    return a.outer < b.outer;
  });
  return out;
}

void seed_plethysm_cache(const PlethysmEntry& entry) {
  if (entry.value.basis() != Basis::Schur) {
    throw std::invalid_argument("plethysm cache entries must be in the Schur basis");
  }
  plethysm_cache().insert({entry.outer, entry.inner_degree}, entry.value);
}

void clear_symfunc_caches() {
  plethysm_cache().clear();
  schur_to_p_cache().clear();
  p_to_schur_cache().clear();
  h_to_p_cache().clear();
  schur_to_h_cache().clear();
}

SymFunc truncated_h(int n) {
  SymFunc out(Basis::Homogeneous);
  for (int j = 0; j <= n; ++j) out += complete(j);
  return out;
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  const char symbol = f.basis() == Basis::Schur ? 's' : f.basis() == Basis::PowerSum ? 'p' : 'h';
  std::string s;
  for (const auto& [p, c] : f.terms()) {
    Rational magnitude = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit) s += magnitude.get_str();
    if (p.empty()) {
      if (unit) s += "1";
      continue;
    }
    if (!unit) s += "*";
    s += symbol + to_string(p);
  }
  return s;
}

}  // namespace tensordecomp
