#include "tensordecomp/decomp.hpp"

#include <stdexcept>
#include <string>

#include "tensordecomp/characters.hpp"
#include "tensordecomp/parallel.hpp"

namespace tensordecomp {

// ---------------------------------------------------------------------------
// RepDecomposition

RepDecomposition RepDecomposition::from_schur(const SymFunc& f, int group_degree) {
  const SymFunc s = convert(f, Basis::Schur);
  RepDecomposition out(group_degree);
  for (const auto& [p, c] : s.terms()) {
    if (p.size() != group_degree) {
      throw IntegrityError("component " + to_compact_string(p) + " is not of degree " +
                           std::to_string(group_degree));
    }
    out.add(p, require_nonnegative_integer(c, "multiplicity of " + to_compact_string(p)));
  }
  return out;
}

BigInt RepDecomposition::mult(const Partition& p) const {
  if (auto it = mults_.find(p); it != mults_.end()) return it->second;
  return 0;
}

BigInt RepDecomposition::dimension() const {
  BigInt total = 0;
  for (const auto& [p, m] : mults_) total += m * dim(p);
  return total;
}

SymFunc RepDecomposition::characteristic() const {
  SymFunc out(Basis::Schur);
  for (const auto& [p, m] : mults_) out.add_term(p, Rational(m));
  return out;
}

void RepDecomposition::add(const Partition& p, const BigInt& m) {
  if (m < 0) throw std::invalid_argument("negative multiplicity");
  if (m == 0) return;
  if (p.size() != group_degree_) throw std::invalid_argument("component of the wrong degree");
  mults_[p] += m;
}

// ---------------------------------------------------------------------------
// Lambda tuples, Q and R

std::vector<LambdaTuple> lambda_tuples(const Partition& mu) {
  const std::vector<int> m = mu.multiplicities();
  std::vector<LambdaTuple> out{LambdaTuple(m.size())};
  // Extend slot by slot; the last slot varies fastest.
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<LambdaTuple> next;
    const auto choices = enumerate(m[i]);
    for (const auto& prefix : out) {
      for (const auto& choice : choices) {
        LambdaTuple t = prefix;
        t[i] = choice;
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

SymFunc q_lambda(const LambdaTuple& tuple) {
  SymFunc acc = SymFunc::constant(1);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].empty()) continue;
    acc = multiply(acc, schur_plethysm_h(tuple[i], static_cast<int>(i) + 1));
  }
  return acc;
}

SymFunc r_lambda(const LambdaTuple& tuple) {
  SymFunc acc = SymFunc::constant(1);
  for (const auto& lambda : tuple) {
    if (lambda.empty()) continue;
    acc = multiply(acc, schur(lambda));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Pi, rho, symbols

namespace {

void require_same_size(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) {
    throw std::invalid_argument("mu = " + to_compact_string(mu) + " and nu = " +
                                to_compact_string(nu) + " must partition the same k");
  }
}

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
    const PartitionHash h;
    return h(key.first) * 1000003u ^ h(key.second);
  }
};

MemoCache<std::pair<Partition, Partition>, RepDecomposition, PairHash>& pi_cache() {
  static MemoCache<std::pair<Partition, Partition>, RepDecomposition, PairHash> cache;
  return cache;
}

SymFunc h1_power(int l) {
  SymFunc out(Basis::Schur);
  for (const auto& lambda : enumerate(l)) out.add_term(lambda, Rational(dim(lambda)));
  return out;
}

SymFunc induce_with_trivial(const SymFunc& schur_terms, int cells) {
  SymFunc out(Basis::Schur);
  for (const auto& [lambda, c] : schur_terms.terms()) out += pieri(lambda, cells) * c;
  return out;
}

}  // namespace

RepDecomposition compute_pi(const Partition& mu, const Partition& nu) {
  require_same_size(mu, nu);
  return pi_cache().get_or_compute({mu, nu}, [&] {
    const Rational dim_nu(dim(nu));
    const SymFunc s_nu = schur(nu);
    SymFunc total(Basis::Schur);
    for (const auto& tuple : lambda_tuples(mu)) {
      const Rational coupling = inner_product(s_nu, q_lambda(tuple));
      if (coupling == 0) continue;
      total += r_lambda(tuple) * (dim_nu * coupling);
    }
    return RepDecomposition::from_schur(total, mu.length());
  });
}

void clear_pi_cache() { pi_cache().clear(); }

RepDecomposition compute_rho(const Partition& mu, const Partition& nu, int n) {
  require_same_size(mu, nu);
  const int l = mu.length();
  if (n < l) return RepDecomposition(n);
  const RepDecomposition pi = compute_pi(mu, nu);
  RepDecomposition out(n);
  for (const auto& [lambda, d] : pi.mults()) {
    for (const auto& eta : add_horizontal_strip(lambda, n - l)) out.add(eta, d);
  }
  return out;
}

namespace {

std::map<Partition, BigInt> stripped_row(const Partition& mu, const Partition& nu, int n) {
  const BigInt dim_nu = dim(nu);
  std::map<Partition, BigInt> entries;
  const RepDecomposition rho = compute_rho(mu, nu, n);
  for (const auto& [eta, m] : rho.mults()) {
    if (m % dim_nu != 0) {
      throw IntegrityError("multiplicity " + m.get_str() + " of " + to_compact_string(eta) +
                           " is not divisible by dim " + to_compact_string(nu));
    }
    entries.emplace(remove_first_row(eta), m / dim_nu);
  }
  return entries;
}

}  // namespace

DecompSymbol stable_symbol(const Partition& mu, const Partition& nu) {
  require_same_size(mu, nu);
  const int k = mu.size();
  DecompSymbol symbol{k, mu, nu, stripped_row(mu, nu, 2 * k)};
  if (stripped_row(mu, nu, 2 * k + 1) != symbol.entries) {
    throw IntegrityError("symbol for mu = " + to_compact_string(mu) + ", nu = " +
                         to_compact_string(nu) + " differs between n = 2k and n = 2k + 1");
  }
  return symbol;
}

std::map<Partition, BigInt> infinite_symbol(const Partition& mu, const Partition& nu) {
  return compute_pi(mu, nu).mults();
}

// ---------------------------------------------------------------------------
// Characteristics of the whole tensor space

BigInt type_multiplicity(const Partition& mu) {
  BigInt denom = 1;
  const auto m = mu.multiplicities();
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), factorial(i + 1).get_mpz_t(), static_cast<unsigned long>(m[i]));
    denom *= power * factorial(static_cast<unsigned long>(m[i]));
  }
  return factorial(static_cast<unsigned long>(mu.size())) / denom;
}

SymFunc mult_space_characteristic(const Partition& mu, int n) {
  const int l = mu.length();
  if (n < l) return SymFunc(Basis::Schur);
  return induce_with_trivial(h1_power(l), n - l) * Rational(type_multiplicity(mu));
}

SymFunc restriction_characteristic(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("restriction_characteristic: n must be nonnegative");
  const int k = lambda.size();
  const SymFunc h = truncated_h(k);
  const SymFunc s_lambda = schur(lambda);
  SymFunc out(Basis::Schur);
  for (const auto& eta : enumerate(n)) {
    const SymFunc composed = plethysm(schur(eta), h, k).degree_part(k);
    out.add_term(eta, inner_product(s_lambda, composed));
  }
  return out;
}

SymFunc xi_direct(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("xi_direct: requires n >= 1 and k >= 0");
  SymFunc p(Basis::PowerSum);
  for (const auto& rho : enumerate(n)) {
    BigInt fixed_power;
    mpz_ui_pow_ui(fixed_power.get_mpz_t(), static_cast<unsigned long>(rho.multiplicity(1)),
                  static_cast<unsigned long>(k));
    p.add_term(rho, Rational(fixed_power) / Rational(centralizer_order(rho)));
  }
  return convert(p, Basis::Schur);
}

// ---------------------------------------------------------------------------
// Identity verification

bool IdentityReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

IdentityReport verify_identities(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("verify_identities: requires n >= 1, k >= 0");
  IdentityReport report{n, k, {}};
  const auto parts = enumerate(k);
  const SymFunc h1k = h1_power(k);
  SymFunc all_rho(Basis::Schur);

  for (const auto& mu : parts) {
    SymFunc row(Basis::Schur);
    for (const auto& nu : parts) row += compute_rho(mu, nu, n).characteristic();
    all_rho += row;
    const SymFunc expected = mult_space_characteristic(mu, n);
    report.checks.push_back({"a", "mu=" + to_compact_string(mu), row == expected, row, expected});
  }

  for (const auto& mu : parts) {
    SymFunc lhs(Basis::Schur);
    for (const auto& tuple : lambda_tuples(mu)) {
      const Rational c = inner_product(h1k, q_lambda(tuple));
      if (c != 0) lhs += r_lambda(tuple) * c;
    }
    const SymFunc rhs = h1_power(mu.length()) * Rational(type_multiplicity(mu));
    report.checks.push_back({"b", "mu=" + to_compact_string(mu), lhs == rhs, lhs, rhs});
  }

  const SymFunc xi = xi_direct(n, k);
  SymFunc via_restriction(Basis::Schur);
  for (const auto& lambda : parts) {
    via_restriction += restriction_characteristic(lambda, n) * Rational(dim(lambda));
  }
  report.checks.push_back({"c", "xi=restriction", xi == via_restriction, xi, via_restriction});
  report.checks.push_back({"c", "xi=rho", xi == all_rho, xi, all_rho});
  return report;
}

}  // namespace tensordecomp
