#include "cpf/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "cpf/errors.hpp"

namespace cpf {
namespace {

using FieldKey = std::tuple<unsigned, unsigned, std::vector<unsigned>>;

// Append-only table of monic irreducibles per (field, degree).
class IrreducibleTable {
 public:
  const std::vector<Poly>& get(const FieldPtr& field, std::size_t degree) {
    const FieldKey key{field->p(), field->m(), field->modulus()};
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find({key, degree});
      if (it != table_.end()) return it->second;
    }
    // Lower degrees first so the sieve below can use them.
    for (std::size_t d = 1; 2 * d <= degree; ++d) get(field, d);
    std::vector<Poly> found = compute(field, degree);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace({key, degree}, std::move(found));
    return it->second;
  }

 private:
  std::vector<Poly> compute(const FieldPtr& field, std::size_t degree) {
    const std::uint64_t q = field->q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < degree; ++i) {
      if (count > (std::uint64_t{1} << 24) / q) throw GuardExceeded("irreducible table beyond degree guard");
      count *= q;
    }
    std::vector<Poly> out;
    const Poly lead = Poly::monomial(field, 1, degree);
    for (std::uint64_t k = 0; k < count; ++k) {
      Poly candidate = lead + index_to_poly(field, k);
      bool irreducible = true;
      for (std::size_t d = 1; irreducible && 2 * d <= degree; ++d) {
        for (const Poly& p : get(field, d)) {
          if (divides(p, candidate)) {
            irreducible = false;
            break;
          }
        }
      }
      if (irreducible) out.push_back(std::move(candidate));
    }
    return out;
  }

  std::shared_mutex mutex_;
  std::map<std::pair<FieldKey, std::size_t>, std::vector<Poly>> table_;
};

IrreducibleTable& table() {
  static IrreducibleTable instance;
  return instance;
}

}  // namespace

Poly PrimePower::value() const { return pow(prime, exponent); }

Poly Factorization::expand() const {
  Poly r = Poly::constant(field, unit);
  for (const auto& pp : factors) r *= pp.value();
  return r;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::size_t Factorization::exponent_of(const Poly& prime) const {
  for (const auto& pp : factors)
    if (pp.prime == prime) return pp.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  std::string out = field->format(unit);
  for (const auto& pp : factors) {
    out += " * (" + pp.prime.to_string() + ")^" + std::to_string(pp.exponent);
  }
  return out;
}

const std::vector<Poly>& monic_irreducibles(const FieldPtr& field, std::size_t degree) {
  if (degree == 0) throw DomainError("irreducibles have positive degree");
  return table().get(field, degree);
}

bool is_irreducible(const Poly& p) {
  if (p.is_constant()) throw DomainError("irreducibility of a constant polynomial");
  const std::size_t n = p.degree().value();
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    for (const Poly& cand : monic_irreducibles(p.field(), d)) {
      if (divides(cand, p)) return false;
    }
  }
  return true;
}

Factorization factorize(const Poly& g) {
  if (g.is_constant()) throw DomainError("factorization of a constant polynomial");
  Factorization out{g.field(), g.lead(), {}};
  Poly rest = g.monic();
  for (std::size_t d = 1; 2 * d <= rest.degree().value(); ++d) {
    for (const Poly& p : monic_irreducibles(g.field(), d)) {
      if (rest.degree().value() < 2 * d) break;
      std::size_t e = 0;
      for (;;) {
        auto [quo, rem] = divrem(rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e > 0) out.factors.push_back({p, e});
    }
  }
  if (!rest.is_constant()) out.factors.push_back({rest, 1});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::pair<std::size_t, Poly> split_valuation(const Poly& prime, const Poly& h) {
  if (h.is_zero()) throw DomainError("split_valuation of zero");
  std::size_t v = 0;
  Poly rest = h;
  for (;;) {
    auto [quo, rem] = divrem(rest, prime);
    if (!rem.is_zero()) break;
    rest = std::move(quo);
    ++v;
  }
  return {v, rest};
}

Valuation valuation(const Poly& prime, const Poly& h, bool trusted_irreducible) {
  if (!trusted_irreducible && (prime.is_constant() || !is_irreducible(prime))) {
    throw DomainError("valuation at reducible " + prime.to_string());
  }
  if (h.is_zero()) return Valuation::infinity();
  return split_valuation(prime, h).first;
}

std::vector<Poly> monic_divisors(const Poly& g) { return monic_divisors(factorize(g)); }

std::vector<Poly> monic_divisors(const Factorization& g) {
  std::vector<Poly> out{Poly::constant(g.field, 1)};
  for (const auto& pp : g.factors) {
    const std::size_t before = out.size();
    Poly power = Poly::constant(g.field, 1);
    for (std::size_t e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] * power);
    }
  }
  out.erase(out.begin());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cpf
