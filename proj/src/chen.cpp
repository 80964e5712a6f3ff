#include "cpf/chen.hpp"

#include <algorithm>

#include "cpf/errors.hpp"

namespace cpf {
namespace {

BigInt big_pow(unsigned q, std::size_t k) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)); }

}  // namespace

GammaValue gamma_prime_power(unsigned q, std::size_t prime_degree, std::size_t e) {
  if (e == 0) throw DomainError("gamma needs exponent e >= 1");
  if (e == 1) return GammaValue::infinity();
  if (q == 2) {
    if (e == 2 && prime_degree == 1) return GammaValue::infinity();
    return prime_degree + 2;
  }
  return prime_degree + 1;
}

GammaValue gamma_prime_power(const Poly& prime, std::size_t e) {
  if (prime.is_constant() || !is_irreducible(prime)) {
    throw DomainError("gamma_prime_power: " + prime.to_string() + " is not irreducible");
  }
  return gamma_prime_power(prime.F().q(), prime.degree().value(), e);
}

GammaValue gamma(const Factorization& h) {
  GammaValue best = GammaValue::infinity();
  for (const PrimePower& pp : h.factors) {
    best = std::min(best, gamma_prime_power(h.field->q(), pp.prime.degree().value(), pp.exponent));
  }
  return best;
}

GammaValue gamma(const Poly& h) { return gamma(factorize(h)); }

ChenVerdict is_chen_pair(const Poly& f, const Poly& g) {
  if (f.is_constant() || g.is_constant()) throw DomainError("Chen pairs need non-constant f and g");
  ChenVerdict out;
  out.deg_f = f.degree().value();
  out.gamma_g = gamma(g);
  out.chen_pair = GammaValue(out.deg_f) < out.gamma_g;
  return out;
}

bool is_self_chen(const Factorization& g) {
  const bool binary = g.field->q() == 2;
  return std::all_of(g.factors.begin(), g.factors.end(), [binary](const PrimePower& pp) {
    if (binary && pp.prime.degree().value() == 1) return pp.exponent <= 2;
    return pp.exponent == 1;
  });
}

bool is_self_chen(const Poly& g) {
  if (g.is_constant()) throw DomainError("is_self_chen needs non-constant g");
  return is_self_chen(factorize(g));
}

BigInt squarefree_count(std::size_t n, unsigned q) {
  if (n == 0) return 1;
  if (n == 1) return q;
  return big_pow(q, n) - big_pow(q, n - 1);
}

BigInt chen_self_count(std::size_t n, unsigned q) {
  if (q != 2) throw DomainError("chen_self_count is defined for q = 2 only; use (q-1)*squarefree_count");
  static const BigInt small[] = {1, 2, 4, 6};
  if (n < 4) return small[n];
  const BigInt sign = (n % 2 == 1) ? 1 : -1;  // (-1)^{n-1}
  const BigInt numerator = big_pow(2, n - 3) * 49 + sign * (BigInt(3 * n) - 13);
  return numerator / 9;
}

SelfChenComponents self_chen_components(std::size_t n) {
  if (n < 4) throw DomainError("component closed forms hold for n >= 4");
  const BigInt sign = (n % 2 == 1) ? 1 : -1;
  SelfChenComponents c;
  c.squarefree = squarefree_count(n, 2);
  c.t_squared = (big_pow(2, n - 2) + sign) / 3;
  c.t_plus_one_squared = c.t_squared;
  c.both_squared = (big_pow(2, n - 3) + sign * (BigInt(3 * n) - 19)) / 9;
  return c;
}

BigRational density_exact(unsigned q) {
  if (q < 2) throw DomainError("q must be >= 2");
  if (q == 2) return BigRational(49, 72);
  return BigRational(q - 1, q);
}

namespace {

DensityReport finish(DensityReport report) {
  BigInt hits = 0;
  BigInt total = 0;
  for (std::size_t n = 1; n <= report.max_degree; ++n) {
    hits += report.self_chen_counts[n];
    total += report.totals[n];
  }
  report.fraction = total == 0 ? BigRational(0) : BigRational(hits, total);
  report.limit = density_exact(report.q);
  return report;
}

}  // namespace

DensityReport density_closed_form(unsigned q, std::size_t max_degree, bool monic_only) {
  if (max_degree == 0) throw DomainError("max degree must be >= 1");
  DensityReport report;
  report.q = q;
  report.max_degree = max_degree;
  report.monic_only = monic_only;
  report.self_chen_counts.assign(max_degree + 1, 0);
  report.totals.assign(max_degree + 1, 0);
  const BigInt units = monic_only ? 1 : q - 1;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    report.totals[n] = units * big_pow(q, n);
    report.self_chen_counts[n] = q == 2 ? chen_self_count(n) : units * squarefree_count(n, q);
  }
  return finish(std::move(report));
}

DensityReport density_empirical(const FieldPtr& field, std::size_t max_degree, bool monic_only) {
  if (max_degree == 0) throw DomainError("max degree must be >= 1");
  const unsigned q = field->q();
  if (big_pow(q, max_degree) > (BigInt(1) << 22)) throw GuardExceeded("density census needs q^m <= 2^22");
  DensityReport report;
  report.q = q;
  report.max_degree = max_degree;
  report.monic_only = monic_only;
  report.empirical = true;
  report.self_chen_counts.assign(max_degree + 1, 0);
  report.totals.assign(max_degree + 1, 0);
  const unsigned first_lead = 1;
  const unsigned last_lead = monic_only ? 1 : q - 1;
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const auto count = static_cast<std::uint64_t>(big_pow(q, n));
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    for (unsigned lead = first_lead; lead <= last_lead; ++lead) {
      const Poly top = Poly::monomial(field, static_cast<Elem>(lead), n);
      for (std::uint64_t k = 0; k < count; ++k) {
        ++total;
        if (is_self_chen(top + index_to_poly(field, k))) ++hits;
      }
    }
    report.self_chen_counts[n] = hits;
    report.totals[n] = total;
  }
  return finish(std::move(report));
}

}  // namespace cpf
