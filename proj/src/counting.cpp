#include "cpf/counting.hpp"

#include <algorithm>

#include "cpf/errors.hpp"
#include "cpf/factor.hpp"

namespace cpf {
namespace {

BigInt big_pow(unsigned q, std::size_t k) { return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k)); }

std::size_t nonconstant_degree(const Poly& f, const char* what) {
  if (f.is_constant()) throw DomainError(std::string(what) + " must be non-constant");
  return f.degree().value();
}

void require_irreducible(const Poly& prime) {
  if (prime.is_constant() || !is_irreducible(prime)) {
    throw DomainError(prime.to_string() + " is not irreducible");
  }
}

void require_valid(std::size_t e, std::size_t d, unsigned q) {
  if (e == 0) throw DomainError("exponent e must be >= 1");
  if (d == 0) throw DomainError("prime degree d must be >= 1");
  if (q < 2) throw DomainError("q must be >= 2");
}

}  // namespace

BigInt factorial_valuation(const BigInt& k, std::size_t d, unsigned q) {
  BigInt sum = 0;
  const BigInt step = big_pow(q, d);
  for (BigInt power = step; power <= k; power *= step) sum += k / power;
  return sum;
}

BigInt cpf_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q) {
  require_valid(e, d, q);
  BigInt sum = 0;
  for (std::size_t k = 1; k < n; ++k) sum += big_pow(q, k) * std::min(e, k / d);
  return sum * (q - 1);
}

BigInt polyfn_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q) {
  require_valid(e, d, q);
  // factorial_valuation(k) is non-decreasing in k, so
  //   sum_k min{e, s(k)} = sum_{level=1}^{e} #{1 <= k <= K : s(k) >= level}.
  const BigInt last = big_pow(q, n) - 1;
  BigInt sum = 0;
  for (std::size_t level = 1; level <= e; ++level) {
    if (factorial_valuation(last, d, q) < level) break;
    BigInt lo = 1, hi = last;  // smallest k with s(k) >= level lies in [lo, hi]
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      if (factorial_valuation(mid, d, q) >= level) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    sum += last - lo + 1;
  }
  return sum;
}

BigInt log_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q) {
  require_valid(e, d, q);
  const BigInt last = big_pow(q, n) - 1;
  if (last > (BigInt(1) << 26)) throw GuardExceeded("direct summation beyond 2^26 terms");
  const auto count = static_cast<std::uint64_t>(last);
  BigInt sum = 0;
  for (std::uint64_t k = 1; k <= count; ++k) {
    std::size_t floor_log = 0;
    for (std::uint64_t r = k; r >= q; r /= q) ++floor_log;
    sum += std::min(e, floor_log / d);
  }
  return sum;
}

QExponent count_cpf_local(const Poly& f, const Poly& prime, std::size_t e) {
  const std::size_t n = nonconstant_degree(f, "f");
  require_irreducible(prime);
  const std::size_t d = prime.degree().value();
  const unsigned q = f.F().q();
  return {q, BigInt(d) * (BigInt(e) * big_pow(q, n) - cpf_deficit(n, e, d, q))};
}

QExponent count_cpf(const Poly& f, const Poly& g) {
  const std::size_t n = nonconstant_degree(f, "f");
  const std::size_t deg_g = nonconstant_degree(g, "g");
  const unsigned q = f.F().q();
  BigInt exponent = big_pow(q, n) * deg_g;
  for (const PrimePower& pp : factorize(g).factors) {
    exponent -= BigInt(pp.prime.degree().value()) * cpf_deficit(n, pp.exponent, pp.prime.degree().value(), q);
  }
  return {q, exponent};
}

QExponent count_polyfn_local(const Poly& f, const Poly& prime, std::size_t e) {
  const std::size_t n = nonconstant_degree(f, "f");
  require_irreducible(prime);
  const std::size_t d = prime.degree().value();
  const unsigned q = f.F().q();
  return {q, BigInt(d) * (BigInt(e) * big_pow(q, n) - polyfn_deficit(n, e, d, q))};
}

QExponent count_polyfn(const Poly& f, const Poly& g) {
  const std::size_t n = nonconstant_degree(f, "f");
  const std::size_t deg_g = nonconstant_degree(g, "g");
  const unsigned q = f.F().q();
  // deg gcd(g, k!) = sum_i d_i min{e_i, s_{d_i}(k)}
  BigInt exponent = big_pow(q, n) * deg_g;
  for (const PrimePower& pp : factorize(g).factors) {
    const std::size_t d = pp.prime.degree().value();
    exponent -= BigInt(d) * polyfn_deficit(n, pp.exponent, d, q);
  }
  return {q, exponent};
}

QExponent count_polyfn_literal(const Poly& f, const Poly& g, const FieldOrder& order) {
  const std::size_t n = nonconstant_degree(f, "f");
  const std::size_t deg_g = nonconstant_degree(g, "g");
  if (n > 4) throw GuardExceeded("literal factorial path is limited to deg f <= 4");
  const FieldPtr& F = f.field();
  const unsigned q = F->q();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= q;
  BigInt exponent = BigInt(count) * deg_g;
  for (std::uint64_t k = 1; k < count; ++k) {
    // gcd(g, k!) == gcd(g, k! mod g); the product is reduced as it is formed.
    const Poly ak = index_to_poly(F, k, order);
    Poly product = Poly::constant(F, 1);
    for (std::uint64_t i = 0; i < k; ++i) product = (product * (ak - index_to_poly(F, i, order))) % g;
    exponent -= gcd(g, product).degree().value();
  }
  return {q, exponent};
}

QExponent count_polyfn_literal(const Poly& f, const Poly& g) {
  return count_polyfn_literal(f, g, FieldOrder(f.F()));
}

IdentityCheck exponent_identity_check(std::size_t n, std::size_t e, std::size_t d, unsigned q) {
  if (n == 0) throw DomainError("n must be >= 1");
  IdentityCheck out;
  out.lhs = cpf_deficit(n, e, d, q);
  out.rhs = log_deficit(n, e, d, q);
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace cpf
