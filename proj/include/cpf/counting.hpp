#pragma once

#include <cstddef>

#include "cpf/field.hpp"
#include "cpf/poly.hpp"
#include "cpf/qexponent.hpp"

namespace cpf {

// Exponent pieces for a prime power P^e with d = deg P and domain degree n.
// All evaluated exactly.

// (q-1) * sum_{k=1}^{n-1} q^k min{e, floor(k/d)}
BigInt cpf_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q);
// sum_{k=1}^{q^n-1} min{e, floor(k/q^d) + floor(k/q^{2d}) + ...}
BigInt polyfn_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q);
// sum_{k=1}^{q^n-1} min{e, floor(floor(log_q k) / d)}, by direct summation.
BigInt log_deficit(std::size_t n, std::size_t e, std::size_t d, unsigned q);
// floor(k/q^d) + floor(k/q^{2d}) + ..., truncated once q^{dj} > k.
BigInt factorial_valuation(const BigInt& k, std::size_t d, unsigned q);

// M(f, g): the number of congruence preserving functions A_f -> A_g.
QExponent count_cpf(const Poly& f, const Poly& g);
// M(f, P^e); P must be irreducible.
QExponent count_cpf_local(const Poly& f, const Poly& prime, std::size_t e);

// N(f, g): the number of polynomial functions A_f -> A_g, via the
// factorization of g and the valuation form of the factorial gcds.
QExponent count_polyfn(const Poly& f, const Poly& g);
// N(f, P^e); P must be irreducible.
QExponent count_polyfn_local(const Poly& f, const Poly& prime, std::size_t e);
// N(f, g) from literal deg gcd(g, prod_{i<k}(a_k - a_i)) for k < q^n, with the
// a_k built from `order`. Requires deg f <= 4.
QExponent count_polyfn_literal(const Poly& f, const Poly& g, const FieldOrder& order);
QExponent count_polyfn_literal(const Poly& f, const Poly& g);

struct IdentityCheck {
  bool holds = false;
  BigInt lhs;  // cpf_deficit
  BigInt rhs;  // log_deficit
};

// Whether (q-1) sum q^k min{e, floor(k/d)} equals sum min{e, floor(log_q k / d)}.
IdentityCheck exponent_identity_check(std::size_t n, std::size_t e, std::size_t d, unsigned q);

}  // namespace cpf
