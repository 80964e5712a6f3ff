#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cpf/ext_nat.hpp"
#include "cpf/poly.hpp"

namespace cpf {

struct PrimePower {
  Poly prime;  // monic irreducible, degree >= 1
  std::size_t exponent = 1;

  Poly value() const;
  bool operator==(const PrimePower&) const = default;
};

// g = unit * prod P_i^{e_i}, factors sorted by (degree, canonical index).
struct Factorization {
  FieldPtr field;
  Elem unit = 1;
  std::vector<PrimePower> factors;

  Poly expand() const;
  bool is_squarefree() const;
  // Exponent of P in the factorization, 0 if absent.
  std::size_t exponent_of(const Poly& prime) const;
  // "alpha * (P1)^e1 * (P2)^e2"
  std::string to_string() const;
};

// All monic irreducibles of degree d in index order. Memoized per field and
// degree; safe to call concurrently.
const std::vector<Poly>& monic_irreducibles(const FieldPtr& field, std::size_t degree);

// Throws DomainError for constant input.
bool is_irreducible(const Poly& p);

// Trial division by monic irreducibles in index order. Throws DomainError for
// constant input.
Factorization factorize(const Poly& g);

// Largest m with P^m | h; infinity for h == 0. Throws DomainError when P is
// not irreducible (checked unless `trusted_irreducible`).
Valuation valuation(const Poly& prime, const Poly& h, bool trusted_irreducible = false);

// (v, h / P^v) for nonzero h.
std::pair<std::size_t, Poly> split_valuation(const Poly& prime, const Poly& h);

// All monic divisors of positive degree, sorted by (degree, index).
std::vector<Poly> monic_divisors(const Poly& g);
std::vector<Poly> monic_divisors(const Factorization& g);

}  // namespace cpf
