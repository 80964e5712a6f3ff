#pragma once

#include <cstddef>
#include <vector>

#include "cpf/ext_nat.hpp"
#include "cpf/factor.hpp"
#include "cpf/poly.hpp"
#include "cpf/qexponent.hpp"

namespace cpf {

// gamma(P^e): for q = 2, infinity if e = 1 or (e = 2 and deg P = 1), else
// deg P + 2; for q > 2, infinity if e = 1, else deg P + 1.
GammaValue gamma_prime_power(const Poly& prime, std::size_t e);
GammaValue gamma_prime_power(unsigned q, std::size_t prime_degree, std::size_t e);
// Minimum of gamma over the prime-power parts of h.
GammaValue gamma(const Poly& h);
GammaValue gamma(const Factorization& h);

struct ChenVerdict {
  bool chen_pair = false;
  std::size_t deg_f = 0;
  GammaValue gamma_g;
};

// (f, g) is a Chen pair iff deg f < gamma(g).
ChenVerdict is_chen_pair(const Poly& f, const Poly& g);

// Direct test of the self-pair condition on the factorization of g:
// q = 2: t^3 and (t+1)^3 do not divide g and P^2 does not for deg P >= 2;
// q > 2: g square-free.
bool is_self_chen(const Poly& g);
bool is_self_chen(const Factorization& g);

// Number of monic square-free polynomials of degree n.
BigInt squarefree_count(std::size_t n, unsigned q);
// q = 2 only: number of degree-n polynomials (t, t+1)-cube-free and otherwise
// square-free. Throws DomainError for other q.
BigInt chen_self_count(std::size_t n, unsigned q = 2);

// Closed forms of the four disjoint parts of the q = 2 self-Chen set of
// degree n >= 4: square-free; t^2 * sf; (t+1)^2 * sf; t^2 (t+1)^2 * sf.
struct SelfChenComponents {
  BigInt squarefree;
  BigInt t_squared;
  BigInt t_plus_one_squared;
  BigInt both_squared;
  BigInt total() const { return squarefree + t_squared + t_plus_one_squared + both_squared; }
};
SelfChenComponents self_chen_components(std::size_t n);

// Limit density of self-Chen polynomials: 49/72 for q = 2, (q-1)/q otherwise.
BigRational density_exact(unsigned q);

struct DensityReport {
  unsigned q = 0;
  std::size_t max_degree = 0;
  bool monic_only = false;
  bool empirical = false;
  std::vector<BigInt> self_chen_counts;  // index n = 1..max_degree (index 0 unused)
  std::vector<BigInt> totals;            // polynomials of degree n
  BigRational fraction;                  // cumulative over 1..max_degree
  BigRational limit;
};

// Cumulative fraction from the closed-form per-degree counts.
DensityReport density_closed_form(unsigned q, std::size_t max_degree, bool monic_only = false);

// Cumulative fraction from testing every polynomial of degree 1..m with
// is_self_chen. Requires q^m <= 2^22.
DensityReport density_empirical(const FieldPtr& field, std::size_t max_degree, bool monic_only = false);

}  // namespace cpf
