#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cpf/ext_nat.hpp"
#include "cpf/factor.hpp"
#include "cpf/poly.hpp"
#include "cpf/residue.hpp"

namespace cpf {

// The homogeneous P-sequence b_k = b_{l_0} + b_{l_1} P + ... + b_{l_m} P^m,
// where sum l_i q^{di} is the q^d-adic expansion of k and b_0..b_{q^d-1} is a
// fixed ordering of the polynomials of degree < d.
class PSequence {
 public:
  // Base block in canonical index order.
  explicit PSequence(Poly prime);
  // Custom base block: all q^d polynomials of degree < d, b_0 = 0, b_1 = 1,
  // degrees non-decreasing. Throws DomainError otherwise.
  PSequence(Poly prime, std::vector<Poly> base);

  const Poly& prime() const { return prime_; }
  std::size_t degree() const { return d_; }
  unsigned q() const { return prime_.F().q(); }
  std::span<const Poly> base() const { return base_; }

  Poly element(std::uint64_t k) const;
  std::vector<Poly> elements(std::uint64_t count) const;

  bool operator==(const PSequence& o) const { return prime_ == o.prime_ && base_ == o.base_; }

 private:
  Poly prime_;
  std::size_t d_;
  std::vector<Poly> base_;
};

// floor(floor(log_q k) / d), in integer arithmetic. Throws DomainError for k == 0.
std::size_t mu(std::uint64_t k, std::size_t d, unsigned q);

// Q_k(h) mod P^e, where Q_k(x) = prod_{j<k}(x - b_j) / prod_{j<k}(b_k - b_j).
// The P-parts of numerator and denominator are cancelled exactly and the unit
// part of the denominator is inverted mod P^e. Throws InvariantViolation if
// the numerator's valuation falls below the denominator's.
Poly eval_Qk(const PSequence& seq, std::size_t e, std::uint64_t k, const Poly& h);

// The functions B_k: A_f -> A_{P^e}, B_k(h) = Q_k(h) mod P^e, tabulated on
// the points b_0, ..., b_{q^n - 1} (which enumerate the representatives of A_f).
class BinomialBasis {
 public:
  BinomialBasis(PSequence seq, std::size_t e, std::size_t n);

  const PSequence& sequence() const { return seq_; }
  std::size_t e() const { return e_; }
  std::size_t n() const { return n_; }
  const Poly& modulus() const { return modulus_; }
  std::uint64_t size() const { return points_.size(); }
  // b_0, ..., b_{q^n - 1}
  const std::vector<Poly>& points() const { return points_; }
  // B_k(b_i)
  const Poly& at(std::uint64_t k, std::uint64_t i) const { return table_[k * points_.size() + i]; }
  // B_k at an arbitrary polynomial h (not reduced mod f).
  Poly eval(std::uint64_t k, const Poly& h) const { return eval_Qk(seq_, e_, k, h); }

 private:
  PSequence seq_;
  std::size_t e_;
  std::size_t n_;
  Poly modulus_;
  std::vector<Poly> points_;
  std::vector<Poly> table_;
};

// Shared immutable basis for (seq, e, n), built once per key.
std::shared_ptr<const BinomialBasis> binomial_basis(const PSequence& seq, std::size_t e, std::size_t n);

// B_k at the class of h in A_f: Q_k evaluated at the canonical representative.
Poly eval_Bk(const PSequence& seq, std::size_t e, std::uint64_t k, const Poly& h, const Poly& f);

struct BasisCoefficients {
  Poly prime;
  std::size_t e = 0;
  std::vector<Poly> coefficients;  // c_0 .. c_{q^n - 1}, reduced mod P^e
};

// The unique c with sigma = sum_k c_k B_k. sigma's codomain must be A_{P^e}
// for an irreducible P. Without a basis the canonical P-sequence is used.
BasisCoefficients decompose(const FunctionTable& sigma);
BasisCoefficients decompose(const FunctionTable& sigma, const BinomialBasis& basis);
// sum_k c_k B_k as a table A_f -> A_{P^e}.
FunctionTable recompose(const BasisCoefficients& coefficients, const BinomialBasis& basis, RingPtr domain,
                        RingPtr codomain);

struct CoefficientCheck {
  std::uint64_t k = 0;
  std::size_t mu = 0;
  Valuation valuation;  // v_P(c_k), infinity for c_k = 0
  bool ok = true;       // valuation >= mu
};

struct BasisVerdict {
  bool cpf = true;
  BasisCoefficients coefficients;
  std::vector<CoefficientCheck> checks;  // k = 1 .. q^n - 1
};

// Congruence preservation via the coefficient criterion v_P(c_k) >= mu(k)
// for every k >= 1 (c_k in the ideal generated by P^{mu(k)} mod P^e).
BasisVerdict is_cpf_via_basis(const FunctionTable& sigma);
BasisVerdict is_cpf_via_basis(const FunctionTable& sigma, const BinomialBasis& basis);

struct LocalVerdict {
  PrimePower part;
  BasisVerdict verdict;
};

struct CrtCharacterization {
  bool cpf = true;
  std::vector<LocalVerdict> parts;
};

// Split sigma over the prime powers of its codomain and apply the
// coefficient criterion to each component.
CrtCharacterization crt_characterize(const FunctionTable& sigma);

// The (P, e) of a prime-power codomain; throws DomainError otherwise.
PrimePower prime_power_of(const ResidueRing& ring);

}  // namespace cpf
