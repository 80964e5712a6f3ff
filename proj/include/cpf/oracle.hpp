#pragma once

// Brute-force ground truth. Nothing here consults the closed-form counts or
// the basis criterion; every answer comes from the definitions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cpf/poly.hpp"
#include "cpf/qexponent.hpp"
#include "cpf/residue.hpp"

namespace cpf {

struct EnumerationGuard {
  std::uint64_t max_total_functions = std::uint64_t{1} << 20;
  std::uint64_t max_closure_size = std::uint64_t{1} << 20;
  std::size_t max_degree = 12;
};

struct CongruenceWitness {
  Poly divisor;  // h | g
  Poly h1;       // h1 ≡ h2 (mod h) but sigma(h1) !≡ sigma(h2) (mod h)
  Poly h2;
};

struct CongruenceResult {
  bool preserving = true;
  std::optional<CongruenceWitness> witness;
};

// Precomputed congruence classes of A_f and residues of A_g modulo every
// monic divisor of g of positive degree (unit divisors constrain nothing).
// Tables are given as canonical codomain indices.
class CongruenceChecker {
 public:
  CongruenceChecker(RingPtr domain, RingPtr codomain);

  const ResidueRing& domain() const { return *domain_; }
  const ResidueRing& codomain() const { return *codomain_; }
  std::size_t divisor_count() const { return divisors_.size(); }

  bool preserves(std::span<const std::uint32_t> codes) const;
  CongruenceResult check(std::span<const std::uint32_t> codes) const;

 private:
  friend class CpfBacktracker;

  struct DivisorData {
    Poly divisor;
    std::vector<std::vector<std::uint32_t>> classes;  // domain indices per class
    std::vector<std::uint32_t> class_of;              // domain index -> class
    std::vector<std::uint32_t> residue;               // codomain index -> residue index
  };

  RingPtr domain_;
  RingPtr codomain_;
  std::vector<DivisorData> divisors_;
};

// Definitional check over all monic divisors h of g with deg h >= 1 and all
// pairs of representatives; on failure reports (h, h1, h2).
CongruenceResult is_congruence_preserving(const FunctionTable& sigma);

enum class CpfEngine {
  kExhaustive,    // all |g|^{q^n} tables through the checker
  kBacktracking,  // degree-layered extension with pruning on real congruences
};

// Number of congruence preserving functions A_f -> A_g by enumeration.
std::uint64_t count_cpf_bruteforce(const Poly& f, const Poly& g, CpfEngine engine,
                                   const EnumerationGuard& guard = {});

// Visit every congruence preserving table (as codomain codes) found by the
// backtracking engine. Returns the number visited.
std::uint64_t enumerate_cpf(const Poly& f, const Poly& g,
                            const std::function<void(std::span<const std::uint32_t>)>& visit,
                            const EnumerationGuard& guard = {});

// The polynomial functions A_f -> A_g: the F_q-span of t^i * (h -> h^k mod g)
// over i < deg g and all k. Monomial tables are generated until the sequence
// k -> (h -> h^k) revisits an earlier table, after which it cycles.
class PolynomialFunctionModule {
 public:
  PolynomialFunctionModule(RingPtr domain, RingPtr codomain, const EnumerationGuard& guard = {});

  const ResidueRing& domain() const { return *domain_; }
  const ResidueRing& codomain() const { return *codomain_; }

  std::size_t rank() const { return pivots_.size(); }
  QExponent size() const;
  // The first repeated monomial table is h -> h^K with K = monomials_examined(),
  // equal to the table for k = cycle_start().
  std::uint64_t monomials_examined() const { return monomials_examined_; }
  std::uint64_t cycle_start() const { return cycle_start_; }

  bool contains(const FunctionTable& sigma) const;
  // Every polynomial function; throws GuardExceeded beyond max_closure_size.
  std::vector<FunctionTable> enumerate() const;

 private:
  using Vec = std::vector<Elem>;
  Vec to_vector(const FunctionTable& sigma) const;
  bool insert(Vec v);
  void reduce(Vec& v) const;

  RingPtr domain_;
  RingPtr codomain_;
  EnumerationGuard guard_;
  std::vector<Vec> rows_;  // echelon rows, pivot entry 1, sorted by pivot
  std::vector<std::size_t> pivots_;
  std::uint64_t monomials_examined_ = 0;
  std::uint64_t cycle_start_ = 0;
};

PolynomialFunctionModule polyfn_submodule(const Poly& f, const Poly& g, const EnumerationGuard& guard = {});
bool is_polynomial_function(const FunctionTable& sigma, const EnumerationGuard& guard = {});

struct SelfChenCensus {
  std::uint64_t total = 0;
  // q = 2 only: square-free; t^2 * sf; (t+1)^2 * sf; t^2 (t+1)^2 * sf.
  std::array<std::uint64_t, 4> components{};
};

// Polynomials of degree n (all leading coefficients, or monic only) that are
// self-Chen, tested one by one on their factorization exponents.
SelfChenCensus census_self_chen(const FieldPtr& field, std::size_t n, bool monic_only = false,
                                const EnumerationGuard& guard = {});
// Monic degree-n polynomials with gcd(g, g') = 1.
std::uint64_t census_squarefree(const FieldPtr& field, std::size_t n, const EnumerationGuard& guard = {});

}  // namespace cpf
