#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cpf/factor.hpp"
#include "cpf/poly.hpp"

namespace cpf {

// The unique element of {h : deg h < deg g} ∪ {0} congruent to h mod g.
// Throws DomainError for constant g.
Poly reduce(const Poly& h, const Poly& g);

// A_g = A / (g) with canonical representatives in index order.
class ResidueRing {
 public:
  explicit ResidueRing(Poly modulus);
  ResidueRing(Poly modulus, Factorization factorization);

  const Poly& modulus() const { return modulus_; }
  const Factorization& factorization() const { return factorization_; }
  const FieldPtr& field() const { return modulus_.field(); }
  std::size_t degree() const { return modulus_.degree().value(); }
  // |g| = q^{deg g}.
  std::uint64_t size() const { return size_; }

  Poly reduce(const Poly& h) const { return h % modulus_; }
  // Canonical index of the residue class of h.
  std::uint64_t index_of(const Poly& h) const { return poly_to_index(reduce(h)); }
  Poly element(std::uint64_t index) const;
  std::vector<Poly> elements() const { return enumerate_residues(modulus_); }

  // Same modulus up to a unit (hence the same ring with the same representatives).
  bool same_ring(const ResidueRing& o) const { return modulus_.monic() == o.modulus_.monic(); }

 private:
  Poly modulus_;
  Factorization factorization_;
  std::uint64_t size_;
};

using RingPtr = std::shared_ptr<const ResidueRing>;
RingPtr make_ring(const Poly& modulus);

// A total function sigma: A_f -> A_g; values[i] is the image of the i-th
// canonical representative of A_f (index order), reduced mod g.
class FunctionTable {
 public:
  FunctionTable(RingPtr domain, RingPtr codomain, std::vector<Poly> values);

  // Table of h -> fn(h) mod g over the canonical representatives h.
  static FunctionTable from_function(RingPtr domain, RingPtr codomain,
                                     const std::function<Poly(const Poly&)>& fn);
  // Constant function.
  static FunctionTable constant(RingPtr domain, RingPtr codomain, const Poly& value);
  // values[i] = codomain->element(codes[i]).
  static FunctionTable from_codes(RingPtr domain, RingPtr codomain, std::span<const std::uint32_t> codes);

  const ResidueRing& domain() const { return *domain_; }
  const ResidueRing& codomain() const { return *codomain_; }
  const RingPtr& domain_ptr() const { return domain_; }
  const RingPtr& codomain_ptr() const { return codomain_; }

  std::size_t size() const { return values_.size(); }
  std::span<const Poly> values() const { return values_; }
  const Poly& at(std::size_t index) const { return values_.at(index); }
  // Image of the class of h (h is reduced mod f first).
  const Poly& operator()(const Poly& h) const;

  // Canonical codomain indices of the values.
  std::vector<std::uint32_t> codes() const;

  bool operator==(const FunctionTable& o) const;

 private:
  RingPtr domain_;
  RingPtr codomain_;
  std::vector<Poly> values_;
};

// sigma_i = sigma mod P_i^{e_i}, in the order of the codomain factorization.
std::vector<FunctionTable> crt_split(const FunctionTable& sigma);

// Inverse of crt_split. `parts` must share a domain and their codomains must
// be powers of pairwise distinct monic irreducibles. The result lands in
// `target` when given (its modulus must equal the product up to a unit),
// otherwise in A_{prod P_i^{e_i}}.
FunctionTable crt_combine(std::span<const FunctionTable> parts, RingPtr target = nullptr);

}  // namespace cpf
