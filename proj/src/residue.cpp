#include "cpf/residue.hpp"

#include <algorithm>

#include "cpf/errors.hpp"

namespace cpf {

Poly reduce(const Poly& h, const Poly& g) {
  if (g.is_constant()) throw DomainError("reduction modulo a constant polynomial");
  return h % g;
}

ResidueRing::ResidueRing(Poly modulus) : ResidueRing(modulus, factorize(modulus)) {}

ResidueRing::ResidueRing(Poly modulus, Factorization factorization)
    : modulus_(std::move(modulus)), factorization_(std::move(factorization)), size_(0) {
  if (modulus_.is_constant()) throw DomainError("residue ring modulo a constant polynomial");
  size_ = norm(modulus_);
}

Poly ResidueRing::element(std::uint64_t index) const {
  if (index >= size_) throw DomainError("residue index out of range");
  return index_to_poly(field(), index);
}

RingPtr make_ring(const Poly& modulus) { return std::make_shared<const ResidueRing>(modulus); }

FunctionTable::FunctionTable(RingPtr domain, RingPtr codomain, std::vector<Poly> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (!domain_->field()->same_as(*codomain_->field())) {
    throw DomainError("function table domain and codomain over different fields");
  }
  if (values_.size() != domain_->size()) {
    throw DomainError("function table needs exactly " + std::to_string(domain_->size()) + " values");
  }
  for (const Poly& v : values_) {
    if (!(v.degree() < codomain_->modulus().degree())) {
      throw DomainError("function value " + v.to_string() + " is not reduced modulo " +
                        codomain_->modulus().to_string());
    }
  }
}

FunctionTable FunctionTable::from_function(RingPtr domain, RingPtr codomain,
                                           const std::function<Poly(const Poly&)>& fn) {
  std::vector<Poly> values;
  values.reserve(domain->size());
  for (const Poly& h : domain->elements()) values.push_back(codomain->reduce(fn(h)));
  return FunctionTable(std::move(domain), std::move(codomain), std::move(values));
}

FunctionTable FunctionTable::constant(RingPtr domain, RingPtr codomain, const Poly& value) {
  const Poly v = codomain->reduce(value);
  std::vector<Poly> values(domain->size(), v);
  return FunctionTable(std::move(domain), std::move(codomain), std::move(values));
}

FunctionTable FunctionTable::from_codes(RingPtr domain, RingPtr codomain, std::span<const std::uint32_t> codes) {
  std::vector<Poly> values;
  values.reserve(codes.size());
  for (std::uint32_t c : codes) values.push_back(codomain->element(c));
  return FunctionTable(std::move(domain), std::move(codomain), std::move(values));
}

const Poly& FunctionTable::operator()(const Poly& h) const { return values_[domain_->index_of(h)]; }

std::vector<std::uint32_t> FunctionTable::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(values_.size());
  for (const Poly& v : values_) out.push_back(static_cast<std::uint32_t>(poly_to_index(v)));
  return out;
}

bool FunctionTable::operator==(const FunctionTable& o) const {
  return domain_->same_ring(*o.domain_) && codomain_->same_ring(*o.codomain_) && values_ == o.values_;
}

std::vector<FunctionTable> crt_split(const FunctionTable& sigma) {
  std::vector<FunctionTable> parts;
  const Factorization& fac = sigma.codomain().factorization();
  for (const PrimePower& pp : fac.factors) {
    const Poly modulus = pp.value();
    auto ring = std::make_shared<const ResidueRing>(
        modulus, Factorization{modulus.field(), 1, {pp}});
    std::vector<Poly> values;
    values.reserve(sigma.size());
    for (const Poly& v : sigma.values()) values.push_back(v % modulus);
    parts.emplace_back(sigma.domain_ptr(), std::move(ring), std::move(values));
  }
  return parts;
}

FunctionTable crt_combine(std::span<const FunctionTable> parts, RingPtr target) {
  if (parts.empty()) throw DomainError("crt_combine needs at least one component");
  const FieldPtr& F = parts.front().domain().field();
  Factorization combined{F, 1, {}};
  for (const FunctionTable& part : parts) {
    if (!part.domain().same_ring(parts.front().domain())) throw DomainError("crt_combine: mismatched domains");
    const Factorization& fac = part.codomain().factorization();
    if (fac.factors.size() != 1) {
      throw DomainError("crt_combine: component modulus " + part.codomain().modulus().to_string() +
                        " is not a prime power");
    }
    for (const PrimePower& seen : combined.factors) {
      if (seen.prime == fac.factors.front().prime) throw DomainError("crt_combine: repeated prime in moduli");
    }
    combined.factors.push_back(fac.factors.front());
  }
  const Poly product = combined.expand();
  if (target) {
    if (!(target->modulus().monic() == product)) {
      throw DomainError("crt_combine: target modulus " + target->modulus().to_string() +
                        " is not the product of the component moduli");
    }
  } else {
    std::sort(combined.factors.begin(), combined.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    target = std::make_shared<const ResidueRing>(product, combined);
  }

  // x = sum v_i * M_i * (M_i^{-1} mod m_i)  mod M
  std::vector<Poly> weights;
  for (const FunctionTable& part : parts) {
    const Poly& m = part.codomain().modulus();
    const Poly cofactor = exact_div(product, m.monic());
    weights.push_back((cofactor * inverse_mod(cofactor, m)) % product);
  }
  std::vector<Poly> values;
  const std::size_t n = parts.front().size();
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly x(F);
    for (std::size_t j = 0; j < parts.size(); ++j) x += parts[j].at(i) * weights[j];
    values.push_back(x % product);
  }
  return FunctionTable(parts.front().domain_ptr(), std::move(target), std::move(values));
}

}  // namespace cpf
