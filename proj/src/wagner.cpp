#include "cpf/wagner.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "cpf/errors.hpp"

namespace cpf {
namespace {

void require_irreducible(const Poly& prime) {
  if (prime.is_constant() || !prime.is_monic() || !is_irreducible(prime)) {
    throw DomainError("P-sequence needs a monic irreducible P, got " + prime.to_string());
  }
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 40) / base) throw GuardExceeded("P-sequence block beyond guard");
    r *= base;
  }
  return r;
}

}  // namespace

PSequence::PSequence(Poly prime) : prime_(std::move(prime)), d_(0) {
  require_irreducible(prime_);
  d_ = prime_.degree().value();
  base_ = polys_below_degree(prime_.field(), d_);
}

PSequence::PSequence(Poly prime, std::vector<Poly> base) : prime_(std::move(prime)), d_(0), base_(std::move(base)) {
  require_irreducible(prime_);
  d_ = prime_.degree().value();
  const std::uint64_t block = checked_pow(q(), d_);
  if (base_.size() != block) throw DomainError("P-sequence base must list all q^d polynomials of degree < d");
  if (!base_[0].is_zero() || !base_[1].is_one()) throw DomainError("P-sequence base must start with 0, 1");
  std::vector<bool> seen(block, false);
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (!(base_[i].degree() < prime_.degree())) throw DomainError("P-sequence base element of degree >= d");
    if (i >= 2 && base_[i].degree() < base_[i - 1].degree()) {
      throw DomainError("P-sequence base degrees must be non-decreasing");
    }
    const auto idx = poly_to_index(base_[i]);
    if (seen[idx]) throw DomainError("P-sequence base repeats " + base_[i].to_string());
    seen[idx] = true;
  }
}

Poly PSequence::element(std::uint64_t k) const {
  const std::uint64_t block = base_.size();
  std::vector<std::uint64_t> digits;
  while (k > 0) {
    digits.push_back(k % block);
    k /= block;
  }
  Poly result(prime_.field());
  for (std::size_t i = digits.size(); i-- > 0;) result = result * prime_ + base_[digits[i]];
  return result;
}

std::vector<Poly> PSequence::elements(std::uint64_t count) const {
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(element(k));
  return out;
}

std::size_t mu(std::uint64_t k, std::size_t d, unsigned q) {
  if (k == 0) throw DomainError("mu(k) needs k >= 1");
  if (d == 0 || q < 2) throw DomainError("mu(k) needs d >= 1 and q >= 2");
  std::size_t floor_log = 0;
  for (std::uint64_t r = k; r >= q; r /= q) ++floor_log;
  return floor_log / d;
}

namespace {

// Q_k(h) mod P^e given b_k and the prefix b_0..b_{k-1}.
Poly eval_quotient(const Poly& prime, std::size_t e, const Poly& modulus, const Poly& bk,
                   std::span<const Poly> prefix, const Poly& h) {
  const FieldPtr& F = prime.field();
  if (prefix.empty()) return Poly::constant(F, 1) % modulus;
  std::size_t num_val = 0;
  std::size_t den_val = 0;
  Poly num_unit = Poly::constant(F, 1);
  Poly den_unit = Poly::constant(F, 1);
  bool numerator_zero = false;
  for (const Poly& bj : prefix) {
    const Poly x = h - bj;
    if (x.is_zero()) {
      numerator_zero = true;
    } else if (!numerator_zero) {
      auto [v, unit] = split_valuation(prime, x);
      num_val += v;
      num_unit = (num_unit * unit) % modulus;
    }
    auto [v, unit] = split_valuation(prime, bk - bj);
    den_val += v;
    den_unit = (den_unit * unit) % modulus;
  }
  if (numerator_zero) return Poly(F);
  if (num_val < den_val) {
    throw InvariantViolation("Q_" + std::to_string(prefix.size()) + "(" + h.to_string() +
                             ") is not P-integral at " + prime.to_string());
  }
  const std::size_t shift = num_val - den_val;
  if (shift >= e) return Poly(F);
  return (pow(prime, shift) * num_unit * inverse_mod(den_unit, modulus)) % modulus;
}

}  // namespace

Poly eval_Qk(const PSequence& seq, std::size_t e, std::uint64_t k, const Poly& h) {
  if (e == 0) throw DomainError("precision e must be >= 1");
  const Poly modulus = pow(seq.prime(), e);
  const std::vector<Poly> prefix = seq.elements(k);
  return eval_quotient(seq.prime(), e, modulus, seq.element(k), prefix, h);
}

BinomialBasis::BinomialBasis(PSequence seq, std::size_t e, std::size_t n)
    : seq_(std::move(seq)), e_(e), n_(n), modulus_(pow(seq_.prime(), e)) {
  if (e_ == 0) throw DomainError("precision e must be >= 1");
  if (n_ == 0) throw DomainError("domain degree must be >= 1");
  const std::uint64_t count = checked_pow(seq_.q(), n_);
  if (count > (std::uint64_t{1} << 12)) throw GuardExceeded("binomial basis table beyond 2^12 points");
  points_ = seq_.elements(count);
  for (const Poly& b : points_) {
    if (!(b.degree() < Degree(n_))) {
      throw InvariantViolation("b-sequence point " + b.to_string() + " outside the residues of degree < " +
                               std::to_string(n_));
    }
  }
  const FieldPtr& F = modulus_.field();
  table_.assign(count * count, Poly(F));
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::span<const Poly> prefix(points_.data(), k);
    for (std::uint64_t i = k; i < count; ++i) {
      table_[k * count + i] = eval_quotient(seq_.prime(), e_, modulus_, points_[k], prefix, points_[i]);
    }
  }
}

std::shared_ptr<const BinomialBasis> binomial_basis(const PSequence& seq, std::size_t e, std::size_t n) {
  using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>, std::vector<std::uint64_t>, std::size_t,
                         std::size_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const BinomialBasis>> cache;
  const Field& F = seq.prime().F();
  std::vector<std::uint64_t> shape{poly_to_index(seq.prime())};
  for (const Poly& b : seq.base()) shape.push_back(poly_to_index(b));
  Key key{F.p(), F.m(), F.modulus(), std::move(shape), e, n};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const BinomialBasis>(seq, e, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace(std::move(key), std::move(basis)).first->second;
}

Poly eval_Bk(const PSequence& seq, std::size_t e, std::uint64_t k, const Poly& h, const Poly& f) {
  return eval_Qk(seq, e, k, reduce(h, f));
}

PrimePower prime_power_of(const ResidueRing& ring) {
  const auto& factors = ring.factorization().factors;
  if (factors.size() != 1) {
    throw DomainError("codomain modulus " + ring.modulus().to_string() + " is not a prime power");
  }
  return factors.front();
}

namespace {

const BinomialBasis& basis_for(const FunctionTable& sigma, std::shared_ptr<const BinomialBasis>& holder) {
  const PrimePower pp = prime_power_of(sigma.codomain());
  holder = binomial_basis(PSequence(pp.prime), pp.exponent, sigma.domain().degree());
  return *holder;
}

void check_compatible(const FunctionTable& sigma, const BinomialBasis& basis) {
  const PrimePower pp = prime_power_of(sigma.codomain());
  if (!(pp.prime == basis.sequence().prime()) || pp.exponent != basis.e()) {
    throw DomainError("basis (P, e) does not match the codomain of the table");
  }
  if (sigma.domain().degree() != basis.n()) throw DomainError("basis domain degree does not match the table");
}

}  // namespace

BasisCoefficients decompose(const FunctionTable& sigma) {
  std::shared_ptr<const BinomialBasis> holder;
  return decompose(sigma, basis_for(sigma, holder));
}

BasisCoefficients decompose(const FunctionTable& sigma, const BinomialBasis& basis) {
  check_compatible(sigma, basis);
  const Poly& modulus = basis.modulus();
  const auto& points = basis.points();
  BasisCoefficients out{basis.sequence().prime(), basis.e(), {}};
  out.coefficients.reserve(points.size());
  // Triangular solve: B_i(b_k) = 0 for i > k and B_k(b_k) = 1.
  for (std::uint64_t k = 0; k < points.size(); ++k) {
    Poly c = sigma(points[k]) % modulus;
    for (std::uint64_t i = 0; i < k; ++i) c -= out.coefficients[i] * basis.at(i, k);
    out.coefficients.push_back(c % modulus);
  }
  return out;
}

FunctionTable recompose(const BasisCoefficients& coefficients, const BinomialBasis& basis, RingPtr domain,
                        RingPtr codomain) {
  if (coefficients.coefficients.size() != basis.size()) throw DomainError("coefficient count does not match basis");
  const Poly& modulus = basis.modulus();
  std::vector<Poly> values(domain->size(), Poly(modulus.field()));
  const auto& points = basis.points();
  for (std::uint64_t i = 0; i < points.size(); ++i) {
    Poly v(modulus.field());
    for (std::uint64_t k = 0; k <= i; ++k) v += coefficients.coefficients[k] * basis.at(k, i);
    values[domain->index_of(points[i])] = codomain->reduce(v % modulus);
  }
  return FunctionTable(std::move(domain), std::move(codomain), std::move(values));
}

BasisVerdict is_cpf_via_basis(const FunctionTable& sigma) {
  std::shared_ptr<const BinomialBasis> holder;
  return is_cpf_via_basis(sigma, basis_for(sigma, holder));
}

BasisVerdict is_cpf_via_basis(const FunctionTable& sigma, const BinomialBasis& basis) {
  BasisVerdict out{true, decompose(sigma, basis), {}};
  const Poly& prime = basis.sequence().prime();
  const std::size_t d = basis.sequence().degree();
  const unsigned q = basis.sequence().q();
  for (std::uint64_t k = 1; k < out.coefficients.coefficients.size(); ++k) {
    CoefficientCheck check;
    check.k = k;
    check.mu = mu(k, d, q);
    check.valuation = valuation(prime, out.coefficients.coefficients[k], true);
    check.ok = check.valuation >= Valuation(check.mu);
    out.cpf = out.cpf && check.ok;
    out.checks.push_back(check);
  }
  return out;
}

CrtCharacterization crt_characterize(const FunctionTable& sigma) {
  CrtCharacterization out;
  for (const FunctionTable& part : crt_split(sigma)) {
    LocalVerdict local{prime_power_of(part.codomain()), is_cpf_via_basis(part)};
    out.cpf = out.cpf && local.verdict.cpf;
    out.parts.push_back(std::move(local));
  }
  return out;
}

}  // namespace cpf
