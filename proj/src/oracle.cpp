#include "cpf/oracle.hpp"

#include <map>
#include <string>

#include "cpf/errors.hpp"
#include "cpf/factor.hpp"

namespace cpf {
namespace {

// base^exp, or nullopt above limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  return r <= limit ? std::optional(r) : std::nullopt;
}

void require_degree(const Poly& f, const Poly& g, const EnumerationGuard& guard) {
  if (f.is_constant() || g.is_constant()) throw DomainError("f and g must have positive degree");
  if (f.degree().value() > guard.max_degree || g.degree().value() > guard.max_degree) {
    throw GuardExceeded("degree beyond the oracle guard of " + std::to_string(guard.max_degree));
  }
}

}  // namespace

CongruenceChecker::CongruenceChecker(RingPtr domain, RingPtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (!domain_->field()->same_as(*codomain_->field())) throw DomainError("checker rings over different fields");
  const std::vector<Poly> reps = domain_->elements();
  const std::vector<Poly> targets = codomain_->elements();
  for (const Poly& h : monic_divisors(codomain_->factorization())) {
    if (h.is_constant()) continue;
    DivisorData data{h, {}, {}, {}};
    std::map<std::uint64_t, std::uint32_t> class_ids;
    data.class_of.reserve(reps.size());
    for (std::uint32_t i = 0; i < reps.size(); ++i) {
      const std::uint64_t r = poly_to_index(reps[i] % h);
      auto [it, fresh] = class_ids.try_emplace(r, static_cast<std::uint32_t>(data.classes.size()));
      if (fresh) data.classes.emplace_back();
      data.classes[it->second].push_back(i);
      data.class_of.push_back(it->second);
    }
    data.residue.reserve(targets.size());
    for (const Poly& v : targets) data.residue.push_back(static_cast<std::uint32_t>(poly_to_index(v % h)));
    divisors_.push_back(std::move(data));
  }
}

bool CongruenceChecker::preserves(std::span<const std::uint32_t> codes) const {
  for (const DivisorData& div : divisors_) {
    for (const auto& cls : div.classes) {
      const std::uint32_t r0 = div.residue[codes[cls.front()]];
      for (std::size_t j = 1; j < cls.size(); ++j) {
        if (div.residue[codes[cls[j]]] != r0) return false;
      }
    }
  }
  return true;
}

CongruenceResult CongruenceChecker::check(std::span<const std::uint32_t> codes) const {
  if (codes.size() != domain_->size()) throw DomainError("table size does not match the domain");
  for (const DivisorData& div : divisors_) {
    for (const auto& cls : div.classes) {
      const std::uint32_t r0 = div.residue[codes[cls.front()]];
      for (std::size_t j = 1; j < cls.size(); ++j) {
        if (div.residue[codes[cls[j]]] != r0) {
          return {false, CongruenceWitness{div.divisor, domain_->element(cls.front()), domain_->element(cls[j])}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

CongruenceResult is_congruence_preserving(const FunctionTable& sigma) {
  const CongruenceChecker checker(sigma.domain_ptr(), sigma.codomain_ptr());
  const std::vector<std::uint32_t> codes = sigma.codes();
  return checker.check(codes);
}

// Assigns values to the domain representatives in index order. Position i is
// constrained, for each divisor h, by the first earlier representative in its
// class mod h; every member of a class agrees with that anchor mod h.
class CpfBacktracker {
 public:
  CpfBacktracker(const CongruenceChecker& checker, std::uint64_t node_budget)
      : checker_(checker), budget_(node_budget) {
    const std::size_t size = checker_.domain().size();
    anchors_.resize(size);
    for (std::size_t k = 0; k < checker_.divisors_.size(); ++k) {
      const auto& div = checker_.divisors_[k];
      for (const auto& cls : div.classes) {
        for (std::size_t j = 1; j < cls.size(); ++j) anchors_[cls[j]].push_back({k, cls.front()});
      }
    }
    codes_.assign(size, 0);
  }

  std::uint64_t run(const std::function<void(std::span<const std::uint32_t>)>& visit) {
    visit_ = &visit;
    count_ = 0;
    nodes_ = 0;
    descend(0);
    return count_;
  }

 private:
  struct Anchor {
    std::size_t divisor;
    std::uint32_t earlier;
  };

  void descend(std::size_t pos) {
    if (++nodes_ > budget_) throw GuardExceeded("backtracking search beyond the node budget");
    if (pos == codes_.size()) {
      ++count_;
      if (*visit_) (*visit_)(codes_);
      return;
    }
    const auto target_count = static_cast<std::uint32_t>(checker_.codomain().size());
    for (std::uint32_t v = 0; v < target_count; ++v) {
      bool ok = true;
      for (const Anchor& a : anchors_[pos]) {
        const auto& residue = checker_.divisors_[a.divisor].residue;
        if (residue[v] != residue[codes_[a.earlier]]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      codes_[pos] = v;
      descend(pos + 1);
    }
  }

  const CongruenceChecker& checker_;
  std::uint64_t budget_;
  std::vector<std::vector<Anchor>> anchors_;
  std::vector<std::uint32_t> codes_;
  const std::function<void(std::span<const std::uint32_t>)>* visit_ = nullptr;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

std::uint64_t count_cpf_bruteforce(const Poly& f, const Poly& g, CpfEngine engine, const EnumerationGuard& guard) {
  require_degree(f, g, guard);
  const CongruenceChecker checker(make_ring(f), make_ring(g));
  if (engine == CpfEngine::kBacktracking) {
    return CpfBacktracker(checker, 4 * guard.max_total_functions).run({});
  }
  const std::uint64_t size = checker.domain().size();
  const std::uint64_t targets = checker.codomain().size();
  if (!bounded_pow(targets, size, guard.max_total_functions)) {
    throw GuardExceeded("|g|^|f| functions exceed the enumeration guard of " +
                        std::to_string(guard.max_total_functions));
  }
  std::vector<std::uint32_t> codes(size, 0);
  std::uint64_t count = 0;
  while (true) {
    if (checker.preserves(codes)) ++count;
    std::size_t i = 0;
    while (i < size && ++codes[i] == targets) codes[i++] = 0;
    if (i == size) break;
  }
  return count;
}

std::uint64_t enumerate_cpf(const Poly& f, const Poly& g,
                            const std::function<void(std::span<const std::uint32_t>)>& visit,
                            const EnumerationGuard& guard) {
  require_degree(f, g, guard);
  const CongruenceChecker checker(make_ring(f), make_ring(g));
  return CpfBacktracker(checker, 4 * guard.max_total_functions).run(visit);
}

PolynomialFunctionModule::PolynomialFunctionModule(RingPtr domain, RingPtr codomain, const EnumerationGuard& guard)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), guard_(guard) {
  if (!domain_->field()->same_as(*codomain_->field())) throw DomainError("module rings over different fields");
  if (domain_->degree() > guard_.max_degree || codomain_->degree() > guard_.max_degree) {
    throw GuardExceeded("degree beyond the oracle guard of " + std::to_string(guard_.max_degree));
  }
  const FieldPtr& F = domain_->field();
  const Poly& g = codomain_->modulus();
  const std::vector<Poly> reps = domain_->elements();

  // Monomial tables h -> h^k mod g, by code, until one repeats.
  std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
  std::vector<Poly> current(reps.size(), Poly::constant(F, 1) % g);
  for (std::uint64_t k = 0;; ++k) {
    std::vector<std::uint32_t> key;
    key.reserve(current.size());
    for (const Poly& v : current) key.push_back(static_cast<std::uint32_t>(poly_to_index(v)));
    auto [it, fresh] = seen.try_emplace(std::move(key), k);
    if (!fresh) {
      monomials_examined_ = k;
      cycle_start_ = it->second;
      break;
    }
    for (std::size_t i = 0; i < codomain_->degree(); ++i) {
      std::vector<Poly> scaled;
      scaled.reserve(current.size());
      for (const Poly& v : current) scaled.push_back(v.shifted(i) % g);
      insert(to_vector(FunctionTable(domain_, codomain_, std::move(scaled))));
    }
    for (std::size_t i = 0; i < reps.size(); ++i) current[i] = (current[i] * reps[i]) % g;
  }
}

PolynomialFunctionModule::Vec PolynomialFunctionModule::to_vector(const FunctionTable& sigma) const {
  const std::size_t width = codomain_->degree();
  Vec v(sigma.size() * width, 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto& c = sigma.at(i).coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) v[i * width + j] = c[j];
  }
  return v;
}

void PolynomialFunctionModule::reduce(Vec& v) const {
  const Field& F = *domain_->field();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = v[pivots_[r]];
    if (c == 0) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < v.size(); ++j) {
      if (row[j] != 0) v[j] = F.sub(v[j], F.mul(c, row[j]));
    }
  }
}

bool PolynomialFunctionModule::insert(Vec v) {
  reduce(v);
  std::size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;
  const Field& F = *domain_->field();
  const Elem inv = F.inv(v[pivot]);
  for (std::size_t j = pivot; j < v.size(); ++j) v[j] = F.mul(v[j], inv);
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

QExponent PolynomialFunctionModule::size() const { return QExponent(domain_->field()->q(), BigInt(rank())); }

bool PolynomialFunctionModule::contains(const FunctionTable& sigma) const {
  if (!sigma.domain().same_ring(*domain_) || !sigma.codomain().same_ring(*codomain_)) {
    throw DomainError("table is not a function between the module's rings");
  }
  Vec v = to_vector(sigma);
  reduce(v);
  for (Elem c : v) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<FunctionTable> PolynomialFunctionModule::enumerate() const {
  const unsigned q = domain_->field()->q();
  if (!bounded_pow(q, rank(), guard_.max_closure_size)) {
    throw GuardExceeded("closure of size " + size().to_string() + " exceeds the guard of " +
                        std::to_string(guard_.max_closure_size));
  }
  const Field& F = *domain_->field();
  const FieldPtr& field = domain_->field();
  const std::size_t width = codomain_->degree();
  const std::size_t length = domain_->size();
  std::vector<FunctionTable> out;
  std::vector<Elem> coef(rank(), 0);
  while (true) {
    Vec v(length * width, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (coef[r] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(coef[r], rows_[r][j]));
    }
    std::vector<Poly> values;
    values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      values.emplace_back(field, std::vector<Elem>(v.begin() + static_cast<std::ptrdiff_t>(i * width),
                                                   v.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
    }
    out.emplace_back(domain_, codomain_, std::move(values));
    std::size_t i = 0;
    while (i < coef.size() && ++coef[i] == q) coef[i++] = 0;
    if (i == coef.size()) break;
  }
  return out;
}

PolynomialFunctionModule polyfn_submodule(const Poly& f, const Poly& g, const EnumerationGuard& guard) {
  if (f.is_constant() || g.is_constant()) throw DomainError("f and g must have positive degree");
  return PolynomialFunctionModule(make_ring(f), make_ring(g), guard);
}

bool is_polynomial_function(const FunctionTable& sigma, const EnumerationGuard& guard) {
  return PolynomialFunctionModule(sigma.domain_ptr(), sigma.codomain_ptr(), guard).contains(sigma);
}

SelfChenCensus census_self_chen(const FieldPtr& field, std::size_t n, bool monic_only,
                                const EnumerationGuard& guard) {
  if (n > guard.max_degree) throw GuardExceeded("census degree beyond the guard");
  const unsigned q = field->q();
  const std::uint64_t block = *bounded_pow(q, n, ~std::uint64_t{0});
  const Poly t = Poly::t(field);
  const Poly t1 = t + Poly::constant(field, 1);
  SelfChenCensus out;
  const Elem first_lead = 1;
  const Elem last_lead = monic_only ? 1 : static_cast<Elem>(q - 1);
  for (std::uint64_t low = 0; low < block; ++low) {
    const Poly rest = index_to_poly(field, low);
    const Factorization fac = n == 0 ? Factorization{field, 1, {}} : factorize(Poly::monomial(field, 1, n) + rest);
    std::size_t vt = 0;
    std::size_t vt1 = 0;
    bool ok = true;
    for (const PrimePower& pp : fac.factors) {
      if (q == 2 && pp.prime == t) {
        vt = pp.exponent;
      } else if (q == 2 && pp.prime == t1) {
        vt1 = pp.exponent;
      } else if (pp.exponent > 1) {
        ok = false;
      }
    }
    ok = ok && vt <= 2 && vt1 <= 2;
    if (!ok) continue;
    // Leading coefficients only scale the polynomial; the exponents are fixed.
    const std::uint64_t scale = last_lead - first_lead + 1;
    out.total += scale;
    if (q == 2) out.components[(vt == 2 ? 1 : 0) + (vt1 == 2 ? 2 : 0)] += scale;
  }
  return out;
}

std::uint64_t census_squarefree(const FieldPtr& field, std::size_t n, const EnumerationGuard& guard) {
  if (n > guard.max_degree) throw GuardExceeded("census degree beyond the guard");
  if (n == 0) return 1;
  const std::uint64_t block = *bounded_pow(field->q(), n, ~std::uint64_t{0});
  std::uint64_t count = 0;
  for (std::uint64_t low = 0; low < block; ++low) {
    const Poly g = Poly::monomial(field, 1, n) + index_to_poly(field, low);
    if (gcd(g, g.derivative()).is_one()) ++count;
  }
  return count;
}

}  // namespace cpf
