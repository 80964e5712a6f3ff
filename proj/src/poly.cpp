#include "cpf/poly.hpp"

#include <algorithm>
#include <functional>

#include "cpf/errors.hpp"
#include "term_parser.hpp"

namespace cpf {
namespace {

constexpr std::size_t kMaxParsedExponent = 4096;

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem c : c_)
    if (c >= field_->q()) throw DomainError("polynomial coefficient out of field");
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  if (!field_->same_as(*o.field_)) throw DomainError("polynomials over different fields");
}

Elem Poly::lead() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], c);
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  Poly r(field_);
  if (is_zero()) return r;
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    // i * c_i, with i reduced into the prime subfield.
    const Elem i_mod_p = static_cast<Elem>(i % field_->p());
    r.c_[i - 1] = field_->mul(i_mod_p, c_[i]);
  }
  r.trim();
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_field(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_field(b);
  Poly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const Field& F = *a.field_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  const Field& F = *field_;
  auto coef_text = [&](Elem c) {
    if (c < F.p()) return std::to_string(c);
    return "(" + F.format(c) + ")";
  };
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += coef_text(c);
      continue;
    }
    if (c != 1) out += coef_text(c);
    out += 't';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Field& F = a.F();
  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Poly(a.field()), a};
  std::vector<Elem> quo(rem.size() - db, 0);
  const Elem lead_inv = F.inv(bc.back());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem factor = F.mul(rem[k], lead_inv);
    if (factor == 0) continue;
    quo[k - db] = factor;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = F.sub(rem[k - db + i], F.mul(factor, bc[i]));
    }
  }
  rem.resize(db);
  return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [quo, rem] = divrem(a, b);
  if (!rem.is_zero()) throw InvariantViolation(b.to_string() + " does not divide " + a.to_string());
  return quo;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, 1), s1(F);
  Poly t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [quo, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, rem);
    s0 = std::exchange(s1, s0 - quo * s1);
    t0 = std::exchange(t1, t0 - quo * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem normalizer = F->inv(r0.lead());
  return {r0.scaled(normalizer), s0.scaled(normalizer), t0.scaled(normalizer)};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  auto eg = extended_gcd(a % m, m);
  if (!eg.gcd.is_one()) {
    throw DomainError(a.to_string() + " is not invertible modulo " + m.to_string());
  }
  return eg.s % m;
}

Poly pow(const Poly& a, std::size_t k) {
  Poly result = Poly::constant(a.field(), 1);
  Poly base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly pow_mod(const Poly& a, std::size_t k, const Poly& m) {
  Poly result = Poly::constant(a.field(), 1) % m;
  Poly base = a % m;
  while (k > 0) {
    if (k & 1) result = (result * base) % m;
    k >>= 1;
    if (k) base = (base * base) % m;
  }
  return result;
}

std::uint64_t norm(const Poly& f) {
  if (f.is_zero()) throw DomainError("|0| is undefined");
  std::uint64_t r = 1;
  const std::uint64_t q = f.F().q();
  for (std::size_t i = 0; i < f.degree().value(); ++i) {
    if (r > UINT64_MAX / q) throw DomainError("|f| overflows 64 bits");
    r *= q;
  }
  return r;
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
  const Field& F = *field;
  detail::TermScanner scanner(text, 't');
  std::function<Elem(detail::TermScanner&)> coef = [&F](detail::TermScanner& s) -> Elem {
    if (s.peek() == '(') {
      const std::string inner = s.read_parenthesized();
      return F.parse(inner);
    }
    const std::size_t v = s.read_uint();
    if (v >= F.p()) {
      s.fail("coefficient " + std::to_string(v) + " out of field F_" + std::to_string(F.q()));
    }
    return static_cast<Elem>(v);
  };
  std::vector<Elem> c;
  for (const auto& term : scanner.scan(coef)) {
    if (term.exponent > kMaxParsedExponent) scanner.fail("exponent too large");
    if (c.size() <= term.exponent) c.resize(term.exponent + 1, 0);
    Elem value = term.has_coef ? term.coef : Elem{1};
    if (term.negative) value = F.neg(value);
    c[term.exponent] = F.add(c[term.exponent], value);
  }
  return Poly(field, std::move(c));
}

Poly index_to_poly(const FieldPtr& field, std::uint64_t k) { return index_to_poly(field, k, FieldOrder(*field)); }

Poly index_to_poly(const FieldPtr& field, std::uint64_t k, const FieldOrder& order) {
  const std::uint64_t q = field->q();
  std::vector<Elem> c;
  while (k > 0) {
    c.push_back(order.element(static_cast<unsigned>(k % q)));
    k /= q;
  }
  return Poly(field, std::move(c));
}

std::uint64_t poly_to_index(const Poly& h) { return poly_to_index(h, FieldOrder(h.F())); }

std::uint64_t poly_to_index(const Poly& h, const FieldOrder& order) {
  const std::uint64_t q = h.F().q();
  std::uint64_t k = 0;
  const auto c = h.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (k > (UINT64_MAX - q) / q) throw DomainError("polynomial index overflows 64 bits");
    k = k * q + order.digit(c[i]);
  }
  return k;
}

std::vector<Poly> polys_below_degree(const FieldPtr& field, std::size_t n) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > (std::uint64_t{1} << 32) / field->q()) throw GuardExceeded("too many residues to enumerate");
    count *= field->q();
  }
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(index_to_poly(field, k));
  return out;
}

std::vector<Poly> enumerate_residues(const Poly& f) {
  if (f.is_constant()) throw DomainError("residues modulo a constant polynomial");
  return polys_below_degree(f.field(), f.degree().value());
}

Poly factorial(const FieldPtr& field, std::uint64_t k) { return factorial(field, k, FieldOrder(*field)); }

Poly factorial(const FieldPtr& field, std::uint64_t k, const FieldOrder& order) {
  Poly result = Poly::constant(field, 1);
  const Poly ak = index_to_poly(field, k, order);
  for (std::uint64_t i = 0; i < k; ++i) result *= ak - index_to_poly(field, i, order);
  return result;
}

}  // namespace cpf
