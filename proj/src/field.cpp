#include "cpf/field.hpp"

#include <algorithm>
#include <numeric>

#include "cpf/errors.hpp"
#include "term_parser.hpp"

namespace cpf {
namespace {

using Coords = std::vector<unsigned>;

// Polynomials over F_p as coordinate vectors, low degree first, used only to
// validate moduli and build the multiplication table.
void trim(Coords& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coords mod_fp(Coords a, const Coords& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = [&] {
    for (unsigned x = 1; x < p; ++x)
      if (x * b.back() % p == 1) return x;
    return 0u;
  }();
  while (a.size() >= b.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + (p - factor) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

bool irreducible_over_fp(const Coords& modulus, unsigned p) {
  const std::size_t m = modulus.size() - 1;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t deg = 1; 2 * deg <= m; ++deg) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::size_t k = 0; k < count; ++k) {
      Coords d(deg + 1, 0);
      std::size_t rest = k;
      for (std::size_t i = 0; i < deg; ++i) {
        d[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      d[deg] = 1;
      if (mod_fp(modulus, d, p).empty()) return false;
    }
  }
  return true;
}

Coords parse_u_poly(std::string_view text, unsigned p) {
  detail::TermScanner scanner(text, 'u');
  std::function<unsigned(detail::TermScanner&)> coef = [p](detail::TermScanner& s) {
    if (s.peek() == '(') s.fail("nested parentheses are not allowed in field elements");
    const std::size_t v = s.read_uint();
    if (v >= p) s.fail("coefficient " + std::to_string(v) + " out of F_" + std::to_string(p));
    return static_cast<unsigned>(v);
  };
  Coords out;
  for (const auto& term : scanner.scan(coef)) {
    if (term.exponent > 64) scanner.fail("exponent too large");
    if (out.size() <= term.exponent) out.resize(term.exponent + 1, 0);
    const unsigned c = term.has_coef ? term.coef : 1;
    const unsigned signed_c = term.negative ? (p - c) % p : c;
    out[term.exponent] = (out[term.exponent] + signed_c) % p;
  }
  trim(out);
  return out;
}

std::string format_coords(const Coords& c, char var) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldPtr Field::prime(unsigned p, unsigned max_q) { return extension(p, 1, Coords{}, max_q); }

FieldPtr Field::extension(unsigned p, unsigned m, std::string_view modulus, unsigned max_q) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  return extension(p, m, parse_u_poly(modulus, p), max_q);
}

FieldPtr Field::extension(unsigned p, unsigned m, Coords modulus, unsigned max_q) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw DomainError("field extension degree must be >= 1");
  std::size_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > std::min(max_q, kHardMaxQ)) {
      throw GuardExceeded("field size exceeds guard q <= " + std::to_string(std::min(max_q, kHardMaxQ)));
    }
  }
  if (m == 1) return FieldPtr(new Field(p, 1, {}));
  trim(modulus);
  if (modulus.size() != m + 1) {
    throw DomainError("field modulus must have degree " + std::to_string(m));
  }
  for (unsigned c : modulus)
    if (c >= p) throw DomainError("field modulus coefficient out of F_" + std::to_string(p));
  if (modulus.back() != 1) throw DomainError("field modulus must be monic");
  if (!irreducible_over_fp(modulus, p)) {
    throw DomainError("field modulus " + format_coords(modulus, 'u') + " is reducible over F_" +
                      std::to_string(p));
  }
  return FieldPtr(new Field(p, m, std::move(modulus)));
}

Field::Field(unsigned p, unsigned m, Coords modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  std::vector<Coords> c(q_);
  for (unsigned a = 0; a < q_; ++a) c[a] = coords(static_cast<Elem>(a));
  for (unsigned a = 0; a < q_; ++a) {
    Coords n(m_);
    for (unsigned i = 0; i < m_; ++i) n[i] = (p_ - c[a][i]) % p_;
    neg_[a] = from_coords(n);
    for (unsigned b = 0; b < q_; ++b) {
      Coords s(m_);
      for (unsigned i = 0; i < m_; ++i) s[i] = (c[a][i] + c[b][i]) % p_;
      add_[a * q_ + b] = from_coords(s);
      Coords prod(2 * m_ - 1, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + c[a][i] * c[b][j]) % p_;
      if (m_ > 1) prod = mod_fp(prod, modulus_, p_);
      prod.resize(m_, 0);
      mul_[a * q_ + b] = from_coords(prod);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inversion of zero in F_" + std::to_string(q_));
  return inv_[a];
}

std::vector<unsigned> Field::coords(Elem a) const {
  Coords out(m_);
  unsigned rest = a;
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

Elem Field::from_coords(std::span<const unsigned> coords) const {
  unsigned v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * p_ + coords[i] % p_;
  return static_cast<Elem>(v);
}

Elem Field::from_index(std::size_t k) const {
  if (k >= q_) {
    throw DomainError("field index " + std::to_string(k) + " out of range [0, " + std::to_string(q_) + ")");
  }
  return static_cast<Elem>(k);
}

std::string Field::format(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  Coords c = coords(a);
  trim(c);
  return format_coords(c, 'u');
}

Elem Field::parse(std::string_view text) const {
  Coords c = parse_u_poly(text, p_);
  if (c.size() > m_) {
    if (m_ == 1) throw ParseError("'" + std::string(text) + "' is not an element of F_" + std::to_string(p_));
    throw ParseError("'" + std::string(text) + "' has degree >= " + std::to_string(m_) + " in u");
  }
  c.resize(m_, 0);
  return from_coords(c);
}

std::string Field::description() const {
  if (m_ == 1) return "F_" + std::to_string(q_);
  return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[u]/(" + format_coords(modulus_, 'u') + ")";
}

FieldElement::FieldElement(FieldPtr field, Elem index) : field_(std::move(field)), index_(index) {
  if (index_ >= field_->q()) throw DomainError("field element index out of range");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, field_->add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, field_->sub(index_, o.index_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, field_->mul(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }

FieldOrder::FieldOrder(const Field& field) : order_(field.q()), position_(field.q()) {
  std::iota(order_.begin(), order_.end(), Elem{0});
  std::iota(position_.begin(), position_.end(), 0u);
}

FieldOrder::FieldOrder(const Field& field, std::vector<Elem> order)
    : order_(std::move(order)), position_(field.q(), field.q()) {
  if (order_.size() != field.q()) throw DomainError("field ordering must list all q elements");
  if (order_[0] != 0 || (field.q() > 1 && order_[1] != 1)) {
    throw DomainError("field ordering must start with 0, 1");
  }
  for (unsigned i = 0; i < order_.size(); ++i) {
    if (order_[i] >= field.q() || position_[order_[i]] != field.q()) {
      throw DomainError("field ordering is not a permutation");
    }
    position_[order_[i]] = i;
  }
}

}  // namespace cpf
