#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpf/field.hpp"

namespace cpf {

// Degree of a polynomial; the zero polynomial has degree -inf, which orders
// below every natural degree and has no integer value.
class Degree {
 public:
  static Degree neg_inf() { return Degree(); }
  explicit Degree(std::size_t d) : d_(d) {}

  bool is_neg_inf() const { return !d_.has_value(); }
  // Throws std::bad_optional_access for -inf.
  std::size_t value() const { return d_.value(); }

  auto operator<=>(const Degree&) const = default;
  bool operator==(std::size_t d) const { return d_ == d; }

  std::string to_string() const { return d_ ? std::to_string(*d_) : "-inf"; }

 private:
  Degree() = default;
  std::optional<std::size_t> d_;
};

// Dense polynomial in t over F_q, lowest degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  // c * t^k
  static Poly monomial(FieldPtr field, Elem c, std::size_t k);
  static Poly t(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  std::span<const Elem> coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  // Throws DomainError on the zero polynomial.
  Elem lead() const;

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly shifted(std::size_t k) const;  // * t^k
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  // Coefficient equality; both operands must share a field.
  bool operator==(const Poly& o) const { return c_ == o.c_ && field_->same_as(*o.field_); }

  // Order of canonical indices (degree first, then top coefficients).
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& a) { return os << a.to_string(); }

 private:
  void trim();
  void check_same_field(const Poly& o) const;

  FieldPtr field_;
  std::vector<Elem> c_;
};

// Throws DomainError for a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Exact quotient; throws InvariantViolation when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b == gcd
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow(const Poly& a, std::size_t k);
Poly pow_mod(const Poly& a, std::size_t k, const Poly& m);

// |f| = q^{deg f} for nonzero f; throws on zero or overflow.
std::uint64_t norm(const Poly& f);

// Text form: terms `c*t^k`, `ct^k`, `t^k`, `t`, `c` joined by `+`/`-`.
// Coefficients are integers in [0, p) or `(u-polynomial)` in extension fields.
Poly parse_poly(const FieldPtr& field, std::string_view text);

// q-adic indexing a_k = sum a_{l_i} t^i, where sum l_i q^i is the q-adic
// expansion of k and a_l is the l-th element in `order`.
Poly index_to_poly(const FieldPtr& field, std::uint64_t k);
Poly index_to_poly(const FieldPtr& field, std::uint64_t k, const FieldOrder& order);
std::uint64_t poly_to_index(const Poly& h);
std::uint64_t poly_to_index(const Poly& h, const FieldOrder& order);

// The canonical representatives {h : deg h < deg f} ∪ {0}, in index order.
// Throws DomainError for constant f.
std::vector<Poly> enumerate_residues(const Poly& f);
// q^n representatives of degree < n, index order.
std::vector<Poly> polys_below_degree(const FieldPtr& field, std::size_t n);

// prod_{i<k} (a_k - a_i); equal to 1 for k == 0.
Poly factorial(const FieldPtr& field, std::uint64_t k);
Poly factorial(const FieldPtr& field, std::uint64_t k, const FieldOrder& order);

}  // namespace cpf
