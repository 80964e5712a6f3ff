#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpf {

// Canonical index of an element of F_q: the mixed-radix value of its
// coordinates in the power basis of the generator u, base p, lowest
// coordinate least significant. Index 0 is zero, index 1 is one.
using Elem = std::uint8_t;

inline constexpr unsigned kDefaultMaxQ = 16;
inline constexpr unsigned kHardMaxQ = 256;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_q with q = p^m, represented by full addition/multiplication tables over
// canonical indices. Immutable after construction.
class Field {
 public:
  // F_p.
  static FieldPtr prime(unsigned p, unsigned max_q = kDefaultMaxQ);
  // F_p[u]/(modulus). `modulus` holds coefficients in F_p, low degree first,
  // and must be monic irreducible of degree m >= 2. m == 1 ignores modulus.
  static FieldPtr extension(unsigned p, unsigned m, std::vector<unsigned> modulus,
                            unsigned max_q = kDefaultMaxQ);
  // Same as extension() with the modulus given as text in `u`, e.g. "u^2+u+1".
  static FieldPtr extension(unsigned p, unsigned m, std::string_view modulus,
                            unsigned max_q = kDefaultMaxQ);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned q() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  // Empty for prime fields.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  // Throws DomainError for a == 0.
  Elem inv(Elem a) const;

  // Coordinates in [0, p), length m, lowest power of u first.
  std::vector<unsigned> coords(Elem a) const;
  Elem from_coords(std::span<const unsigned> coords) const;
  // Throws DomainError for k >= q.
  Elem from_index(std::size_t k) const;

  // Integer for prime fields, polynomial in u otherwise ("u+1", "2u^2").
  std::string format(Elem a) const;
  // Inverse of format(); throws ParseError.
  Elem parse(std::string_view text) const;

  // Same (p, m, modulus).
  bool same_as(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
  }

  std::string description() const;

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

// Value-semantic element handle for user-facing code; hot paths use Elem
// together with the owning Field directly.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem index);

  const FieldPtr& field() const { return field_; }
  Elem index() const { return index_; }
  std::vector<unsigned> coords() const { return field_->coords(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const {
    return index_ == o.index_ && field_->same_as(*o.field_);
  }

  std::string to_string() const { return field_->format(index_); }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    return os << a.to_string();
  }

 private:
  FieldPtr field_;
  Elem index_;
};

bool is_prime(unsigned n);

// An ordering a_0 = 0, a_1 = 1, a_2, ..., a_{q-1} of F_q used for q-adic
// digit decoding. The canonical ordering is index order.
class FieldOrder {
 public:
  explicit FieldOrder(const Field& field);
  // `order` must be a permutation of [0, q) with order[0] = 0, order[1] = 1.
  FieldOrder(const Field& field, std::vector<Elem> order);

  Elem element(unsigned digit) const { return order_[digit]; }
  unsigned digit(Elem a) const { return position_[a]; }
  unsigned size() const { return static_cast<unsigned>(order_.size()); }

 private:
  std::vector<Elem> order_;
  std::vector<unsigned> position_;
};

}  // namespace cpf
