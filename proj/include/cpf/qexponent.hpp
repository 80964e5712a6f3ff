#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cpf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kDefaultRenderBits = 64;

// A count of the form q^E with exact exponent E >= 0. Every count in this
// library (M(f,g), N(f,g), table totals) has this shape.
class QExponent {
 public:
  QExponent(unsigned q, BigInt exponent);

  unsigned q() const { return q_; }
  const BigInt& exponent() const { return exponent_; }

  // q^E as a decimal string, only when q^E < 2^render_bits.
  std::optional<std::string> decimal(unsigned render_bits = kDefaultRenderBits) const;
  // Exact value; callers must bound the exponent themselves.
  BigInt value() const;

  // "q^E", e.g. "2^14".
  std::string to_string() const;

  // Throws DomainError when the bases differ.
  std::strong_ordering operator<=>(const QExponent& o) const;
  bool operator==(const QExponent& o) const;

  friend std::ostream& operator<<(std::ostream& os, const QExponent& e) { return os << e.to_string(); }

 private:
  unsigned q_;
  BigInt exponent_;
};

}  // namespace cpf
