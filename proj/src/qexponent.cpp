#include "cpf/qexponent.hpp"

#include "cpf/errors.hpp"

namespace cpf {

QExponent::QExponent(unsigned q, BigInt exponent) : q_(q), exponent_(std::move(exponent)) {
  if (q_ < 2) throw DomainError("QExponent base must be >= 2");
  if (exponent_ < 0) throw DomainError("QExponent exponent must be non-negative");
}

std::optional<std::string> QExponent::decimal(unsigned render_bits) const {
  // q >= 2, so q^E >= 2^E.
  if (exponent_ >= render_bits) return std::nullopt;
  const BigInt v = value();
  if (v >= (BigInt(1) << render_bits)) return std::nullopt;
  return v.str();
}

BigInt QExponent::value() const {
  return boost::multiprecision::pow(BigInt(q_), static_cast<unsigned>(exponent_));
}

std::string QExponent::to_string() const { return std::to_string(q_) + "^" + exponent_.str(); }

std::strong_ordering QExponent::operator<=>(const QExponent& o) const {
  if (q_ != o.q_) throw DomainError("comparing counts with different bases");
  if (exponent_ < o.exponent_) return std::strong_ordering::less;
  if (exponent_ > o.exponent_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool QExponent::operator==(const QExponent& o) const { return (*this <=> o) == 0; }

}  // namespace cpf
