#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cpf {

// N ∪ {∞}. Used for P-adic valuations (v_P(0) = ∞) and the gamma threshold.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::size_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.value_ = kInf;
    return r;
  }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }

  std::size_t value() const {
    if (is_infinite()) throw std::logic_error("ExtNat::value() on infinity");
    return value_;
  }

  constexpr auto operator<=>(const ExtNat&) const = default;

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtNat& v) {
    return os << v.to_string();
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t value_ = 0;
};

using Valuation = ExtNat;
using GammaValue = ExtNat;

}  // namespace cpf
