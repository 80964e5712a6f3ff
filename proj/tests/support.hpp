#pragma once

#include <random>
#include <string_view>

#include "cpf/field.hpp"
#include "cpf/poly.hpp"

namespace cpf::test {

inline FieldPtr gf2() { return Field::prime(2); }
inline FieldPtr gf3() { return Field::prime(3); }
inline FieldPtr gf4() { return Field::extension(2, 2, "u^2+u+1"); }

inline Poly poly(const FieldPtr& field, std::string_view text) { return parse_poly(field, text); }

// Uniform over polynomials of degree <= max_degree (and zero).
inline Poly random_poly(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<unsigned> coef(0, field->q() - 1);
  std::vector<Elem> c(max_degree + 1);
  for (Elem& x : c) x = static_cast<Elem>(coef(rng));
  return Poly(field, std::move(c));
}

inline Poly random_nonzero(const FieldPtr& field, std::mt19937_64& rng, std::size_t max_degree) {
  for (;;) {
    Poly p = random_poly(field, rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

}  // namespace cpf::test
