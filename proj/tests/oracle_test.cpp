#include <gtest/gtest.h>

#include <random>

#include "cpf/chen.hpp"
#include "cpf/counting.hpp"
#include "cpf/errors.hpp"
#include "cpf/oracle.hpp"
#include "cpf/wagner.hpp"
#include "support.hpp"

namespace cpf {
namespace {

using test::gf2;
using test::gf3;
using test::poly;

std::vector<Poly> monic_of_degree_at_most(const FieldPtr& F, std::size_t max_degree) {
  std::vector<Poly> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (const Poly& low : polys_below_degree(F, d)) out.push_back(Poly::monomial(F, 1, d) + low);
  }
  return out;
}

// F(x) = sum_i a_i x^i with random coefficients a_i in A.
FunctionTable random_polynomial_function(const RingPtr& dom, const RingPtr& cod, std::mt19937_64& rng) {
  const FieldPtr& F = dom->field();
  std::vector<Poly> coeffs;
  for (int i = 0; i < 6; ++i) coeffs.push_back(test::random_poly(F, rng, 4));
  return FunctionTable::from_function(dom, cod, [&](const Poly& h) {
    Poly acc(F);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * h + *it) % cod->modulus();
    return acc;
  });
}

TEST(Checker, Witness) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^2"));
  const RingPtr cod = make_ring(poly(F, "t"));
  const FunctionTable sigma(dom, cod, {poly(F, "0"), poly(F, "0"), poly(F, "1"), poly(F, "0")});
  const CongruenceResult r = is_congruence_preserving(sigma);
  ASSERT_FALSE(r.preserving);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->divisor, poly(F, "t"));
  EXPECT_EQ(r.witness->h1, poly(F, "0"));
  EXPECT_EQ(r.witness->h2, poly(F, "t"));
  EXPECT_TRUE(is_congruence_preserving(FunctionTable::constant(dom, cod, poly(F, "1"))).preserving);
}

TEST(Checker, WitnessIsGenuine) {
  std::mt19937_64 rng(41);
  const FieldPtr F = gf3();
  const RingPtr dom = make_ring(poly(F, "t^2+1"));
  const RingPtr cod = make_ring(poly(F, "t^2"));
  std::uniform_int_distribution<std::uint32_t> pick(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> codes(9);
    for (auto& c : codes) c = pick(rng);
    const FunctionTable sigma = FunctionTable::from_codes(dom, cod, codes);
    const CongruenceResult r = is_congruence_preserving(sigma);
    if (r.preserving) continue;
    const CongruenceWitness& w = *r.witness;
    EXPECT_TRUE(divides(w.divisor, cod->modulus()));
    EXPECT_TRUE(divides(w.divisor, w.h1 - w.h2));
    EXPECT_FALSE(divides(w.divisor, sigma(w.h1) - sigma(w.h2)));
  }
}

TEST(Checker, PolynomialFunctionsPreserveCongruences) {
  std::mt19937_64 rng(43);
  for (const FieldPtr& F : {gf2(), gf3()}) {
    const auto polys = monic_of_degree_at_most(F, 3);
    for (std::size_t fi = 0; fi < polys.size(); fi += F->q() == 2 ? 1 : 4) {
      for (std::size_t gi = 0; gi < polys.size(); gi += F->q() == 2 ? 1 : 3) {
        const RingPtr dom = make_ring(polys[fi]);
        const RingPtr cod = make_ring(polys[gi]);
        const CongruenceChecker checker(dom, cod);
        for (int trial = 0; trial < 200; ++trial) {
          ASSERT_TRUE(checker.preserves(random_polynomial_function(dom, cod, rng).codes()))
              << polys[fi] << " -> " << polys[gi];
        }
      }
    }
  }
}

TEST(BruteForce, Examples) {
  const FieldPtr F = gf2();
  EXPECT_EQ(count_cpf_bruteforce(poly(F, "t^2"), poly(F, "t"), CpfEngine::kExhaustive), 4u);
  EXPECT_EQ(count_cpf_bruteforce(poly(F, "t"), poly(F, "t^2"), CpfEngine::kExhaustive), 16u);
  EXPECT_EQ(count_cpf_bruteforce(poly(F, "t^2"), poly(F, "t^2"), CpfEngine::kExhaustive), 64u);
  EXPECT_EQ(count_cpf_bruteforce(poly(F, "t^3"), poly(F, "t^3"), CpfEngine::kBacktracking), 16384u);
}

TEST(BruteForce, EnginesAgreeAndMatchFormula) {
  for (const FieldPtr& F : {gf2(), gf3()}) {
    const auto polys = monic_of_degree_at_most(F, F->q() == 2 ? 3 : 2);
    for (const Poly& f : polys) {
      for (const Poly& g : polys) {
        if (count_cpf(f, g).value() > (BigInt(1) << 20)) continue;
        const std::uint64_t b = count_cpf_bruteforce(f, g, CpfEngine::kBacktracking);
        EXPECT_EQ(count_cpf(f, g).value(), b) << f << " -> " << g;
        try {
          EXPECT_EQ(count_cpf_bruteforce(f, g, CpfEngine::kExhaustive), b) << f << " -> " << g;
        } catch (const GuardExceeded&) {
        }
      }
    }
  }
}

TEST(BruteForce, Guards) {
  const FieldPtr F = gf2();
  EXPECT_THROW(count_cpf_bruteforce(poly(F, "t^3"), poly(F, "t^3"), CpfEngine::kExhaustive), GuardExceeded);
  EnumerationGuard tiny;
  tiny.max_total_functions = 10;
  EXPECT_THROW(count_cpf_bruteforce(poly(F, "t^2"), poly(F, "t^2"), CpfEngine::kBacktracking, tiny),
               GuardExceeded);
  EnumerationGuard shallow;
  shallow.max_degree = 2;
  EXPECT_THROW(count_cpf_bruteforce(poly(F, "t^3"), poly(F, "t"), CpfEngine::kBacktracking, shallow),
               GuardExceeded);
  EXPECT_THROW(count_cpf_bruteforce(poly(F, "1"), poly(F, "t"), CpfEngine::kBacktracking), DomainError);
}

TEST(BruteForce, EnumerationVisitsOnlyCpTables) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^3"));
  const RingPtr cod = make_ring(poly(F, "t^2+t"));
  const CongruenceChecker checker(dom, cod);
  std::uint64_t seen = 0;
  const std::uint64_t n = enumerate_cpf(dom->modulus(), cod->modulus(), [&](std::span<const std::uint32_t> codes) {
    ASSERT_TRUE(checker.preserves(codes));
    ++seen;
  });
  EXPECT_EQ(seen, n);
  EXPECT_EQ(count_cpf(dom->modulus(), cod->modulus()).value(), n);
}

TEST(Closure, Examples) {
  const FieldPtr F = gf2();
  EXPECT_EQ(polyfn_submodule(poly(F, "t"), poly(F, "t")).size(), QExponent(2, 2));
  EXPECT_EQ(polyfn_submodule(poly(F, "t"), poly(F, "t")).enumerate().size(), 4u);
  EXPECT_EQ(polyfn_submodule(poly(F, "t^2"), poly(F, "t")).enumerate().size(), 4u);
  EXPECT_EQ(polyfn_submodule(poly(F, "t^2"), poly(F, "t^2")).enumerate().size(), 64u);
  const PolynomialFunctionModule m = polyfn_submodule(poly(F, "t^3"), poly(F, "t^3"));
  EXPECT_EQ(m.size(), QExponent(2, 10));
  EXPECT_LT(m.cycle_start(), m.monomials_examined());
}

TEST(Closure, SizeMatchesFormula) {
  for (const FieldPtr& F : {gf2(), gf3()}) {
    const auto polys = monic_of_degree_at_most(F, 3);
    for (const Poly& f : polys) {
      for (const Poly& g : polys) {
        if (F->q() == 3 && f.degree().value() + g.degree().value() > 5) continue;
        EXPECT_EQ(polyfn_submodule(f, g).size(), count_polyfn(f, g)) << f << " -> " << g;
      }
    }
  }
}

TEST(Closure, EnumerationIsTheModule) {
  const FieldPtr F = gf2();
  const PolynomialFunctionModule m = polyfn_submodule(poly(F, "t^2"), poly(F, "t^2+t"));
  const auto all = m.enumerate();
  EXPECT_EQ(count_polyfn(poly(F, "t^2"), poly(F, "t^2+t")).value(), all.size());
  for (const FunctionTable& t : all) {
    EXPECT_TRUE(m.contains(t));
    EXPECT_TRUE(is_congruence_preserving(t).preserving);
  }
  EnumerationGuard tiny;
  tiny.max_closure_size = 8;
  EXPECT_THROW(PolynomialFunctionModule(make_ring(poly(F, "t^2")), make_ring(poly(F, "t^2")), tiny).enumerate(),
               GuardExceeded);
}

TEST(Membership, Examples) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^3"));
  const RingPtr cod = make_ring(poly(F, "t^3"));
  EXPECT_TRUE(is_polynomial_function(FunctionTable::from_function(dom, cod, [](const Poly& h) { return h; })));
  // (t^3, t^3) is not a Chen pair: some CP tables are not polynomial.
  std::uint64_t cp = 0;
  std::uint64_t polynomial = 0;
  const PolynomialFunctionModule m(dom, cod);
  enumerate_cpf(dom->modulus(), cod->modulus(), [&](std::span<const std::uint32_t> codes) {
    ++cp;
    polynomial += m.contains(FunctionTable::from_codes(dom, cod, codes));
  });
  EXPECT_EQ(cp, 16384u);
  EXPECT_EQ(polynomial, 1024u);
  const FunctionTable bad(make_ring(poly(F, "t^2")), make_ring(poly(F, "t")),
                          {poly(F, "0"), poly(F, "0"), poly(F, "1"), poly(F, "0")});
  EXPECT_FALSE(is_polynomial_function(bad));
}

// In a Chen pair, membership equals the basis criterion.
TEST(Membership, ChenPairAgreesWithBasis) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^2"));
  const RingPtr cod = make_ring(poly(F, "t^2"));
  ASSERT_TRUE(is_chen_pair(dom->modulus(), cod->modulus()).chen_pair);
  const BinomialBasis basis(PSequence(poly(F, "t")), 2, 2);
  BasisCoefficients c{poly(F, "t"), 2, {poly(F, "1"), poly(F, "t+1"), poly(F, "t"), poly(F, "0")}};
  const FunctionTable sigma = recompose(c, basis, dom, cod);
  EXPECT_TRUE(is_cpf_via_basis(sigma).cpf);
  EXPECT_TRUE(is_polynomial_function(sigma));
  const PolynomialFunctionModule m(dom, cod);
  std::vector<std::uint32_t> codes(4, 0);
  while (true) {
    const FunctionTable s = FunctionTable::from_codes(dom, cod, codes);
    ASSERT_EQ(m.contains(s), is_cpf_via_basis(s, basis).cpf);
    std::size_t i = 0;
    while (i < 4 && ++codes[i] == 4) codes[i++] = 0;
    if (i == 4) break;
  }
}

TEST(LocalGlobal, ExhaustiveOverCrtParts) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^2"));
  for (const char* g : {"t^2+t", "t^3+t^2"}) {
    const RingPtr cod = make_ring(poly(F, g));
    const PolynomialFunctionModule whole(dom, cod);
    std::vector<PolynomialFunctionModule> local;
    std::vector<std::unique_ptr<CongruenceChecker>> checkers;
    for (const PrimePower& pp : cod->factorization().factors) {
      const RingPtr part = make_ring(pp.value());
      local.emplace_back(dom, part);
      checkers.push_back(std::make_unique<CongruenceChecker>(dom, part));
    }
    const CongruenceChecker checker(dom, cod);
    const auto targets = static_cast<std::uint32_t>(cod->size());
    std::vector<std::uint32_t> codes(4, 0);
    while (true) {
      const FunctionTable sigma = FunctionTable::from_codes(dom, cod, codes);
      const auto parts = crt_split(sigma);
      bool all_cp = true;
      bool all_poly = true;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        all_cp = all_cp && checkers[i]->preserves(parts[i].codes());
        all_poly = all_poly && local[i].contains(parts[i]);
      }
      ASSERT_EQ(checker.preserves(codes), all_cp);
      ASSERT_EQ(whole.contains(sigma), all_poly);
      std::size_t i = 0;
      while (i < 4 && ++codes[i] == targets) codes[i++] = 0;
      if (i == 4) break;
    }
  }
}

TEST(Census, Examples) {
  const SelfChenCensus four = census_self_chen(gf2(), 4);
  EXPECT_EQ(four.total, 11u);
  EXPECT_EQ(four.components, (std::array<std::uint64_t, 4>{8, 1, 1, 1}));
  EXPECT_EQ(census_squarefree(gf3(), 2), 6u);
  EXPECT_EQ(census_self_chen(gf2(), 0).total, 1u);
  EXPECT_EQ(census_self_chen(gf3(), 2).total, 12u);
  EXPECT_EQ(census_self_chen(gf3(), 2, true).total, 6u);
  EnumerationGuard shallow;
  shallow.max_degree = 3;
  EXPECT_THROW(census_squarefree(gf2(), 4, shallow), GuardExceeded);
}

TEST(Census, MatchesClosedForms) {
  for (std::size_t n = 0; n <= 10; ++n) {
    EXPECT_EQ(BigInt(census_squarefree(gf2(), n)), squarefree_count(n, 2)) << n;
    if (n <= 8) EXPECT_EQ(BigInt(census_squarefree(gf3(), n)), squarefree_count(n, 3)) << n;
    EXPECT_EQ(BigInt(census_self_chen(gf2(), n).total), chen_self_count(n)) << n;
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(BigInt(census_self_chen(gf3(), n).total), 2 * squarefree_count(n, 3)) << n;
  }
}

}  // namespace
}  // namespace cpf
