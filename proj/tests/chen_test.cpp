#include <gtest/gtest.h>

#include "cpf/chen.hpp"
#include "cpf/counting.hpp"
#include "cpf/errors.hpp"
#include "cpf/factor.hpp"
#include "support.hpp"

namespace cpf {
namespace {

using test::gf2;
using test::gf3;
using test::gf4;
using test::poly;

const GammaValue kInf = GammaValue::infinity();

TEST(Gamma, PrimePowers) {
  const FieldPtr F = gf2();
  EXPECT_EQ(gamma_prime_power(poly(F, "t"), 1), kInf);
  EXPECT_EQ(gamma_prime_power(poly(F, "t"), 2), kInf);
  EXPECT_EQ(gamma_prime_power(poly(F, "t"), 3), GammaValue(3));
  EXPECT_EQ(gamma_prime_power(poly(F, "t^2+t+1"), 2), GammaValue(4));
  EXPECT_EQ(gamma_prime_power(poly(gf3(), "t"), 2), GammaValue(2));
  EXPECT_EQ(gamma_prime_power(poly(gf3(), "t^2+1"), 5), GammaValue(3));
  EXPECT_THROW(gamma_prime_power(poly(F, "t^2+1"), 1), DomainError);
}

TEST(Gamma, Composite) {
  const FieldPtr F = gf2();
  EXPECT_EQ(gamma(poly(F, "t^2+t")), kInf);
  EXPECT_EQ(gamma(poly(F, "t^4+t^3")), GammaValue(3));
  EXPECT_EQ(gamma(poly(gf3(), "t^2")), GammaValue(2));
  EXPECT_THROW(gamma(poly(F, "1")), DomainError);
  EXPECT_GT(kInf, GammaValue(1000000));
}

TEST(Chen, Pairs) {
  const FieldPtr F = gf2();
  const ChenVerdict v = is_chen_pair(poly(F, "t^2"), poly(F, "t^3"));
  EXPECT_TRUE(v.chen_pair);
  EXPECT_EQ(v.deg_f, 2u);
  EXPECT_EQ(v.gamma_g, GammaValue(3));
  EXPECT_FALSE(is_chen_pair(poly(F, "t^3"), poly(F, "t^3")).chen_pair);
  for (const char* f : {"t", "t^5+1", "t^9"}) EXPECT_TRUE(is_chen_pair(poly(gf3(), f), poly(gf3(), "t^2+2")).chen_pair);
  EXPECT_THROW(is_chen_pair(poly(F, "1"), poly(F, "t")), DomainError);
}

// The verdict equals the comparison of the two closed-form counts.
TEST(Chen, VerdictMatchesCounts) {
  for (const FieldPtr& F : {gf2(), gf3(), gf4()}) {
    const std::uint64_t q = F->q();
    for (std::uint64_t fi = q; fi < q * q * q; ++fi) {
      for (std::uint64_t gi = q; gi < q * q * q * q; ++gi) {
        const Poly f = index_to_poly(F, fi);
        const Poly g = index_to_poly(F, gi);
        EXPECT_EQ(is_chen_pair(f, g).chen_pair, count_cpf(f, g) == count_polyfn(f, g)) << f << " " << g;
      }
    }
  }
}

TEST(SelfChen, Examples) {
  const FieldPtr F = gf2();
  EXPECT_TRUE(is_self_chen(poly(F, "t^4+t^2")));
  EXPECT_FALSE(is_self_chen(poly(F, "t^3")));
  EXPECT_FALSE(is_self_chen(poly(F, "t^4+t^2+1")));  // (t^2+t+1)^2
  EXPECT_FALSE(is_self_chen(poly(gf3(), "t^2")));
  EXPECT_TRUE(is_self_chen(poly(gf3(), "t^2+1")));
}

TEST(SelfChen, MatchesGammaAndSelfPair) {
  for (const FieldPtr& F : {gf2(), gf3()}) {
    const std::uint64_t q = F->q();
    std::uint64_t limit = 1;
    for (int i = 0; i < 6; ++i) limit *= q;
    for (std::uint64_t gi = q; gi < limit * q; gi += (q == 2 ? 1 : 2)) {
      const Poly g = index_to_poly(F, gi);
      const bool self = is_self_chen(g);
      EXPECT_EQ(self, gamma(g).is_infinite()) << g;
      EXPECT_EQ(self, is_chen_pair(g, g).chen_pair) << g;
    }
  }
}

TEST(Counts, SquareFree) {
  EXPECT_EQ(squarefree_count(0, 2), 1);
  EXPECT_EQ(squarefree_count(1, 3), 3);
  EXPECT_EQ(squarefree_count(2, 3), 6);
  EXPECT_EQ(squarefree_count(5, 2), 16);
  EXPECT_EQ(squarefree_count(10, 3), 39366);
}

TEST(Counts, SelfChenClosedForm) {
  const std::vector<long> t{1, 2, 4, 6, 11, 22, 43, 88, 173, 350, 695, 1396, 2785};
  for (std::size_t n = 0; n < t.size(); ++n) EXPECT_EQ(chen_self_count(n), t[n]) << n;
  EXPECT_THROW(chen_self_count(4, 3), DomainError);
}

TEST(Counts, SelfChenComponents) {
  const std::vector<std::array<long, 4>> u{
      {8, 1, 1, 1},    {16, 3, 3, 0},    {32, 5, 5, 1},     {64, 11, 11, 2},    {128, 21, 21, 3},
      {256, 43, 43, 8}, {512, 85, 85, 13}, {1024, 171, 171, 30}, {2048, 341, 341, 55},
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::size_t n = i + 4;
    const SelfChenComponents c = self_chen_components(n);
    EXPECT_EQ(c.squarefree, u[i][0]) << n;
    EXPECT_EQ(c.t_squared, u[i][1]) << n;
    EXPECT_EQ(c.t_plus_one_squared, u[i][2]) << n;
    EXPECT_EQ(c.both_squared, u[i][3]) << n;
    EXPECT_EQ(c.total(), chen_self_count(n)) << n;
  }
  EXPECT_THROW(self_chen_components(3), DomainError);
}

TEST(Density, Exact) {
  EXPECT_EQ(density_exact(2), BigRational(49, 72));
  EXPECT_EQ(density_exact(3), BigRational(2, 3));
  EXPECT_EQ(density_exact(5), BigRational(4, 5));
}

TEST(Density, PartialFractions) {
  EXPECT_EQ(density_empirical(gf2(), 3).fraction, BigRational(12, 14));
  EXPECT_EQ(density_empirical(gf3(), 1).fraction, BigRational(1));
  EXPECT_EQ(density_closed_form(2, 3).fraction, BigRational(12, 14));
  const DensityReport r = density_empirical(gf2(), 12);
  EXPECT_EQ(r.fraction, BigRational(1115, 1638));
  EXPECT_EQ(r.fraction, density_closed_form(2, 12).fraction);
  EXPECT_LT(boost::multiprecision::abs(r.fraction - r.limit), BigRational(1, 100));
  for (unsigned m = 1; m <= 7; ++m) {
    EXPECT_EQ(density_empirical(gf3(), m).fraction, density_closed_form(3, m).fraction) << m;
    EXPECT_EQ(density_empirical(gf3(), m, true).fraction, density_closed_form(3, m, true).fraction) << m;
  }
  EXPECT_THROW(density_empirical(gf2(), 23), GuardExceeded);
}

TEST(Density, ErrorShrinksEveryTwoDegrees) {
  for (std::size_t m = 4; m + 2 <= 12; ++m) {
    const BigRational a = boost::multiprecision::abs(density_closed_form(2, m).fraction - density_exact(2));
    const BigRational b = boost::multiprecision::abs(density_closed_form(2, m + 2).fraction - density_exact(2));
    EXPECT_LT(b, a) << m;
  }
}

TEST(Density, ReportInvariants) {
  const DensityReport r = density_empirical(gf3(), 6);
  EXPECT_GE(r.fraction, 0);
  EXPECT_LE(r.fraction, 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_LE(r.self_chen_counts[n], r.totals[n]);
    EXPECT_EQ(r.self_chen_counts[n], squarefree_count(n, 3) * 2);
  }
}

}  // namespace
}  // namespace cpf
