#include <gtest/gtest.h>

#include "cpf/errors.hpp"
#include "cpf/residue.hpp"
#include "cpf/table_json.hpp"
#include "support.hpp"

namespace cpf {
namespace {

using test::gf2;
using test::gf3;
using test::gf4;
using test::poly;

// Calls fn on every table A_f -> A_g.
template <typename Fn>
void for_each_table(const RingPtr& domain, const RingPtr& codomain, Fn fn) {
  std::vector<std::uint32_t> codes(domain->size(), 0);
  const auto targets = static_cast<std::uint32_t>(codomain->size());
  while (true) {
    fn(FunctionTable::from_codes(domain, codomain, codes));
    std::size_t i = 0;
    while (i < codes.size() && ++codes[i] == targets) codes[i++] = 0;
    if (i == codes.size()) return;
  }
}

TEST(Residue, Reduce) {
  const FieldPtr F = gf2();
  EXPECT_TRUE(reduce(poly(F, "t^3"), poly(F, "t^2")).is_zero());
  EXPECT_EQ(reduce(poly(F, "t^2"), poly(F, "t^2+t+1")), poly(F, "t+1"));
  EXPECT_EQ(reduce(poly(F, "t+1"), poly(F, "t^2")), poly(F, "t+1"));
  EXPECT_THROW(reduce(poly(F, "t"), poly(F, "1")), DomainError);
}

TEST(Residue, Ring) {
  const ResidueRing ring(poly(gf3(), "t^2+1"));
  EXPECT_EQ(ring.size(), 9u);
  EXPECT_EQ(ring.elements().size(), 9u);
  for (std::uint64_t i = 0; i < ring.size(); ++i) EXPECT_EQ(ring.index_of(ring.element(i)), i);
  EXPECT_EQ(ring.index_of(poly(gf3(), "t^2")), poly_to_index(poly(gf3(), "2")));
  EXPECT_TRUE(ring.same_ring(ResidueRing(poly(gf3(), "2t^2+2"))));
  EXPECT_THROW(ResidueRing(poly(gf3(), "2")), DomainError);
}

TEST(FunctionTable, Validation) {
  const FieldPtr F = gf2();
  const RingPtr a = make_ring(poly(F, "t^2"));
  const RingPtr b = make_ring(poly(F, "t"));
  EXPECT_THROW(FunctionTable(a, b, {poly(F, "0")}), DomainError);
  EXPECT_THROW(FunctionTable(a, b, {poly(F, "0"), poly(F, "t"), poly(F, "0"), poly(F, "0")}), DomainError);
  const FunctionTable id = FunctionTable::from_function(a, a, [](const Poly& h) { return h; });
  EXPECT_EQ(id(poly(F, "t^2+t")), poly(F, "t"));
  EXPECT_EQ(id.codes(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_THROW(FunctionTable(a, make_ring(poly(gf3(), "t")), std::vector<Poly>(4, Poly(gf3()))), DomainError);
}

TEST(Crt, SplitExamples) {
  const FieldPtr F = gf2();
  const RingPtr dom = make_ring(poly(F, "t^2"));
  const RingPtr irr = make_ring(poly(F, "t^2+t+1"));
  const FunctionTable sigma = FunctionTable::from_function(dom, irr, [](const Poly& h) { return h * h; });
  const auto single = crt_split(sigma);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.front(), sigma);

  const RingPtr tt1 = make_ring(poly(F, "t^2+t"));
  const FunctionTable const_t = FunctionTable::constant(dom, tt1, poly(F, "t"));
  const auto parts = crt_split(const_t);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].codomain().modulus(), poly(F, "t"));
  EXPECT_EQ(parts[1].codomain().modulus(), poly(F, "t+1"));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(parts[0].at(i).is_zero());
    EXPECT_TRUE(parts[1].at(i).is_one());
  }
  EXPECT_EQ(crt_combine(parts, tt1), const_t);
  for (const FunctionTable& part : crt_split(FunctionTable::constant(dom, tt1, Poly(F)))) {
    for (const Poly& v : part.values()) EXPECT_TRUE(v.is_zero());
  }
}

TEST(Crt, CombineRejectsBadInput) {
  const FieldPtr F = gf2();
  const RingPtr d2 = make_ring(poly(F, "t^2"));
  const RingPtr d1 = make_ring(poly(F, "t"));
  const auto c = [&](const RingPtr& dom, const char* g) {
    return FunctionTable::constant(dom, make_ring(poly(F, g)), Poly(F));
  };
  EXPECT_THROW(crt_combine(std::vector<FunctionTable>{c(d2, "t"), c(d1, "t+1")}), DomainError);
  EXPECT_THROW(crt_combine(std::vector<FunctionTable>{c(d2, "t"), c(d2, "t^2")}), DomainError);
  EXPECT_THROW(crt_combine(std::vector<FunctionTable>{c(d2, "t^2+t")}), DomainError);
  EXPECT_THROW(crt_combine(std::vector<FunctionTable>{}), DomainError);
  EXPECT_THROW(crt_combine(std::vector<FunctionTable>{c(d2, "t"), c(d2, "t+1")}, make_ring(poly(F, "t^2"))),
               DomainError);
}

// Both roundtrips, exhaustively over every table with q = 2, deg f <= 2, deg g <= 3.
TEST(Crt, RoundTripExhaustive) {
  const FieldPtr F = gf2();
  std::size_t tables = 0;
  for (const char* f : {"t", "t+1", "t^2", "t^2+t+1"}) {
    const RingPtr dom = make_ring(poly(F, f));
    for (std::uint64_t gi = 2; gi < 16; ++gi) {
      const RingPtr cod = make_ring(index_to_poly(F, gi));
      for_each_table(dom, cod, [&](const FunctionTable& sigma) {
        const auto parts = crt_split(sigma);
        const FunctionTable back = crt_combine(parts, cod);
        ASSERT_EQ(back, sigma);
        const auto again = crt_split(back);
        ASSERT_EQ(again.size(), parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i) ASSERT_EQ(again[i], parts[i]);
        ++tables;
      });
    }
  }
  EXPECT_GT(tables, 10000u);
}

TEST(TableJson, Format) {
  const FieldPtr F = gf2();
  const RingPtr a = make_ring(poly(F, "t^2"));
  const FunctionTable id = FunctionTable::from_function(a, a, [](const Poly& h) { return h; });
  EXPECT_EQ(table_to_json_text(id),
            R"({"q":2,"f":"t^2","g":"t^2","values":{"0":"0","1":"1","t":"t","t+1":"t+1"}})");
  EXPECT_EQ(table_from_json_text(F, table_to_json_text(id)), id);
}

TEST(TableJson, RoundTripExtension) {
  const FieldPtr F = gf4();
  const RingPtr a = make_ring(poly(F, "t^2+t+(u)"));
  const RingPtr b = make_ring(poly(F, "t^2"));
  const FunctionTable sq = FunctionTable::from_function(a, b, [&](const Poly& h) { return h * h + Poly::t(F); });
  EXPECT_EQ(table_from_json_text(F, table_to_json_text(sq)), sq);
}

TEST(TableJson, Rejects) {
  const FieldPtr F = gf2();
  EXPECT_THROW(table_from_json_text(F, "{"), ParseError);
  EXPECT_THROW(table_from_json_text(F, R"({"q":3,"f":"t","g":"t","values":{"0":"0","1":"0"}})"), DomainError);
  EXPECT_THROW(table_from_json_text(F, R"({"q":2,"f":"t","g":"t","values":{"0":"0"}})"), DomainError);
  EXPECT_THROW(table_from_json_text(F, R"({"q":2,"f":"t","g":"t","values":{"0":"0","1":"t"}})"), DomainError);
  EXPECT_THROW(table_from_json_text(F, R"({"q":2,"f":"t","g":"t","values":{"0":"0","t":"0"}})"), DomainError);
  EXPECT_THROW(table_from_json_text(F, R"({"q":2,"f":"t","g":"t","values":{"0":"0","1":"0","t+1":"0"}})"),
               DomainError);
}

}  // namespace
}  // namespace cpf
