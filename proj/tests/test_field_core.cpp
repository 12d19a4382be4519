#include <algorithm>
#include <cmath>
#include <set>

#include "carlitz/fq.hpp"
#include "doctest.h"

using namespace carlitz;

TEST_SUITE_BEGIN("field-core");

TEST_CASE("context construction") {
  auto f3 = FieldCtx::make(3);
  CHECK(f3->size() == 3);
  CHECK(f3->characteristic() == 3);

  auto f4 = FieldCtx::make(2, 2, {1, 1, 1});  // x^2+x+1
  CHECK(f4->size() == 4);

  auto f9 = FieldCtx::make(3, 2, {1, 0, 1});  // x^2+1, irreducible: no root in F_3
  CHECK(f9->size() == 9);

  CHECK_THROWS_AS(FieldCtx::make(4), std::invalid_argument);           // non-prime
  CHECK_THROWS_AS(FieldCtx::make(2, 2, {0, 1, 1}), std::invalid_argument);  // x^2+x reducible
  CHECK_THROWS_AS(FieldCtx::make(3, 2, {2, 0, 1}), std::invalid_argument);  // x^2+2=(x-1)(x+1)
  CHECK_THROWS_AS(FieldCtx::make(2, 2, {1, 1}), std::invalid_argument);     // wrong degree
  CHECK_THROWS_AS(FieldCtx::make(127, 2), std::invalid_argument);  // no table entry

  // defaulted moduli are deterministic: same context object back
  CHECK(FieldCtx::make(3, 2).get() == FieldCtx::make(3, 2).get());
}

TEST_CASE("basic arithmetic") {
  auto f3 = FieldCtx::make(3);
  CHECK(f3->from_int(2).inv() == f3->from_int(2));  // 2*2 = 4 = 1

  auto f4 = FieldCtx::make(2, 2);
  Fq g = f4->generator();
  CHECK(g * g == g + f4->one());  // forced by x^2+x+1

  auto f9 = FieldCtx::make(3, 2);
  for (uint64_t i = 1; i < 9; ++i) CHECK(f9->element(i).pow(8) == f9->one());

  CHECK_THROWS_AS((void)f9->zero().inv(), std::domain_error);
  CHECK_THROWS_AS((void)(f3->one() + f9->one()), std::domain_error);  // context mismatch

  // negative exponents go through the inverse
  Fq x = f9->element(5);
  CHECK(x.pow(-3) == x.inv().pow(3));
  CHECK(x.pow(-3) * x.pow(3) == f9->one());
}

TEST_CASE("algebra laws on random triples") {
  for (auto ctx : {FieldCtx::make(3), FieldCtx::make(2, 2), FieldCtx::make(3, 2),
                   FieldCtx::make(5), FieldCtx::make(2, 4)}) {
    SplitMix64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
      Fq a = ctx->random(rng), b = ctx->random(rng), c = ctx->random(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == ctx->zero());
      if (!a.is_zero()) CHECK(a * a.inv() == ctx->one());
    }
  }
}

TEST_CASE("frobenius") {
  // directly constructed field: the q-power map fixes everything
  auto f9 = FieldCtx::make(3, 2);
  SplitMix64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Fq x = f9->random(rng);
    CHECK(x.frobenius(1) == x);
    CHECK(x.frobenius(5) == x);
  }

  // F_4 viewed as an extension of F_2: frobenius is squaring
  auto f2 = FieldCtx::make(2);
  auto f4 = FieldCtx::extension(f2, 2);
  CHECK(f4->linearity_base() == 2);
  Fq g = f4->generator();
  CHECK(g.frobenius(1) == g * g);
  CHECK(g.frobenius(1) == g + f4->one());

  // F_9 as extension of F_3: q^2-power fixes it
  auto f3 = FieldCtx::make(3);
  auto f9e = FieldCtx::extension(f3, 2);
  for (uint64_t i = 0; i < 9; ++i) CHECK(f9e->element(i).frobenius(2) == f9e->element(i));

  // additivity
  auto f81 = FieldCtx::extension(f3, 4);
  for (int i = 0; i < 50; ++i) {
    Fq x = f81->random(rng), y = f81->random(rng);
    CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
  }
}

TEST_CASE("frobenius equals pow exhaustively for small fields") {
  std::vector<FieldCtxPtr> fields = {
      FieldCtx::make(2),    FieldCtx::make(3),    FieldCtx::make(5),
      FieldCtx::make(7),    FieldCtx::make(61),   FieldCtx::make(2, 2),
      FieldCtx::make(2, 3), FieldCtx::make(2, 4), FieldCtx::make(2, 5),
      FieldCtx::make(2, 6), FieldCtx::make(3, 2), FieldCtx::make(3, 3),
      FieldCtx::make(5, 2), FieldCtx::make(7, 2)};
  for (const auto& ctx : fields) {
    int64_t q = int64_t(ctx->size());
    for (uint64_t i = 0; i < ctx->size(); ++i) {
      Fq x = ctx->element(i);
      CHECK(x.frobenius(1) == x.pow(q));
    }
  }
  // and with a genuine subfield as the linearity base
  auto f16 = FieldCtx::extension(FieldCtx::make(2, 2), 2);
  for (uint64_t i = 0; i < 16; ++i) {
    Fq x = f16->element(i);
    CHECK(x.frobenius(1) == x.pow(4));
  }
}

TEST_CASE("extension embedding is a field homomorphism") {
  auto f4 = FieldCtx::make(2, 2);
  auto f16 = FieldCtx::extension(f4, 2);
  for (uint64_t i = 0; i < 4; ++i) {
    for (uint64_t j = 0; j < 4; ++j) {
      Fq a = f4->element(i), b = f4->element(j);
      CHECK(f16->embed(a + b) == f16->embed(a) + f16->embed(b));
      CHECK(f16->embed(a * b) == f16->embed(a) * f16->embed(b));
    }
  }
  CHECK(f16->embed(f4->one()) == f16->one());
  // embedded elements are fixed by the q-power map
  Fq g = f16->embed(f4->generator());
  CHECK(g.pow(4) == g);
  CHECK(g != f16->zero());
}

TEST_CASE("tuple enumeration") {
  auto f2 = FieldCtx::make(2);
  CHECK(all_tuples(f2, 2, true).size() == 3);

  auto f3 = FieldCtx::make(3);
  auto singles = all_tuples(f3, 1, false);
  REQUIRE(singles.size() == 3);
  CHECK(singles[0][0] == f3->element(0));
  CHECK(singles[1][0] == f3->element(1));
  CHECK(singles[2][0] == f3->element(2));

  auto triples = all_tuples(f3, 3, true);
  CHECK(triples.size() == 26);
  std::set<std::vector<uint64_t>> seen;
  for (const auto& t : triples) {
    std::vector<uint64_t> key;
    for (const Fq& x : t) key.push_back(f3->index_of(x));
    seen.insert(key);
  }
  CHECK(seen.size() == 26);
}

TEST_CASE("tuple enumeration exhaustive counts") {
  for (auto ctx : {FieldCtx::make(2), FieldCtx::make(3), FieldCtx::make(5),
                   FieldCtx::make(2, 2)}) {
    for (uint32_t d = 1; d <= 4; ++d) {
      uint64_t qd = 1;
      for (uint32_t i = 0; i < d; ++i) qd *= ctx->size();
      auto with = all_tuples(ctx, d, false);
      auto without = all_tuples(ctx, d, true);
      CHECK(with.size() == qd);
      CHECK(without.size() == qd - 1);
      std::set<std::vector<uint64_t>> seen;
      for (const auto& t : with) {
        std::vector<uint64_t> key;
        for (const Fq& x : t) key.push_back(ctx->index_of(x));
        seen.insert(key);
      }
      CHECK(seen.size() == with.size());
    }
  }
}

TEST_CASE("random elements") {
  auto f9 = FieldCtx::make(3, 2);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 32; ++i) CHECK(f9->random(a) == f9->random(b));

  SplitMix64 c(1), d(2);
  bool differ = false;
  for (int i = 0; i < 8; ++i)
    if (f9->random(c) != f9->random(d)) differ = true;
  CHECK(differ);

  // frequency of each value within 5 sigma of uniform over 10^4 draws
  auto f3 = FieldCtx::make(3);
  SplitMix64 rng(2024);
  const int n = 10000;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) ++counts[f3->index_of(f3->random(rng))];
  double mean = n / 3.0;
  double sigma = std::sqrt(n * (1.0 / 3) * (2.0 / 3));
  for (int v = 0; v < 3; ++v) CHECK(std::abs(counts[v] - mean) < 5 * sigma);
}

TEST_CASE("serialization forms") {
  auto f9 = FieldCtx::make(3, 2);
  Fq x = f9->element(5);  // 2 + 1*g
  CHECK(x.to_string() == "[2,1]");
  CHECK(f9->index_of(x) == 5);
  auto f3 = FieldCtx::make(3);
  CHECK(f3->from_int(2).to_string() == "2");
}

TEST_SUITE_END();
