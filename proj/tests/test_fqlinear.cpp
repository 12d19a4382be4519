#include "carlitz/carlitz_tower.hpp"
#include "carlitz/linear.hpp"
#include "doctest.h"

using namespace carlitz;

TEST_SUITE_BEGIN("fqlinear-engine");

namespace {

RatFunc rf(const FieldCtxPtr& ctx, std::vector<int64_t> num, std::vector<int64_t> den = {1}) {
  return RatFunc(Poly::from_ints(ctx, num), Poly::from_ints(ctx, den));
}

// the generic degree-q^2 reference family: f_0=t, f_1=1, f_2=t+1
LinearSeries<RatFunc> remark_poly(const FieldCtxPtr& f3) {
  return LinearSeries<RatFunc>::polynomial(
      3, {rf(f3, {0, 1}), rf(f3, {1}), rf(f3, {1, 1})});
}

template <class T>
void check_defining_products(const LinearSeries<T>& f, const CoeffTable<T>& h,
                             const CoeffTable<T>& a) {
  // h*f = f_0*z and a*(1-f) = f_0*z, coefficientwise through the table bound
  T f0 = f.coeffs()[0];
  for (int64_t m = 1; m <= h.n_max; ++m) {
    T acc = zero_like(f0);
    int64_t qi = 1;
    for (int64_t i = 0; qi <= m; ++i, qi = sat_mul(qi, int64_t(f.q())))
      acc = acc + h.at(m - qi) * f.coeff(i);
    CHECK(elem_equal(acc, m == 1 ? f0 : zero_like(f0)));
  }
  for (int64_t m = 1; m <= a.n_max; ++m) {
    T acc = a.at(m);
    int64_t qi = 1;
    for (int64_t i = 0; qi <= m; ++i, qi = sat_mul(qi, int64_t(f.q())))
      acc = acc - a.at(m - qi) * f.coeff(i);
    CHECK(elem_equal(acc, m == 1 ? f0 : zero_like(f0)));
  }
}

}  // namespace

TEST_CASE("ls_eval") {
  auto f3 = FieldCtx::make(3);
  auto f9 = FieldCtx::extension(f3, 2);
  auto id = LinearSeries<Fq>::polynomial(3, {f9->one()});
  SplitMix64 rng(5);
  for (int i = 0; i < 10; ++i) {
    Fq x = f9->random(rng);
    CHECK(ls_eval(id, x) == x);
  }

  // f = z^q + z restricted to F_3: x^3 = x there, so f(x) = 2x
  auto f = LinearSeries<Fq>::polynomial(3, {f9->one(), f9->one()});
  for (int c = 0; c < 3; ++c) {
    Fq x = f9->embed(f3->from_int(c));
    CHECK(ls_eval(f, x) == x + x);
  }

  // additivity over a bigger extension
  auto f81 = FieldCtx::extension(f3, 4);
  auto g = LinearSeries<Fq>::polynomial(
      3, {f81->element(7), f81->element(12), f81->one()});
  for (int i = 0; i < 100; ++i) {
    Fq x = f81->random(rng), y = f81->random(rng);
    CHECK(ls_eval(g, x + y) == ls_eval(g, x) + ls_eval(g, y));
  }
}

TEST_CASE("compose") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);

  // g = z is the identity
  auto f = remark_poly(f3);
  auto idz = LinearSeries<RatFunc>::polynomial(3, {RatFunc::one(f3)});
  auto fg = compose(f, idz, 2);
  for (int64_t i = 0; i <= 2; ++i) CHECK(fg.coeff(i) == f.coeff(i));

  // (z + z^q) o (z - z^q) = z - z^(q^2) + ...
  auto u = LinearSeries<RatFunc>::polynomial(3, {rf(f3, {1}), rf(f3, {1})});
  auto v = LinearSeries<RatFunc>::polynomial(3, {rf(f3, {1}), rf(f3, {-1})});
  auto uv = compose(u, v, 2);
  CHECK(uv.coeff(0) == rf(f3, {1}));
  CHECK(uv.coeff(1) == RatFunc::zero(f3));
  CHECK(uv.coeff(2) == rf(f3, {-1}));

  // e o log = z exactly through order 3
  auto elog = compose(ct.exp_series(3), ct.log_series(3), 3);
  CHECK(elog.coeff(0) == RatFunc::one(f3));
  for (int64_t i = 1; i <= 3; ++i) CHECK(elog.coeff(i).is_zero());
}

TEST_CASE("compose is associative") {
  auto f9 = FieldCtx::extension(FieldCtx::make(3), 2);
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto rand_series = [&] {
      std::vector<Fq> c;
      for (int i = 0; i <= 3; ++i) c.push_back(f9->random(rng));
      if (c[0].is_zero()) c[0] = f9->one();
      return LinearSeries<Fq>::truncated(3, c);
    };
    auto f = rand_series(), g = rand_series(), h = rand_series();
    auto left = compose(compose(f, g, 3), h, 3);
    auto right = compose(f, compose(g, h, 3), 3);
    for (int64_t i = 0; i <= 3; ++i) CHECK(left.coeff(i) == right.coeff(i));
  }
}

TEST_CASE("comp_inverse") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);

  auto idz = LinearSeries<RatFunc>::polynomial(3, {RatFunc::one(f3)});
  CHECK(comp_inverse(idz, 3).coeff(0) == RatFunc::one(f3));
  CHECK(comp_inverse(idz, 3).coeff(2).is_zero());

  // the inverse of the Carlitz exponential is the Carlitz logarithm
  auto g = comp_inverse(ct.exp_series(3), 3);
  auto log = ct.log_series(3);
  for (int64_t j = 0; j <= 3; ++j) CHECK(g.coeff(j) == log.coeff(j));

  CHECK_THROWS_AS(
      comp_inverse(LinearSeries<RatFunc>::polynomial(3, {RatFunc::zero(f3), rf(f3, {1})}), 2),
      std::domain_error);
}

TEST_CASE("carlitz inverse closed form (Thm 7.2 shape)") {
  for (uint32_t qv : {2u, 3u}) {
    auto fq = FieldCtx::make(qv);
    CarlitzCtx ct(fq);
    for (int64_t d = 1; d <= 2; ++d) {
      // f = ell_d * binom(z, q^d)_c has f_0 = 1
      auto binom = ct.binomial(d);
      RatFunc ld{ct.ell(d)};
      std::vector<RatFunc> coeffs;
      for (const auto& c : binom.coeffs()) coeffs.push_back(ld * c);
      auto f = LinearSeries<RatFunc>::polynomial(qv, std::move(coeffs));
      CHECK(f.coeffs()[0] == RatFunc::one(fq));
      auto g = comp_inverse(f, 3);
      for (int64_t j = 0; j <= 3; ++j) {
        RatFunc expect = RatFunc{ct.ell(d + j - 1)} /
                         (RatFunc{ct.ell(j)} * RatFunc{ct.ell(d - 1)}.pow(ipow(qv, j)));
        CHECK(g.coeff(j) == expect);
      }
    }
  }
}

TEST_CASE("h table") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);

  // f = z: h = 1
  auto idz = LinearSeries<RatFunc>::polynomial(3, {RatFunc::one(f3)});
  auto h_id = h_table(idz, 10);
  CHECK(h_id.at(0) == RatFunc::one(f3));
  for (int64_t i = 1; i <= 10; ++i) CHECK(h_id.at(i).is_zero());

  auto h = h_table(ct.exp_series(3), 30);
  Poly b1 = ct.bracket(1), b2 = ct.bracket(2);
  CHECK(h.at(2) == -RatFunc(Poly::one(f3), b1));          // h_2 = -1/[1]
  CHECK(h.at(6) == h.at(2).pow(3));                        // p-power
  CHECK(h.at(8) == RatFunc(Poly::one(f3), b1 * b2));       // h_8 = 1/([1][2])
  CHECK(h.at(8) != h.at(2).pow(4));                        // the l = q+1 counterexample seed
  check_table_invariants(h);

  // f_0 = 0 is the identically zero h, flagged
  auto degenerate = h_table(
      LinearSeries<RatFunc>::polynomial(3, {RatFunc::zero(f3), rf(f3, {1})}), 5);
  CHECK(degenerate.degenerate_zero);
  for (int64_t i = 0; i <= 5; ++i) CHECK(degenerate.at(i).is_zero());
}

TEST_CASE("a table") {
  auto f3 = FieldCtx::make(3);

  // f = z gives the geometric series z/(1-z): a_i = 1 for i >= 1
  auto idz = LinearSeries<RatFunc>::polynomial(3, {RatFunc::one(f3)});
  auto a_id = a_table(idz, 12);
  CHECK(a_id.at(0).is_zero());
  for (int64_t i = 1; i <= 12; ++i) CHECK(a_id.at(i) == RatFunc::one(f3));

  auto f = remark_poly(f3);
  auto a = a_table(f, 30);
  RatFunc f0 = rf(f3, {0, 1});
  // a_s = f_0^s for 1 <= s <= q
  for (int64_t s = 1; s <= 3; ++s) CHECK(a.at(s) == f0.pow(s));
  CHECK(a.at(6) == f0.pow(6));                                   // a_{q^2-q} = f_0^6
  CHECK(a.at(8) == f0.pow(8) - f0.pow(5) * rf(f3, {1}));         // a_{q^2-1}
}

TEST_CASE("H table") {
  auto f3 = FieldCtx::make(3);
  auto f = remark_poly(f3);
  auto H = H_table(f, 30);
  RatFunc t = rf(f3, {0, 1}), t1 = rf(f3, {1, 1});
  CHECK(H.at(2).is_zero());
  CHECK(H.at(8) == -(t / t1));              // H_8 = -f_0/f_2
  CHECK(H.at(18).is_zero());                // H_18 = H_2^9
  CHECK(H.at(26) == t / t1.pow(4));         // H_26 = f_0 f_1^3 / f_2^4
  check_table_invariants(H, 2);

  // q=2: f = z^2 + b z over F_4 has root set {0, b}, so H_m = b^m
  auto f4 = FieldCtx::extension(FieldCtx::make(2), 2);
  Fq b = f4->generator();
  auto fb = LinearSeries<Fq>::polynomial(2, {b, f4->one()});
  auto Hb = H_table(fb, 25);
  for (int64_t m = 1; m <= 25; ++m) CHECK(Hb.at(m) == b.pow(m));

  CHECK_THROWS_AS(H_table(LinearSeries<RatFunc>::truncated(3, {t}), 5),
                  std::invalid_argument);
}

TEST_CASE("alpha table") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);

  auto binom1 = ct.binomial(1);
  auto al = alpha_table(binom1, 10);
  CHECK(al.at(2) == rf(f3, {2}));        // S_1(-2) = 2
  CHECK(al.at(5) == rf(f3, {0, 1, 0, 2}));  // S_1(-5) = 2t^3 + t

  auto f = remark_poly(f3);
  auto a26 = alpha_table(f, 30);
  RatFunc t = rf(f3, {0, 1}), t1 = rf(f3, {1, 1});
  CHECK(a26.at(8) == t / t1);                       // alpha_{q^2-1} = f_0/f_2
  CHECK(a26.at(17) == a26.at(8) / t1);              // alpha_{2q^d-1} = alpha_{q^d-1}/f_d
  CHECK(a26.at(26) == (-(t * rf(f3, {1}).pow(3)) + t * t1) / t1.pow(4));
  CHECK(a26.at(26) == t.pow(2) / t1.pow(4));        // same value, specialized
  check_table_invariants(a26, 2);
}

TEST_CASE("defining products reproduce f_0 z") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  auto f = remark_poly(f3);
  check_defining_products(f, h_table(f, 25), a_table(f, 25));
  auto e = ct.exp_series(3);
  check_defining_products(e, h_table(e, 25), a_table(e, 25));
}

TEST_CASE("from_root_space") {
  auto f3 = FieldCtx::make(3);
  auto z3 = from_root_space({f3->one()});
  CHECK(z3.degree_exp() == 1);
  CHECK(z3.coeffs()[0] == f3->from_int(-1));  // z^3 - z
  CHECK(z3.coeffs()[1] == f3->one());

  auto f4 = FieldCtx::extension(FieldCtx::make(2), 2);
  Fq b = f4->generator();
  auto fb = from_root_space({b});
  CHECK(fb.coeffs()[0] == b);  // z^2 + b z
  CHECK(fb.coeffs()[1] == f4->one());

  CHECK_THROWS_AS(from_root_space({f3->one(), f3->from_int(2)}), std::invalid_argument);

  // degree-9 F_3-linear polynomial over F_9; check linearity by sampling
  auto f9 = FieldCtx::extension(f3, 2);
  auto g = from_root_space({f9->one(), f9->generator()});
  CHECK(g.degree_exp() == 2);
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Fq x = f9->random(rng), y = f9->random(rng);
    CHECK(ls_eval(g, x + y) == ls_eval(g, x) + ls_eval(g, y));
  }
}

TEST_CASE("root and affine power sums match the tables") {
  // for every q <= 4, d <= 2, extension degree m <= 4:
  //   H_m = -sum of w^m over roots of f, and alpha_m = sum of v^m over f(v)=1
  for (uint32_t qv : {2u, 3u, 4u}) {
    FieldCtxPtr base = qv == 4 ? FieldCtx::make(2, 2) : FieldCtx::make(qv);
    for (uint32_t m = 2; m <= 4; ++m) {
      if (ipow(int64_t(qv), m) > 4096) continue;
      auto ext = FieldCtx::extension(base, m);
      SplitMix64 rng(1000 * qv + m);
      for (int64_t d = 1; d < m && d <= 2; ++d) {
        // d < m so a shift outside the span exists for the affine test
        std::vector<Fq> basis;
        while (int64_t(basis.size()) < d) {
          Fq cand = ext->random(rng);
          if (cand.is_zero()) continue;
          basis.push_back(cand);
          // dependence probe: product construction throws when dependent
          try {
            from_root_space(basis);
          } catch (const std::invalid_argument&) {
            basis.pop_back();
          }
        }
        // mu outside the span, for the affine normalization
        Fq mu = ext->zero();
        for (;;) {
          mu = ext->random(rng);
          try {
            from_root_space(basis, mu);
            break;
          } catch (const std::invalid_argument&) {
          }
        }
        auto f = from_root_space(basis);
        auto fshift = from_root_space(basis, mu);
        auto H = H_table(f, 30);
        auto al = alpha_table(fshift, 30);
        // enumerate the full field, collect roots of f and solutions of f=1
        std::vector<Fq> roots, ones;
        for (uint64_t i = 0; i < ext->size(); ++i) {
          Fq w = ext->element(i);
          if (ls_eval(f, w).is_zero()) roots.push_back(w);
          if (ls_eval(fshift, w).is_one()) ones.push_back(w);
        }
        CHECK(int64_t(roots.size()) == ipow(int64_t(qv), d));
        CHECK(int64_t(ones.size()) == ipow(int64_t(qv), d));
        for (int64_t mm = 1; mm <= 30; ++mm) {
          Fq hsum = ext->zero(), asum = ext->zero();
          for (const Fq& w : roots) hsum += w.pow(mm);
          for (const Fq& v : ones) asum += v.pow(mm);
          CHECK(H.at(mm) == -hsum);
          CHECK(al.at(mm) == asum);
        }
      }
    }
  }
}

TEST_CASE("p-power relations") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  CHECK(check_ppower(h_table(ct.exp_series(4), 30)).passed());
  CHECK(check_ppower(a_table(ct.exp_series(4), 30)).passed());
  CHECK(check_ppower(alpha_table(ct.binomial(1), 30)).passed());
  CHECK(check_ppower(H_table(remark_poly(f3), 30)).passed());

  // harness self-test: a corrupted table is caught at the right index
  auto h = h_table(ct.exp_series(4), 30);
  h.v[6] = rf(f3, {1, 1});
  auto rep = check_ppower(h);
  CHECK(rep.status == VerifyReport::Status::Fail);
  bool saw_index = false;
  for (auto& [k, v] : rep.extra)
    if (k == "first_violation_index" && v == "6") saw_index = true;
  CHECK(saw_index);
}

TEST_CASE("carlitz inverse link h_{q^k-1} = g_k for f_0 = 1") {
  auto f3 = FieldCtx::make(3);
  CarlitzCtx ct(f3);
  auto e = ct.exp_series(5);
  auto h = h_table(e, 81);
  auto g = comp_inverse(e, 4);
  for (int64_t k = 1; k <= 4; ++k)
    CHECK(h.at(ipow(3, k) - 1) == g.coeff(k));

  auto f9 = FieldCtx::extension(f3, 2);
  SplitMix64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Fq> c = {f9->one()};
    for (int i = 0; i < 4; ++i) c.push_back(f9->random(rng));
    auto f = LinearSeries<Fq>::truncated(3, std::move(c));
    auto hf = h_table(f, 81);
    auto gf = comp_inverse(f, 4);
    for (int64_t k = 1; k <= 4; ++k)
      CHECK(hf.at(ipow(3, k) - 1) == gf.coeff(k));
  }
}

TEST_CASE("compose round trip for random series") {
  auto f3 = FieldCtx::make(3);
  auto f9 = FieldCtx::extension(f3, 2);
  SplitMix64 rng(31);

  for (int trial = 0; trial < 50; ++trial) {
    // over F_9
    std::vector<Fq> c;
    do {
      c.assign(1, f9->random(rng));
    } while (c[0].is_zero());
    for (int i = 0; i < 4; ++i) c.push_back(f9->random(rng));
    auto f = LinearSeries<Fq>::truncated(3, c);
    auto g = comp_inverse(f, 4);
    auto fg = compose(f, g, 4), gf = compose(g, f, 4);
    CHECK(fg.coeff(0).is_one());
    CHECK(gf.coeff(0).is_one());
    for (int64_t i = 1; i <= 4; ++i) {
      CHECK(fg.coeff(i).is_zero());
      CHECK(gf.coeff(i).is_zero());
    }
  }

  SplitMix64 prng(77);
  for (int trial = 0; trial < 50; ++trial) {
    // over F_3(t): small random rational coefficients
    auto rand_rf = [&](bool nonzero) {
      for (;;) {
        std::vector<int64_t> num, den;
        for (int i = 0; i <= int(prng.below(3)); ++i) num.push_back(int64_t(prng.below(3)));
        for (int i = 0; i <= int(prng.below(2)); ++i) den.push_back(int64_t(prng.below(3)));
        Poly n = Poly::from_ints(f3, num), d = Poly::from_ints(f3, den);
        if (d.is_zero()) continue;
        RatFunc r(n, d);
        if (!nonzero || !r.is_zero()) return r;
      }
    };
    std::vector<RatFunc> c = {rand_rf(true)};
    for (int i = 0; i < 3; ++i) c.push_back(rand_rf(false));
    auto f = LinearSeries<RatFunc>::truncated(3, c);
    auto g = comp_inverse(f, 3);
    auto fg = compose(f, g, 3), gf = compose(g, f, 3);
    CHECK(fg.coeff(0).is_one());
    CHECK(gf.coeff(0).is_one());
    for (int64_t i = 1; i <= 3; ++i) {
      CHECK(fg.coeff(i).is_zero());
      CHECK(gf.coeff(i).is_zero());
    }
  }
}

TEST_SUITE_END();
