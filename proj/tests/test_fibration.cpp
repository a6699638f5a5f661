#include <doctest.h>

#include "zstab/fibration.hpp"
#include "zstab/rng.hpp"

using namespace zstab;

namespace {

// Test-side oracle: total Segre classes from explicit rational Chern roots.
std::vector<Rat> segre_from_roots(const std::vector<Rat>& roots,
                                  const Rat& shift, unsigned upto) {
  std::vector<Rat> chern(upto + 1, Rat(0));
  chern[0] = 1;
  for (const Rat& r : roots)
    for (long d = static_cast<long>(upto); d >= 1; --d)
      chern[d] += chern[d - 1] * (r + shift);
  std::vector<Rat> segre(upto + 1, Rat(0));
  segre[0] = 1;
  for (unsigned d = 1; d <= upto; ++d) {
    Rat acc(0);
    for (unsigned i = 1; i <= d; ++i) acc += chern[i] * segre[d - i];
    segre[d] = -acc;
  }
  return segre;
}

}  // namespace

TEST_CASE("Donaldson-Futaki invariant") {
  CHECK(df_invariant({Rat(1), Rat(1), Rat(0), Rat(0)}) == 0);
  CHECK(df_invariant({Rat(1), Rat(1), Rat(1), Rat(1)}) == 0);
  CHECK(df_invariant({Rat(2), Rat(3), Rat(1), Rat(5)}) == Rat(7, 2));
  CHECK_THROWS_AS(df_invariant({Rat(0), Rat(1), Rat(1), Rat(1)}), Error);
  SUBCASE("invariant under simultaneous rescaling") {
    Rng rng(53);
    for (int i = 0; i < 30; ++i) {
      WeightData w{rng.nonzero_rat(5), rng.rat_in(5), rng.rat_in(5), rng.rat_in(5)};
      Rat lambda = rng.nonzero_rat(5);
      WeightData scaled{w.a0 * lambda, w.a1 * lambda, w.b0 * lambda, w.b1 * lambda};
      CHECK(df_invariant(scaled) == df_invariant(w));
    }
  }
}

TEST_CASE("W0") {
  CHECK(w0(1, 1, Rat(1), Rat(0)) == 0);
  CHECK(w0(1, 1, Rat(1), Rat(1)) == 2);  // binom(2,1) = 2
  // K-polystable fibres propagate the sign.
  CHECK(sgn(w0(2, 3, Rat(5), Rat(7, 3))) > 0);
  CHECK_THROWS_AS(w0(1, 1, Rat(0), Rat(1)), Error);
}

TEST_CASE("W1 for Fano fibrations") {
  CHECK(w1_fano(2, 2, Rat(0), Rat(0), Rat(0)) == 0);
  // Isotrivial: gamma = 0 drops the middle term.
  Rat with_gamma = w1_fano(2, 2, Rat(3), Rat(100), Rat(1), Rat(0));
  Rat expected = binomial(4, 1) * (Rat(2, 4) * 3 + Rat(1));
  CHECK(with_gamma == expected);
  // Rational sample with a nonzero gamma.
  Rat g = gamma_from(Rat(-6), Rat(4));
  CHECK(g == Rat(-3, 2));
  CHECK(w1_fano(1, 1, Rat(2), Rat(3), Rat(5), g) ==
        binomial(2, 0) * (Rat(1, 3) * 2 + Rat(-3, 2) / 2 * 3 + 5));
}

TEST_CASE("Ross-Thomas deformation weight") {
  SUBCASE("c = 0 gives 0") {
    auto r = rt_df(Poly({Rat(1), Rat(0), Rat(1)}), Poly({Rat(0), Rat(1)}),
                   Rat(2), Rat(3), Rat(0));
    CHECK(r.value == 0);
  }
  SUBCASE("constant expansion (trivial deformation) gives 0") {
    Rng rng(59);
    for (int i = 0; i < 30; ++i) {
      Rat a0 = rng.nonzero_rat(5), a1 = rng.rat_in(5);
      Rat c = abs(rng.nonzero_rat(5));
      auto r = rt_df(Poly({a0}), Poly({a1}), a0, a1, c);
      CHECK(r.value == 0);
      CHECK(r.b0 == 0);
      CHECK(r.b1 == 0);
    }
  }
  SUBCASE("quadratic sample") {
    // a0(x) = 1 + x^2, a1(x) = x, a0 = 2, a1 = 3, c = 1:
    // 3 * int(1+x^2) - 2 * int(x + x) = 3*(4/3) - 2*1 = 2.
    auto r = rt_df(Poly({Rat(1), Rat(0), Rat(1)}), Poly({Rat(0), Rat(1)}),
                   Rat(2), Rat(3), Rat(1));
    CHECK(r.value == 2);
    CHECK(r.b0 == Rat(4, 3) - 2);
    CHECK(r.b1 == Rat(1) - 3);
  }
}

TEST_CASE("twisted Segre classes") {
  SUBCASE("q = 0 is the identity") {
    CHECK(segre_twist_at(0, 3, {Rat(1)}, Rat(5)) == 1);
  }
  SUBCASE("q = 1: s1 - r c1L") {
    std::vector<Rat> segre = {Rat(1), Rat(7)};
    CHECK(segre_twist_at(1, 4, segre, Rat(2)) == Rat(7) - 4 * 2);
  }
  SUBCASE("c1L = 0 is the identity on the list") {
    std::vector<Rat> segre = {Rat(1), Rat(2), Rat(-3), Rat(5)};
    for (unsigned q = 0; q <= 3; ++q)
      CHECK(segre_twist_at(q, 3, segre, Rat(0)) == segre[q]);
  }
  SUBCASE("matches the total-class inversion oracle") {
    Rng rng(61);
    for (unsigned rank = 1; rank <= 3; ++rank)
      for (unsigned q = 0; q <= 3; ++q)
        for (int trial = 0; trial < 15; ++trial) {
          std::vector<Rat> roots;
          for (unsigned r = 0; r < rank; ++r) roots.push_back(rng.rat_in(3));
          Rat t = rng.rat_in(3);
          auto se = segre_from_roots(roots, Rat(0), q);
          auto st = segre_from_roots(roots, t, q);
          CHECK(segre_twist_at(q, rank, se, t) == st[q]);
        }
  }
  SUBCASE("bad lists rejected") {
    CHECK_THROWS_AS(segre_twist(1, 2, {Rat(2), Rat(1)}), Error);
    CHECK_THROWS_AS(segre_twist(2, 2, {Rat(1)}), Error);
  }
}

TEST_CASE("B constant") {
  CHECK(b_constant(2, 1) == 2);
  CHECK(b_constant(3, 1) == 2);
  for (unsigned re = 2; re <= 12; ++re)
    for (unsigned rf = 1; rf < re; ++rf) CHECK(sgn(b_constant(re, rf)) > 0);
  CHECK_THROWS_AS(b_constant(2, 2), Error);
  CHECK_THROWS_AS(b_constant(2, 0), Error);
}

TEST_CASE("A identity check") {
  SUBCASE("rank two case, hand-computed") {
    auto r = a_identity_check({1, 2, 1});
    // Direct calculus: A = (8/3) dE - (16/3) dF.
    CHECK(r.calculus.coeff(1, 0) == Rat(8, 3));
    CHECK(r.calculus.coeff(0, 1) == Rat(-16, 3));
    // Printed closed form: B rE^rE (rE dF - rF dE) = 16 dF - 8 dE.
    CHECK(r.closed_form.coeff(0, 1) == 16);
    CHECK(r.closed_form.coeff(1, 0) == -8);
    CHECK_FALSE(r.match);
    CHECK(r.proportional);
    CHECK(r.ratio == Rat(-1, 3));  // -1/(m+2) with m = 1
    CHECK(r.vanishes_on_equal_slopes);
  }
  SUBCASE("the ratio is exactly -1/(m+2) across the sweep") {
    for (unsigned re = 2; re <= 8; ++re) {
      for (unsigned rf = 1; rf < re; ++rf) {
        auto r = a_identity_check({1, re, rf});
        CHECK(r.vanishes_on_equal_slopes);
        CHECK(r.proportional);
        CHECK(r.ratio == Rat(-1, static_cast<long>(re) + 1));
      }
    }
  }
  SUBCASE("rank constraints enforced") {
    CHECK_THROWS_AS(a_identity_check({1, 2, 2}), Error);
    CHECK_THROWS_AS(a_identity_check({1, 1, 0}), Error);
  }
}
