#include <doctest.h>

#include "zstab/charge.hpp"
#include "zstab/io.hpp"
#include "zstab/rng.hpp"

using namespace zstab;

namespace {

GradedClass cls(const RingPtr& ring, const std::string& text) {
  return io::parse_class(ring, text);
}

ChargeSpec dhym(const RingPtr& ring, const Rat& b) {
  GradedClass h = GradedClass::generator(ring, "h");
  return preset_charge("dhym", h, h.scaled(b), {});
}

}  // namespace

TEST_CASE("stability vector validation") {
  StabilityVector strict{{Gaussian(Rat(-1), Rat(1)), Gaussian(Rat(0), Rat(1)),
                          Gaussian(Rat(1), Rat(1))}};
  // ratios: rho0/rho1 = (-1+i)/i = 1 + i, rho1/rho2 = i/(1+i) = (1+i)/2
  CHECK(strict.strictly_valid());
  CHECK(strict.weakly_valid());

  // dHYM on a surface: rho = (-1, i, 1/2) is only weakly valid.
  StabilityVector preset{{Gaussian(Rat(-1)), Gaussian(Rat(0), Rat(1)),
                          Gaussian(Rat(1, 2))}};
  CHECK_FALSE(preset.strictly_valid());
  CHECK(preset.weakly_valid());

  StabilityVector with_zero{{Gaussian(), Gaussian(Rat(0), Rat(1)),
                             Gaussian(Rat(1, 2))}};
  CHECK_FALSE(with_zero.weakly_valid());
}

TEST_CASE("dHYM preset reproduces the worked charge polynomial") {
  RingPtr ring = cp2_ring();
  for (const Rat& sigma : {Rat(0), Rat(1), Rat(7, 2)}) {
    for (const Rat& b : {Rat(0), Rat(-1), Rat(2, 3)}) {
      ChargeSpec spec = dhym(ring, b);
      CHECK(spec.weak_validated);
      BundleData e = BundleData::from_chern(
          ring, Rat(3), {GradedClass(ring), cls(ring, "h^2").scaled(sigma)});
      ChargePolynomial z = central_charge(spec, e);
      // sigma + (3/2)k^2 - 3ibk - (3/2)b^2
      CHECK(z.coeff(0) == Gaussian(sigma - Rat(3, 2) * b * b));
      CHECK(z.coeff(1) == Gaussian(Rat(0), Rat(-3) * b));
      CHECK(z.coeff(2) == Gaussian(Rat(3, 2)));
    }
  }
}

TEST_CASE("central charge of the zero sheaf vanishes") {
  RingPtr ring = cp2_ring();
  ChargeSpec spec = dhym(ring, Rat(1));
  BundleData zero = BundleData::from_character(GradedClass(ring));
  CHECK(central_charge(spec, zero).is_zero());
}

TEST_CASE("Z_Td at b = 0 against a direct series expansion") {
  RingPtr ring = cp2_ring();
  GradedClass h = cls(ring, "h");
  std::vector<GradedClass> tangent = {cls(ring, "3 h"), cls(ring, "3 h^2")};
  ChargeSpec spec = preset_charge("td", h, GradedClass(ring), tangent);
  BundleData o = BundleData::from_chern(ring, Rat(1), {});
  ChargePolynomial z = central_charge(spec, o);
  // Independent oracle: -int e^{-ikh} sqrt(Td), term by term. With
  // sqrt(Td) = 1 + 3/4 h + 7/32 h^2:
  //   k^2: -(-i)^2/2! * 1 = 1/2
  //   k^1: -(-i) * 3/4 = 3i/4
  //   k^0: -(7/32)
  CHECK(z.coeff(2) == Gaussian(Rat(1, 2)));
  CHECK(z.coeff(1) == Gaussian(Rat(0), Rat(3, 4)));
  CHECK(z.coeff(0) == Gaussian(Rat(-7, 32)));
}

TEST_CASE("central charge is additive and the over-class defaults correctly") {
  RingPtr ring = cp2_ring();
  ChargeSpec spec = dhym(ring, Rat(-2));
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    BundleData s = BundleData::from_chern(
        ring, Rat(rng.int_in(1, 3)),
        {cls(ring, "h").scaled(rng.rat_in(3)), cls(ring, "h^2").scaled(rng.rat_in(3))});
    BundleData q = BundleData::from_chern(
        ring, Rat(rng.int_in(1, 3)),
        {cls(ring, "h").scaled(rng.rat_in(3)), cls(ring, "h^2").scaled(rng.rat_in(3))});
    BundleData e = BundleData::from_character(s.chern_character + q.chern_character);
    CHECK(central_charge(spec, s) + central_charge(spec, q) ==
          central_charge(spec, e));
    // k^n coefficient: rho_n [omega]^n rk, with positive imaginary part for
    // strictly valid vectors (the preset is real at top degree).
    ChargePolynomial z = central_charge(spec, e);
    CHECK(z.coeff(2) == Gaussian(e.rank() / 2));
    CHECK(central_charge(spec, e, GradedClass::one(ring)) == z);
  }
}

TEST_CASE("k^n coefficient has positive imaginary part for strict vectors") {
  RingPtr ring = cp2_ring();
  ChargeSpec spec;
  spec.omega = cls(ring, "h");
  spec.u = cls(ring, "1");
  spec.rho.entries = {Gaussian(Rat(-1), Rat(1)), Gaussian(Rat(0), Rat(1)),
                      Gaussian(Rat(1), Rat(1))};
  REQUIRE(spec.rho.strictly_valid());
  BundleData e = BundleData::from_chern(ring, Rat(2), {});
  ChargePolynomial z = central_charge(spec, e);
  CHECK(z.degree() == 2);
  CHECK(sgn(z.coeff(2).im) > 0);
}

TEST_CASE("slope and phase conventions") {
  ChargePolynomial just_i({Gaussian(Rat(0), Rat(1))});
  auto sp = slope_phase(just_i, Rat(1));
  CHECK(sp.kind == SlopeKind::Finite);
  CHECK(sp.slope == 0);

  ChargePolynomial minus_one({Gaussian(Rat(-1))});
  CHECK(slope_phase(minus_one, Rat(1)).kind == SlopeKind::PlusInfinity);

  ChargePolynomial plus_one({Gaussian(Rat(1))});
  CHECK(slope_phase(plus_one, Rat(1)).kind == SlopeKind::MinusInfinity);

  ChargePolynomial zero;
  auto spz = slope_phase(zero, Rat(2));
  CHECK(spz.zero_charge);
  CHECK(spz.kind == SlopeKind::PlusInfinity);

  // dHYM example at k = 1, sigma = 1, b = -1: Z = 1 + 3i, slope -1/3.
  RingPtr ring = cp2_ring();
  ChargeSpec spec = dhym(ring, Rat(-1));
  BundleData e = BundleData::from_chern(ring, Rat(3),
                                        {GradedClass(ring), cls(ring, "h^2")});
  auto sp2 = slope_phase(central_charge(spec, e), Rat(1));
  CHECK(sp2.kind == SlopeKind::Finite);
  CHECK(sp2.slope == Rat(-1, 3));
  CHECK_THROWS_AS(slope_phase(just_i, Rat(0)), Error);
}

TEST_CASE("Hilbert polynomials on CP2") {
  RingPtr ring = cp2_ring();
  GradedClass h = cls(ring, "h");
  TangentData tangent{{cls(ring, "3 h"), cls(ring, "3 h^2")}};
  BundleData o = BundleData::from_chern(ring, Rat(1), {});
  Poly po = hilbert_polynomial(o, h, tangent);
  CHECK(po == Poly({Rat(1), Rat(3, 2), Rat(1, 2)}));  // (k^2+3k+2)/2

  BundleData r3 = BundleData::from_chern(ring, Rat(3), {});
  CHECK(hilbert_polynomial(r3, h, tangent) == po.scaled(Rat(3)));

  BundleData e = BundleData::from_chern(ring, Rat(3),
                                        {GradedClass(ring), cls(ring, "h^2").scaled(Rat(2))});
  CHECK(hilbert_polynomial(e, h, tangent) ==
        po.scaled(Rat(3)) - Poly({Rat(2)}));
  CHECK_THROWS_AS(hilbert_polynomial(o, h, TangentData{}), Error);
}

TEST_CASE("Gieseker comparison") {
  RingPtr ring = cp2_ring();
  GradedClass h = cls(ring, "h");
  TangentData tangent{{cls(ring, "3 h"), cls(ring, "3 h^2")}};
  BundleData e = BundleData::from_chern(ring, Rat(3),
                                        {GradedClass(ring), cls(ring, "h^2")});
  BundleData f = BundleData::from_chern(ring, Rat(2),
                                        {GradedClass(ring), cls(ring, "h^2")});
  SUBCASE("equal bundles") {
    CHECK(gieseker_compare(e, e, h, tangent).ordering == Ordering::Equal);
  }
  SUBCASE("the Maruyama pair is Gieseker-stable at order k^0") {
    auto cmp = gieseker_compare(f, e, h, tangent);
    CHECK(cmp.ordering == Ordering::Less);
    CHECK(cmp.first_difference_order == 0);
    CHECK(cmp.leading_difference == Rat(-1, 6));
  }
  SUBCASE("slope-dominant subobject wins at order k^1") {
    BundleData big_slope = BundleData::from_chern(ring, Rat(1), {cls(ring, "h")});
    auto cmp = gieseker_compare(big_slope, e, h, tangent);
    CHECK(cmp.ordering == Ordering::Greater);
    CHECK(cmp.first_difference_order == 1);
  }
  SUBCASE("rank zero rejected") {
    BundleData torsion = BundleData::from_character(cls(ring, "h"));
    CHECK_THROWS_AS(gieseker_compare(torsion, e, h, tangent), Error);
  }
  SUBCASE("gieseker agrees with slope comparison when slopes differ") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
      BundleData a = BundleData::from_chern(
          ring, Rat(rng.int_in(1, 4)),
          {cls(ring, "h").scaled(Rat(rng.int_in(-4, 4))),
           cls(ring, "h^2").scaled(rng.rat_in(3))});
      BundleData b = BundleData::from_chern(
          ring, Rat(rng.int_in(1, 4)),
          {cls(ring, "h").scaled(Rat(rng.int_in(-4, 4))),
           cls(ring, "h^2").scaled(rng.rat_in(3))});
      Rat mu_a = integrate(a.c1() * h) / a.rank();
      Rat mu_b = integrate(b.c1() * h) / b.rank();
      if (mu_a == mu_b) continue;
      auto cmp = gieseker_compare(a, b, h, tangent);
      CHECK(cmp.ordering == (mu_a < mu_b ? Ordering::Less : Ordering::Greater));
      CHECK(cmp.first_difference_order == 1);
    }
  }
}
