#include <doctest.h>

#include "zstab/grr.hpp"
#include "zstab/io.hpp"
#include "zstab/rng.hpp"

using namespace zstab;

namespace {

RingPtr k3_like_ring() {
  return make_ring(2, {{"h", 2}, {"e", 2}},
                   {{Monomial{2, 0}, Rat(2)},
                    {Monomial{1, 1}, Rat(1)},
                    {Monomial{0, 2}, Rat(0)}});
}

std::map<Monomial, Rat> curve_degrees(const Rat& dh, const Rat& de) {
  return {{Monomial{1, 0}, dh}, {Monomial{0, 1}, de}};
}

}  // namespace

TEST_CASE("structure sheaf pushforward functional") {
  RingPtr ring = k3_like_ring();
  GradedClass h = GradedClass::generator(ring, "h");
  SUBCASE("rational curve on a CY surface adds 1 against the unit class") {
    auto c = curve_in_surface(ring, 0, curve_degrees(Rat(3), Rat(1)));
    auto functional = pushforward_ch_structure_sheaf(c);
    // deg K_C = -2, deg K_X|_C = 0: correction (0 - (-2))/2 = 1.
    CHECK(functional(GradedClass::one(ring)) == Rat(1));
    CHECK(functional(h) == Rat(3));
  }
  SUBCASE("matching canonical degrees cancel the correction") {
    auto c = curve_in_surface(ring, 2, curve_degrees(Rat(3), Rat(1)), Rat(2));
    auto functional = pushforward_ch_structure_sheaf(c);
    CHECK(functional(GradedClass::one(ring)) == Rat(0));
  }
  SUBCASE("the functional realizes the Todd-inverse pairing") {
    Rng rng(47);
    for (int i = 0; i < 25; ++i) {
      long genus = rng.int_in(0, 5);
      Rat kx = Rat(2 * rng.int_in(-3, 3));
      auto c = curve_in_surface(ring, genus,
                                curve_degrees(rng.rat_in(4), rng.rat_in(4)), kx);
      auto functional = pushforward_ch_structure_sheaf(c);
      // Td(N_C)^{-1} pairing: lambda_0 (deg KX|C - deg KC)/2 + int_C lambda_2.
      GradedClass lambda = GradedClass::one(ring).scaled(rng.rat_in(3)) +
                           GradedClass::generator(ring, "h").scaled(rng.rat_in(3));
      Rat expected = lambda.degree0() * (kx - c.deg_canonical) / 2 +
                     c.restrict_integrate(lambda);
      CHECK(functional(lambda) == expected);
    }
  }
}

TEST_CASE("submanifold validation") {
  RingPtr ring = k3_like_ring();
  SUBCASE("odd canonical degree rejected") {
    EmbeddedSubmanifold c;
    c.ring = ring;
    c.dim = 1;
    c.deg_canonical = Rat(1);
    c.restriction_degrees = curve_degrees(Rat(1), Rat(0));
    CHECK_THROWS_AS(c.validate(), Error);
  }
  SUBCASE("missing restriction degrees rejected") {
    EmbeddedSubmanifold c;
    c.ring = ring;
    c.dim = 1;
    c.deg_canonical = Rat(0);
    c.restriction_degrees = {{Monomial{1, 0}, Rat(1)}};
    CHECK_THROWS_AS(c.validate(), Error);
  }
  SUBCASE("ambient class cross-check") {
    EmbeddedSubmanifold c;
    c.ring = ring;
    c.dim = 1;
    c.deg_canonical = Rat(-2);
    // [C] = h: int h.h = 2, int h.e = 1.
    c.restriction_degrees = curve_degrees(Rat(2), Rat(1));
    c.ambient_class = GradedClass::generator(ring, "h");
    CHECK_NOTHROW(c.validate());
    c.restriction_degrees = curve_degrees(Rat(3), Rat(1));
    CHECK_THROWS_AS(c.validate(), Error);
  }
}

TEST_CASE("CY anomaly identity on surfaces and threefold curves") {
  RingPtr ring = k3_like_ring();
  GradedClass h = GradedClass::generator(ring, "h");
  GradedClass e = GradedClass::generator(ring, "e");
  SUBCASE("trivial case: E = O, g = 1") {
    auto c = curve_in_surface(ring, 1, curve_degrees(Rat(3), Rat(1)));
    ChargeSpec spec = preset_charge("dhym", h, GradedClass(ring), {});
    BundleData o = BundleData::from_chern(ring, Rat(1), {});
    auto rep = cy_anomaly_check(spec, o, c, CyAmbient::Surface);
    CHECK(rep.equal);
    CHECK(rep.lhs == rep.rhs);
  }
  SUBCASE("exhaustive small-parameter sweep") {
    for (long rank = 1; rank <= 4; ++rank)
      for (long deg = -5; deg <= 5; ++deg)
        for (long genus = 0; genus <= 5; ++genus) {
          auto c = curve_in_surface(ring, genus, curve_degrees(Rat(3), Rat(1)));
          BundleData b = BundleData::from_chern(ring, Rat(rank),
                                                {e.scaled(Rat(deg))});
          ChargeSpec spec = preset_charge("dhym", h, h.scaled(Rat(1)), {});
          CHECK(cy_anomaly_check(spec, b, c, CyAmbient::Surface).equal);
        }
  }
  SUBCASE("non-CY data is rejected") {
    auto c = curve_in_surface(ring, 1, curve_degrees(Rat(3), Rat(1)), Rat(2));
    ChargeSpec spec = preset_charge("dhym", h, GradedClass(ring), {});
    BundleData o = BundleData::from_chern(ring, Rat(1), {});
    CHECK_THROWS_AS(cy_anomaly_check(spec, o, c, CyAmbient::Surface), Error);
  }
  SUBCASE("threefold curve") {
    RingPtr ring3 = make_ring(3, {{"h", 2}, {"e", 2}},
                              {{Monomial{3, 0}, Rat(1)},
                               {Monomial{2, 1}, Rat(1)},
                               {Monomial{1, 2}, Rat(0)},
                               {Monomial{0, 3}, Rat(0)}});
    GradedClass h3 = GradedClass::generator(ring3, "h");
    GradedClass e3 = GradedClass::generator(ring3, "e");
    EmbeddedSubmanifold c;
    c.ring = ring3;
    c.dim = 1;
    c.deg_canonical = Rat(4);  // genus 3
    c.restriction_degrees = {{Monomial{1, 0}, Rat(2)}, {Monomial{0, 1}, Rat(1)}};
    c.validate();
    ChargeSpec spec = preset_charge("dhym", h3, GradedClass(ring3), {});
    BundleData b = BundleData::from_chern(ring3, Rat(2), {e3.scaled(Rat(3))});
    auto rep = cy_anomaly_check(spec, b, c, CyAmbient::ThreefoldCurve);
    CHECK(rep.equal);
  }
}

TEST_CASE("divisor discrepancy in a CY threefold") {
  RingPtr ring3 = make_ring(3, {{"h", 2}, {"e", 2}},
                            {{Monomial{3, 0}, Rat(1)},
                             {Monomial{2, 1}, Rat(1)},
                             {Monomial{1, 2}, Rat(0)},
                             {Monomial{0, 3}, Rat(0)}});
  GradedClass h3 = GradedClass::generator(ring3, "h");
  EmbeddedSubmanifold d;
  d.ring = ring3;
  d.dim = 2;
  for (const auto& m : ring3->monomials_of_degree(4)) d.restriction_degrees[m] = Rat(0);
  d.restriction_degrees[Monomial{2, 0}] = Rat(1);
  ChargeSpec spec = preset_charge("dhym", h3, GradedClass(ring3), {});
  BundleData e = BundleData::from_chern(ring3, Rat(2), {});
  SUBCASE("the universal coefficient is 1/8 + 1/6 - 1/4 = 1/24") {
    d.deg_canonical = Rat(0);
    auto rep = cy_divisor_discrepancy(spec, e, d);
    CHECK(rep.universal_coefficient == Rat(1, 24));
    CHECK(rep.discrepancy == 0);
    CHECK(rep.mismatch_at_k == Gaussian());
  }
  SUBCASE("K_D^2 = 48 gives discrepancy 2") {
    d.deg_canonical = Rat(48);
    auto rep = cy_divisor_discrepancy(spec, e, d);
    CHECK(rep.discrepancy == Rat(2));
    // mismatch = rho_0 rk disc = (-1)(2)(2) = -4.
    CHECK(rep.mismatch_at_k == Gaussian(Rat(-4)));
  }
  SUBCASE("wrong dimension rejected") {
    EmbeddedSubmanifold c;
    c.ring = ring3;
    c.dim = 1;
    c.deg_canonical = Rat(0);
    c.restriction_degrees = {{Monomial{1, 0}, Rat(1)}, {Monomial{0, 1}, Rat(0)}};
    CHECK_THROWS_AS(cy_divisor_discrepancy(spec, e, c), Error);
  }
}
