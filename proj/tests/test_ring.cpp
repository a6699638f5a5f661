#include <doctest.h>

#include "zstab/io.hpp"
#include "zstab/ring.hpp"
#include "zstab/rng.hpp"

using namespace zstab;

namespace {

GradedClass cls(const RingPtr& ring, const std::string& text) {
  return io::parse_class(ring, text);
}

GradedClass random_class(Rng& rng, const RingPtr& ring, bool unipotent = false,
                         bool nilpotent = false) {
  std::map<Monomial, Rat> coeffs;
  for (unsigned d = 0; d <= ring->top_degree(); d += 2) {
    for (const auto& m : ring->monomials_of_degree(d)) {
      if (d == 0) {
        if (unipotent) coeffs[m] = 1;
        else if (!nilpotent) coeffs[m] = rng.rat_in(3);
      } else {
        coeffs[m] = rng.rat_in(3);
      }
    }
  }
  return GradedClass(ring, coeffs);
}

}  // namespace

TEST_CASE("ring construction validates the integral table") {
  CHECK_THROWS_AS(make_ring(2, {{"h", 2}}, {}), Error);
  CHECK_THROWS_AS(make_ring(2, {{"h", 2}}, {{Monomial{1}, Rat(1)}}), Error);
  CHECK_THROWS_AS(make_ring(2, {{"h", 3}}, {{Monomial{2}, Rat(1)}}), Error);
  CHECK_NOTHROW(make_ring(2, {{"h", 2}}, {{Monomial{2}, Rat(1)}}));
}

TEST_CASE("multiply on CP2") {
  RingPtr ring = cp2_ring();
  GradedClass one_plus_h = cls(ring, "1 + h");
  CHECK(one_plus_h * one_plus_h == cls(ring, "1 + 2 h + h^2"));

  GradedClass h = cls(ring, "h");
  GradedClass h2 = cls(ring, "h^2");
  CHECK((h * h2).is_zero());  // degree 6 truncated

  // (3 - s h^2)(1 - b h + b^2 h^2 / 2) with s = 5, b = 3
  GradedClass a = cls(ring, "3 - 5 h^2");
  GradedClass b = cls(ring, "1 - 3 h + 9/2 h^2");
  CHECK(a * b == cls(ring, "3 - 9 h + 17/2 h^2"));
  // 3 b^2/2 - s = 27/2 - 5 = 17/2
}

TEST_CASE("integrate") {
  RingPtr ring = cp2_ring();
  CHECK(integrate(cls(ring, "h^2")) == 1);
  CHECK(integrate(cls(ring, "1 + h")) == 0);

  RingPtr two_gens = make_ring(
      2, {{"h", 2}, {"pt", 4}},
      {{Monomial{2, 0}, Rat(1)}, {Monomial{0, 1}, Rat(1)}, {Monomial{1, 1}, Rat(0)},
       {Monomial{2, 1}, Rat(0)}, {Monomial{0, 2}, Rat(0)}});
  CHECK(integrate(cls(two_gens, "7/32 h^2 + pt")) == Rat(39, 32));
}

TEST_CASE("char_class examples") {
  RingPtr ring = cp2_ring();
  GradedClass h = cls(ring, "h");
  SUBCASE("Chern character of the Maruyama bundle") {
    GradedClass ch = char_class(CharClassKind::ChernCharacter, Rat(3),
                                {GradedClass(ring), cls(ring, "5 h^2")});
    CHECK(ch == cls(ring, "3 - 5 h^2"));
  }
  SUBCASE("Todd of the tangent bundle") {
    GradedClass td = char_class(CharClassKind::Todd, Rat(2),
                                {cls(ring, "3 h"), cls(ring, "3 h^2")});
    CHECK(td == cls(ring, "1 + 3/2 h + h^2"));
  }
  SUBCASE("Ahat equals Todd when c1 = 0") {
    GradedClass td = char_class(CharClassKind::Todd, Rat(2),
                                {GradedClass(ring), cls(ring, "24 h^2")});
    GradedClass ahat = char_class(CharClassKind::AHat, Rat(2),
                                  {GradedClass(ring), cls(ring, "24 h^2")});
    CHECK(td == ahat);
    CHECK(ahat == cls(ring, "1 + 2 h^2"));  // 1 + c2/12 at c2 = 24 h^2
  }
  SUBCASE("inconsistent degrees rejected") {
    CHECK_THROWS_AS(char_class(CharClassKind::Todd, Rat(0), {cls(ring, "1 + h")}),
                    Error);
  }
}

TEST_CASE("series_sqrt") {
  RingPtr ring = cp2_ring();
  CHECK(series_sqrt(cls(ring, "1 + 3/2 h + h^2")) ==
        cls(ring, "1 + 3/4 h + 7/32 h^2"));
  CHECK(series_sqrt(cls(ring, "1")) == cls(ring, "1"));
  GradedClass root = series_sqrt(cls(ring, "1 + 2 h"));
  CHECK(root == cls(ring, "1 + h - 1/2 h^2"));
  CHECK(root * root == cls(ring, "1 + 2 h"));
  CHECK_THROWS_AS(series_sqrt(cls(ring, "2 + h")), Error);
}

TEST_CASE("exp_class") {
  RingPtr ring = cp2_ring();
  CHECK(exp_class(GradedClass(ring)) == cls(ring, "1"));
  CHECK(exp_class(cls(ring, "-3 h")) == cls(ring, "1 - 3 h + 9/2 h^2"));
  GradedClass h = cls(ring, "h");
  CHECK(exp_class(h) * exp_class(h) == exp_class(cls(ring, "2 h")));
  CHECK(exp_class(cls(ring, "2 h")) == cls(ring, "1 + 2 h + 2 h^2"));
  CHECK_THROWS_AS(exp_class(cls(ring, "1 + h")), Error);
}

TEST_CASE("ring axioms on random classes") {
  RingPtr ring = make_ring(
      2, {{"h", 2}, {"l", 2}},
      {{Monomial{2, 0}, Rat(3)}, {Monomial{1, 1}, Rat(1)}, {Monomial{0, 2}, Rat(-2)}});
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    GradedClass a = random_class(rng, ring);
    GradedClass b = random_class(rng, ring);
    GradedClass c = random_class(rng, ring);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * GradedClass::one(ring) == a);
    // integrate is linear
    CHECK(integrate(a + b) == integrate(a) + integrate(b));
  }
}

TEST_CASE("sqrt and exp identities on random inputs") {
  RingPtr ring = make_ring(
      3, {{"h", 2}},
      {{Monomial{3}, Rat(5)}});
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    GradedClass u = random_class(rng, ring, /*unipotent=*/true);
    GradedClass root = series_sqrt(u);
    CHECK(root * root == u);
    GradedClass a = random_class(rng, ring, false, /*nilpotent=*/true);
    GradedClass b = random_class(rng, ring, false, true);
    CHECK(exp_class(a + b) == exp_class(a) * exp_class(b));
  }
}

TEST_CASE("Chern character multiplicativity under line-bundle twists") {
  RingPtr ring = make_ring(
      2, {{"h", 2}, {"l", 2}},
      {{Monomial{2, 0}, Rat(1)}, {Monomial{1, 1}, Rat(2)}, {Monomial{0, 2}, Rat(-1)}});
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    long r = rng.int_in(1, 4);
    GradedClass c1 = cls(ring, "h").scaled(rng.rat_in(3)) +
                     cls(ring, "l").scaled(rng.rat_in(3));
    GradedClass c2 = cls(ring, "h^2").scaled(rng.rat_in(3)) +
                     cls(ring, "h*l").scaled(rng.rat_in(3));
    GradedClass lc = cls(ring, "h").scaled(rng.rat_in(3)) +
                     cls(ring, "l").scaled(rng.rat_in(3));
    BundleData e = BundleData::from_chern(ring, Rat(r), {c1, c2});
    // Twisted Chern data: c1' = c1 + r L, c2' = c2 + (r-1) c1 L + C(r,2) L^2.
    GradedClass c1t = c1 + lc.scaled(Rat(r));
    GradedClass c2t = c2 + (c1 * lc).scaled(Rat(r - 1)) +
                      (lc * lc).scaled(binomial(r, 2));
    BundleData twisted = BundleData::from_chern(ring, Rat(r), {c1t, c2t});
    CHECK(twisted.chern_character == e.chern_character * exp_class(lc));
    CHECK(e.twist(lc) == twisted);
  }
}

TEST_CASE("Newton round trip") {
  RingPtr ring = make_ring(3, {{"h", 2}}, {{Monomial{3}, Rat(1)}});
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    GradedClass c1 = cls(ring, "h").scaled(rng.rat_in(4));
    GradedClass c2 = cls(ring, "h^2").scaled(rng.rat_in(4));
    GradedClass c3 = cls(ring, "h^3").scaled(rng.rat_in(4));
    BundleData e = BundleData::from_chern(ring, Rat(rng.int_in(1, 5)), {c1, c2, c3});
    auto back = chern_from_character(e.chern_character);
    CHECK(back[0] == c1);
    CHECK(back[1] == c2);
    CHECK(back[2] == c3);
  }
}

TEST_CASE("rank-0 objects are supported directly") {
  RingPtr ring = cp2_ring();
  BundleData torsion = BundleData::from_character(cls(ring, "2 h + 3 h^2"));
  CHECK(torsion.rank() == 0);
  CHECK_THROWS_AS(BundleData::from_character(cls(ring, "-1 + h")), Error);
}

TEST_CASE("mismatched rings are rejected") {
  RingPtr a = cp2_ring();
  RingPtr b = cp2_ring();
  CHECK_THROWS_AS(cls(a, "h") * cls(b, "h"), Error);
}
