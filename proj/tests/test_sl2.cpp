#include <doctest.h>

#include "zstab/sl2.hpp"

using namespace zstab;

namespace {

Sl2Rep s(unsigned k) { return Sl2Rep::irreducible(k); }

std::map<long, unsigned long> product_weights(unsigned k, unsigned l) {
  std::map<long, unsigned long> w;
  for (long a = -(long)k; a <= (long)k; a += 2)
    for (long b = -(long)l; b <= (long)l; b += 2) ++w[a + b];
  return w;
}

}  // namespace

TEST_CASE("Clebsch-Gordan products") {
  CHECK(tensor(s(4), s(2)) == parse_rep("s6+s4+s2"));
  CHECK(tensor(s(4), s(2)).dimension() == 15);
  CHECK(wedge2(s(5)) == parse_rep("s8+s4+s0"));
  CHECK(wedge2(s(5)).dimension() == 15);
  CHECK(tensor(s(0), s(7)) == s(7));
  CHECK(sym2(s(1)) == s(2));
  CHECK(wedge2(s(1)) == s(0));
}

TEST_CASE("weight decomposition oracle") {
  CHECK(weight_decompose({{-2, 1}, {0, 1}, {2, 1}}) == s(2));
  CHECK(weight_decompose({{-2, 1}, {0, 2}, {2, 1}}) == parse_rep("s2+s0"));
  // Wedge^2 s^5 via its 15 pair weights.
  std::map<long, unsigned long> w;
  long wt[6] = {5, 3, 1, -1, -3, -5};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) ++w[wt[i] + wt[j]];
  CHECK(weight_decompose(w) == wedge2(s(5)));
  CHECK_THROWS_AS(weight_decompose({{1, 1}}), Error);
  CHECK_THROWS_AS(weight_decompose({{-2, 1}, {0, 0}, {2, 1}}), Error);
}

TEST_CASE("products agree with the weight oracle up to 12") {
  for (unsigned k = 0; k <= 12; ++k) {
    for (unsigned l = 0; l <= 12; ++l)
      CHECK(tensor(s(k), s(l)) == weight_decompose(product_weights(k, l)));
  }
  for (unsigned k = 0; k <= 20; ++k) {
    Sl2Rep both = sym2(s(k)) + wedge2(s(k));
    CHECK(both == tensor(s(k), s(k)));
    CHECK(tensor(s(k), s(k)).dimension() == (k + 1) * (k + 1));
  }
}

TEST_CASE("sym2/wedge2 of sums expand correctly") {
  Sl2Rep a = parse_rep("s3+2*s1");
  // dim Sym^2 V = d(d+1)/2, dim Wedge^2 V = d(d-1)/2 with d = dim V.
  unsigned long dim = a.dimension();
  CHECK(sym2(a).dimension() == dim * (dim + 1) / 2);
  CHECK(wedge2(a).dimension() == dim * (dim - 1) / 2);
  CHECK(sym2(a) + wedge2(a) == tensor(a, a));
}

TEST_CASE("virtual representations") {
  CHECK(rep_subtract(s(4), s(4)).is_effective());
  CHECK(rep_subtract(s(4), s(4)).as_effective().is_zero());
  CHECK(rep_subtract(parse_rep("s8+s4"), s(4)).as_effective() == s(8));
  CHECK_FALSE(rep_subtract(s(4), s(8)).is_effective());
  CHECK_THROWS_AS(rep_subtract(s(4), s(8)).as_effective(), Error);
  // ((s10+s6) (x) s2) minus (sl(s6) minus s2) leaves s8.
  Sl2Rep t = tensor(parse_rep("s10+s6"), s(2));
  Sl2Rep acting = rep_subtract(sl_of(6), s(2)).as_effective();
  CHECK(rep_subtract(t, acting).as_effective() == s(8));
}

TEST_CASE("deformation spaces of the three models") {
  auto v22 = deformation_space(DeformationModel::V22);
  CHECK(v22.moduli_tangent == s(8));
  CHECK(v22.dimension == 9);
  CHECK(v22.tangent == parse_rep("s12+s10+2*s8+s6+s4"));

  auto v5 = deformation_space(DeformationModel::V5);
  CHECK(v5.moduli_tangent.is_zero());
  CHECK(v5.dimension == 0);

  auto v14 = deformation_space(DeformationModel::V14);
  CHECK(v14.moduli_tangent == parse_rep("s12+s4"));
  CHECK(v14.dimension == 18);
  CHECK(v14.tangent == parse_rep("s12+s10+s8+s6+2*s4"));
}

TEST_CASE("gl and sl decompositions match the displayed lists") {
  CHECK(gl_of(6) == parse_rep("s12+s10+s8+s6+s4+s2+s0"));
  CHECK(gl_of(6).dimension() == 49);
  CHECK(sl_of(5) == parse_rep("s10+s8+s6+s4+s2"));
  CHECK(sl_of(5).dimension() == 35);
}

TEST_CASE("GIT classification of binary forms") {
  using Z = std::map<std::string, unsigned>;
  CHECK(git_classify(4, Z{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}}) ==
        GitClass::Stable);
  CHECK(git_classify(4, Z{{"a", 2}, {"b", 2}}) == GitClass::StrictlyPolystable);
  CHECK(git_classify(4, Z{{"a", 3}, {"b", 1}}) == GitClass::Unstable);
  CHECK(git_classify(4, Z{{"a", 2}, {"b", 1}, {"c", 1}}) ==
        GitClass::StrictlySemistable);
  CHECK(git_classify(4, Z{}) == GitClass::ZeroOrbit);
  CHECK_THROWS_AS(git_classify(4, Z{{"a", 3}}), Error);
}

TEST_CASE("GIT classification of the s12 + s4 sum") {
  using Z = std::map<std::string, unsigned>;
  Z twelve_distinct, four_distinct;
  for (int i = 0; i < 12; ++i) twelve_distinct["p" + std::to_string(i)] = 1;
  for (int i = 0; i < 4; ++i) four_distinct["q" + std::to_string(i)] = 1;
  CHECK(git_classify_sum(twelve_distinct, four_distinct) == GitClass::Stable);
  // Combined multiplicity 8 at two points.
  CHECK(git_classify_sum(Z{{"a", 8}, {"b", 4}}, Z{{"b", 4}}) ==
        GitClass::StrictlyPolystable);
  CHECK(git_classify_sum(Z{{"a", 9}, {"b", 3}}, four_distinct) ==
        GitClass::Unstable);
  CHECK_THROWS_AS(git_classify_sum(Z{{"a", 5}}, four_distinct), Error);
}

TEST_CASE("representation grammar") {
  CHECK(parse_rep("s12+2*s8").str() == "s12+2*s8");
  CHECK(parse_rep("0").is_zero());
  CHECK(parse_rep(" s4 + s0 ") == parse_rep("s0+s4"));
  CHECK(rep_subtract(s(2), parse_rep("2*s4")).str() == "-2*s4+s2");
  CHECK_THROWS_AS(parse_rep("x4"), Error);
}
