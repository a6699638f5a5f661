#include <doctest.h>

#include "zstab/io.hpp"

using namespace zstab;
using zstab::io::Json;

TEST_CASE("rational and gaussian literals") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat(" -6/8 ") == Rat(-3, 4));
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK(parse_gaussian("i") == Gaussian(Rat(0), Rat(1)));
  CHECK(parse_gaussian("-i") == Gaussian(Rat(0), Rat(-1)));
  CHECK(parse_gaussian("1/2-3/4i") == Gaussian(Rat(1, 2), Rat(-3, 4)));
  CHECK(parse_gaussian("2") == Gaussian(Rat(2)));
  CHECK(to_string(Gaussian(Rat(1, 2), Rat(-3, 4))) == "1/2-3/4i");
  CHECK(to_string(Gaussian(Rat(0), Rat(1))) == "i");
}

TEST_CASE("class grammar") {
  RingPtr ring = cp2_ring();
  CHECK(io::parse_class(ring, "1 + 3/2 h + h^2") ==
        io::parse_class(ring, "h^2 + 3/2h + 1"));
  CHECK(io::parse_class(ring, "2*h - h") == io::parse_class(ring, "h"));
  CHECK(io::parse_class(ring, "-h").coeff(Monomial{1}) == Rat(-1));
  CHECK_THROWS_AS(io::parse_class(ring, "q"), Error);
  CHECK_THROWS_AS(io::parse_class(ring, "h^3"), Error);  // above truncation
}

TEST_CASE("ring and bundle blocks") {
  Json j = Json::parse(R"({
    "n": 2,
    "generators": [{"name": "h", "degree": 2}],
    "integral_table": {"h^2": "1"}
  })");
  RingPtr ring = io::parse_ring(j);
  CHECK(ring->dimension() == 2);
  CHECK(integrate(io::parse_class(ring, "h^2")) == 1);

  Json missing = Json::parse(R"({
    "n": 2,
    "generators": [{"name": "h", "degree": 2}],
    "integral_table": {}
  })");
  CHECK_THROWS_AS(io::parse_ring(missing), Error);

  Json bj = Json::parse(R"({"rank": "3", "chern": {"c2": "1 h^2"}})");
  BundleData e = io::parse_bundle(ring, bj);
  CHECK(e.rank() == 3);
  CHECK(e.chern_character == io::parse_class(ring, "3 - h^2"));

  Json cj = Json::parse(R"({"character": "2 + h - 1/2 h^2"})");
  CHECK(io::parse_bundle(ring, cj).rank() == 2);
}

TEST_CASE("charge blocks: presets and explicit vectors") {
  RingPtr ring = cp2_ring();
  Json preset = Json::parse(R"({"preset": "dhym", "omega": "h", "b_field": "-1 h"})");
  ChargeSpec spec = io::parse_charge(ring, preset, false);
  CHECK(spec.weak_validated);
  CHECK(spec.u == exp_class(io::parse_class(ring, "h")));

  Json explicit_rho = Json::parse(R"({
    "rho": ["-1+i", "i", "1+i"],
    "omega": "h",
    "u": "1 - h"
  })");
  ChargeSpec strict = io::parse_charge(ring, explicit_rho, false);
  CHECK_FALSE(strict.weak_validated);

  Json weak_only = Json::parse(R"({"rho": ["-1", "i", "1/2"], "omega": "h"})");
  CHECK_THROWS_AS(io::parse_charge(ring, weak_only, false), Error);
  CHECK_NOTHROW(io::parse_charge(ring, weak_only, true));
}

TEST_CASE("problem specs resolve bundle names") {
  Json j = Json::parse(R"({
    "ring": {"n": 2, "generators": [{"name": "h", "degree": 2}],
             "integral_table": {"h^2": "1"}},
    "bundles": {"E": {"rank": "3", "chern": {"c2": "1 h^2"}}},
    "charge": {"preset": "dhym", "omega": "h"}
  })");
  auto prob = io::parse_problem(j, true);
  CHECK(prob.bundle("E").rank() == 3);
  CHECK_THROWS_AS(prob.bundle("missing"), Error);
  CHECK(prob.charge.has_value());
}

TEST_CASE("submanifold schema") {
  Json j = Json::parse(R"({
    "ring": {"n": 2,
             "generators": [{"name": "h", "degree": 2}, {"name": "e", "degree": 2}],
             "integral_table": {"h^2": "2", "h*e": "1", "e^2": "0"}},
    "grr": {"submanifold": {
      "dim": 1, "genus": 2, "deg_KX_restricted": "0",
      "restriction_degrees": {"h": "3", "e": "1"}}}
  })");
  auto prob = io::parse_problem(j, true);
  auto sub = io::parse_submanifold(prob.ring, j.at("grr").at("submanifold"));
  CHECK(sub.dim == 1);
  CHECK(sub.deg_canonical == 2);
  CHECK(sub.restrict_integrate(io::parse_class(prob.ring, "2 h + e")) == 7);
}

TEST_CASE("reports serialize rationals as strings") {
  ChargePolynomial z({Gaussian(Rat(1, 2)), Gaussian(Rat(0), Rat(-3))});
  Json j = io::charge_to_json(z);
  CHECK(j["coefficients"][0] == "1/2");
  CHECK(j["coefficients"][1] == "-3i");
}
