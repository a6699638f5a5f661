#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zstab/rational.hpp"

namespace zstab {

// Exponent vector over the ring's generators.
using Monomial = std::vector<unsigned>;

struct Generator {
  std::string name;
  unsigned degree;  // even cohomological degree
};

// Free commutative ring on named even-degree generators, truncated above
// degree 2n, with a top-degree integration table. Relations like h^3 = 0 on
// CP^2 are imposed only by the truncation and the table.
class IntersectionRing {
public:
  IntersectionRing(unsigned n, std::vector<Generator> generators,
                   std::map<Monomial, Rat> integral_table);

  unsigned dimension() const { return n_; }
  unsigned top_degree() const { return 2 * n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  size_t generator_index(const std::string& name) const;

  unsigned monomial_degree(const Monomial& m) const;
  std::string monomial_name(const Monomial& m) const;

  // All exponent vectors of total degree exactly d.
  std::vector<Monomial> monomials_of_degree(unsigned d) const;

  const Rat& table_entry(const Monomial& m) const;

private:
  unsigned n_;
  std::vector<Generator> gens_;
  std::map<Monomial, Rat> table_;
};

using RingPtr = std::shared_ptr<const IntersectionRing>;

RingPtr make_ring(unsigned n, std::vector<Generator> generators,
                  std::map<Monomial, Rat> integral_table);

// The projective plane with generator h and h^2 |-> 1.
RingPtr cp2_ring();

// Inhomogeneous class with rational coefficients, monomials of even degree
// <= 2n; products truncate above 2n.
class GradedClass {
public:
  GradedClass() = default;
  explicit GradedClass(RingPtr ring) : ring_(std::move(ring)) {}
  GradedClass(RingPtr ring, std::map<Monomial, Rat> coeffs);

  static GradedClass one(const RingPtr& ring);
  static GradedClass generator(const RingPtr& ring, const std::string& name);
  static GradedClass scalar(const RingPtr& ring, Rat v);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rat coeff(const Monomial& m) const;
  Rat degree0() const;
  GradedClass degree_part(unsigned d) const;
  // Largest degree with a nonzero term, 0 for the zero class.
  unsigned top_nonzero_degree() const;
  bool is_homogeneous(unsigned d) const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& o);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a += -b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  GradedClass scaled(const Rat& s) const;
  friend bool operator==(const GradedClass& a, const GradedClass& b);

  GradedClass pow(unsigned k) const;

private:
  void set(const Monomial& m, Rat v);
  RingPtr ring_;
  std::map<Monomial, Rat> coeffs_;  // nonzero entries only

  friend GradedClass multiply(const GradedClass& a, const GradedClass& b);
};

GradedClass multiply(const GradedClass& a, const GradedClass& b);

// Pairs the degree-2n part against the integral table; lower degrees give 0.
Rat integrate(const GradedClass& a);

// Complexified class, stored as real and imaginary GradedClass parts.
struct CGradedClass {
  GradedClass real_part;
  GradedClass imag_part;

  CGradedClass degree_component(unsigned d) const {
    return {real_part.degree_part(d), imag_part.degree_part(d)};
  }
};

Gaussian integrate(const CGradedClass& a);

enum class CharClassKind { ChernCharacter, Todd, AHat };

// kind applied to (rank, Chern classes c_1..c_k as pure-degree classes).
// Missing classes default to zero; classes beyond degree 2n are rejected.
GradedClass char_class(CharClassKind kind, const Rat& rank,
                       const std::vector<GradedClass>& chern_classes);

// Inverse direction: Chern classes from a Chern character, degrees 1..n.
std::vector<GradedClass> chern_from_character(const GradedClass& ch);

// Binomial series (1+N)^{1/2}; requires degree-0 part 1.
GradedClass series_sqrt(const GradedClass& u);

// Truncated exponential; requires degree-0 part 0.
GradedClass exp_class(const GradedClass& a);

// Holomorphic object given by its Chern character. degree-0 part = rank >= 0.
struct BundleData {
  GradedClass chern_character;

  static BundleData from_chern(const RingPtr& ring, const Rat& rank,
                               const std::vector<GradedClass>& chern_classes);
  static BundleData from_character(GradedClass ch);

  Rat rank() const { return chern_character.degree0(); }
  GradedClass c1() const { return chern_character.degree_part(2); }

  // Ch_j |-> (-1)^j Ch_j.
  BundleData dual() const;
  // Tensor with a line bundle of first Chern class l.
  BundleData twist(const GradedClass& l) const;

  friend bool operator==(const BundleData& a, const BundleData& b) {
    return a.chern_character == b.chern_character;
  }
};

}  // namespace zstab
