#pragma once

#include <map>
#include <string>
#include <vector>

#include "zstab/rational.hpp"

namespace zstab {

// Finite multiset of irreducible SL(2,C) representations s^k.
class Sl2Rep {
public:
  Sl2Rep() = default;
  explicit Sl2Rep(std::map<unsigned, unsigned> multiplicities);
  static Sl2Rep irreducible(unsigned k, unsigned mult = 1);

  const std::map<unsigned, unsigned>& multiplicities() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  unsigned long dimension() const;
  // Weight multiplicities, weight -> count (weights have the parity of k).
  std::map<long, unsigned long> weights() const;

  Sl2Rep& operator+=(const Sl2Rep& o);
  friend Sl2Rep operator+(Sl2Rep a, const Sl2Rep& b) { return a += b; }
  friend bool operator==(const Sl2Rep& a, const Sl2Rep& b) { return a.m_ == b.m_; }

  std::string str() const;  // e.g. "s12+2*s8+s0"

private:
  std::map<unsigned, unsigned> m_;  // k -> multiplicity, nonzero only
};

// Parses the CLI grammar: "s12+2*s8", "0" for the zero representation.
Sl2Rep parse_rep(const std::string& s);

enum class ProductKind { Tensor, Sym2, Wedge2 };

// Clebsch-Gordan products; Sym2/Wedge2 of sums expand through
// Sym^2(A+B) = Sym^2 A + A(x)B + Sym^2 B and the Wedge^2 analogue.
Sl2Rep decompose_product(ProductKind kind, const Sl2Rep& a,
                         const Sl2Rep* b = nullptr);

Sl2Rep tensor(const Sl2Rep& a, const Sl2Rep& b);
Sl2Rep sym2(const Sl2Rep& a);
Sl2Rep wedge2(const Sl2Rep& a);

// gl(s^m) = s^m (x) s^m and sl(s^m) = gl(s^m) - s^0.
Sl2Rep gl_of(unsigned m);
Sl2Rep sl_of(unsigned m);

// Greedy highest-weight peeling: the unique representation with the given
// symmetric weight multiplicities. Throws on unrealizable input.
Sl2Rep weight_decompose(const std::map<long, unsigned long>& weights);

// Formal difference of representations.
class VirtualSl2Rep {
public:
  VirtualSl2Rep() = default;
  VirtualSl2Rep(const Sl2Rep& plus, const Sl2Rep& minus);

  const std::map<unsigned, long long>& multiplicities() const { return m_; }
  bool is_effective() const;
  // The underlying Sl2Rep; throws when not effective.
  Sl2Rep as_effective() const;
  std::string str() const;

private:
  std::map<unsigned, long long> m_;
};

VirtualSl2Rep rep_subtract(const Sl2Rep& a, const Sl2Rep& b);

enum class DeformationModel { V22, V5, V14 };

struct DeformationReport {
  Sl2Rep tangent;        // tangent space of the Grassmannian at the invariant plane
  Sl2Rep acting;         // sl(V) modulo the s^2 stabiliser
  Sl2Rep moduli_tangent; // effective difference
  unsigned long dimension = 0;
};

// Versal deformation spaces of the three Grassmannian zero-locus models.
DeformationReport deformation_space(DeformationModel model);

enum class GitClass {
  ZeroOrbit,
  Unstable,
  StrictlySemistable,
  StrictlyPolystable,
  Stable
};

// Zeros of a degree-p binary form as (point label, multiplicity); an empty
// multiset is the zero polynomial.
GitClass git_classify(unsigned p,
                      const std::map<std::string, unsigned>& zeros);

// s^12 (+) s^4 factor pair, classified by the union of zeros with p = 16.
GitClass git_classify_sum(const std::map<std::string, unsigned>& zeros12,
                          const std::map<std::string, unsigned>& zeros4);

const char* to_string(GitClass c);

}  // namespace zstab
