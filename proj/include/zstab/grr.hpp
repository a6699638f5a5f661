#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "zstab/charge.hpp"

namespace zstab {

// A curve or divisor in the ambient manifold, described by restriction data:
// integrals of ambient monomials over the submanifold, the degree of its
// canonical class (2g-2 for curves, int c_1(K_D)^2 for surfaces), and the
// degree of the restricted ambient canonical class.
struct EmbeddedSubmanifold {
  RingPtr ring;
  unsigned dim = 1;  // 1 or 2
  std::optional<GradedClass> ambient_class;  // degree 2(n - dim), optional
  Rat deg_canonical;        // curves: deg K_C = 2g - 2; surfaces: K_D^2
  std::map<Monomial, Rat> restriction_degrees;  // monomials of degree 2*dim
  Rat deg_ambient_canonical_restricted;

  void validate() const;
  // Integral over the submanifold of the degree-2*dim part of an ambient
  // class, via the restriction table.
  Rat restrict_integrate(const GradedClass& c) const;
};

EmbeddedSubmanifold curve_in_surface(const RingPtr& ring, long genus,
                                     std::map<Monomial, Rat> restriction_degrees,
                                     Rat deg_kx_restricted = Rat(0));

// Ch(i_* O_C) realized as a pairing functional against ambient classes of
// degree <= 2: lambda |-> int_C lambda . (1 - c_1(K_C (x) K_X|_C^*)/2).
std::function<Rat(const GradedClass&)> pushforward_ch_structure_sheaf(
    const EmbeddedSubmanifold& c);

enum class CyAmbient { Surface, ThreefoldCurve };

struct AnomalyReport {
  ChargePolynomial lhs;  // Z_C(E (x) K_C^{-1/2})
  ChargePolynomial rhs;  // Z(E (x) O_C) computed through Td(N_C)^{-1}
  bool equal = false;
};

// Checks Z_C(E (x) K_C^{-1/2}) = Z(E (x) O_C) for a curve in a Calabi-Yau
// surface or threefold; the ambient canonical degree must vanish.
AnomalyReport cy_anomaly_check(const ChargeSpec& spec, const BundleData& e,
                               const EmbeddedSubmanifold& c, CyAmbient ambient);

struct DivisorDiscrepancy {
  Rat universal_coefficient;  // 1/8 + 1/6 - 1/4 = 1/24
  Rat discrepancy;            // (1/24) int_D c_1(K_D)^2
  Gaussian mismatch_at_k;     // Z(E (x) i_* K_D^{1/2}) - Z_D(E) at the scale
};

DivisorDiscrepancy cy_divisor_discrepancy(const ChargeSpec& spec,
                                          const BundleData& e,
                                          const EmbeddedSubmanifold& d,
                                          const Rat& at_k = Rat(1));

}  // namespace zstab
