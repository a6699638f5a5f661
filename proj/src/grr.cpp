#include "zstab/grr.hpp"

namespace zstab {

void EmbeddedSubmanifold::validate() const {
  if (!ring) throw Error("submanifold needs an ambient ring");
  if (dim != 1 && dim != 2) throw Error("submanifold dimension must be 1 or 2");
  if (dim >= ring->dimension())
    throw Error("submanifold must be proper in the ambient manifold");
  if (dim == 1) {
    // deg K_C = 2g - 2 for a smooth curve.
    Rat d = deg_canonical;
    if (d.get_den() != 1 || d < -2 || (d.get_num() % 2) != 0)
      throw Error("curve canonical degree must be an even integer >= -2");
  }
  for (const auto& m : ring->monomials_of_degree(2 * dim)) {
    if (restriction_degrees.find(m) == restriction_degrees.end())
      throw Error("restriction degree missing for " + ring->monomial_name(m));
  }
  if (ambient_class) {
    if (ambient_class->ring() != ring) throw Error("mismatched rings");
    unsigned want = 2 * (ring->dimension() - dim);
    if (!ambient_class->is_homogeneous(want))
      throw Error("submanifold class must have degree " + std::to_string(want));
    // Cross-check the two realizations of the pushforward: pairing against
    // the ambient class must reproduce the restriction table.
    for (const auto& [m, v] : restriction_degrees) {
      GradedClass mono(ring, {{m, Rat(1)}});
      if (integrate(mono * *ambient_class) != v)
        throw Error("restriction degrees disagree with the ambient class at " +
                    ring->monomial_name(m));
    }
  }
}

Rat EmbeddedSubmanifold::restrict_integrate(const GradedClass& c) const {
  if (c.ring() != ring) throw Error("mismatched rings");
  Rat acc(0);
  for (const auto& [m, v] : c.coefficients()) {
    if (ring->monomial_degree(m) != 2 * dim) continue;
    auto it = restriction_degrees.find(m);
    if (it == restriction_degrees.end())
      throw Error("restriction degree missing for " + ring->monomial_name(m));
    acc += v * it->second;
  }
  return acc;
}

EmbeddedSubmanifold curve_in_surface(const RingPtr& ring, long genus,
                                     std::map<Monomial, Rat> restriction_degrees,
                                     Rat deg_kx_restricted) {
  EmbeddedSubmanifold c;
  c.ring = ring;
  c.dim = 1;
  c.deg_canonical = Rat(2 * genus - 2);
  c.restriction_degrees = std::move(restriction_degrees);
  c.deg_ambient_canonical_restricted = std::move(deg_kx_restricted);
  c.validate();
  return c;
}

std::function<Rat(const GradedClass&)> pushforward_ch_structure_sheaf(
    const EmbeddedSubmanifold& c) {
  c.validate();
  if (c.dim != 1 || c.ring->dimension() != 2)
    throw Error("structure-sheaf pushforward is for curves in surfaces");
  // Ch(i_* O_C) pairs as int_C lambda . (1 - c_1(K_C (x) K_X|_C^*)/2).
  Rat correction = (c.deg_ambient_canonical_restricted - c.deg_canonical) / 2;
  EmbeddedSubmanifold copy = c;
  return [copy, correction](const GradedClass& lambda) -> Rat {
    return copy.restrict_integrate(lambda) + lambda.degree0() * correction;
  };
}

namespace {

// One-dimensional ring on the restrictions of the ambient degree-2
// generators plus an abstract point class for c_1(K_C).
struct CurveRing {
  RingPtr ring;
  size_t pt_index;  // generator index of the point class
  std::map<size_t, size_t> ambient_gen;  // ambient index -> curve index
};

CurveRing make_curve_ring(const EmbeddedSubmanifold& c) {
  std::vector<Generator> gens;
  std::map<Monomial, Rat> table;
  const auto& amb = c.ring->generators();
  std::map<size_t, size_t> gen_map;
  for (size_t i = 0; i < amb.size(); ++i) {
    if (amb[i].degree != 2) continue;
    gen_map[i] = gens.size();
    gens.push_back({amb[i].name, 2});
  }
  gens.push_back({"ptC", 2});
  size_t count = gens.size();
  for (size_t i = 0; i < count; ++i) {
    Monomial m(count, 0);
    m[i] = 1;
    if (i + 1 == count) {
      table[m] = Rat(1);
    } else {
      for (const auto& [ai, ci] : gen_map) {
        if (ci != i) continue;
        Monomial am(amb.size(), 0);
        am[ai] = 1;
        table[m] = c.restriction_degrees.at(am);
      }
    }
  }
  CurveRing cr;
  cr.ring = make_ring(1, std::move(gens), std::move(table));
  cr.pt_index = count - 1;
  cr.ambient_gen = std::move(gen_map);
  return cr;
}

// Degree <= 2 part of an ambient class, moved onto the curve ring.
GradedClass restrict_class(const CurveRing& cr, const EmbeddedSubmanifold& c,
                           const GradedClass& x) {
  std::map<Monomial, Rat> coeffs;
  size_t ngens = cr.ring->generators().size();
  for (const auto& [m, v] : x.coefficients()) {
    unsigned deg = c.ring->monomial_degree(m);
    if (deg == 0) {
      coeffs[Monomial(ngens, 0)] += v;
    } else if (deg == 2) {
      size_t ai = 0;
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) ai = i;
      Monomial cm(ngens, 0);
      cm[cr.ambient_gen.at(ai)] = 1;
      coeffs[cm] += v;
    }
  }
  return GradedClass(cr.ring, std::move(coeffs));
}

}  // namespace

AnomalyReport cy_anomaly_check(const ChargeSpec& spec, const BundleData& e,
                               const EmbeddedSubmanifold& c, CyAmbient ambient) {
  c.validate();
  if (c.dim != 1) throw Error("cy_anomaly_check takes a curve");
  unsigned n = c.ring->dimension();
  if (ambient == CyAmbient::Surface && n != 2)
    throw Error("surface check needs a 2-dimensional ambient ring");
  if (ambient == CyAmbient::ThreefoldCurve && n != 3)
    throw Error("threefold check needs a 3-dimensional ambient ring");
  if (c.deg_ambient_canonical_restricted != 0)
    throw Error("cy_anomaly_check requires Calabi-Yau ambient data (deg K_X|_C = 0)");
  if (e.chern_character.ring() != c.ring || spec.omega.ring() != c.ring)
    throw Error("mismatched rings");

  // Left side through actual class arithmetic on a curve ring: restrict the
  // data, twist by K_C^{-1/2}, integrate omega-powers.
  CurveRing cr = make_curve_ring(c);
  GradedClass pt = GradedClass::generator(cr.ring, "ptC");
  BundleData e_c = BundleData::from_character(restrict_class(cr, c, e.chern_character));
  BundleData twisted = e_c.twist(pt.scaled(-c.deg_canonical / 2));
  GradedClass u_c = restrict_class(cr, c, spec.u);
  GradedClass omega_c = restrict_class(cr, c, spec.omega);
  std::vector<Gaussian> lhs(n + 1);
  {
    GradedClass base = twisted.chern_character * u_c;
    GradedClass omega_pow = GradedClass::one(cr.ring);
    for (unsigned d = 0; d <= n; ++d) {
      Rat val = integrate(omega_pow * base);
      const Gaussian& rho = spec.rho.entries[d];
      lhs[d] = Gaussian(rho.re * val, rho.im * val);
      omega_pow = omega_pow * omega_c;
    }
  }

  // Right side through the pushforward pairing functional and Td(N_C)^{-1}.
  Rat correction = (c.deg_ambient_canonical_restricted - c.deg_canonical) / 2;
  std::vector<Gaussian> rhs(n + 1);
  {
    GradedClass base = e.chern_character * spec.u;
    GradedClass omega_pow = GradedClass::one(c.ring);
    for (unsigned d = 0; d <= n; ++d) {
      GradedClass integrand = omega_pow * base;
      Rat val = c.restrict_integrate(integrand) + integrand.degree0() * correction;
      const Gaussian& rho = spec.rho.entries[d];
      rhs[d] = Gaussian(rho.re * val, rho.im * val);
      omega_pow = omega_pow * spec.omega;
    }
  }

  AnomalyReport report;
  report.lhs = ChargePolynomial(std::move(lhs));
  report.rhs = ChargePolynomial(std::move(rhs));
  report.equal = report.lhs == report.rhs;
  return report;
}

DivisorDiscrepancy cy_divisor_discrepancy(const ChargeSpec& spec,
                                          const BundleData& e,
                                          const EmbeddedSubmanifold& d,
                                          const Rat& at_k) {
  d.validate();
  if (d.dim != 2 || d.ring->dimension() != 3)
    throw Error("cy_divisor_discrepancy takes a divisor in a threefold");
  DivisorDiscrepancy out;
  out.universal_coefficient = Rat(1, 8) + Rat(1, 6) - Rat(1, 4);
  out.discrepancy = out.universal_coefficient * d.deg_canonical;
  // Only the degree-0 part of the integrand meets the degree-4 discrepancy
  // class on D, so the mismatch is rho_0 rk(E) K_D^2 / 24 at every scale.
  const Gaussian& rho0 = spec.rho.entries[0];
  Rat factor = e.rank() * out.discrepancy;
  out.mismatch_at_k = Gaussian(rho0.re * factor, rho0.im * factor);
  (void)at_k;
  return out;
}

}  // namespace zstab
