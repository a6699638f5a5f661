#include "zstab/surface.hpp"

namespace zstab {

namespace {

// X = lambda * Y exactly, coefficientwise; throws when X is not proportional.
Rat proportion(const GradedClass& x, const GradedClass& y,
               const std::string& what) {
  if (x.is_zero()) return Rat(0);
  // Find a nonzero coefficient of y to fix lambda.
  const auto& yc = y.coefficients();
  if (yc.empty()) throw Error(what + ": reference class is zero");
  auto it = yc.begin();
  Rat lambda = x.coeff(it->first) / it->second;
  if (!(x == y.scaled(lambda)))
    throw Error(what + " lies outside the proportional regime");
  return lambda;
}

}  // namespace

ProportionalRegime proportional_regime(const ChargeSpec& spec,
                                       const BundleData& l) {
  const RingPtr& ring = spec.omega.ring();
  if (!ring || ring->dimension() != 2)
    throw Error("surface reduction requires a ring of dimension 2");
  if (l.chern_character.ring() != ring) throw Error("mismatched rings");
  if (l.rank() != 1) throw Error("surface reduction takes a line bundle");
  ProportionalRegime regime;
  GradedClass omega2 = spec.omega * spec.omega;
  regime.u2 = proportion(spec.u.degree_part(2), spec.omega, "U_2");
  regime.u4 = proportion(spec.u.degree_part(4), omega2, "U_4");
  regime.alpha = proportion(l.c1(), spec.omega, "c_1(L)");
  return regime;
}

SurfaceReduction surface_coefficients(const ChargeSpec& spec,
                                      const BundleData& l) {
  return surface_coefficients(spec, spec.omega, proportional_regime(spec, l));
}

SurfaceReduction surface_coefficients(const ChargeSpec& spec,
                                      const GradedClass& omega,
                                      const ProportionalRegime& regime) {
  spec.validate(/*allow_weak=*/true);
  const RingPtr& ring = omega.ring();
  if (!ring || ring->dimension() != 2)
    throw Error("surface reduction requires a ring of dimension 2");
  if (spec.rho.entries.size() != 3)
    throw Error("surface reduction needs rho_0, rho_1, rho_2");
  const Gaussian& r0 = spec.rho.entries[0];
  const Gaussian& r1 = spec.rho.entries[1];
  const Gaussian& r2 = spec.rho.entries[2];
  Rat p21 = r2.re * r1.im - r2.im * r1.re;
  Rat p20 = r2.im * r0.re - r2.re * r0.im;
  Rat p01 = r0.re * r1.im - r0.im * r1.re;

  Rat vol = integrate(omega * omega);
  if (vol == 0) throw Error("omega^2 must pair nontrivially");
  Rat deg_l = regime.alpha * vol;
  Rat omega_u2 = regime.u2 * vol;
  Rat u4_int = regime.u4 * vol;
  Rat alpha_u2 = regime.alpha * regime.u2 * vol;
  Rat alpha_sq = regime.alpha * regime.alpha * vol;

  Rat d = deg_l + omega_u2;
  Rat q = u4_int + alpha_u2 + alpha_sq / 2;

  SurfaceReduction red;
  red.a = -p20 * vol / 2 - p01 * d / 2;
  red.beta_coeff = p21 * vol - p20 * vol * regime.u2 + p01 * (q - d * regime.u2);
  red.gamma_coeff = p21 * (vol * regime.u2 - d) + p20 * (q - vol * regime.u4) +
                    p01 * (q * regime.u2 - d * regime.u4);
  red.discriminant = red.recompute_discriminant();
  return red;
}

VolumeHypothesis volume_hypothesis(const SurfaceReduction& red) {
  if (red.a == 0) return VolumeHypothesis::Fails_a_zero;
  if (sgn(red.discriminant) <= 0) return VolumeHypothesis::Fails_positivity;
  return VolumeHypothesis::Holds;
}

const char* to_string(VolumeHypothesis v) {
  switch (v) {
    case VolumeHypothesis::Holds: return "Holds";
    case VolumeHypothesis::Fails_a_zero: return "Fails_a_zero";
    default: return "Fails_positivity";
  }
}

SurfaceReport surface_report(const ChargeSpec& spec, const BundleData& l,
                             const std::vector<GradedClass>& curve_classes,
                             const std::vector<std::string>& names,
                             const Rat& at_k) {
  SurfaceReport report;
  report.reduction = surface_coefficients(spec, l);
  report.hypothesis = volume_hypothesis(report.reduction);
  for (size_t i = 0; i < curve_classes.size(); ++i) {
    CurveVerdict cv;
    cv.name = i < names.size() ? names[i] : "C" + std::to_string(i);
    cv.verdict = subvariety_stable(spec, l, curve_classes[i], at_k);
    report.curves.push_back(std::move(cv));
  }
  return report;
}

}  // namespace zstab
