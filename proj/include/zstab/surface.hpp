#pragma once

#include <string>
#include <vector>

#include "zstab/stability.hpp"

namespace zstab {

// Coefficients of the Monge-Ampere reduction a*alpha^2 + alpha^beta + gamma
// on a surface, in the regime where U_2, U_4 and c_1(L) are rational
// multiples of omega, omega^2. Positivity is then a rational inequality on
// the omega^2 coefficient; this is a numerical surrogate for the pointwise
// form-level condition.
struct SurfaceReduction {
  Rat a;
  Rat beta_coeff;   // beta = beta_coeff * omega
  Rat gamma_coeff;  // gamma = gamma_coeff * omega^2
  Rat discriminant; // omega^2 coefficient of beta^2/4 - a*gamma

  Rat recompute_discriminant() const { return beta_coeff * beta_coeff / 4 - a * gamma_coeff; }
};

// Proportionality data: U_2 = u2 * omega, U_4 = u4 * omega^2,
// c_1(L) = alpha * omega.
struct ProportionalRegime {
  Rat u2;
  Rat u4;
  Rat alpha;
};

// Extracts the regime data from a spec and a rank-1 bundle, requiring exact
// proportionality to omega and omega^2.
ProportionalRegime proportional_regime(const ChargeSpec& spec,
                                       const BundleData& l);

SurfaceReduction surface_coefficients(const ChargeSpec& spec,
                                      const BundleData& l);
SurfaceReduction surface_coefficients(const ChargeSpec& spec,
                                      const GradedClass& omega,
                                      const ProportionalRegime& regime);

enum class VolumeHypothesis { Holds, Fails_a_zero, Fails_positivity };

VolumeHypothesis volume_hypothesis(const SurfaceReduction& red);

const char* to_string(VolumeHypothesis v);

struct CurveVerdict {
  std::string name;
  SignVerdict verdict;
};

// Combined report: the volume hypothesis plus Z-stability with respect to a
// user-supplied list of curve classes.
struct SurfaceReport {
  SurfaceReduction reduction;
  VolumeHypothesis hypothesis;
  std::vector<CurveVerdict> curves;
};

SurfaceReport surface_report(const ChargeSpec& spec, const BundleData& l,
                             const std::vector<GradedClass>& curve_classes,
                             const std::vector<std::string>& names = {},
                             const Rat& at_k = Rat(1));

}  // namespace zstab
