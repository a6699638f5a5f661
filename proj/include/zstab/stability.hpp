#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zstab/charge.hpp"

namespace zstab {

// Outcome of an asymptotic phase comparison phi_k(F) vs phi_k(E).
struct StabilityVerdict {
  Ordering ordering = Ordering::Equal;
  // Power of 1/k (0 = the slopes already differ) at which the comparison
  // first becomes strict; absent iff Equal.
  std::optional<unsigned> discrepancy_order;
  Rat witness_coefficient;  // leading coefficient of Im(Z_F conj Z_E)
};

// Sign analysis of S(k) = Im(Z_F(k) conj(Z_E(k))) for k >> 0.
StabilityVerdict asym_compare(const ChargePolynomial& zf,
                              const ChargePolynomial& ze);

enum class Aggregate { Stable, Semistable, Unstable, VacuouslyStable };

struct SubobjectVerdict {
  std::string name;
  StabilityVerdict verdict;
  bool zero_charge = false;  // Z(F) identically zero: destabilising
};

struct AsymStabilityReport {
  Aggregate aggregate = Aggregate::VacuouslyStable;
  std::vector<SubobjectVerdict> subobjects;
  // Index into subobjects of the worst offender (Greater beats Equal), if the
  // bundle is not stable.
  std::optional<size_t> worst;
};

AsymStabilityReport asym_stable(const ChargeSpec& spec, const BundleData& e,
                                const std::vector<BundleData>& subobjects,
                                const std::vector<std::string>& names = {});

// See-saw consistency across a short exact sequence S -> E -> Q at the level
// of asymptotic slope comparisons. Additivity Z_E = Z_S + Z_Q is checked.
struct SeeSawReport {
  bool additive = false;
  // mu(S) vs mu(E) and mu(E) vs mu(Q) as asymptotic orderings, with the
  // zero-charge conventions of the see-saw lemma applied.
  Ordering s_vs_e = Ordering::Equal;
  Ordering e_vs_q = Ordering::Equal;
  bool consistent = false;  // the lemma's biconditionals hold for this triple
};

SeeSawReport see_saw_check(const ChargePolynomial& zs,
                           const ChargePolynomial& ze,
                           const ChargePolynomial& zq);

// Full inhomogeneous density (sum_d rho_d omega^d) Ch(E) U at k = 1.
CGradedClass charge_density(const ChargeSpec& spec, const BundleData& e);

enum class SignVerdict { Stable, Boundary, Unstable };

// Exact sign of Im(Z_V conj Z_X) at the evaluation scale.
SignVerdict subvariety_stable(const ChargeSpec& spec, const BundleData& e,
                              const GradedClass& v_class,
                              const Rat& at_k = Rat(1));

// Asymptotic variant: sign of the leading coefficient of Im(Z_V conj Z_X).
SignVerdict subvariety_stable_asymptotic(const ChargeSpec& spec,
                                         const BundleData& e,
                                         const GradedClass& v_class);

// One-parameter family of charges: either U(t) = exp(-t B0) U0 or an affine
// pencil in a single rho entry.
struct ChargeFamily {
  ChargeSpec base;
  std::string parameter = "t";
  enum class Kind { BFieldPencil, RhoPencil } kind = Kind::BFieldPencil;
  GradedClass b_direction;          // BFieldPencil
  size_t rho_index = 0;             // RhoPencil
  Gaussian rho_direction;           // RhoPencil

  ChargeSpec specialize(const Rat& t) const;
};

struct Wall {
  std::optional<Rat> t;  // exact location when rational
  Rat lo, hi;            // isolating interval otherwise
  std::string left;      // Stable / Unstable / Semistable label per side
  std::string right;
};

struct WallScanResult {
  std::string subobject;
  bool degenerate = false;  // comparison identically zero over the range
  Poly wall_polynomial;     // leading comparison coefficient as poly in t
  std::vector<Wall> walls;
  std::string constant_verdict;  // when degenerate or wall-free
};

std::vector<WallScanResult> wall_scan(const ChargeFamily& family,
                                      const BundleData& e,
                                      const std::vector<BundleData>& subobjects,
                                      const Rat& t_lo, const Rat& t_hi,
                                      const std::vector<std::string>& names = {});

const char* to_string(Aggregate a);
const char* to_string(SignVerdict v);

}  // namespace zstab
