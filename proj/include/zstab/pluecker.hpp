#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zstab/linalg.hpp"

namespace zstab {

// Quadratic form in alpha_1..alpha_10, stored as a symmetric coefficient
// matrix over the monomials alpha_i alpha_j (i <= j).
struct Quadric {
  // coeff[i][j] for i <= j, 0-based.
  std::array<std::array<Rat, 10>, 10> coeff{};

  Rat eval(const Vec& alpha) const;
  Vec gradient(const Vec& alpha) const;
  Vec as_vector() const;  // flattened to the 55 monomials
  bool is_zero() const;
};

// The 15 monomial wedges e_i ^ e_j (i < j) index the coordinates W_ij.
struct WedgePair {
  unsigned i, j;  // 1-based, i < j
};

// Basis data for Wedge^2 s^5: the five s^4 vectors and the ten s^8 + s^0
// vectors, in the 15 wedge coordinates.
struct Wedge2Basis {
  std::vector<WedgePair> pairs;     // the 15 coordinate labels
  Mat s4;                            // 5 x 15
  Mat s8s0;                          // 10 x 15 (the alpha basis v_1..v_10)
  unsigned joint_rank = 0;           // must be 15
};

struct ConstraintCheck {
  Vec regenerated;  // functional on the 15 wedge coordinates
  Vec printed;
  bool printed_in_regenerated_span = false;
};

struct FixedPoint {
  std::string name;
  Vec alpha;          // Q^10
  long cstar_weight;  // H-weight of the wedge factors
  unsigned jacobian_rank = 0;
};

struct PlueckerModel {
  Wedge2Basis basis;
  // alpha -> W embedding, 15 x 10 (rows = wedge coordinates).
  Mat embedding;
  // Regenerated linear constraints cutting out span(v_1..v_10) in the wedge
  // coordinates (5 x 15), and the thesis's printed constraints for
  // comparison.
  std::vector<ConstraintCheck> constraints;
  // Quadratic ideal: the Pluecker relations pulled back along the embedding.
  std::vector<Quadric> ideal;
  // The thesis's printed 15 generators and their span comparison.
  std::vector<Quadric> printed_ideal;
  std::vector<bool> printed_generator_in_span;
  bool printed_ideal_spans_equal = false;
  // alpha -> W coordinate list mismatches against the printed table.
  std::vector<std::string> embedding_mismatches;
};

PlueckerModel build_model();

// Exact Jacobian rank of the ideal at a point (must satisfy the ideal).
unsigned jacobian_rank(const PlueckerModel& model, const Vec& alpha);

struct SampleReport {
  unsigned max_rank = 0;
  std::vector<unsigned> ranks;
  unsigned valid_samples = 0;
  std::uint64_t seed = 0;
};

// Maximum Jacobian rank over deterministic pseudo-random decomposable points
// of Z_0 (planes through translated coordinate flags, spread by exact
// SL(2,Q) changes of variable).
SampleReport generic_rank(const PlueckerModel& model, unsigned samples,
                          std::uint64_t seed);

// True iff the 2-form (coordinates in the s^4 basis) annihilates both
// spanning vectors of the plane.
bool kernel_membership(const Vec& a, const Vec& b, const Vec& s4_coords);

std::vector<FixedPoint> fixed_point_weights(const PlueckerModel& model);

// H-weight of e_i (1-based): 7 - 2i.
long generator_weight(unsigned i);

// Derivation induced by the lowering operator Y on the alpha coordinates;
// returns D_Y(g) for a quadric g.
Quadric lowering_derivation(const Quadric& g);

// The plane (a, b) as alpha coordinates, if it lies on Z_0.
std::optional<Vec> alpha_coordinates(const PlueckerModel& model, const Vec& a,
                                     const Vec& b);

}  // namespace zstab
