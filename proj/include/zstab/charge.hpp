#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zstab/poly.hpp"
#include "zstab/ring.hpp"

namespace zstab {

// rho_0..rho_n, all nonzero. Strict validation asks Im(rho_n) > 0 and
// Im(rho_d / rho_{d+1}) > 0 for every d; weak validation only checks the
// leading ratio and flags the result.
struct StabilityVector {
  std::vector<Gaussian> entries;

  size_t dim() const { return entries.empty() ? 0 : entries.size() - 1; }
  bool strictly_valid() const;
  bool weakly_valid() const;
};

struct ChargeSpec {
  StabilityVector rho;
  GradedClass omega;  // pure degree 2, nonzero
  GradedClass u;      // real unipotent class, degree-0 part 1
  bool weak_validated = false;  // true when only the weak check passed

  void validate(bool allow_weak) const;
};

// Built-in presets: rho_d = -(-i)^d / d! with
//   dhym: U = e^{-B}
//   td:   U = e^{-B} sqrt(Td X)
//   ahat: U = e^{-B} sqrt(Ahat X)
// Presets satisfy only weak validation by construction.
ChargeSpec preset_charge(const std::string& name, const GradedClass& omega,
                         const GradedClass& b_field,
                         const std::vector<GradedClass>& tangent_chern);

// Z_k(E) = sum_d rho_d k^d, coefficients indexed by the power of k.
class ChargePolynomial {
public:
  ChargePolynomial() = default;
  explicit ChargePolynomial(std::vector<Gaussian> coeffs);

  const std::vector<Gaussian>& coefficients() const { return c_; }
  Gaussian coeff(size_t i) const { return i < c_.size() ? c_[i] : Gaussian(); }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Gaussian eval(const Rat& k) const;
  Poly real_part() const;
  Poly imag_part() const;

  ChargePolynomial operator-() const;
  friend ChargePolynomial operator+(const ChargePolynomial& a,
                                    const ChargePolynomial& b);
  friend ChargePolynomial operator-(const ChargePolynomial& a,
                                    const ChargePolynomial& b);
  friend bool operator==(const ChargePolynomial& a, const ChargePolynomial& b) {
    return a.c_ == b.c_;
  }

private:
  std::vector<Gaussian> c_;
};

// Im(Z_F(k) * conj(Z_E(k))), the sign-equivalent of Im(Z_F/Z_E).
Poly phase_comparison(const ChargePolynomial& zf, const ChargePolynomial& ze);

// Z_k(E) over a subvariety class (default: the fundamental class).
ChargePolynomial central_charge(
    const ChargeSpec& spec, const BundleData& e,
    const std::optional<GradedClass>& over = std::nullopt);

enum class SlopeKind { Finite, PlusInfinity, MinusInfinity };

struct SlopePhase {
  SlopeKind kind = SlopeKind::Finite;
  Rat slope;          // meaningful when kind == Finite
  int re_sign = 0;    // sign data of Z(at_k)
  int im_sign = 0;
  bool zero_charge = false;  // Z(at_k) == 0; slope +inf, phase pi convention
};

SlopePhase slope_phase(const ChargePolynomial& z, const Rat& at_k);

struct TangentData {
  std::vector<GradedClass> chern_classes;  // c_1..c_k of TX
};

// chi(E tensor L^k) as an exact polynomial in k.
Poly hilbert_polynomial(const BundleData& e, const GradedClass& l,
                        const TangentData& tangent);

enum class Ordering { Less, Equal, Greater };

struct GiesekerComparison {
  Ordering ordering = Ordering::Equal;
  // Power of k at which the reduced Hilbert polynomials first differ
  // (meaningful unless they are equal).
  int first_difference_order = -1;
  Rat leading_difference;
};

// Compares P_F/rk F against P_E/rk E for k >> 0.
GiesekerComparison gieseker_compare(const BundleData& f, const BundleData& e,
                                    const GradedClass& l,
                                    const TangentData& tangent);

const char* to_string(Ordering o);

}  // namespace zstab
