#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zstab/poly.hpp"

namespace zstab {

// Hilbert and weight expansion coefficients of a test configuration.
struct WeightData {
  Rat a0, a1, b0, b1;
};

// DF = (a0 b1 - b0 a1) / a0.
Rat df_invariant(const WeightData& w);

// W_0 = binom(m+n, n) L^n DF(fibre).
Rat w0(unsigned n, unsigned m, const Rat& ln, const Rat& df_fibre);

// W_1 for a Fano fibration:
// binom(n+m, n-1) ( m/(m+2) I1 + gamma/(m+1) I2 + I3 )
// with I1 = L^{n-1}.H^{m+2}, I2 = L^n.H^{m+1}, I3 = L^{n-1}.H^{m+1}.K.
Rat w1_fano(unsigned n, unsigned m, const Rat& i1, const Rat& i2, const Rat& i3,
            const Rat& gamma = Rat(0));

// gamma = L^{n-1}.(-K)^{m+1} / L^n.(-K)^m.
Rat gamma_from(const Rat& numerator, const Rat& denominator);

struct RossThomasResult {
  Rat value;  // a1 int_0^c a0 - a0 int_0^c (a1 + a0'/2)
  Rat b0;     // int_0^c a0 - c a0
  Rat b1;     // int_0^c (a1 + a0'/2) - c a1
};

// Deformation-to-the-normal-cone weight from the expansion coefficients
// a0(x), a1(x) and the leading constants a0, a1.
RossThomasResult rt_df(const Poly& a0x, const Poly& a1x, const Rat& a0,
                       const Rat& a1, const Rat& c);

// s_q(E (x) L) from the Segre list of E and c1(L), as a polynomial in c1(L)
// (coefficients of c1L^0..c1L^q); segre[0] must be 1.
Poly segre_twist(unsigned q, unsigned rank, const std::vector<Rat>& segre);
Rat segre_twist_at(unsigned q, unsigned rank, const std::vector<Rat>& segre,
                   const Rat& c1l);

// Linear polynomial in the formal degree variables (dE, dF); the general
// container also carries higher monomials for reporting.
class SymDeg2Poly {
public:
  SymDeg2Poly() = default;

  Rat coeff(unsigned de_pow, unsigned df_pow) const;
  void add(unsigned de_pow, unsigned df_pow, const Rat& v);
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<unsigned, unsigned>, Rat>& terms() const {
    return terms_;
  }

  SymDeg2Poly operator-(const SymDeg2Poly& o) const;
  bool operator==(const SymDeg2Poly& o) const { return terms_ == o.terms_; }
  std::string str() const;  // e.g. "8/3*dE-16/3*dF"

private:
  std::map<std::pair<unsigned, unsigned>, Rat> terms_;
};

struct ProjBundleDegeneration {
  unsigned n = 1;   // base dimension
  unsigned rE = 2;
  unsigned rF = 1;

  unsigned m() const { return rE - 1; }
  unsigned p() const { return rE - rF; }
  void validate() const;
};

// Printed closed-form constant B.
Rat b_constant(unsigned rE, unsigned rF);

struct AIdentityResult {
  SymDeg2Poly calculus;     // A from the exceptional-divisor pushforward
  SymDeg2Poly closed_form;  // B rE^rE (rE dF - rF dE)
  Rat b;
  bool match = false;
  bool proportional = false;
  Rat ratio;  // calculus / closed_form when proportional
  bool vanishes_on_equal_slopes = false;
};

// Direct computation of
//   A = -m/(m+2) (1/E) L^{n-1}.(H - cE)^{m+2}
//       + (1/E) L^{n-1}.(H - cE)^{m+1}.(H - pE)
// on Bl_{P(F)} P(E) via exceptional pushforwards and twisted Segre classes,
// compared against the printed closed form.
AIdentityResult a_identity_check(const ProjBundleDegeneration& d);

}  // namespace zstab
