#include "zstab/fibration.hpp"

#include <algorithm>

namespace zstab {

Rat df_invariant(const WeightData& w) {
  if (w.a0 == 0) throw Error("df_invariant requires a0 != 0");
  return (w.a0 * w.b1 - w.b0 * w.a1) / w.a0;
}

Rat w0(unsigned n, unsigned m, const Rat& ln, const Rat& df_fibre) {
  if (sgn(ln) <= 0) throw Error("w0 requires L^n > 0");
  return binomial(static_cast<long>(m) + n, n) * ln * df_fibre;
}

Rat w1_fano(unsigned n, unsigned m, const Rat& i1, const Rat& i2, const Rat& i3,
            const Rat& gamma) {
  if (n == 0) throw Error("w1_fano requires a positive-dimensional base");
  Rat inner = Rat(static_cast<long>(m)) / Rat(static_cast<long>(m) + 2) * i1 +
              gamma / Rat(static_cast<long>(m) + 1) * i2 + i3;
  return binomial(static_cast<long>(n) + m, n - 1) * inner;
}

Rat gamma_from(const Rat& numerator, const Rat& denominator) {
  if (denominator == 0) throw Error("gamma denominator vanishes");
  return numerator / denominator;
}

RossThomasResult rt_df(const Poly& a0x, const Poly& a1x, const Rat& a0,
                       const Rat& a1, const Rat& c) {
  if (sgn(c) < 0) throw Error("rt_df requires c >= 0");
  Poly int_a0 = a0x.integral();
  Poly int_inner = (a1x + a0x.derivative().scaled(Rat(1, 2))).integral();
  RossThomasResult out;
  out.b0 = int_a0.eval(c) - c * a0;
  out.b1 = int_inner.eval(c) - c * a1;
  out.value = a1 * int_a0.eval(c) - a0 * int_inner.eval(c);
  return out;
}

Poly segre_twist(unsigned q, unsigned rank, const std::vector<Rat>& segre) {
  if (segre.empty() || segre[0] != 1)
    throw Error("segre list must start with s_0 = 1");
  if (segre.size() <= q) throw Error("segre list too short for q");
  std::vector<Rat> coeffs(q + 1, Rat(0));  // coefficient of c1L^{q-j} at index q-j
  for (unsigned j = 0; j <= q; ++j) {
    Rat sign = ((q - j) % 2 == 0) ? Rat(1) : Rat(-1);
    Rat b = binomial(static_cast<long>(rank) - 1 + q, rank - 1 + j);
    coeffs[q - j] = sign * b * segre[j];
  }
  return Poly(std::move(coeffs));
}

Rat segre_twist_at(unsigned q, unsigned rank, const std::vector<Rat>& segre,
                   const Rat& c1l) {
  return segre_twist(q, rank, segre).eval(c1l);
}

Rat SymDeg2Poly::coeff(unsigned de_pow, unsigned df_pow) const {
  auto it = terms_.find({de_pow, df_pow});
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymDeg2Poly::add(unsigned de_pow, unsigned df_pow, const Rat& v) {
  if (v == 0) return;
  auto key = std::make_pair(de_pow, df_pow);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

SymDeg2Poly SymDeg2Poly::operator-(const SymDeg2Poly& o) const {
  SymDeg2Poly out = *this;
  for (const auto& [k, v] : o.terms_) out.add(k.first, k.second, -v);
  return out;
}

std::string SymDeg2Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) {
    std::string term = to_string(v);
    for (unsigned i = 0; i < k.first; ++i) term += "*dE";
    for (unsigned i = 0; i < k.second; ++i) term += "*dF";
    if (!out.empty() && sgn(v) >= 0) out += "+";
    out += term;
  }
  return out;
}

void ProjBundleDegeneration::validate() const {
  if (n == 0) throw Error("base dimension must be positive");
  if (!(0 < rF && rF < rE)) throw Error("ranks must satisfy 0 < rF < rE");
}

Rat b_constant(unsigned rE, unsigned rF) {
  if (!(0 < rF && rF < rE)) throw Error("ranks must satisfy 0 < rF < rE");
  Rat total(0);
  long re = rE, rf = rF;
  for (long i = 0; i <= rf; ++i) {
    Rat sign = ((rf - i) % 2 == 0) ? Rat(1) : Rat(-1);
    Rat term = sign * binomial(re + 1, static_cast<unsigned>(i)) *
               binomial(re - 1 - i, static_cast<unsigned>(re - 1 - rf));
    term *= Rat(re - i) / Rat(re - rf);
    Rat inner = Rat(-re + 1) +
                (Rat(i * re) + Rat(re - rf) * Rat(re + 1 - i)) / Rat(re);
    total += term * inner;
  }
  return total;
}

namespace {

// Base coefficient tracked to linear order in the degree markers:
// q0 + qE c1(E) + qF c1(F). Products of two markers are dimensionally
// irrelevant after pairing with L^{n-1}.
struct BaseCoeff {
  Rat q0, qE, qF;

  BaseCoeff() : q0(0), qE(0), qF(0) {}
  explicit BaseCoeff(Rat c) : q0(std::move(c)), qE(0), qF(0) {}
  BaseCoeff(Rat c, Rat e, Rat f)
      : q0(std::move(c)), qE(std::move(e)), qF(std::move(f)) {}

  BaseCoeff operator*(const BaseCoeff& o) const {
    return {q0 * o.q0, q0 * o.qE + qE * o.q0, q0 * o.qF + qF * o.q0};
  }
  BaseCoeff operator*(const Rat& s) const { return {q0 * s, qE * s, qF * s}; }
  BaseCoeff& operator+=(const BaseCoeff& o) {
    q0 += o.q0;
    qE += o.qE;
    qF += o.qF;
    return *this;
  }
};

// Polynomial in the relative hyperplane class with BaseCoeff coefficients.
using FiberClass = std::vector<BaseCoeff>;  // index = power of zeta (or xi)

FiberClass fc_mul(const FiberClass& a, const FiberClass& b) {
  FiberClass out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

FiberClass fc_pow(const FiberClass& a, unsigned k) {
  FiberClass acc{BaseCoeff(Rat(1))};
  for (unsigned i = 0; i < k; ++i) acc = fc_mul(acc, a);
  return acc;
}

// Pairs int_B L^{n-1} . (base class): only the degree-2 markers survive.
void pair_against_L(const BaseCoeff& c, SymDeg2Poly& out) {
  out.add(1, 0, c.qE);
  out.add(0, 1, c.qF);
}

}  // namespace

AIdentityResult a_identity_check(const ProjBundleDegeneration& d) {
  d.validate();
  const unsigned m = d.m(), p = d.p(), rE = d.rE, rF = d.rF;
  const long c = rE;

  // Segre classes of E/F to linear order: s0 = 1, s1 = c1(F) - c1(E).
  auto segre_quotient = [&](unsigned j) -> BaseCoeff {
    if (j == 0) return BaseCoeff(Rat(1));
    if (j == 1) return BaseCoeff(Rat(0), Rat(-1), Rat(1));
    return BaseCoeff();  // degree >= 4 over the base: dimensionally zero
  };

  // s_q(N) for N = O(1)|_{P(F)} (x) pi^*(E/F), rank p, as a zeta-polynomial.
  auto segre_normal = [&](long q) -> FiberClass {
    FiberClass out(static_cast<size_t>(std::max(q, 0l)) + 1);
    if (q < 0) return FiberClass{BaseCoeff()};
    for (long j = 0; j <= q; ++j) {
      Rat sign = ((q - j) % 2 == 0) ? Rat(1) : Rat(-1);
      Rat b = binomial(static_cast<long>(p) - 1 + q,
                       static_cast<unsigned>(p - 1 + j));
      out[static_cast<size_t>(q - j)] +=
          segre_quotient(static_cast<unsigned>(j)) * (sign * b);
    }
    return out;
  };

  // H restricted to P(F): rE zeta + c1(E).
  const FiberClass h_restricted = {BaseCoeff(Rat(0), Rat(1), Rat(0)),
                                   BaseCoeff(Rat(static_cast<long>(rE)))};

  // int_{P(F)} L^{n-1} . (class): push zeta^{rF-1+j} to s_j(F), then pair.
  auto integrate_PF = [&](const FiberClass& cls) -> SymDeg2Poly {
    SymDeg2Poly out;
    for (size_t pow = 0; pow < cls.size(); ++pow) {
      if (pow + 1 < rF) continue;  // pushes to zero
      size_t j = pow + 1 - rF;
      if (j == 0) {
        pair_against_L(cls[pow], out);
      } else if (j == 1) {
        // s_1(F) = -c1(F); only the constant part of the coefficient can
        // still pair with a degree-2 class.
        out.add(0, 1, -cls[pow].q0);
      }
      // j >= 2: base degree >= 4, dimensionally zero against L^{n-1}.
    }
    return out;
  };

  // T(i, b) = int L^{n-1} H^i E^b with b = m - i + 1.
  auto blowup_term = [&](unsigned i) -> SymDeg2Poly {
    long b = static_cast<long>(m) - i + 1;
    if (b == 0) {
      // No exceptional factor: an honest P(E) integral. Push xi^{rE-1+j} to
      // s_j(E) with s_1(E) = -c1(E).
      FiberClass h_pe = {BaseCoeff(Rat(0), Rat(1), Rat(0)),
                         BaseCoeff(Rat(static_cast<long>(rE)))};
      FiberClass cls = fc_pow(h_pe, i);
      SymDeg2Poly out;
      for (size_t pow = 0; pow < cls.size(); ++pow) {
        if (pow + 1 < rE) continue;
        size_t j = pow + 1 - rE;
        if (j == 0) pair_against_L(cls[pow], out);
        else if (j == 1) out.add(1, 0, -cls[pow].q0);
      }
      return out;
    }
    long q = static_cast<long>(m) - static_cast<long>(p) - i + 1;  // b - p
    FiberClass cls = fc_mul(segre_normal(q), fc_pow(h_restricted, i));
    SymDeg2Poly out = integrate_PF(cls);
    // (-1)^{m-i} prefactor.
    SymDeg2Poly signed_out;
    Rat sign = ((m - i) % 2 == 0) ? Rat(1) : Rat(-1);
    for (const auto& [k, v] : out.terms()) signed_out.add(k.first, k.second, v * sign);
    return signed_out;
  };

  // Expand the two brackets of A over powers of the exceptional divisor.
  SymDeg2Poly a_total;
  // Part 1: -m/(m+2) (1/E) L^{n-1} (H - cE)^{m+2}.
  for (unsigned j = 1; j <= m + 2; ++j) {
    unsigned i = m + 2 - j;  // H power; exceptional power j-1 = m-i+1
    Rat coeff = binomial(static_cast<long>(m) + 2, j) * pow_rat(Rat(-c), j);
    coeff *= Rat(-static_cast<long>(m)) / Rat(static_cast<long>(m) + 2);
    SymDeg2Poly term = blowup_term(i);
    for (const auto& [k, v] : term.terms()) a_total.add(k.first, k.second, v * coeff);
  }
  // Part 2: (1/E) L^{n-1} (H - cE)^{m+1} (H - pE).
  for (unsigned j = 0; j <= m + 1; ++j) {
    Rat base = binomial(static_cast<long>(m) + 1, j) * pow_rat(Rat(-c), j);
    // H^{m+2-j} E^{j-1} term (skip j = 0: no exceptional divisor, pure H^{m+2}
    // drops with the 1/E normalisation).
    if (j >= 1) {
      SymDeg2Poly term = blowup_term(m + 2 - j);
      for (const auto& [k, v] : term.terms())
        a_total.add(k.first, k.second, v * base);
    }
    // -p H^{m+1-j} E^{j} term.
    SymDeg2Poly term = blowup_term(m + 1 - j);
    Rat coeff = base * Rat(-static_cast<long>(p));
    for (const auto& [k, v] : term.terms())
      a_total.add(k.first, k.second, v * coeff);
  }

  AIdentityResult result;
  result.calculus = a_total;
  result.b = b_constant(rE, rF);
  Rat scale = result.b * pow_rat(Rat(static_cast<long>(rE)), rE);
  result.closed_form.add(0, 1, scale * Rat(static_cast<long>(rE)));
  result.closed_form.add(1, 0, -scale * Rat(static_cast<long>(rF)));
  result.match = result.calculus == result.closed_form;
  // Proportionality report for a documented mismatch.
  Rat ce = result.calculus.coeff(1, 0), cf = result.calculus.coeff(0, 1);
  Rat ze = result.closed_form.coeff(1, 0), zf = result.closed_form.coeff(0, 1);
  if (!result.match && ze != 0 && zf != 0 && ce * zf == cf * ze &&
      result.calculus.terms().size() == 2) {
    result.proportional = true;
    result.ratio = ce / ze;
  }
  // A vanishes exactly on equal-slope data iff rE*A_E + rF*A_F = 0.
  result.vanishes_on_equal_slopes =
      ce * Rat(static_cast<long>(rE)) + cf * Rat(static_cast<long>(rF)) == 0;
  return result;
}

}  // namespace zstab
