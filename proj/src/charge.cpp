#include "zstab/charge.hpp"

namespace zstab {

bool StabilityVector::weakly_valid() const {
  size_t n = dim();
  if (entries.size() < 2) return false;
  for (const auto& z : entries)
    if (z.is_zero()) return false;
  Gaussian ratio = entries[n - 1] / entries[n];
  return sgn(ratio.im) > 0;
}

bool StabilityVector::strictly_valid() const {
  size_t n = dim();
  if (entries.size() < 2) return false;
  for (const auto& z : entries)
    if (z.is_zero()) return false;
  if (sgn(entries[n].im) <= 0) return false;
  for (size_t d = 0; d < n; ++d) {
    Gaussian ratio = entries[d] / entries[d + 1];
    if (sgn(ratio.im) <= 0) return false;
  }
  return true;
}

void ChargeSpec::validate(bool allow_weak) const {
  if (!omega.ring()) throw Error("charge spec needs a ring");
  if (omega.is_zero() || !omega.is_homogeneous(2))
    throw Error("omega must be a nonzero class of pure degree 2");
  if (u.ring() != omega.ring()) throw Error("mismatched rings");
  if (u.degree0() != 1) throw Error("U must be unipotent (degree-0 part 1)");
  if (rho.entries.size() != omega.ring()->dimension() + 1)
    throw Error("stability vector must have n+1 entries");
  if (rho.strictly_valid()) return;
  if (allow_weak && rho.weakly_valid()) return;
  throw Error(allow_weak ? "stability vector fails weak validation"
                         : "stability vector fails strict validation");
}

ChargeSpec preset_charge(const std::string& name, const GradedClass& omega,
                         const GradedClass& b_field,
                         const std::vector<GradedClass>& tangent_chern) {
  if (!omega.ring()) throw Error("preset needs a ring");
  const RingPtr& ring = omega.ring();
  unsigned n = ring->dimension();
  ChargeSpec spec;
  spec.omega = omega;
  for (unsigned d = 0; d <= n; ++d) {
    // -(-i)^d / d!
    Gaussian v = ipow(-static_cast<long>(d));
    v = Gaussian(Rat(0)) - v;
    Rat f = Rat(1) / factorial(d);
    spec.rho.entries.push_back(Gaussian(v.re * f, v.im * f));
  }
  GradedClass u = GradedClass::one(ring);
  if (!b_field.is_zero()) {
    if (!b_field.is_homogeneous(2)) throw Error("B-field must have degree 2");
    u = exp_class(-b_field);
  }
  if (name == "dhym") {
    // U = e^{-B}
  } else if (name == "td" || name == "ahat") {
    auto kind = name == "td" ? CharClassKind::Todd : CharClassKind::AHat;
    if (tangent_chern.empty())
      throw Error("preset '" + name + "' needs tangent Chern classes");
    GradedClass genus = char_class(kind, Rat(static_cast<long>(n)), tangent_chern);
    u = u * series_sqrt(genus);
  } else {
    throw Error("unknown charge preset '" + name + "'");
  }
  spec.u = u;
  spec.weak_validated = !spec.rho.strictly_valid();
  spec.validate(/*allow_weak=*/true);
  return spec;
}

ChargePolynomial::ChargePolynomial(std::vector<Gaussian> coeffs)
    : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Gaussian ChargePolynomial::eval(const Rat& k) const {
  Gaussian acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = Gaussian(acc.re * k, acc.im * k);
    acc += *it;
  }
  return acc;
}

Poly ChargePolynomial::real_part() const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& z : c_) v.push_back(z.re);
  return Poly(std::move(v));
}

Poly ChargePolynomial::imag_part() const {
  std::vector<Rat> v;
  v.reserve(c_.size());
  for (const auto& z : c_) v.push_back(z.im);
  return Poly(std::move(v));
}

ChargePolynomial ChargePolynomial::operator-() const {
  std::vector<Gaussian> v(c_);
  for (auto& z : v) z = -z;
  return ChargePolynomial(std::move(v));
}

ChargePolynomial operator+(const ChargePolynomial& a, const ChargePolynomial& b) {
  std::vector<Gaussian> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return ChargePolynomial(std::move(v));
}

ChargePolynomial operator-(const ChargePolynomial& a, const ChargePolynomial& b) {
  return a + (-b);
}

Poly phase_comparison(const ChargePolynomial& zf, const ChargePolynomial& ze) {
  size_t nf = zf.coefficients().size(), ne = ze.coefficients().size();
  if (nf == 0 || ne == 0) return Poly();
  std::vector<Rat> s(nf + ne - 1, Rat(0));
  for (size_t a = 0; a < nf; ++a)
    for (size_t b = 0; b < ne; ++b) {
      const Gaussian& f = zf.coefficients()[a];
      const Gaussian& e = ze.coefficients()[b];
      // Im(f * conj(e))
      s[a + b] += f.im * e.re - f.re * e.im;
    }
  return Poly(std::move(s));
}

ChargePolynomial central_charge(const ChargeSpec& spec, const BundleData& e,
                                const std::optional<GradedClass>& over) {
  spec.validate(/*allow_weak=*/true);
  const RingPtr& ring = spec.omega.ring();
  if (e.chern_character.ring() != ring) throw Error("mismatched rings");
  GradedClass cover =
      over.has_value() ? *over : GradedClass::one(ring);
  if (cover.ring() != ring) throw Error("mismatched rings");
  if (!cover.is_zero()) {
    unsigned d = cover.top_nonzero_degree();
    if (!cover.is_homogeneous(d))
      throw Error("subvariety class must have pure degree");
    if (d % 2 != 0) throw Error("subvariety class must have even degree");
  }
  unsigned n = ring->dimension();
  GradedClass base = e.chern_character * spec.u * cover;
  std::vector<Gaussian> coeffs(n + 1);
  GradedClass omega_pow = GradedClass::one(ring);
  for (unsigned d = 0; d <= n; ++d) {
    Rat val = integrate(omega_pow * base);
    const Gaussian& rho = spec.rho.entries[d];
    coeffs[d] = Gaussian(rho.re * val, rho.im * val);
    omega_pow = omega_pow * spec.omega;
  }
  return ChargePolynomial(std::move(coeffs));
}

SlopePhase slope_phase(const ChargePolynomial& z, const Rat& at_k) {
  if (sgn(at_k) <= 0) throw Error("slope_phase requires at_k > 0");
  Gaussian v = z.eval(at_k);
  SlopePhase out;
  out.re_sign = sgn(v.re);
  out.im_sign = sgn(v.im);
  if (v.is_zero()) {
    out.zero_charge = true;
    out.kind = SlopeKind::PlusInfinity;  // mu = +inf, phase = pi convention
    return out;
  }
  if (v.im == 0) {
    out.kind = sgn(v.re) < 0 ? SlopeKind::PlusInfinity : SlopeKind::MinusInfinity;
    return out;
  }
  out.kind = SlopeKind::Finite;
  out.slope = -v.re / v.im;
  return out;
}

Poly hilbert_polynomial(const BundleData& e, const GradedClass& l,
                        const TangentData& tangent) {
  const RingPtr& ring = e.chern_character.ring();
  if (!ring) throw Error("hilbert_polynomial needs a ring");
  if (l.ring() != ring) throw Error("mismatched rings");
  if (!l.is_homogeneous(2)) throw Error("polarisation must have degree 2");
  if (tangent.chern_classes.empty())
    throw Error("missing tangent data");
  GradedClass td = char_class(CharClassKind::Todd,
                              Rat(static_cast<long>(ring->dimension())),
                              tangent.chern_classes);
  unsigned n = ring->dimension();
  GradedClass base = e.chern_character * td;
  std::vector<Rat> coeffs(n + 1, Rat(0));
  GradedClass l_pow = GradedClass::one(ring);
  for (unsigned j = 0; j <= n; ++j) {
    coeffs[j] = integrate(l_pow * base) / factorial(j);
    l_pow = l_pow * l;
  }
  return Poly(std::move(coeffs));
}

GiesekerComparison gieseker_compare(const BundleData& f, const BundleData& e,
                                    const GradedClass& l,
                                    const TangentData& tangent) {
  if (sgn(f.rank()) <= 0 || sgn(e.rank()) <= 0)
    throw Error("gieseker_compare requires positive ranks");
  Poly pf = hilbert_polynomial(f, l, tangent).scaled(Rat(1) / f.rank());
  Poly pe = hilbert_polynomial(e, l, tangent).scaled(Rat(1) / e.rank());
  Poly diff = pf - pe;
  GiesekerComparison out;
  if (diff.is_zero()) {
    out.ordering = Ordering::Equal;
    return out;
  }
  out.first_difference_order = diff.degree();
  out.leading_difference = diff.leading();
  out.ordering = sgn(diff.leading()) < 0 ? Ordering::Less : Ordering::Greater;
  return out;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    default: return "Greater";
  }
}

}  // namespace zstab
