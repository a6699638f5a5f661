#include "zstab/stability.hpp"

#include <algorithm>

namespace zstab {

StabilityVerdict asym_compare(const ChargePolynomial& zf,
                              const ChargePolynomial& ze) {
  if (ze.is_zero()) throw Error("asym_compare: Z(E) is identically zero");
  StabilityVerdict out;
  Poly s = phase_comparison(zf, ze);
  if (s.is_zero()) {
    out.ordering = Ordering::Equal;
    return out;
  }
  out.witness_coefficient = s.leading();
  out.ordering = sgn(s.leading()) < 0 ? Ordering::Less : Ordering::Greater;
  // S has degree at most deg F + deg E; its top coefficient vanishes whenever
  // the leading terms share a phase, so the slope comparison sits one order
  // below. Order 0 = the slopes already differ.
  int q = zf.degree() + ze.degree() - 1 - s.degree();
  out.discrepancy_order = static_cast<unsigned>(std::max(q, 0));
  return out;
}

AsymStabilityReport asym_stable(const ChargeSpec& spec, const BundleData& e,
                                const std::vector<BundleData>& subobjects,
                                const std::vector<std::string>& names) {
  if (sgn(e.rank()) <= 0) throw Error("asym_stable requires rank E > 0");
  ChargePolynomial ze = central_charge(spec, e);
  AsymStabilityReport report;
  if (subobjects.empty()) {
    report.aggregate = Aggregate::VacuouslyStable;
    return report;
  }
  bool any_greater = false, any_equal = false, any_zero = false;
  for (size_t i = 0; i < subobjects.size(); ++i) {
    SubobjectVerdict sv;
    sv.name = i < names.size() ? names[i] : "F" + std::to_string(i);
    ChargePolynomial zf = central_charge(spec, subobjects[i]);
    if (zf.is_zero()) {
      sv.zero_charge = true;  // Z-destabilised by a zero-charge subobject
      sv.verdict.ordering = Ordering::Greater;
      any_zero = true;
    } else {
      sv.verdict = asym_compare(zf, ze);
      if (sv.verdict.ordering == Ordering::Greater) any_greater = true;
      if (sv.verdict.ordering == Ordering::Equal) any_equal = true;
    }
    report.subobjects.push_back(std::move(sv));
  }
  if (any_greater || any_zero) report.aggregate = Aggregate::Unstable;
  else if (any_equal) report.aggregate = Aggregate::Semistable;
  else report.aggregate = Aggregate::Stable;
  if (report.aggregate != Aggregate::Stable) {
    for (size_t i = 0; i < report.subobjects.size(); ++i) {
      const auto& sv = report.subobjects[i];
      if (sv.zero_charge || sv.verdict.ordering == Ordering::Greater) {
        report.worst = i;
        break;
      }
      if (!report.worst && sv.verdict.ordering == Ordering::Equal)
        report.worst = i;
    }
  }
  return report;
}

SeeSawReport see_saw_check(const ChargePolynomial& zs,
                           const ChargePolynomial& ze,
                           const ChargePolynomial& zq) {
  SeeSawReport report;
  report.additive = (zs + zq == ze);
  if (!report.additive) throw Error("see_saw_check: Z(E) != Z(S) + Z(Q)");
  if (ze.is_zero()) throw Error("see_saw_check: Z(E) is identically zero");
  if (zs.is_zero()) {
    // mu(S) = +inf > mu(E), and the lemma requires mu(E) = mu(Q).
    report.s_vs_e = Ordering::Greater;
    report.e_vs_q = asym_compare(ze, zq).ordering;
    report.consistent = report.e_vs_q == Ordering::Equal;
    return report;
  }
  if (zq.is_zero()) {
    report.e_vs_q = Ordering::Less;  // mu(Q) = +inf
    report.s_vs_e = asym_compare(zs, ze).ordering;
    report.consistent = report.s_vs_e == Ordering::Equal;
    return report;
  }
  report.s_vs_e = asym_compare(zs, ze).ordering;
  report.e_vs_q = asym_compare(ze, zq).ordering;
  report.consistent = report.s_vs_e == report.e_vs_q;
  return report;
}

CGradedClass charge_density(const ChargeSpec& spec, const BundleData& e) {
  spec.validate(/*allow_weak=*/true);
  const RingPtr& ring = spec.omega.ring();
  if (e.chern_character.ring() != ring) throw Error("mismatched rings");
  GradedClass base = e.chern_character * spec.u;
  CGradedClass density{GradedClass(ring), GradedClass(ring)};
  GradedClass omega_pow = GradedClass::one(ring);
  for (unsigned d = 0; d <= ring->dimension(); ++d) {
    GradedClass term = omega_pow * base;
    const Gaussian& rho = spec.rho.entries[d];
    density.real_part += term.scaled(rho.re);
    density.imag_part += term.scaled(rho.im);
    omega_pow = omega_pow * spec.omega;
  }
  return density;
}

SignVerdict subvariety_stable(const ChargeSpec& spec, const BundleData& e,
                              const GradedClass& v_class, const Rat& at_k) {
  ChargePolynomial zv = central_charge(spec, e, v_class);
  ChargePolynomial zx = central_charge(spec, e);
  Gaussian v = zv.eval(at_k);
  Gaussian x = zx.eval(at_k);
  if (x.is_zero()) throw Error("subvariety_stable: Z_X(E) vanishes at the scale");
  Rat im = v.im * x.re - v.re * x.im;  // Im(Z_V conj Z_X)
  if (im == 0) return SignVerdict::Boundary;
  return sgn(im) > 0 ? SignVerdict::Stable : SignVerdict::Unstable;
}

SignVerdict subvariety_stable_asymptotic(const ChargeSpec& spec,
                                         const BundleData& e,
                                         const GradedClass& v_class) {
  ChargePolynomial zv = central_charge(spec, e, v_class);
  ChargePolynomial zx = central_charge(spec, e);
  if (zx.is_zero()) throw Error("subvariety_stable: Z_X(E) is identically zero");
  Poly s = phase_comparison(zv, zx);
  if (s.is_zero()) return SignVerdict::Boundary;
  return sgn(s.leading()) > 0 ? SignVerdict::Stable : SignVerdict::Unstable;
}

ChargeSpec ChargeFamily::specialize(const Rat& t) const {
  ChargeSpec spec = base;
  if (kind == Kind::BFieldPencil) {
    if (!b_direction.is_homogeneous(2))
      throw Error("B-field pencil direction must have degree 2");
    spec.u = exp_class(b_direction.scaled(-t)) * base.u;
  } else {
    if (rho_index >= spec.rho.entries.size())
      throw Error("rho pencil index out of range");
    Gaussian delta(rho_direction.re * t, rho_direction.im * t);
    spec.rho.entries[rho_index] += delta;
  }
  spec.weak_validated = !spec.rho.strictly_valid();
  spec.validate(/*allow_weak=*/true);
  return spec;
}

namespace {

std::string chamber_label(const ChargeFamily& family, const BundleData& e,
                          const BundleData& f, const Rat& t) {
  auto verdict_at = [&](const Rat& tv) -> std::optional<Ordering> {
    ChargeSpec spec;
    try {
      spec = family.specialize(tv);
    } catch (const Error&) {
      return std::nullopt;
    }
    ChargePolynomial ze = central_charge(spec, e);
    ChargePolynomial zf = central_charge(spec, f);
    if (ze.is_zero()) return std::nullopt;
    if (zf.is_zero()) return Ordering::Greater;
    return asym_compare(zf, ze).ordering;
  };
  auto v = verdict_at(t);
  if (v && *v == Ordering::Equal) {
    // One retry slightly off-centre in case the sample hit a lower-order root.
    auto v2 = verdict_at(t + Rat(1, 257));
    if (v2) v = v2;
  }
  if (!v) return "Undefined";
  switch (*v) {
    case Ordering::Less: return "Stable";
    case Ordering::Greater: return "Unstable";
    default: return "Semistable";
  }
}

}  // namespace

std::vector<WallScanResult> wall_scan(const ChargeFamily& family,
                                      const BundleData& e,
                                      const std::vector<BundleData>& subobjects,
                                      const Rat& t_lo, const Rat& t_hi,
                                      const std::vector<std::string>& names) {
  if (t_lo >= t_hi) throw Error("wall_scan: empty parameter range");
  unsigned n = family.base.omega.ring()->dimension();
  // Coefficients of Im(Z_F conj Z_E) are polynomials in t of degree at most
  // 2n (B-field pencil) or 2 (rho pencil); sample and interpolate exactly.
  size_t degree_bound = family.kind == ChargeFamily::Kind::BFieldPencil
                            ? 2 * static_cast<size_t>(n)
                            : 2;
  size_t samples_needed = degree_bound + 2;  // one extra as a consistency check

  std::vector<WallScanResult> results;
  for (size_t idx = 0; idx < subobjects.size(); ++idx) {
    const BundleData& f = subobjects[idx];
    WallScanResult res;
    res.subobject = idx < names.size() ? names[idx] : "F" + std::to_string(idx);

    std::vector<Rat> ts;
    std::vector<Poly> s_at;  // S(k) at each sample t
    long candidate = 0;
    while (ts.size() < samples_needed && candidate < 1000) {
      Rat frac(candidate, static_cast<long>(samples_needed) + 3);
      frac.canonicalize();
      Rat t = t_lo + (t_hi - t_lo) * frac;
      ++candidate;
      ChargeSpec spec;
      try {
        spec = family.specialize(t);
      } catch (const Error&) {
        continue;  // pencil invalid at this point; finitely many such t
      }
      ChargePolynomial ze = central_charge(spec, e);
      ChargePolynomial zf = central_charge(spec, f);
      ts.push_back(t);
      s_at.push_back(phase_comparison(zf, ze));
    }
    if (ts.size() < samples_needed)
      throw Error("wall_scan: could not find enough valid parameter samples");

    size_t max_len = 0;
    for (const auto& s : s_at) max_len = std::max(max_len, s.coeffs().size());
    std::vector<Poly> coeff_in_t(max_len);
    for (size_t j = 0; j < max_len; ++j) {
      std::vector<std::pair<Rat, Rat>> pts;
      for (size_t i = 0; i + 1 < ts.size(); ++i)
        pts.emplace_back(ts[i], s_at[i].coeff(j));
      Poly p = interpolate(pts);
      if (p.eval(ts.back()) != s_at.back().coeff(j))
        throw Error("wall_scan: interpolation degree bound violated");
      coeff_in_t[j] = p;
    }

    long lead = -1;
    for (long j = static_cast<long>(max_len) - 1; j >= 0; --j) {
      if (!coeff_in_t[static_cast<size_t>(j)].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) {
      res.degenerate = true;
      res.constant_verdict = "Semistable";
      results.push_back(std::move(res));
      continue;
    }
    res.wall_polynomial = coeff_in_t[static_cast<size_t>(lead)];

    auto roots = isolate_roots(res.wall_polynomial, t_lo, t_hi, Rat(1, 1l << 32));
    if (roots.empty()) {
      res.constant_verdict = chamber_label(family, e, f, (t_lo + t_hi) / 2);
      results.push_back(std::move(res));
      continue;
    }
    Rat prev = t_lo;
    for (size_t i = 0; i < roots.size(); ++i) {
      Wall w;
      Rat wall_lo = roots[i].exact ? *roots[i].exact : roots[i].lo;
      Rat wall_hi = roots[i].exact ? *roots[i].exact : roots[i].hi;
      w.t = roots[i].exact;
      w.lo = roots[i].lo;
      w.hi = roots[i].hi;
      Rat left_sample = (prev + wall_lo) / 2;
      Rat right_end =
          i + 1 < roots.size()
              ? (roots[i + 1].exact ? *roots[i + 1].exact : roots[i + 1].lo)
              : t_hi;
      Rat right_sample = (wall_hi + right_end) / 2;
      w.left = chamber_label(family, e, f, left_sample);
      w.right = chamber_label(family, e, f, right_sample);
      prev = wall_hi;
      res.walls.push_back(std::move(w));
    }
    results.push_back(std::move(res));
  }
  return results;
}

const char* to_string(Aggregate a) {
  switch (a) {
    case Aggregate::Stable: return "Stable";
    case Aggregate::Semistable: return "Semistable";
    case Aggregate::Unstable: return "Unstable";
    default: return "VacuouslyStable";
  }
}

const char* to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::Stable: return "Stable";
    case SignVerdict::Boundary: return "Boundary";
    default: return "Unstable";
  }
}

}  // namespace zstab
