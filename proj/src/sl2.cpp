#include "zstab/sl2.hpp"

#include <algorithm>
#include <cctype>

namespace zstab {

Sl2Rep::Sl2Rep(std::map<unsigned, unsigned> multiplicities) {
  for (auto& [k, m] : multiplicities)
    if (m > 0) m_.emplace(k, m);
}

Sl2Rep Sl2Rep::irreducible(unsigned k, unsigned mult) {
  Sl2Rep r;
  if (mult > 0) r.m_[k] = mult;
  return r;
}

unsigned long Sl2Rep::dimension() const {
  unsigned long d = 0;
  for (const auto& [k, m] : m_) d += static_cast<unsigned long>(m) * (k + 1);
  return d;
}

std::map<long, unsigned long> Sl2Rep::weights() const {
  std::map<long, unsigned long> w;
  for (const auto& [k, m] : m_) {
    for (long wt = -static_cast<long>(k); wt <= static_cast<long>(k); wt += 2)
      w[wt] += m;
  }
  return w;
}

Sl2Rep& Sl2Rep::operator+=(const Sl2Rep& o) {
  for (const auto& [k, m] : o.m_) m_[k] += m;
  return *this;
}

std::string Sl2Rep::str() const {
  if (m_.empty()) return "0";
  std::string out;
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    if (!out.empty()) out += "+";
    if (it->second > 1) out += std::to_string(it->second) + "*";
    out += "s" + std::to_string(it->first);
  }
  return out;
}

Sl2Rep parse_rep(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty representation literal");
  if (t == "0") return Sl2Rep();
  Sl2Rep out;
  size_t pos = 0;
  while (pos < t.size()) {
    size_t plus = t.find('+', pos);
    std::string term = t.substr(pos, plus == std::string::npos ? plus : plus - pos);
    unsigned mult = 1;
    size_t star = term.find('*');
    std::string rep_part = term;
    if (star != std::string::npos) {
      mult = static_cast<unsigned>(std::stoul(term.substr(0, star)));
      rep_part = term.substr(star + 1);
    }
    if (rep_part.empty() || (rep_part[0] != 's' && rep_part[0] != 'S'))
      throw Error("bad representation term '" + term + "'");
    unsigned k = static_cast<unsigned>(std::stoul(rep_part.substr(1)));
    out += Sl2Rep::irreducible(k, mult);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

namespace {

Sl2Rep tensor_irred(unsigned k, unsigned l) {
  if (k < l) std::swap(k, l);
  Sl2Rep out;
  for (unsigned j = k - l; j <= k + l; j += 2) out += Sl2Rep::irreducible(j);
  return out;
}

Sl2Rep sym2_irred(unsigned k) {
  // s^{2k} + s^{2k-4} + ... down to s^0 or s^2.
  Sl2Rep out;
  for (long j = 2 * static_cast<long>(k); j >= 0; j -= 4)
    out += Sl2Rep::irreducible(static_cast<unsigned>(j));
  return out;
}

Sl2Rep wedge2_irred(unsigned k) {
  if (k == 0) return Sl2Rep();
  Sl2Rep out;
  for (long j = 2 * static_cast<long>(k) - 2; j >= 0; j -= 4)
    out += Sl2Rep::irreducible(static_cast<unsigned>(j));
  return out;
}

// Multiset of irreducible labels with repetition.
std::vector<unsigned> expand(const Sl2Rep& a) {
  std::vector<unsigned> out;
  for (const auto& [k, m] : a.multiplicities())
    for (unsigned i = 0; i < m; ++i) out.push_back(k);
  return out;
}

}  // namespace

Sl2Rep tensor(const Sl2Rep& a, const Sl2Rep& b) {
  Sl2Rep out;
  for (const auto& [k, mk] : a.multiplicities())
    for (const auto& [l, ml] : b.multiplicities()) {
      Sl2Rep t = tensor_irred(k, l);
      for (unsigned i = 0; i < mk * ml; ++i) out += t;
    }
  return out;
}

Sl2Rep sym2(const Sl2Rep& a) {
  std::vector<unsigned> parts = expand(a);
  Sl2Rep out;
  for (size_t i = 0; i < parts.size(); ++i) {
    out += sym2_irred(parts[i]);
    for (size_t j = i + 1; j < parts.size(); ++j)
      out += tensor_irred(parts[i], parts[j]);
  }
  return out;
}

Sl2Rep wedge2(const Sl2Rep& a) {
  std::vector<unsigned> parts = expand(a);
  Sl2Rep out;
  for (size_t i = 0; i < parts.size(); ++i) {
    out += wedge2_irred(parts[i]);
    for (size_t j = i + 1; j < parts.size(); ++j)
      out += tensor_irred(parts[i], parts[j]);
  }
  return out;
}

Sl2Rep decompose_product(ProductKind kind, const Sl2Rep& a, const Sl2Rep* b) {
  switch (kind) {
    case ProductKind::Tensor:
      if (!b) throw Error("tensor needs two operands");
      return tensor(a, *b);
    case ProductKind::Sym2:
      return sym2(a);
    default:
      return wedge2(a);
  }
}

Sl2Rep gl_of(unsigned m) { return tensor_irred(m, m); }

Sl2Rep sl_of(unsigned m) {
  return rep_subtract(gl_of(m), Sl2Rep::irreducible(0)).as_effective();
}

Sl2Rep weight_decompose(const std::map<long, unsigned long>& weights) {
  std::map<long, unsigned long> w = weights;
  for (auto it = w.begin(); it != w.end();) {
    if (it->second == 0) it = w.erase(it);
    else ++it;
  }
  for (const auto& [wt, m] : w) {
    auto it = w.find(-wt);
    if (it == w.end() || it->second != m)
      throw Error("weight multiplicities are not symmetric about 0");
  }
  Sl2Rep out;
  while (!w.empty()) {
    long top = w.rbegin()->first;
    unsigned long mult = w.rbegin()->second;
    if (top < 0) throw Error("weights are not realizable");
    for (long wt = -top; wt <= top; wt += 2) {
      auto it = w.find(wt);
      if (it == w.end() || it->second < mult)
        throw Error("weights are not realizable as a representation");
      it->second -= mult;
      if (it->second == 0) w.erase(it);
    }
    out += Sl2Rep::irreducible(static_cast<unsigned>(top),
                               static_cast<unsigned>(mult));
  }
  return out;
}

VirtualSl2Rep::VirtualSl2Rep(const Sl2Rep& plus, const Sl2Rep& minus) {
  for (const auto& [k, m] : plus.multiplicities())
    m_[k] += static_cast<long long>(m);
  for (const auto& [k, m] : minus.multiplicities())
    m_[k] -= static_cast<long long>(m);
  for (auto it = m_.begin(); it != m_.end();) {
    if (it->second == 0) it = m_.erase(it);
    else ++it;
  }
}

bool VirtualSl2Rep::is_effective() const {
  for (const auto& [k, m] : m_)
    if (m < 0) return false;
  return true;
}

Sl2Rep VirtualSl2Rep::as_effective() const {
  if (!is_effective()) throw Error("virtual representation is not effective");
  std::map<unsigned, unsigned> m;
  for (const auto& [k, v] : m_) m[k] = static_cast<unsigned>(v);
  return Sl2Rep(m);
}

std::string VirtualSl2Rep::str() const {
  if (m_.empty()) return "0";
  std::string out;
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    std::string term;
    long long m = it->second;
    if (m == -1) term = "-s" + std::to_string(it->first);
    else if (m < 0) term = std::to_string(m) + "*s" + std::to_string(it->first);
    else {
      if (!out.empty()) term = "+";
      if (m > 1) term += std::to_string(m) + "*";
      term += "s" + std::to_string(it->first);
    }
    out += term;
  }
  return out;
}

VirtualSl2Rep rep_subtract(const Sl2Rep& a, const Sl2Rep& b) {
  return VirtualSl2Rep(a, b);
}

DeformationReport deformation_space(DeformationModel model) {
  DeformationReport report;
  Sl2Rep stab = Sl2Rep::irreducible(2);
  switch (model) {
    case DeformationModel::V22: {
      // Wedge^2 s^6 = s^10 + s^6 + s^2; the plane is the s^2 summand.
      Sl2Rep complement = Sl2Rep::irreducible(10) + Sl2Rep::irreducible(6);
      report.tangent = tensor(stab, complement);
      report.acting = rep_subtract(sl_of(6), stab).as_effective();
      break;
    }
    case DeformationModel::V5: {
      // Wedge^2 s^4 = s^6 + s^2.
      Sl2Rep complement = Sl2Rep::irreducible(6);
      report.tangent = tensor(stab, complement);
      report.acting = rep_subtract(sl_of(4), stab).as_effective();
      break;
    }
    case DeformationModel::V14: {
      // Wedge^2 s^5 = s^8 + s^4 + s^0; the 5-plane is the s^4 summand.
      Sl2Rep plane = Sl2Rep::irreducible(4);
      Sl2Rep complement = Sl2Rep::irreducible(8) + Sl2Rep::irreducible(0);
      report.tangent = tensor(plane, complement);
      report.acting = rep_subtract(sl_of(5), stab).as_effective();
      break;
    }
  }
  // Sanity on the models themselves.
  VirtualSl2Rep diff = rep_subtract(report.tangent, report.acting);
  if (!diff.is_effective())
    throw Error("deformation model inconsistency: tangent minus acting is not effective");
  report.moduli_tangent = diff.as_effective();
  report.dimension = report.moduli_tangent.dimension();
  return report;
}

GitClass git_classify(unsigned p, const std::map<std::string, unsigned>& zeros) {
  if (zeros.empty()) return GitClass::ZeroOrbit;
  unsigned long total = 0;
  unsigned max_mult = 0, at_half = 0;
  for (const auto& [pt, m] : zeros) {
    if (m == 0) throw Error("zero multiplicity entry for '" + pt + "'");
    total += m;
    max_mult = std::max(max_mult, m);
    if (2 * m == p) ++at_half;
  }
  if (total != p)
    throw Error("zero multiplicities sum to " + std::to_string(total) +
                ", expected " + std::to_string(p));
  if (2 * max_mult > p) return GitClass::Unstable;
  if (2 * max_mult < p) return GitClass::Stable;
  return at_half == 2 ? GitClass::StrictlyPolystable
                      : GitClass::StrictlySemistable;
}

GitClass git_classify_sum(const std::map<std::string, unsigned>& zeros12,
                          const std::map<std::string, unsigned>& zeros4) {
  unsigned long t12 = 0, t4 = 0;
  for (const auto& [pt, m] : zeros12) t12 += m;
  for (const auto& [pt, m] : zeros4) t4 += m;
  if (!zeros12.empty() && t12 != 12)
    throw Error("s12 factor zeros must sum to 12");
  if (!zeros4.empty() && t4 != 4) throw Error("s4 factor zeros must sum to 4");
  if (zeros12.empty() && zeros4.empty()) return GitClass::ZeroOrbit;
  std::map<std::string, unsigned> combined = zeros12;
  for (const auto& [pt, m] : zeros4) combined[pt] += m;
  unsigned p = static_cast<unsigned>(t12 + t4);
  return git_classify(p == 16 ? 16 : p, combined);
}

const char* to_string(GitClass c) {
  switch (c) {
    case GitClass::ZeroOrbit: return "zero_orbit";
    case GitClass::Unstable: return "unstable";
    case GitClass::StrictlySemistable: return "strictly_semistable";
    case GitClass::StrictlyPolystable: return "strictly_polystable";
    default: return "stable";
  }
}

}  // namespace zstab
