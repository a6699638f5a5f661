#include "zstab/ring.hpp"

#include <algorithm>

namespace zstab {

namespace {

void enumerate_monomials(const std::vector<Generator>& gens, unsigned target,
                         size_t idx, Monomial& current,
                         std::vector<Monomial>& out) {
  if (idx == gens.size()) {
    if (target == 0) out.push_back(current);
    return;
  }
  unsigned deg = gens[idx].degree;
  for (unsigned e = 0; e * deg <= target; ++e) {
    current[idx] = e;
    enumerate_monomials(gens, target - e * deg, idx + 1, current, out);
  }
  current[idx] = 0;
}

// Bernoulli numbers B_2, B_4, ... (B_1 handled separately in the Todd series).
const std::vector<Rat>& bernoulli_even() {
  static const std::vector<Rat> b = {
      Rat(1, 6),     Rat(-1, 30),   Rat(1, 42),      Rat(-1, 30),
      Rat(5, 66),    Rat(-691, 2730), Rat(7, 6),     Rat(-3617, 510)};
  return b;
}

}  // namespace

IntersectionRing::IntersectionRing(unsigned n, std::vector<Generator> generators,
                                   std::map<Monomial, Rat> integral_table)
    : n_(n), gens_(std::move(generators)), table_(std::move(integral_table)) {
  if (n_ == 0) throw Error("ring dimension must be positive");
  for (const auto& g : gens_) {
    if (g.degree == 0 || g.degree % 2 != 0 || g.degree > 2 * n_)
      throw Error("generator '" + g.name + "' must have even degree in [2, 2n]");
  }
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name)
        throw Error("duplicate generator name '" + gens_[i].name + "'");
  // Every top-degree monomial must be integrable; absent entries are an
  // error, not zero.
  for (const auto& m : monomials_of_degree(2 * n_)) {
    if (table_.find(m) == table_.end())
      throw Error("integral table is missing entry for " + monomial_name(m));
  }
  for (const auto& [m, v] : table_) {
    if (monomial_degree(m) != 2 * n_)
      throw Error("integral table entry " + monomial_name(m) +
                  " is not of top degree");
  }
}

size_t IntersectionRing::generator_index(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw Error("unknown generator '" + name + "'");
}

unsigned IntersectionRing::monomial_degree(const Monomial& m) const {
  unsigned d = 0;
  for (size_t i = 0; i < gens_.size(); ++i) d += m[i] * gens_[i].degree;
  return d;
}

std::string IntersectionRing::monomial_name(const Monomial& m) const {
  std::string s;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += gens_[i].name;
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<Monomial> IntersectionRing::monomials_of_degree(unsigned d) const {
  std::vector<Monomial> out;
  Monomial current(gens_.size(), 0);
  enumerate_monomials(gens_, d, 0, current, out);
  return out;
}

const Rat& IntersectionRing::table_entry(const Monomial& m) const {
  auto it = table_.find(m);
  if (it == table_.end())
    throw Error("integral table has no entry for " + monomial_name(m));
  return it->second;
}

RingPtr make_ring(unsigned n, std::vector<Generator> generators,
                  std::map<Monomial, Rat> integral_table) {
  return std::make_shared<const IntersectionRing>(n, std::move(generators),
                                                  std::move(integral_table));
}

RingPtr cp2_ring() {
  return make_ring(2, {{"h", 2}}, {{Monomial{2}, Rat(1)}});
}

GradedClass::GradedClass(RingPtr ring, std::map<Monomial, Rat> coeffs)
    : ring_(std::move(ring)) {
  for (auto& [m, v] : coeffs) {
    if (m.size() != ring_->generators().size())
      throw Error("monomial arity does not match ring");
    if (ring_->monomial_degree(m) > ring_->top_degree())
      throw Error("monomial " + ring_->monomial_name(m) +
                  " exceeds the truncation degree");
    if (v != 0) coeffs_.emplace(m, std::move(v));
  }
}

GradedClass GradedClass::one(const RingPtr& ring) {
  return scalar(ring, Rat(1));
}

GradedClass GradedClass::scalar(const RingPtr& ring, Rat v) {
  GradedClass c(ring);
  if (v != 0) c.coeffs_[Monomial(ring->generators().size(), 0)] = std::move(v);
  return c;
}

GradedClass GradedClass::generator(const RingPtr& ring,
                                   const std::string& name) {
  GradedClass c(ring);
  Monomial m(ring->generators().size(), 0);
  m[ring->generator_index(name)] = 1;
  c.coeffs_[m] = Rat(1);
  return c;
}

Rat GradedClass::coeff(const Monomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat GradedClass::degree0() const {
  if (!ring_) return Rat(0);
  return coeff(Monomial(ring_->generators().size(), 0));
}

GradedClass GradedClass::degree_part(unsigned d) const {
  GradedClass out(ring_);
  for (const auto& [m, v] : coeffs_)
    if (ring_->monomial_degree(m) == d) out.coeffs_.emplace(m, v);
  return out;
}

unsigned GradedClass::top_nonzero_degree() const {
  unsigned top = 0;
  for (const auto& [m, v] : coeffs_)
    top = std::max(top, ring_->monomial_degree(m));
  return top;
}

bool GradedClass::is_homogeneous(unsigned d) const {
  for (const auto& [m, v] : coeffs_)
    if (ring_->monomial_degree(m) != d) return false;
  return true;
}

void GradedClass::set(const Monomial& m, Rat v) {
  if (v == 0) coeffs_.erase(m);
  else coeffs_[m] = std::move(v);
}

GradedClass GradedClass::operator-() const {
  GradedClass out(ring_);
  for (const auto& [m, v] : coeffs_) out.coeffs_.emplace(m, -v);
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  if (!ring_) {
    *this = o;
    return *this;
  }
  if (o.ring_ && o.ring_ != ring_) throw Error("mismatched rings");
  for (const auto& [m, v] : o.coeffs_) set(m, coeff(m) + v);
  return *this;
}

GradedClass multiply(const GradedClass& a, const GradedClass& b) {
  if (!a.ring_ || !b.ring_ || a.ring_ != b.ring_)
    throw Error("mismatched rings");
  const auto& ring = *a.ring_;
  GradedClass out(a.ring_);
  for (const auto& [ma, va] : a.coeffs_) {
    for (const auto& [mb, vb] : b.coeffs_) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      if (ring.monomial_degree(m) > ring.top_degree()) continue;
      out.set(m, out.coeff(m) + va * vb);
    }
  }
  return out;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  return multiply(a, b);
}

GradedClass GradedClass::scaled(const Rat& s) const {
  GradedClass out(ring_);
  if (s == 0) return out;
  for (const auto& [m, v] : coeffs_) out.coeffs_.emplace(m, v * s);
  return out;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return a.coeffs_ == b.coeffs_;
}

GradedClass GradedClass::pow(unsigned k) const {
  GradedClass acc = GradedClass::one(ring_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Rat integrate(const GradedClass& a) {
  if (!a.ring()) return Rat(0);
  const auto& ring = *a.ring();
  Rat acc(0);
  for (const auto& [m, v] : a.coefficients()) {
    if (ring.monomial_degree(m) == ring.top_degree())
      acc += v * ring.table_entry(m);
  }
  return acc;
}

Gaussian integrate(const CGradedClass& a) {
  return Gaussian(integrate(a.real_part), integrate(a.imag_part));
}

namespace {

// Power sums p_k (degree 2k parts) from Chern classes via Newton's
// identities: p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
std::vector<GradedClass> power_sums(const RingPtr& ring,
                                    const std::vector<GradedClass>& c,
                                    unsigned upto) {
  std::vector<GradedClass> p(upto + 1, GradedClass(ring));
  auto cc = [&](unsigned i) -> GradedClass {
    if (i == 0) return GradedClass::one(ring);
    if (i <= c.size()) return c[i - 1];
    return GradedClass(ring);
  };
  for (unsigned k = 1; k <= upto; ++k) {
    GradedClass acc(ring);
    for (unsigned i = 1; i < k; ++i) {
      GradedClass term = cc(i) * p[k - i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    GradedClass last = cc(k).scaled(Rat(static_cast<long>(k)));
    if (k % 2 == 0) last = -last;
    acc += last;
    p[k] = acc;
  }
  return p;
}

void validate_chern_degrees(const RingPtr& ring,
                            const std::vector<GradedClass>& chern_classes) {
  for (size_t i = 0; i < chern_classes.size(); ++i) {
    const auto& ci = chern_classes[i];
    if (ci.is_zero()) continue;
    if (ci.ring() != ring) throw Error("mismatched rings");
    unsigned want = 2 * (static_cast<unsigned>(i) + 1);
    if (want > ring->top_degree())
      throw Error("Chern class c_" + std::to_string(i + 1) +
                  " exceeds the truncation degree");
    if (!ci.is_homogeneous(want))
      throw Error("Chern class c_" + std::to_string(i + 1) +
                  " must be homogeneous of degree " + std::to_string(want));
  }
}

}  // namespace

GradedClass char_class(CharClassKind kind, const Rat& rank,
                       const std::vector<GradedClass>& chern_classes) {
  RingPtr ring;
  for (const auto& c : chern_classes)
    if (c.ring()) {
      ring = c.ring();
      break;
    }
  if (!ring) throw Error("char_class needs at least one class to fix the ring");
  validate_chern_degrees(ring, chern_classes);
  unsigned n = ring->dimension();
  auto p = power_sums(ring, chern_classes, n);

  if (kind == CharClassKind::ChernCharacter) {
    GradedClass ch = GradedClass::scalar(ring, rank);
    for (unsigned k = 1; k <= n; ++k) ch += p[k].scaled(Rat(1) / factorial(k));
    return ch;
  }

  // log Td = p_1/2 - sum_{k>=1} B_{2k}/(2k (2k)!) p_{2k};
  // log Ahat drops the p_1/2 term.
  GradedClass log_td(ring);
  if (kind == CharClassKind::Todd) log_td += p[1].scaled(Rat(1, 2));
  const auto& bern = bernoulli_even();
  for (unsigned k = 1; 2 * k <= n; ++k) {
    if (k > bern.size()) throw Error("Todd class limited to dimension 16");
    Rat coeff = bern[k - 1] / (Rat(2 * static_cast<long>(k)) * factorial(2 * k));
    log_td += p[2 * k].scaled(-coeff);
  }
  return exp_class(log_td);
}

std::vector<GradedClass> chern_from_character(const GradedClass& ch) {
  const RingPtr& ring = ch.ring();
  if (!ring) throw Error("chern_from_character needs a ring");
  unsigned n = ring->dimension();
  std::vector<GradedClass> c(n, GradedClass(ring));
  std::vector<GradedClass> p(n + 1, GradedClass(ring));
  for (unsigned k = 1; k <= n; ++k)
    p[k] = ch.degree_part(2 * k).scaled(factorial(k));
  // Invert Newton's identities degree by degree.
  for (unsigned k = 1; k <= n; ++k) {
    GradedClass acc = p[k];
    for (unsigned i = 1; i < k; ++i) {
      GradedClass term = c[i - 1] * p[k - i];
      if (i % 2 == 0) term = -term;
      acc = acc - term;
    }
    Rat scale = Rat(1) / Rat(static_cast<long>(k));
    if (k % 2 == 0) scale = -scale;
    c[k - 1] = acc.scaled(scale);
  }
  return c;
}

GradedClass series_sqrt(const GradedClass& u) {
  if (!u.ring()) throw Error("series_sqrt needs a ring");
  if (u.degree0() != 1) throw Error("series_sqrt requires a unipotent class");
  GradedClass nil = u - GradedClass::one(u.ring());
  unsigned n = u.ring()->dimension();
  GradedClass acc = GradedClass::one(u.ring());
  GradedClass power = GradedClass::one(u.ring());
  for (unsigned j = 1; j <= n; ++j) {
    power = power * nil;
    if (power.is_zero()) break;
    acc += power.scaled(half_binomial(j));
  }
  return acc;
}

GradedClass exp_class(const GradedClass& a) {
  if (!a.ring()) throw Error("exp_class needs a ring");
  if (a.degree0() != 0) throw Error("exp_class requires zero degree-0 part");
  unsigned n = a.ring()->dimension();
  GradedClass acc = GradedClass::one(a.ring());
  GradedClass power = GradedClass::one(a.ring());
  for (unsigned j = 1; j <= n; ++j) {
    power = power * a;
    if (power.is_zero()) break;
    acc += power.scaled(Rat(1) / factorial(j));
  }
  return acc;
}

BundleData BundleData::from_chern(const RingPtr& ring, const Rat& rank,
                                  const std::vector<GradedClass>& chern_classes) {
  if (sgn(rank) < 0) throw Error("rank must be >= 0");
  std::vector<GradedClass> cs = chern_classes;
  if (cs.empty()) cs.push_back(GradedClass(ring));
  for (auto& c : cs)
    if (!c.ring()) c = GradedClass(ring);
  bool all_zero = true;
  for (const auto& c : cs)
    if (!c.is_zero()) all_zero = false;
  if (all_zero) {
    BundleData b;
    b.chern_character = GradedClass::scalar(ring, rank);
    return b;
  }
  BundleData b;
  b.chern_character = char_class(CharClassKind::ChernCharacter, rank, cs);
  return b;
}

BundleData BundleData::from_character(GradedClass ch) {
  if (sgn(ch.degree0()) < 0) throw Error("rank must be >= 0");
  BundleData b;
  b.chern_character = std::move(ch);
  return b;
}

BundleData BundleData::dual() const {
  const RingPtr& ring = chern_character.ring();
  GradedClass out(ring);
  for (unsigned d = 0; d <= ring->top_degree(); d += 2) {
    GradedClass part = chern_character.degree_part(d);
    if ((d / 2) % 2 == 1) part = -part;
    out += part;
  }
  return from_character(out);
}

BundleData BundleData::twist(const GradedClass& l) const {
  if (!l.is_homogeneous(2)) throw Error("twist needs a degree-2 class");
  return from_character(chern_character * exp_class(l));
}

}  // namespace zstab
