#include "zstab/io.hpp"

#include <algorithm>
#include <cctype>

namespace zstab::io {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_number_start(char c) {
  return std::isdigit(static_cast<unsigned char>(c));
}

Rat parse_rat_field(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(what + ": rationals must be strings like \"3/4\" or integers");
}

}  // namespace

GradedClass parse_class(const RingPtr& ring, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty class literal");
  std::map<Monomial, Rat> coeffs;
  size_t ngens = ring->generators().size();
  size_t pos = 0;
  int pending_sign = 1;
  if (t[0] == '-') {
    pending_sign = -1;
    pos = 1;
  } else if (t[0] == '+') {
    pos = 1;
  }
  while (pos < t.size()) {
    size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string term = t.substr(pos, end - pos);
    if (term.empty()) throw Error("bad class literal: '" + text + "'");
    // Split into '*'-joined factors; a leading numeric factor may also be
    // juxtaposed, as in "3/2h".
    Rat coeff(pending_sign);
    Monomial mono(ngens, 0);
    size_t i = 0;
    while (i < term.size()) {
      if (term[i] == '*') {
        ++i;
        continue;
      }
      if (is_number_start(term[i])) {
        size_t j = i;
        while (j < term.size() &&
               (std::isdigit(static_cast<unsigned char>(term[j])) || term[j] == '/'))
          ++j;
        coeff *= parse_rat(term.substr(i, j - i));
        i = j;
      } else if (is_name_char(term[i])) {
        size_t j = i;
        while (j < term.size() && is_name_char(term[j]) &&
               !is_number_start(term[j]))
          ++j;
        // allow digits inside names that started with a letter
        while (j < term.size() && is_name_char(term[j])) ++j;
        std::string name = term.substr(i, j - i);
        unsigned exp = 1;
        if (j < term.size() && term[j] == '^') {
          size_t k = j + 1;
          size_t k0 = k;
          while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
            ++k;
          if (k == k0) throw Error("bad exponent in '" + term + "'");
          exp = static_cast<unsigned>(std::stoul(term.substr(k0, k - k0)));
          j = k;
        }
        mono[ring->generator_index(name)] += exp;
        i = j;
      } else {
        throw Error("bad character in class literal: '" + term + "'");
      }
    }
    auto it = coeffs.find(mono);
    if (it == coeffs.end()) coeffs[mono] = coeff;
    else it->second += coeff;
    if (end < t.size()) {
      pending_sign = t[end] == '-' ? -1 : 1;
      pos = end + 1;
    } else {
      pos = end;
    }
  }
  return GradedClass(ring, std::move(coeffs));
}

namespace {

// Table keys use the monomial grammar ("h^2", "h*l").
Monomial parse_monomial_key(const std::vector<Generator>& gens,
                            const std::string& key) {
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < gens.size(); ++i) index[gens[i].name] = i;
  Monomial m(gens.size(), 0);
  std::string t;
  for (char c : key)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == '*') {
      ++pos;
      continue;
    }
    size_t jpos = pos;
    while (jpos < t.size() && is_name_char(t[jpos])) ++jpos;
    std::string name = t.substr(pos, jpos - pos);
    unsigned exp = 1;
    if (jpos < t.size() && t[jpos] == '^') {
      size_t k = jpos + 1, k0 = k;
      while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
      if (k == k0) throw Error("bad exponent in table key: " + key);
      exp = static_cast<unsigned>(std::stoul(t.substr(k0, k - k0)));
      jpos = k;
    }
    auto it = index.find(name);
    if (it == index.end()) throw Error("unknown generator in table key: " + key);
    m[it->second] += exp;
    pos = jpos;
  }
  return m;
}

}  // namespace

RingPtr parse_ring(const Json& j) {
  if (!j.contains("n") || !j.contains("generators") || !j.contains("integral_table"))
    throw Error("ring: needs n, generators, integral_table");
  unsigned n = j.at("n").get<unsigned>();
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<unsigned>()});
  std::map<Monomial, Rat> table;
  for (const auto& [key, val] : j.at("integral_table").items())
    table[parse_monomial_key(gens, key)] =
        parse_rat_field(val, "integral_table." + key);
  return make_ring(n, std::move(gens), std::move(table));
}

BundleData parse_bundle(const RingPtr& ring, const Json& j) {
  if (j.contains("character"))
    return BundleData::from_character(parse_class(ring, j.at("character").get<std::string>()));
  Rat rank = parse_rat_field(j.at("rank"), "bundle rank");
  std::vector<GradedClass> cs(ring->dimension(), GradedClass(ring));
  if (j.contains("chern")) {
    for (const auto& [key, val] : j.at("chern").items()) {
      if (key.size() < 2 || key[0] != 'c')
        throw Error("chern keys look like c1, c2, ...");
      unsigned idx = static_cast<unsigned>(std::stoul(key.substr(1)));
      if (idx == 0 || idx > ring->dimension())
        throw Error("chern index out of range: " + key);
      cs[idx - 1] = parse_class(ring, val.get<std::string>());
    }
  }
  return BundleData::from_chern(ring, rank, cs);
}

ChargeSpec parse_charge(const RingPtr& ring, const Json& j, bool weak_rho) {
  GradedClass omega = parse_class(ring, j.at("omega").get<std::string>());
  if (j.contains("preset")) {
    GradedClass b(ring);
    if (j.contains("b_field"))
      b = parse_class(ring, j.at("b_field").get<std::string>());
    std::vector<GradedClass> tangent;
    if (j.contains("tangent")) {
      tangent.assign(ring->dimension(), GradedClass(ring));
      for (const auto& [key, val] : j.at("tangent").items()) {
        unsigned idx = static_cast<unsigned>(std::stoul(key.substr(1)));
        tangent[idx - 1] = parse_class(ring, val.get<std::string>());
      }
    }
    return preset_charge(j.at("preset").get<std::string>(), omega, b, tangent);
  }
  ChargeSpec spec;
  spec.omega = omega;
  for (const auto& entry : j.at("rho"))
    spec.rho.entries.push_back(parse_gaussian(entry.get<std::string>()));
  spec.u = j.contains("u") ? parse_class(ring, j.at("u").get<std::string>())
                           : GradedClass::one(ring);
  spec.weak_validated = !spec.rho.strictly_valid();
  spec.validate(weak_rho);
  return spec;
}

EmbeddedSubmanifold parse_submanifold(const RingPtr& ring, const Json& j) {
  EmbeddedSubmanifold sub;
  sub.ring = ring;
  sub.dim = j.at("dim").get<unsigned>();
  if (j.contains("genus")) {
    long g = j.at("genus").get<long>();
    sub.deg_canonical = Rat(2 * g - 2);
  } else if (j.contains("deg_canonical")) {
    sub.deg_canonical = parse_rat_field(j.at("deg_canonical"), "deg_canonical");
  }
  if (j.contains("deg_KX_restricted"))
    sub.deg_ambient_canonical_restricted =
        parse_rat_field(j.at("deg_KX_restricted"), "deg_KX_restricted");
  for (const auto& [key, val] : j.at("restriction_degrees").items()) {
    GradedClass mono = parse_class(ring, key);
    if (mono.coefficients().size() != 1)
      throw Error("restriction_degrees keys must be single monomials");
    const auto& [m, c] = *mono.coefficients().begin();
    if (c != 1) throw Error("restriction_degrees keys must be plain monomials");
    sub.restriction_degrees[m] = parse_rat_field(val, key);
  }
  if (j.contains("class"))
    sub.ambient_class = parse_class(ring, j.at("class").get<std::string>());
  sub.validate();
  return sub;
}

const BundleData& ProblemSpec::bundle(const std::string& name) const {
  auto it = bundles.find(name);
  if (it == bundles.end()) throw Error("unknown bundle '" + name + "'");
  return it->second;
}

ProblemSpec parse_problem(const Json& j, bool weak_rho) {
  ProblemSpec spec;
  spec.raw = j;
  if (!j.contains("ring")) throw Error("input needs a ring block");
  spec.ring = parse_ring(j.at("ring"));
  if (j.contains("bundles")) {
    for (const auto& [name, bj] : j.at("bundles").items())
      spec.bundles.emplace(name, parse_bundle(spec.ring, bj));
  }
  if (j.contains("charge"))
    spec.charge = parse_charge(spec.ring, j.at("charge"), weak_rho);
  return spec;
}

std::string rat_str(const Rat& r) { return to_string(r); }
std::string gaussian_str(const Gaussian& z) { return to_string(z); }

Json charge_to_json(const ChargePolynomial& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(gaussian_str(c));
  return Json{{"coefficients", coeffs}, {"degree", z.degree()}};
}

Json verdict_to_json(const StabilityVerdict& v) {
  Json j;
  j["ordering"] = to_string(v.ordering);
  if (v.discrepancy_order) j["discrepancy_order"] = *v.discrepancy_order;
  else j["discrepancy_order"] = nullptr;
  j["witness_coefficient"] = rat_str(v.witness_coefficient);
  return j;
}

Json report_to_json(const AsymStabilityReport& r) {
  Json j;
  j["aggregate"] = to_string(r.aggregate);
  Json subs = Json::array();
  for (const auto& s : r.subobjects) {
    Json sj = verdict_to_json(s.verdict);
    sj["name"] = s.name;
    sj["zero_charge"] = s.zero_charge;
    subs.push_back(sj);
  }
  j["subobjects"] = subs;
  if (r.worst) j["worst"] = r.subobjects[*r.worst].name;
  return j;
}

Json walls_to_json(const std::vector<WallScanResult>& walls) {
  Json out = Json::array();
  for (const auto& w : walls) {
    Json j;
    j["subobject"] = w.subobject;
    j["degenerate"] = w.degenerate;
    if (w.degenerate || w.walls.empty()) j["constant_verdict"] = w.constant_verdict;
    Json arr = Json::array();
    for (const auto& wall : w.walls) {
      Json wj;
      if (wall.t) wj["t"] = rat_str(*wall.t);
      else wj["t_interval"] = Json::array({rat_str(wall.lo), rat_str(wall.hi)});
      wj["left"] = wall.left;
      wj["right"] = wall.right;
      arr.push_back(wj);
    }
    j["walls"] = arr;
    out.push_back(j);
  }
  return out;
}

Json surface_to_json(const SurfaceReport& r) {
  Json j;
  j["a"] = rat_str(r.reduction.a);
  j["beta"] = rat_str(r.reduction.beta_coeff);
  j["gamma"] = rat_str(r.reduction.gamma_coeff);
  j["discriminant"] = rat_str(r.reduction.discriminant);
  j["verdict"] = to_string(r.hypothesis);
  Json curves = Json::array();
  for (const auto& c : r.curves)
    curves.push_back(Json{{"name", c.name}, {"verdict", to_string(c.verdict)}});
  j["curve_verdicts"] = curves;
  return j;
}

}  // namespace zstab::io
