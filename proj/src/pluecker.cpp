#include "zstab/pluecker.hpp"

#include <algorithm>

#include "zstab/rng.hpp"

namespace zstab {

namespace {

constexpr unsigned kWedgeCount = 15;
constexpr unsigned kAlphaCount = 10;

std::vector<WedgePair> wedge_pairs() {
  std::vector<WedgePair> pairs;
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = i + 1; j <= 6; ++j) pairs.push_back({i, j});
  return pairs;
}

size_t pair_index(unsigned i, unsigned j) {
  // lexicographic position of (i, j), 1-based input, i < j
  size_t idx = 0;
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = a + 1; b <= 6; ++b) {
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw Error("bad wedge pair");
}

// Sets W_{ij} (i != j allowed; the sign handles the order).
void add_wedge(Vec& v, unsigned i, unsigned j, const Rat& c) {
  if (i == j) return;
  if (i < j) v[pair_index(i, j)] += c;
  else v[pair_index(j, i)] -= c;
}

// The five s^4 basis forms as wedge-coordinate vectors.
Mat s4_basis() {
  Mat m(5, Vec(kWedgeCount, Rat(0)));
  add_wedge(m[0], 4, 1, Rat(1));
  add_wedge(m[0], 3, 2, Rat(-3));
  add_wedge(m[1], 5, 1, Rat(2));
  add_wedge(m[1], 4, 2, Rat(-4));
  add_wedge(m[2], 6, 1, Rat(1));
  add_wedge(m[2], 5, 2, Rat(1));
  add_wedge(m[2], 4, 3, Rat(-8));
  add_wedge(m[3], 6, 2, Rat(3));
  add_wedge(m[3], 5, 3, Rat(-6));
  add_wedge(m[4], 6, 3, Rat(1));
  add_wedge(m[4], 5, 4, Rat(-3));
  return m;
}

// The ten s^8 + s^0 basis vectors v_1..v_10.
Mat s8s0_basis() {
  Mat m(10, Vec(kWedgeCount, Rat(0)));
  add_wedge(m[0], 2, 1, Rat(1));
  add_wedge(m[1], 3, 1, Rat(1));
  add_wedge(m[2], 4, 1, Rat(3));
  add_wedge(m[2], 3, 2, Rat(5));
  add_wedge(m[3], 5, 1, Rat(1));
  add_wedge(m[3], 4, 2, Rat(5));
  add_wedge(m[4], 6, 1, Rat(1));
  add_wedge(m[4], 5, 2, Rat(15));
  add_wedge(m[4], 4, 3, Rat(20));
  add_wedge(m[5], 6, 1, Rat(1));
  add_wedge(m[5], 5, 2, Rat(-5));
  add_wedge(m[5], 4, 3, Rat(10));
  add_wedge(m[6], 6, 2, Rat(1));
  add_wedge(m[6], 5, 3, Rat(5));
  add_wedge(m[7], 6, 3, Rat(3));
  add_wedge(m[7], 5, 4, Rat(5));
  add_wedge(m[8], 6, 4, Rat(1));
  add_wedge(m[9], 6, 5, Rat(1));
  return m;
}

// The thesis's printed linear constraints in the W coordinates.
Mat printed_constraints() {
  Mat m(5, Vec(kWedgeCount, Rat(0)));
  add_wedge(m[0], 1, 4, Rat(-1));
  add_wedge(m[0], 2, 3, Rat(3));
  add_wedge(m[1], 1, 5, Rat(-2));
  add_wedge(m[1], 2, 4, Rat(4));
  add_wedge(m[2], 1, 6, Rat(-1));
  add_wedge(m[2], 2, 5, Rat(-1));
  add_wedge(m[2], 3, 4, Rat(8));
  add_wedge(m[3], 2, 6, Rat(-3));
  add_wedge(m[3], 3, 5, Rat(6));
  add_wedge(m[4], 3, 6, Rat(-1));
  add_wedge(m[4], 4, 5, Rat(3));
  return m;
}

// The printed alpha -> W coordinate table, for the cross-check.
Mat printed_embedding() {
  Mat m(kWedgeCount, Vec(kAlphaCount, Rat(0)));
  auto set = [&](unsigned i, unsigned j, unsigned alpha, const Rat& c) {
    m[pair_index(i, j)][alpha - 1] += c;
  };
  set(1, 2, 1, Rat(-1));
  set(1, 3, 2, Rat(-1));
  set(1, 4, 3, Rat(-3));
  set(1, 5, 3, Rat(-1));  // printed as -alpha_3 (the regenerated table has -alpha_4)
  set(1, 6, 5, Rat(-1));
  set(1, 6, 6, Rat(-1));
  set(2, 3, 3, Rat(-5));
  set(2, 4, 4, Rat(-5));
  set(2, 5, 5, Rat(-15));
  set(2, 5, 6, Rat(5));
  set(2, 6, 7, Rat(-1));
  set(3, 4, 5, Rat(-20));
  set(3, 4, 6, Rat(-10));
  set(3, 5, 7, Rat(-5));
  set(3, 6, 8, Rat(-3));
  set(4, 5, 8, Rat(-5));
  set(4, 6, 9, Rat(-1));
  set(5, 6, 10, Rat(-1));
  return m;
}

// Printed homogeneous ideal, 15 generators in alpha_1..alpha_10.
std::vector<Quadric> printed_ideal_list() {
  auto q = [](std::initializer_list<std::tuple<long, unsigned, unsigned>> terms) {
    Quadric g;
    for (const auto& [c, i, j] : terms) {
      unsigned a = std::min(i, j) - 1, b = std::max(i, j) - 1;
      g.coeff[a][b] += Rat(c);
    }
    return g;
  };
  return {
      q({{1, 8, 8}, {-5, 7, 9}, {20, 5, 10}, {10, 6, 10}}),
      q({{5, 7, 8}, {-15, 5, 9}, {5, 6, 9}, {5, 4, 10}}),
      q({{5, 7, 7}, {-45, 5, 8}, {15, 6, 8}, {5, 3, 10}}),
      q({{20, 5, 7}, {10, 6, 7}, {-15, 4, 8}, {5, 3, 9}}),
      q({{5, 5, 8}, {5, 6, 8}, {-1, 3, 9}, {3, 3, 10}}),
      q({{5, 5, 7}, {5, 6, 7}, {-3, 3, 8}, {1, 2, 10}}),
      q({{15, 5, 5}, {10, 5, 6}, {-5, 6, 6}, {-1, 3, 7}, {1, 1, 10}}),
      q({{20, 5, 5}, {30, 5, 6}, {10, 6, 6}, {-9, 3, 8}, {1, 2, 9}}),
      q({{5, 4, 5}, {5, 4, 6}, {-3, 3, 7}, {1, 1, 9}}),
      q({{5, 3, 5}, {5, 3, 6}, {-1, 2, 7}, {3, 1, 8}}),
      q({{300, 5, 5}, {50, 5, 6}, {-50, 6, 6}, {-25, 4, 7}, {25, 3, 8}}),
      q({{20, 3, 5}, {10, 3, 6}, {-15, 3, 7}, {5, 2, 8}}),
      q({{5, 3, 4}, {-45, 3, 5}, {15, 3, 6}, {5, 1, 8}}),
      q({{5, 3, 3}, {-15, 2, 5}, {5, 2, 6}, {5, 1, 7}}),
      q({{15, 3, 3}, {-5, 2, 4}, {20, 1, 5}, {10, 1, 6}}),
  };
}

Quadric product_of_linear(const Vec& u, const Vec& v) {
  Quadric g;
  for (unsigned i = 0; i < kAlphaCount; ++i) {
    if (u[i] == 0) continue;
    for (unsigned j = 0; j < kAlphaCount; ++j) {
      if (v[j] == 0) continue;
      unsigned a = std::min(i, j), b = std::max(i, j);
      g.coeff[a][b] += u[i] * v[j];
    }
  }
  return g;
}

Quadric quadric_sub(const Quadric& a, const Quadric& b) {
  Quadric g;
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j)
      g.coeff[i][j] = a.coeff[i][j] - b.coeff[i][j];
  return g;
}

Quadric quadric_add(const Quadric& a, const Quadric& b) {
  Quadric g;
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j)
      g.coeff[i][j] = a.coeff[i][j] + b.coeff[i][j];
  return g;
}

Vec wedge_coordinates(const Vec& a, const Vec& b) {
  Vec w(kWedgeCount, Rat(0));
  size_t idx = 0;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j) w[idx++] = a[i] * b[j] - a[j] * b[i];
  return w;
}

// Action of an invertible 2x2 substitution on s^5 in the monomial basis
// e_i = x^{6-i} y^{i-1}: x -> p11 x + p21 y, y -> p12 x + p22 y.
Mat s5_matrix(const Rat& p11, const Rat& p12, const Rat& p21, const Rat& p22) {
  Mat m(6, Vec(6, Rat(0)));
  for (unsigned col = 1; col <= 6; ++col) {
    unsigned xe = 6 - col, ye = col - 1;
    // (p11 x + p21 y)^xe (p12 x + p22 y)^ye
    for (unsigned s = 0; s <= xe; ++s) {
      for (unsigned t = 0; t <= ye; ++t) {
        Rat coeff = binomial(static_cast<long>(xe), s) *
                    binomial(static_cast<long>(ye), t) * pow_rat(p11, xe - s) *
                    pow_rat(p21, s) * pow_rat(p12, ye - t) * pow_rat(p22, t);
        unsigned ypow = s + t;  // power of y in the product
        unsigned row = ypow + 1;
        m[row - 1][col - 1] += coeff;
      }
    }
  }
  return m;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

Rat Quadric::eval(const Vec& alpha) const {
  Rat acc(0);
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j) {
      if (coeff[i][j] == 0) continue;
      acc += coeff[i][j] * alpha[i] * alpha[j];
    }
  return acc;
}

Vec Quadric::gradient(const Vec& alpha) const {
  Vec g(kAlphaCount, Rat(0));
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j) {
      if (coeff[i][j] == 0) continue;
      if (i == j) {
        g[i] += 2 * coeff[i][j] * alpha[i];
      } else {
        g[i] += coeff[i][j] * alpha[j];
        g[j] += coeff[i][j] * alpha[i];
      }
    }
  return g;
}

Vec Quadric::as_vector() const {
  Vec v;
  v.reserve(55);
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j) v.push_back(coeff[i][j]);
  return v;
}

bool Quadric::is_zero() const {
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j)
      if (coeff[i][j] != 0) return false;
  return true;
}

long generator_weight(unsigned i) { return 7 - 2 * static_cast<long>(i); }

PlueckerModel build_model() {
  PlueckerModel model;
  model.basis.pairs = wedge_pairs();
  model.basis.s4 = s4_basis();
  model.basis.s8s0 = s8s0_basis();
  Mat joint = model.basis.s4;
  for (const auto& row : model.basis.s8s0) joint.push_back(row);
  model.basis.joint_rank = rank(joint);
  if (model.basis.joint_rank != kWedgeCount)
    throw Error("wedge bases do not span: rank " +
                std::to_string(model.basis.joint_rank));

  // Embedding alpha -> W: column t is v_t.
  model.embedding = Mat(kWedgeCount, Vec(kAlphaCount, Rat(0)));
  for (unsigned t = 0; t < kAlphaCount; ++t)
    for (unsigned w = 0; w < kWedgeCount; ++w)
      model.embedding[w][t] = model.basis.s8s0[t][w];

  // Cross-check the printed coordinate table.
  Mat printed = printed_embedding();
  for (unsigned w = 0; w < kWedgeCount; ++w) {
    if (printed[w] != model.embedding[w]) {
      const auto& p = model.basis.pairs[w];
      model.embedding_mismatches.push_back(
          "W_" + std::to_string(p.i) + std::to_string(p.j));
    }
  }

  // Regenerated constraints: the annihilator of span(v_1..v_10).
  std::vector<Vec> ann = nullspace(model.basis.s8s0, kWedgeCount);
  if (ann.size() != 5)
    throw Error("constraint regeneration failed: expected 5, got " +
                std::to_string(ann.size()));
  Mat ann_mat(ann.begin(), ann.end());
  Mat printed_l = printed_constraints();
  for (size_t i = 0; i < 5; ++i) {
    ConstraintCheck check;
    check.regenerated = ann[i];
    check.printed = printed_l[i];
    check.printed_in_regenerated_span = in_row_span(ann_mat, printed_l[i]);
    model.constraints.push_back(std::move(check));
  }

  // Ideal: the Pluecker three-term relations restricted to the subspace.
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = i + 1; j <= 6; ++j)
      for (unsigned k = j + 1; k <= 6; ++k)
        for (unsigned l = k + 1; l <= 6; ++l) {
          const Vec& wij = model.embedding[pair_index(i, j)];
          const Vec& wkl = model.embedding[pair_index(k, l)];
          const Vec& wik = model.embedding[pair_index(i, k)];
          const Vec& wjl = model.embedding[pair_index(j, l)];
          const Vec& wil = model.embedding[pair_index(i, l)];
          const Vec& wjk = model.embedding[pair_index(j, k)];
          Quadric g = quadric_sub(product_of_linear(wij, wkl),
                                  product_of_linear(wik, wjl));
          g = quadric_add(g, product_of_linear(wil, wjk));
          model.ideal.push_back(g);
        }

  model.printed_ideal = printed_ideal_list();
  Mat ideal_span;
  for (const auto& g : model.ideal) ideal_span.push_back(g.as_vector());
  Mat printed_span;
  for (const auto& g : model.printed_ideal) printed_span.push_back(g.as_vector());
  bool all_in = true;
  for (const auto& g : model.printed_ideal) {
    bool in = in_row_span(ideal_span, g.as_vector());
    model.printed_generator_in_span.push_back(in);
    all_in = all_in && in;
  }
  bool reverse = true;
  for (const auto& g : model.ideal)
    reverse = reverse && in_row_span(printed_span, g.as_vector());
  model.printed_ideal_spans_equal = all_in && reverse;
  return model;
}

unsigned jacobian_rank(const PlueckerModel& model, const Vec& alpha) {
  if (alpha.size() != kAlphaCount) throw Error("alpha must have 10 coordinates");
  Mat jac;
  for (const auto& g : model.ideal) {
    if (g.eval(alpha) != 0)
      throw Error("point does not satisfy the ideal");
    jac.push_back(g.gradient(alpha));
  }
  return rank(std::move(jac));
}

std::optional<Vec> alpha_coordinates(const PlueckerModel& model, const Vec& a,
                                     const Vec& b) {
  Vec w = wedge_coordinates(a, b);
  bool nonzero = false;
  for (const auto& c : w)
    if (c != 0) nonzero = true;
  if (!nonzero) throw Error("degenerate two-plane");
  auto sol = solve(model.embedding, w);
  if (!sol) return std::nullopt;
  // Verify the solve exactly (the system is overdetermined).
  Vec check = mat_vec(model.embedding, *sol);
  if (check != w) return std::nullopt;
  return sol;
}

SampleReport generic_rank(const PlueckerModel& model, unsigned samples,
                          std::uint64_t seed) {
  if (samples == 0) throw Error("generic_rank needs at least one sample");
  Rng rng(seed);
  SampleReport report;
  report.seed = seed;
  for (unsigned s = 0; s < samples; ++s) {
    // Random rational SL(2,Q) element as a product of shears and a torus
    // element, applied to a plane of Z_0 through a coordinate flag.
    Rat p = rng.rat_in(3), q = rng.rat_in(3), r = rng.nonzero_rat(3);
    // g = [[1,p],[0,1]] * [[1,0],[q,1]] * [[r,0],[0,1/r]]
    Rat g11 = (1 + p * q) * r, g12 = p / r, g21 = q * r, g22 = Rat(1) / r;
    Mat m = s5_matrix(g11, g12, g21, g22);
    Vec a0(6, Rat(0)), b0(6, Rat(0));
    Rat mu = rng.nonzero_rat(3), nu = rng.nonzero_rat(3);
    if (s % 2 == 0) {
      a0[0] = 1;          // e_1
      b0[1] = mu;         // mu e_2 + nu e_3
      b0[2] = nu;
    } else {
      a0[5] = 1;          // e_6
      b0[4] = mu;         // mu e_5 + nu e_4
      b0[3] = nu;
    }
    Vec a = mat_vec(m, a0), b = mat_vec(m, b0);
    auto alpha = alpha_coordinates(model, a, b);
    if (!alpha) continue;  // would indicate a non-invariant sample; reported
    // Soundness: sampled decomposables satisfying the constraints satisfy
    // the full ideal (jacobian_rank checks the ideal residuals).
    unsigned rk = jacobian_rank(model, *alpha);
    report.ranks.push_back(rk);
    report.max_rank = std::max(report.max_rank, rk);
    ++report.valid_samples;
  }
  if (report.valid_samples == 0)
    throw Error("generic_rank: no valid sample found");
  return report;
}

bool kernel_membership(const Vec& a, const Vec& b, const Vec& s4_coords) {
  if (a.size() != 6 || b.size() != 6) throw Error("vectors must lie in s^5");
  if (s4_coords.size() != 5) throw Error("form needs 5 coordinates in the s^4 basis");
  Vec w = wedge_coordinates(a, b);
  bool nonzero = false;
  for (const auto& c : w)
    if (c != 0) nonzero = true;
  if (!nonzero) throw Error("degenerate two-plane");
  Mat s4 = s4_basis();
  // Assemble the form as a full antisymmetric matrix.
  Mat phi(6, Vec(6, Rat(0)));
  size_t idx = 0;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j) {
      Rat c(0);
      for (unsigned r = 0; r < 5; ++r) c += s4_coords[r] * s4[r][idx];
      phi[i][j] = c;
      phi[j][i] = -c;
      ++idx;
    }
  auto contracts_to_zero = [&](const Vec& v) {
    for (unsigned j = 0; j < 6; ++j) {
      Rat acc(0);
      for (unsigned i = 0; i < 6; ++i) acc += v[i] * phi[i][j];
      if (acc != 0) return false;
    }
    return true;
  };
  return contracts_to_zero(a) && contracts_to_zero(b);
}

std::vector<FixedPoint> fixed_point_weights(const PlueckerModel& model) {
  struct Spec {
    const char* name;
    unsigned i, j;      // wedge factors e_i ^ e_j
    unsigned alpha;     // 1-based alpha coordinate carrying the point
  };
  const Spec specs[] = {
      {"x4y^x5", 2, 1, 1},
      {"x3y2^x5", 3, 1, 2},
      {"y5^x2y3", 6, 4, 9},
      {"y5^xy4", 6, 5, 10},
  };
  std::vector<FixedPoint> out;
  for (const auto& s : specs) {
    FixedPoint fp;
    fp.name = s.name;
    fp.alpha = Vec(kAlphaCount, Rat(0));
    fp.alpha[s.alpha - 1] = 1;
    fp.cstar_weight = generator_weight(s.i) + generator_weight(s.j);
    fp.jacobian_rank = jacobian_rank(model, fp.alpha);
    out.push_back(std::move(fp));
  }
  return out;
}

Quadric lowering_derivation(const Quadric& g) {
  // (Y alpha)_j as one-term linear forms: the lowering chain
  // v1 ->4 v2 ->1 v3 ->6 v4 ->1 v5 ->20 v7 ->3 v8 ->14 v9 ->2 v10, Yv6 = 0.
  struct Term {
    unsigned target;  // 1-based alpha index receiving the flow
    unsigned source;
    long factor;
  };
  const Term chain[] = {{2, 1, 4}, {3, 2, 1}, {4, 3, 6}, {5, 4, 1},
                        {7, 5, 20}, {8, 7, 3}, {9, 8, 14}, {10, 9, 2}};
  Quadric out;
  for (unsigned i = 0; i < kAlphaCount; ++i)
    for (unsigned j = i; j < kAlphaCount; ++j) {
      const Rat& c = g.coeff[i][j];
      if (c == 0) continue;
      // d/dalpha_i and d/dalpha_j flows.
      for (const auto& t : chain) {
        if (t.target - 1 == i) {
          unsigned a = std::min(t.source - 1, j), b = std::max(t.source - 1, j);
          out.coeff[a][b] += c * Rat(t.factor);
        }
        if (t.target - 1 == j) {
          unsigned a = std::min(i, t.source - 1), b = std::max(i, t.source - 1);
          out.coeff[a][b] += c * Rat(t.factor);
        }
      }
    }
  return out;
}

}  // namespace zstab
