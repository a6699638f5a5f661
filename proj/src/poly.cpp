#include "zstab/poly.hpp"

#include <algorithm>

namespace zstab {

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::integral() const {
  if (c_.empty()) return Poly();
  std::vector<Rat> d(c_.size() + 1);
  d[0] = 0;
  for (size_t i = 0; i < c_.size(); ++i)
    d[i + 1] = c_[i] / Rat(static_cast<long>(i) + 1);
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rat> d(c_);
  for (auto& v : d) v = -v;
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

Poly Poly::scaled(const Rat& s) const {
  std::vector<Rat> d(c_);
  for (auto& v : d) v *= s;
  return Poly(std::move(d));
}

Poly Poly::rem(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> r(c_);
  const auto& dc = d.c_;
  while (r.size() >= dc.size()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    Rat q = r.back() / dc.back();
    size_t off = r.size() - dc.size();
    for (size_t i = 0; i < dc.size(); ++i) r[off + i] -= q * dc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Rat(1) / a.leading());
  return a;
}

Poly Poly::square_free_part() const {
  if (degree() <= 0) return *this;
  Poly g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  // Exact division by the gcd.
  std::vector<Rat> q(c_.size() - g.coeffs().size() + 1, Rat(0));
  std::vector<Rat> r(c_);
  const auto& dc = g.coeffs();
  while (r.size() >= dc.size()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    Rat f = r.back() / dc.back();
    size_t off = r.size() - dc.size();
    q[off] = f;
    for (size_t i = 0; i < dc.size(); ++i) r[off + i] -= f * dc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(q));
}

Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  Poly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly basis({Rat(1)});
    Rat denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * Poly({-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis.scaled(points[i].second / denom);
  }
  return acc;
}

SturmChain::SturmChain(const Poly& p) {
  Poly f = p.square_free_part();
  chain.push_back(f);
  Poly d = f.derivative();
  if (!d.is_zero()) {
    chain.push_back(d);
    while (true) {
      const Poly& a = chain[chain.size() - 2];
      const Poly& b = chain.back();
      Poly r = a.rem(b);
      if (r.is_zero()) break;
      chain.push_back(-r);
    }
  }
}

int SturmChain::sign_changes_at(const Rat& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
  return sign_changes_at(lo) - sign_changes_at(hi);
}

namespace {

// A rational root of the primitive integer version of p inside (lo, hi], if
// one exists. Practical for the small wall polynomials that arise here.
std::optional<Rat> find_rational_root(const Poly& p, const Rat& lo,
                                      const Rat& hi) {
  // Clear denominators.
  mpz_class lcm(1);
  for (const auto& c : p.coeffs()) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  std::vector<mpz_class> ic;
  ic.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) ic.push_back(c.get_num() * (lcm / c.get_den()));
  while (!ic.empty() && ic.front() == 0) {
    // x = 0 is a root; handled by caller via direct evaluation. Strip it.
    ic.erase(ic.begin());
  }
  if (ic.size() < 2) return std::nullopt;
  mpz_class a0 = abs(ic.front());
  mpz_class an = abs(ic.back());
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
      if (d > 100000) break;  // candidate explosion guard
    }
    return ds;
  };
  for (const auto& pnum : divisors(a0)) {
    for (const auto& qden : divisors(an)) {
      for (int s : {1, -1}) {
        Rat cand(s * pnum, qden);
        cand.canonicalize();
        if (cand <= lo || cand > hi) continue;
        if (p.eval(cand) == 0) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& lo,
                                        const Rat& hi, const Rat& tol) {
  std::vector<IsolatedRoot> out;
  Poly f = p.square_free_part();
  if (f.degree() <= 0) return out;
  if (f.eval(lo) == 0) out.push_back({lo, lo, lo});
  SturmChain sturm(f);
  struct Seg {
    Rat a, b;
    int n;
  };
  std::vector<Seg> work{{lo, hi, sturm.count_roots(lo, hi)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      // Try to pin an exact rational root in (a, b].
      if (f.eval(s.b) == 0) {
        out.push_back({s.b, s.b, s.b});
        continue;
      }
      if (auto r = find_rational_root(f, s.a, s.b)) {
        out.push_back({*r, *r, *r});
        continue;
      }
      // Irrational: refine by bisection to the requested width.
      Rat a = s.a, b = s.b;
      while (b - a > tol) {
        Rat mid = (a + b) / 2;
        if (f.eval(mid) == 0) {
          out.push_back({mid, mid, mid});
          goto next;
        }
        if (sturm.count_roots(a, mid) == 1) b = mid;
        else a = mid;
      }
      out.push_back({std::nullopt, a, b});
    next:;
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    int left = sturm.count_roots(s.a, mid);
    work.push_back({s.a, mid, left});
    work.push_back({mid, s.b, s.n - left});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
    Rat xv = x.exact ? *x.exact : x.lo;
    Rat yv = y.exact ? *y.exact : y.lo;
    return xv < yv;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const IsolatedRoot& x, const IsolatedRoot& y) {
                          return x.exact && y.exact && *x.exact == *y.exact;
                        }),
            out.end());
  return out;
}

}  // namespace zstab
