#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zstab/rational.hpp"

namespace zstab {

// Dense univariate polynomial over the rationals, lowest degree first.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rat v) { return Poly({std::move(v)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  // Antiderivative with zero constant term.
  Poly integral() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rat& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Remainder of this / d (d nonzero).
  Poly rem(const Poly& d) const;
  static Poly gcd(Poly a, Poly b);
  Poly square_free_part() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Exact Lagrange interpolation through distinct sample points.
Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Number of distinct real roots of p in (lo, hi], via Sturm chains.
struct SturmChain {
  explicit SturmChain(const Poly& p);
  int sign_changes_at(const Rat& x) const;
  int count_roots(const Rat& lo, const Rat& hi) const;
  std::vector<Poly> chain;
};

struct IsolatedRoot {
  // Exact rational root when identified, otherwise an isolating open interval
  // (lo, hi) containing exactly one real root.
  std::optional<Rat> exact;
  Rat lo;
  Rat hi;
};

// Isolates all distinct real roots of p in [lo, hi]. Exact rational roots are
// recognized; irrational ones are refined to width <= tol.
std::vector<IsolatedRoot> isolate_roots(const Poly& p, const Rat& lo,
                                        const Rat& hi, const Rat& tol);

}  // namespace zstab
