#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zstab {

using Rat = mpq_class;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p/q", with optional whitespace.
Rat parse_rat(const std::string& s);

std::string to_string(const Rat& r);

int sign(const Rat& r);

Rat pow_rat(const Rat& base, unsigned exp);

Rat factorial(unsigned n);

// binomial(n, k) for integer n (possibly negative via upper formula not needed
// here), k >= 0.
Rat binomial(long n, unsigned k);

// (1/2 choose k), the series coefficients of sqrt(1+x).
Rat half_binomial(unsigned k);

// Exact complex numbers with rational real/imaginary parts.
struct Gaussian {
  Rat re;
  Rat im;

  Gaussian() : re(0), im(0) {}
  Gaussian(Rat r) : re(std::move(r)), im(0) {}
  Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gaussian conj() const { return Gaussian(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  Gaussian operator-() const { return Gaussian(-re, -im); }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    if (b.is_zero()) throw Error("division by zero Gaussian rational");
    Rat n = b.norm2();
    Gaussian num = a * b.conj();
    return Gaussian(num.re / n, num.im / n);
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) {
    return !(a == b);
  }
};

inline Gaussian gi() { return Gaussian(Rat(0), Rat(1)); }

// i^k for the stability-vector presets.
Gaussian ipow(long k);

// Accepts "a", "bi", "a+bi", "a-b/2i", "i", "-i".
Gaussian parse_gaussian(const std::string& s);

std::string to_string(const Gaussian& z);

}  // namespace zstab
