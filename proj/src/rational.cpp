#include "zstab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace zstab {

Rat parse_rat(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty rational literal");
  try {
    Rat r(t);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal: '" + s + "'");
  }
}

std::string to_string(const Rat& r) { return r.get_str(); }

int sign(const Rat& r) { return sgn(r); }

Rat pow_rat(const Rat& base, unsigned exp) {
  Rat acc(1);
  Rat b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

Rat factorial(unsigned n) {
  Rat acc(1);
  for (unsigned i = 2; i <= n; ++i) acc *= Rat(static_cast<long>(i));
  return acc;
}

Rat binomial(long n, unsigned k) {
  Rat acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= Rat(n - static_cast<long>(i));
    acc /= Rat(static_cast<long>(i) + 1);
  }
  return acc;
}

Rat half_binomial(unsigned k) {
  Rat acc(1);
  Rat half(1, 2);
  for (unsigned i = 0; i < k; ++i) {
    acc *= (half - Rat(static_cast<long>(i)));
    acc /= Rat(static_cast<long>(i) + 1);
  }
  return acc;
}

Gaussian ipow(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return Gaussian(Rat(1));
    case 1: return Gaussian(Rat(0), Rat(1));
    case 2: return Gaussian(Rat(-1));
    default: return Gaussian(Rat(0), Rat(-1));
  }
}

Gaussian parse_gaussian(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error("empty gaussian literal");
  // Split into at most two signed terms.
  std::vector<std::string> terms;
  size_t start = 0;
  for (size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '/' && t[i - 1] != '+' &&
        t[i - 1] != '-') {
      terms.push_back(t.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(t.substr(start));
  Gaussian z;
  for (auto& term : terms) {
    if (term.empty()) throw Error("bad gaussian literal: '" + s + "'");
    bool imag = term.back() == 'i' || term.back() == 'I';
    std::string body = imag ? term.substr(0, term.size() - 1) : term;
    if (imag) {
      if (!body.empty() && body.back() == '*') body.pop_back();
      if (body.empty() || body == "+") body = "1";
      else if (body == "-") body = "-1";
    }
    Rat v = parse_rat(body);
    if (imag) z.im += v;
    else z.re += v;
  }
  return z;
}

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im_part = to_string(z.im) + "i";
  if (z.im == 1) im_part = "i";
  if (z.im == -1) im_part = "-i";
  if (z.re == 0) return im_part;
  if (sgn(z.im) > 0) return to_string(z.re) + "+" + im_part;
  return to_string(z.re) + im_part;
}

}  // namespace zstab
