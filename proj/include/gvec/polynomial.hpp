#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gvec/matrix.hpp"

namespace gvec {

/// Dense polynomial over F_p, coefficients from degree 0 up.
using Poly = std::vector<Scalar>;

namespace poly {

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

inline Poly add(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly sub(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly monic(const PrimeField& f, Poly a) {
  trim(a);
  if (a.empty()) return a;
  const Scalar inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

inline Poly derivative(const PrimeField& f, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(f.mul(a[i], f.reduce(static_cast<std::int64_t>(i % f.p()))));
  trim(d);
  return d;
}

/// Quotient and remainder of a by a non-zero b.
inline std::pair<Poly, Poly> divmod(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  const Scalar lead = f.inv(b.back());
  const std::size_t shift = b.size() - 1;
  Poly q(a.size() - shift, 0);
  for (std::size_t i = a.size(); i-- > shift;) {
    const Scalar c = f.mul(a[i], lead);
    q[i - shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - shift + j] = f.sub(a[i - shift + j], f.mul(c, b[j]));
  }
  trim(q);
  a.resize(shift);
  trim(a);
  return {q, a};
}

inline Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline Poly mulmod(const PrimeField& f, const Poly& a, const Poly& b, const Poly& m) {
  return divmod(f, mul(f, a, b), m).second;
}

inline Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& m) {
  Poly r = divmod(f, Poly{1}, m).second;
  base = divmod(f, std::move(base), m).second;
  while (e) {
    if (e & 1) r = mulmod(f, r, base, m);
    base = mulmod(f, base, base, m);
    e >>= 1;
  }
  return r;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

inline Poly lcm(const PrimeField& f, const Poly& a, const Poly& b) {
  return monic(f, divmod(f, mul(f, a, b), gcd(f, a, b)).first);
}

inline Scalar eval(const PrimeField& f, const Poly& a, Scalar x) {
  Scalar r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

/// a / gcd(a, a'); a itself when a' = 0 (a p-th power, only for tiny p).
inline Poly squarefreePart(const PrimeField& f, const Poly& a) {
  const Poly d = derivative(f, a);
  if (d.empty()) return monic(f, a);
  return monic(f, divmod(f, a, gcd(f, a, d)).first);
}

namespace detail {

inline Poly randomBelow(const PrimeField& f, std::size_t n, Rng& rng) {
  Poly r(n);
  for (auto& c : r) c = uniform(f, rng);
  trim(r);
  return r;
}

/// Splits a product of distinct monic irreducibles of degree d.
inline void equalDegree(const PrimeField& f, const Poly& g, long d, Rng& rng, std::vector<Poly>& out) {
  if (degree(g) <= d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    const Poly r = randomBelow(f, g.size() - 1, rng);
    if (degree(r) < 1) continue;
    Poly h;
    if (f.p() == 2) {
      // trace r + r^2 + ... + r^(2^(d-1))
      Poly t = r, acc = r;
      for (long i = 1; i < d; ++i) {
        t = mulmod(f, t, t, g);
        acc = add(f, acc, t);
      }
      h = gcd(f, acc, g);
    } else {
      // r^((p^d - 1) / 2) = (r^(1 + p + ... + p^(d-1)))^((p - 1) / 2)
      Poly t = r, norm = r;
      for (long i = 1; i < d; ++i) {
        t = powmod(f, t, f.p(), g);
        norm = mulmod(f, norm, t, g);
      }
      h = gcd(f, sub(f, powmod(f, norm, (f.p() - 1) / 2, g), Poly{1}), g);
    }
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equalDegree(f, h, d, rng, out);
      equalDegree(f, divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// Monic irreducible factors of a squarefree polynomial, sorted.
inline std::vector<Poly> factorSquarefree(const PrimeField& f, Poly s, Rng& rng) {
  s = monic(f, std::move(s));
  std::vector<Poly> out;
  const Poly x{0, 1};
  Poly h = x;
  for (long d = 1; 2 * d <= degree(s); ++d) {
    h = powmod(f, h, f.p(), s);
    Poly g = gcd(f, sub(f, h, x), s);
    if (degree(g) > 0) {
      detail::equalDegree(f, g, d, rng, out);
      s = divmod(f, s, g).first;
      h = divmod(f, h, s).second;
    }
  }
  if (degree(s) > 0) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct roots in F_p, sorted.
inline std::vector<Scalar> roots(const PrimeField& f, const Poly& a, Rng& rng) {
  std::vector<Scalar> out;
  if (degree(a) <= 0) return out;
  for (const auto& q : factorSquarefree(f, squarefreePart(f, a), rng))
    if (degree(q) == 1) out.push_back(f.neg(q[0]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poly

/// Minimal polynomial of the vector w under the square matrix m (monic).
inline Poly krylovPolynomial(const Matrix& m, const Matrix& w) {
  const PrimeField& f = m.field();
  if (w.isZero()) return Poly{1};
  Matrix k = w;
  Matrix cur = w;
  for (std::size_t d = 1; d <= m.rows() + 1; ++d) {
    cur = m * cur;
    if (auto c = solve(k, cur)) {
      Poly p(d + 1, 0);
      for (std::size_t i = 0; i < d; ++i) p[i] = f.neg((*c)(i, 0));
      p[d] = 1;
      return p;
    }
    k = hstack(k, cur);
  }
  throw std::logic_error("krylovPolynomial: no dependency found");
}

/// h(m) by Horner's rule.
inline Matrix evaluate(const Poly& h, const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix r(f, m.rows(), m.cols());
  const Matrix id = Matrix::identity(f, m.rows());
  for (std::size_t i = h.size(); i-- > 0;) r = r * m + id.scaled(h[i]);
  return r;
}

}  // namespace gvec
