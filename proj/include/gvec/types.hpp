#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvec {

namespace detail {

template <typename Tag>
struct IntVector {
  std::vector<std::int64_t> c;

  IntVector() = default;
  explicit IntVector(std::size_t n) : c(n, 0) {}
  explicit IntVector(std::vector<std::int64_t> v) : c(std::move(v)) {}
  IntVector(std::initializer_list<std::int64_t> v) : c(v) {}

  std::size_t size() const { return c.size(); }
  std::int64_t& operator[](std::size_t i) { return c[i]; }
  std::int64_t operator[](std::size_t i) const { return c[i]; }

  bool isZero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }

  IntVector& operator+=(const IntVector& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check(o);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(std::int64_t t, IntVector a) {
    for (auto& x : a.c) x *= t;
    return a;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }

 private:
  void check(const IntVector& o) const {
    if (o.c.size() != c.size()) throw std::invalid_argument("vector length mismatch");
  }
};

}  // namespace detail

struct GVectorTag {};
struct DimensionVectorTag {};

/// Element of K_0(proj Lambda) in the basis [P_(1)], ..., [P_(n)].
using GVector = detail::IntVector<GVectorTag>;

/// Element of K_0(mod Lambda) in the basis [S_(1)], ..., [S_(n)].
using DimensionVector = detail::IntVector<DimensionVectorTag>;

inline bool isPositive(const GVector& g) {
  for (auto x : g.c)
    if (x < 0) return false;
  return true;
}

inline bool isNegative(const GVector& g) {
  for (auto x : g.c)
    if (x > 0) return false;
  return true;
}

inline GVector unitGVector(std::size_t n, std::size_t i, std::int64_t sign = 1) {
  GVector g(n);
  g[i] = sign;
  return g;
}

/// <g, d> = sum g_i d_i: projectives paired against simples.
inline std::int64_t pairing(const GVector& g, const DimensionVector& d) {
  if (g.size() != d.size()) throw std::invalid_argument("pairing: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += g[i] * d[i];
  return s;
}

/// dim GL_d = sum d_i^2.
inline std::int64_t glDim(const DimensionVector& d) {
  std::int64_t s = 0;
  for (auto x : d.c) s += x * x;
  return s;
}

}  // namespace gvec
