#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace gvec {

using Scalar = std::uint64_t;

inline constexpr std::uint64_t kDefaultPrime = 1'000'000'007ULL;

namespace detail {

inline std::uint64_t mulmod128(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod128(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, b, m);
    b = mulmod128(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : bases) {
    std::uint64_t x = detail::powmod128(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Arithmetic in F_p. Residues are plain `Scalar`s in [0, p).
///
/// Products use a 64-bit multiply when p < 2^32 and a 128-bit one otherwise,
/// so any prime below 2^63 is supported.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 63) || !isPrime(p)) {
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
    }
  }

  std::uint64_t p() const { return p_; }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    if (p_ < (1ULL << 32)) return a * b % p_;
    return detail::mulmod128(a, b, p_);
  }
  Scalar pow(Scalar b, std::uint64_t e) const {
    Scalar r = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }
  Scalar reduce(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_ = kDefaultPrime;
};

using Rng = std::mt19937_64;

/// Uniform residue by rejection; std::uniform_int_distribution is not
/// portable across standard libraries and would break seed reproducibility.
inline Scalar uniform(const PrimeField& f, Rng& rng) {
  const std::uint64_t p = f.p();
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % p;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mixSeed(std::uint64_t seed) { return seed; }

/// Folds any number of integer tags into a seed; used to give every
/// sampling stream its own reproducible generator.
template <typename T, typename... Rest>
std::uint64_t mixSeed(std::uint64_t seed, T tag, Rest... rest) {
  return mixSeed(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(tag))), rest...);
}

}  // namespace gvec
