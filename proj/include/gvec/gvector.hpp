#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gvec/homological.hpp"

namespace gvec {

/// "General element" semantics: every quantity is a minimum or a modal vote
/// over `samples` uniformly random presentations. The prime is the
/// algebra's; cross-prime runs use additional primes.
struct SampleConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 7;
  std::size_t fittingRounds = 12;
  std::size_t crossPrimes = 2;  ///< total number of primes used by decompositions

  void validate() const {
    if (samples == 0) throw std::invalid_argument("samples must be at least 1");
    if (fittingRounds == 0) throw std::invalid_argument("fittingRounds must be at least 1");
    if (crossPrimes == 0) throw std::invalid_argument("crossPrimes must be at least 1");
  }
};

inline constexpr std::uint64_t kFallbackPrimes[] = {998244353ULL, 1000000009ULL, 2147483647ULL};

/// Stream tags keep independent sampling purposes apart.
enum class Stream : std::uint64_t { First = 1, Second = 2, Fitting = 3, Dimension = 4, Module = 5 };

inline std::uint64_t hashOf(const GVector& g) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ g.size();
  for (auto x : g.c) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

struct Split {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
};

inline Split split(const GVector& g) {
  Split s{std::vector<std::size_t>(g.size(), 0), std::vector<std::size_t>(g.size(), 0)};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > 0) s.plus[i] = static_cast<std::size_t>(g[i]);
    if (g[i] < 0) s.minus[i] = static_cast<std::size_t>(-g[i]);
  }
  return s;
}

namespace detail {

inline std::vector<int> expand(const std::vector<std::size_t>& mult) {
  std::vector<int> v;
  for (std::size_t i = 0; i < mult.size(); ++i) v.insert(v.end(), mult[i], static_cast<int>(i));
  return v;
}

inline void checkLength(const BoundQuiverAlgebra& alg, const GVector& g) {
  if (g.size() != static_cast<std::size_t>(alg.vertexCount()))
    throw std::invalid_argument("g-vector " + g.str() + " has length " + std::to_string(g.size()) + ", expected " +
                                std::to_string(alg.vertexCount()));
}

}  // namespace detail

/// One general presentation P^{g-} -> P^{g+} per sample, uniform over the
/// hom-basis coordinates.
inline std::vector<Presentation> sampleGeneral(const BoundQuiverAlgebra& alg, const GVector& g,
                                               const SampleConfig& cfg, Stream stream = Stream::First) {
  cfg.validate();
  detail::checkLength(alg, g);
  const Split s = split(g);
  const auto src = detail::expand(s.minus), tgt = detail::expand(s.plus);
  std::vector<Presentation> out;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    Rng rng(mixSeed(cfg.seed, static_cast<std::uint64_t>(stream), k, hashOf(g), alg.field().p()));
    out.emplace_back(ProjMap::random(alg, src, tgt, rng));
  }
  return out;
}

struct EInvariant {
  std::size_t value = 0;  ///< sampled minimum; an upper bound for e(g, h)
  std::size_t witnessG = 0, witnessH = 0;
};

inline EInvariant eInvariant(const std::vector<Presentation>& as, const std::vector<Presentation>& bs) {
  EInvariant best{SIZE_MAX, 0, 0};
  for (std::size_t i = 0; i < as.size() && best.value; ++i)
    for (std::size_t j = 0; j < bs.size() && best.value; ++j) {
      const std::size_t e = homotopyHomDim(as[i], bs[j]);
      if (e < best.value) best = {e, i, j};
    }
  return best;
}

/// e(g, h) as the minimum over s x s sampled pairs.
inline EInvariant eInvariant(const BoundQuiverAlgebra& alg, const GVector& g, const GVector& h,
                             const SampleConfig& cfg) {
  if (isPositive(g) || isNegative(h)) return {0, 0, 0};
  return eInvariant(sampleGeneral(alg, g, cfg, Stream::First), sampleGeneral(alg, h, cfg, Stream::Second));
}

struct DirectSumVerdict {
  bool value = false;
  std::size_t eGH = 0, eHG = 0;
  /// a sample pair (a, b) with e(a, b) = 0 = e(b, a), when one was seen
  std::optional<std::pair<Presentation, Presentation>> witness;
};

inline DirectSumVerdict isDirectSum(const BoundQuiverAlgebra& alg, const GVector& g, const GVector& h,
                                   const SampleConfig& cfg) {
  const auto as = sampleGeneral(alg, g, cfg, Stream::First);
  const auto bs = sampleGeneral(alg, h, cfg, Stream::Second);
  DirectSumVerdict v{false, SIZE_MAX, SIZE_MAX, std::nullopt};
  const bool gh0 = isPositive(g) || isNegative(h), hg0 = isPositive(h) || isNegative(g);
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j) {
      const std::size_t e1 = gh0 ? 0 : homotopyHomDim(as[i], bs[j]);
      const std::size_t e2 = hg0 ? 0 : homotopyHomDim(bs[j], as[i]);
      v.eGH = std::min(v.eGH, e1);
      v.eHG = std::min(v.eHG, e2);
      if (e1 == 0 && e2 == 0 && !v.witness) v.witness = std::make_pair(as[i], bs[j]);
      if (v.witness) {
        v.eGH = v.eHG = 0;
        v.value = true;
        return v;
      }
    }
  v.value = v.eGH == 0 && v.eHG == 0;
  return v;
}

/// 2g = g (+) g, with the two copies sampled from independent streams.
inline bool isTame(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  if (isPositive(g) || isNegative(g)) return true;
  return isDirectSum(alg, g, g, cfg).value;
}

struct DecompositionSummand {
  GVector g;
  std::size_t multiplicity = 1;
  bool indecomposable = true;  ///< certified by Fitting splitting (Monte-Carlo)
  bool tame = false;
};

struct GenericDecompositionReport {
  GVector input;
  std::vector<DecompositionSummand> summands;  ///< sorted by g-vector
  double agreementRatio = 0;
  std::size_t votes = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> primes;
  SampleConfig config;
  bool lowConfidence = false;
  bool zeroSummandSeen = false;  ///< a sample produced a summand with g-vector 0
  bool isoUndecided = false;     ///< summand grouping hit an undecided isomorphism test
  std::vector<std::vector<std::size_t>> eMatrix;  ///< e(g_i, g_j) over distinct summands
  bool coherent = true;  ///< pairwise e vanishes, and repeated summands are tame

  std::size_t summandCount() const {
    std::size_t n = 0;
    for (const auto& s : summands) n += s.multiplicity;
    return n;
  }
};

inline constexpr double kLowConfidenceThreshold = 0.6;

namespace detail {

using DecompositionKey = std::vector<std::pair<GVector, std::size_t>>;

inline std::vector<std::uint64_t> crossPrimeList(const BoundQuiverAlgebra& alg, std::size_t count) {
  std::vector<std::uint64_t> ps{alg.field().p()};
  for (auto q : kFallbackPrimes)
    if (ps.size() < count && q != ps.front()) ps.push_back(q);
  return ps;
}

}  // namespace detail

/// Modal decomposition of a general presentation of g over samples and primes.
/// Ties go to the decomposition with more summands, then the smaller key.
inline GenericDecompositionReport genericDecomposition(const BoundQuiverAlgebra& alg, const GVector& g,
                                                       const SampleConfig& cfg) {
  cfg.validate();
  detail::checkLength(alg, g);
  GenericDecompositionReport rep;
  rep.input = g;
  rep.config = cfg;
  rep.primes = detail::crossPrimeList(alg, cfg.crossPrimes);
  std::map<detail::DecompositionKey, std::size_t> votes;
  for (std::uint64_t p : rep.primes) {
    const BoundQuiverAlgebra a = p == alg.field().p() ? alg : alg.withPrime(p);
    const auto samples = sampleGeneral(a, g, cfg, Stream::First);
    for (std::size_t k = 0; k < samples.size(); ++k) {
      Rng rng(mixSeed(cfg.seed, static_cast<std::uint64_t>(Stream::Fitting), k, hashOf(g), p));
      std::map<GVector, std::size_t> counts;
      for (const auto& piece : fittingSplit(samples[k], rng, cfg.fittingRounds)) {
        // a piece with residue degree k is k conjugate summands over the closure
        const auto deg = static_cast<std::int64_t>(piece.residueDegree);
        GVector h = gVectorOf(piece.presentation);
        for (auto& x : h.c) {
          if (x % deg) throw std::logic_error("genericDecomposition: residue degree does not divide " + h.str());
          x /= deg;
        }
        if (h.isZero()) rep.zeroSummandSeen = true;
        rep.isoUndecided = rep.isoUndecided || piece.isoUndecided;
        counts[h] += piece.multiplicity * piece.residueDegree;
      }
      GVector total(g.size());
      for (const auto& [h, m] : counts) total += static_cast<std::int64_t>(m) * h;
      if (total != g) throw std::logic_error("genericDecomposition: summands do not add up to " + g.str());
      ++votes[detail::DecompositionKey(counts.begin(), counts.end())];
      ++rep.trials;
    }
  }
  auto size = [](const detail::DecompositionKey& k) {
    std::size_t n = 0;
    for (const auto& e : k) n += e.second;
    return n;
  };
  const detail::DecompositionKey* best = nullptr;
  for (const auto& [key, count] : votes) {
    if (!best || count > rep.votes || (count == rep.votes && size(key) > size(*best))) {
      best = &key;
      rep.votes = count;
    }
  }
  rep.agreementRatio = static_cast<double>(rep.votes) / static_cast<double>(rep.trials);
  rep.lowConfidence = rep.agreementRatio < kLowConfidenceThreshold;
  for (const auto& [h, m] : *best) rep.summands.push_back({h, m, true, isTame(alg, h, cfg)});

  const std::size_t d = rep.summands.size();
  rep.eMatrix.assign(d, std::vector<std::size_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) {
        if (rep.summands[i].multiplicity >= 2 && !rep.summands[i].tame) rep.coherent = false;
        rep.eMatrix[i][j] = rep.summands[i].tame ? 0 : eInvariant(alg, rep.summands[i].g, rep.summands[j].g, cfg).value;
        continue;
      }
      rep.eMatrix[i][j] = eInvariant(alg, rep.summands[i].g, rep.summands[j].g, cfg).value;
      if (rep.eMatrix[i][j] != 0) rep.coherent = false;
    }
  return rep;
}

struct IndResult {
  std::vector<GVector> summands;  ///< distinct, sorted
  bool lowConfidence = false;
};

inline IndResult indSummands(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  const auto rep = genericDecomposition(alg, g, cfg);
  IndResult r{{}, rep.lowConfidence};
  for (const auto& s : rep.summands) r.summands.push_back(s.g);
  return r;
}

struct IndCount {
  std::size_t count = 0;
  bool exceedsRank = false;  ///< more than n summands would contradict linear independence
  bool lowConfidence = false;
};

inline IndCount countInd(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  const auto r = indSummands(alg, g, cfg);
  return {r.summands.size(), r.summands.size() > static_cast<std::size_t>(alg.vertexCount()), r.lowConfidence};
}

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t integerRank(const std::vector<GVector>& vs) {
  if (vs.empty()) return 0;
  const std::size_t cols = vs.front().size();
  std::vector<std::vector<__int128>> m;
  for (const auto& v : vs) {
    if (v.size() != cols) throw std::invalid_argument("integerRank: length mismatch");
    m.emplace_back(v.c.begin(), v.c.end());
  }
  std::size_t r = 0;
  __int128 prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline bool linearIndependence(const std::vector<GVector>& vs) { return integerRank(vs) == vs.size(); }

struct BoundedSearch {
  bool found = false;
  std::size_t witness = 0;  ///< the t that was found, when found
  std::size_t tMax = 0;     ///< searched range 1..tMax when not found
};

/// Searches t = 1..tMax for h + th = h (+) th.
inline BoundedSearch inDSelf(const BoundQuiverAlgebra& alg, const GVector& h, std::size_t tMax,
                             const SampleConfig& cfg) {
  if (tMax == 0) throw std::invalid_argument("tMax must be at least 1");
  for (std::size_t t = 1; t <= tMax; ++t)
    if (isDirectSum(alg, h, static_cast<std::int64_t>(t) * h, cfg).value) return {true, t, tMax};
  return {false, 0, tMax};
}

enum class ConditionStatus { VacuousPass, ExhaustedPass, Fail };

inline const char* toString(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::VacuousPass: return "pass";
    case ConditionStatus::ExhaustedPass: return "exhausted";
    case ConditionStatus::Fail: return "fail";
  }
  return "?";
}

struct ConditionVerdict {
  ConditionStatus status = ConditionStatus::VacuousPass;
  GVector witnessH;           ///< the wild summand that fails, when failed
  std::size_t witnessT = 0;
};

struct ConditionsReport {
  std::vector<GVector> wildSummands;
  ConditionVerdict nonDecreasing, regularity, ray;
  std::size_t tMax = 0;
  bool chainConsistent = true;
  bool lowConfidence = false;
};

/// Bounded probes of the ray, regularity and non-decreasing conditions for
/// each wild h in ind(g). Only the implications that survive truncation are
/// checked: h in D_h at t forces (1+t)h decomposable (ray fails at 1+t),
/// and a tame th forces 2th = th (+) th (ray fails at 2t).
inline ConditionsReport checkConditions(const BoundQuiverAlgebra& alg, const GVector& g, std::size_t tMax,
                                        const SampleConfig& cfg) {
  if (tMax == 0) throw std::invalid_argument("tMax must be at least 1");
  ConditionsReport rep;
  rep.tMax = tMax;
  const auto ind = indSummands(alg, g, cfg);
  rep.lowConfidence = ind.lowConfidence;
  for (const auto& h : ind.summands)
    if (!isTame(alg, h, cfg)) rep.wildSummands.push_back(h);
  if (rep.wildSummands.empty()) return rep;
  rep.nonDecreasing.status = rep.regularity.status = rep.ray.status = ConditionStatus::ExhaustedPass;
  auto fail = [](ConditionVerdict& v, const GVector& h, std::size_t t) {
    if (v.status != ConditionStatus::Fail) v = {ConditionStatus::Fail, h, t};
  };
  for (const auto& h : rep.wildSummands) {
    std::optional<std::size_t> rayFail, regFail;
    for (std::size_t t = 1; t <= tMax; ++t) {
      const GVector th = static_cast<std::int64_t>(t) * h;
      const auto dec = genericDecomposition(alg, th, cfg);
      rep.lowConfidence = rep.lowConfidence || dec.lowConfidence;
      if (dec.summandCount() != 1 && !rayFail) rayFail = t;
      if (isTame(alg, th, cfg) && !regFail) regFail = t;
    }
    const auto dself = inDSelf(alg, h, tMax, cfg);
    if (rayFail) fail(rep.ray, h, *rayFail);
    if (regFail) fail(rep.regularity, h, *regFail);
    if (dself.found) fail(rep.nonDecreasing, h, dself.witness);
    if (dself.found && dself.witness + 1 <= tMax && !rayFail) rep.chainConsistent = false;
    if (regFail && 2 * *regFail <= tMax && !rayFail) rep.chainConsistent = false;
  }
  return rep;
}

/// |ind(t g)| for t = 1..tMax; a drop from t to a multiple signals the
/// situation the non-decreasing condition rules out.
inline std::vector<std::size_t> indCountSequence(const BoundQuiverAlgebra& alg, const GVector& g, std::size_t tMax,
                                                 const SampleConfig& cfg) {
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t <= tMax; ++t)
    out.push_back(indSummands(alg, static_cast<std::int64_t>(t) * g, cfg).summands.size());
  return out;
}

}  // namespace gvec
