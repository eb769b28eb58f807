#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvec/gvector.hpp"

namespace gvec {

class ComponentError : public std::runtime_error {
 public:
  enum class Kind { NegativeSummandPresent, NotGenericallyInjective };
  ComponentError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline DimensionVector dimensionVector(const Representation& m) {
  DimensionVector d(m.dims().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<std::int64_t>(m.dims()[i]);
  return d;
}

struct DimensionEstimate {
  DimensionVector d;
  std::size_t kept = 0;       ///< samples of maximal rank
  bool lowConfidence = false; ///< maximal-rank samples disagree
};

/// Dimension vector of Coker a for a general a: only samples of maximal
/// total rank are kept, and their modal cokernel dimension is returned.
inline DimensionEstimate dOfG(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  std::map<DimensionVector, std::size_t> votes;
  std::size_t bestRank = 0;
  std::vector<std::pair<std::size_t, DimensionVector>> seen;
  for (const auto& a : sampleGeneral(alg, g, cfg, Stream::Dimension)) {
    const ModuleMorphism r = realize(a.map());
    DimensionVector d(g.size());
    std::size_t total = 0;
    for (std::size_t v = 0; v < d.size(); ++v) {
      const std::size_t rk = rank(r.maps[v]);
      total += rk;
      d[v] = static_cast<std::int64_t>(r.target.dims()[v] - rk);
    }
    bestRank = std::max(bestRank, total);
    seen.emplace_back(total, std::move(d));
  }
  for (const auto& [rk, d] : seen)
    if (rk == bestRank) ++votes[d];
  DimensionEstimate out;
  for (const auto& [d, c] : votes)
    if (c > out.kept) {
      out.d = d;
      out.kept = c;
    }
  out.lowConfidence = votes.size() > 1;
  return out;
}

/// dim Z_g = glDim(d(g)) - <g, d(g)>.
inline std::int64_t dimZ(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  const DimensionVector d = dOfG(alg, g, cfg).d;
  return glDim(d) - pairing(g, d);
}

namespace detail {

inline bool hasNegativeSummand(const GenericDecompositionReport& rep) {
  for (const auto& s : rep.summands)
    if (isNegative(s.g) && !s.g.isZero()) return true;
  return false;
}

/// Sum of the summands that are not negative.
inline GVector nonNegativePart(const GenericDecompositionReport& rep) {
  GVector out(rep.input.size());
  for (const auto& s : rep.summands)
    if (!isNegative(s.g)) out += static_cast<std::int64_t>(s.multiplicity) * s.g;
  return out;
}

inline std::vector<Representation> cokernels(const std::vector<Presentation>& ps) {
  std::vector<Representation> out;
  for (const auto& p : ps) out.push_back(cokernel(p));
  return out;
}

}  // namespace detail

/// Sampled min hom(Z_g, Z_h); requires g and h to have no negative summand.
inline std::size_t minHom(const BoundQuiverAlgebra& alg, const GVector& g, const GVector& h, const SampleConfig& cfg) {
  for (const GVector* x : {&g, &h})
    if (detail::hasNegativeSummand(genericDecomposition(alg, *x, cfg)))
      throw ComponentError(ComponentError::Kind::NegativeSummandPresent,
                           x->str() + " has a negative direct summand");
  const auto ms = detail::cokernels(sampleGeneral(alg, g, cfg, Stream::First));
  const auto ns = detail::cokernels(sampleGeneral(alg, h, cfg, Stream::Second));
  std::size_t best = SIZE_MAX;
  for (const auto& m : ms)
    for (const auto& n : ns) best = std::min(best, homDim(m, n));
  return best;
}

struct WildnessVerdict {
  bool wild = false;
  GVector stripped;           ///< g without its negative summands
  std::size_t minHomSelf = 0;
  std::int64_t pairing = 0;   ///< <g', d(g')>
  bool agreesWithIsTame = true;
};

/// g (negatives stripped) is wild iff min hom(Z_g, Z_g) > <g, d(g)>.
inline WildnessVerdict wildnessVerdict(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  WildnessVerdict v;
  v.stripped = detail::nonNegativePart(genericDecomposition(alg, g, cfg));
  if (v.stripped.isZero()) return v;
  v.minHomSelf = minHom(alg, v.stripped, v.stripped, cfg);
  v.pairing = pairing(v.stripped, dOfG(alg, v.stripped, cfg).d);
  v.wild = static_cast<std::int64_t>(v.minHomSelf) > v.pairing;
  v.agreesWithIsTame = v.wild != isTame(alg, v.stripped, cfg);
  return v;
}

/// sum_{i,j} g_i g_j dim e_j Lambda e_i, valid when a general element of
/// Hom(P^{g-}, P^{g+}) is injective.
inline std::int64_t closedFormPairing(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  bool injective = false;
  for (const auto& a : sampleGeneral(alg, g, cfg, Stream::Dimension)) {
    const ModuleMorphism r = realize(a.map());
    injective = true;
    for (const auto& m : r.maps)
      if (rank(m) != m.cols()) injective = false;
    if (injective) break;
  }
  if (!injective)
    throw ComponentError(ComponentError::Kind::NotGenericallyInjective,
                         "no sampled presentation of " + g.str() + " is injective");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      s += g[i] * g[j] * static_cast<std::int64_t>(alg.cartan(static_cast<int>(j), static_cast<int>(i)));
  return s;
}

struct TauReducedCheck {
  bool value = true;  ///< all off-diagonal e(g_i, g_j) vanish
  std::vector<std::vector<std::size_t>> eMatrix;
  /// tauHom[i][j] = min hom(Z_i, tau Z_j); e(g_i, g_j) = tauHom[j][i]
  std::vector<std::vector<std::size_t>> tauHom;
  bool dualPathAgrees = true;
};

inline TauReducedCheck tauReducedSumCheck(const BoundQuiverAlgebra& alg, const std::vector<GVector>& gs,
                                          const SampleConfig& cfg) {
  const std::size_t n = gs.size();
  TauReducedCheck out;
  out.eMatrix.assign(n, std::vector<std::size_t>(n, 0));
  out.tauHom.assign(n, std::vector<std::size_t>(n, 0));
  std::vector<std::vector<Presentation>> first, second;
  std::vector<std::vector<Representation>> mods, taus;
  for (const auto& g : gs) {
    first.push_back(sampleGeneral(alg, g, cfg, Stream::First));
    second.push_back(sampleGeneral(alg, g, cfg, Stream::Second));
    mods.push_back(detail::cokernels(second.back()));
    std::vector<Representation> t;
    for (const auto& m : detail::cokernels(first.back())) t.push_back(tau(m));
    taus.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.eMatrix[i][j] = isPositive(gs[i]) || isNegative(gs[j]) ? 0 : eInvariant(first[i], second[j]).value;
      std::size_t best = SIZE_MAX;
      for (const auto& m : mods[i])
        for (const auto& t : taus[j]) best = std::min(best, homDim(m, t));
      out.tauHom[i][j] = best;
      if (i != j && out.eMatrix[i][j] != 0) out.value = false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.eMatrix[i][j] != out.tauHom[j][i]) out.dualPathAgrees = false;
  return out;
}

struct ComponentReport {
  GVector g;
  DimensionVector dOfG;
  std::int64_t dimZ = 0;
  std::size_t componentCount = 0;  ///< |Z_g|: distinct summands that are not negative
  std::size_t indCount = 0;        ///< |ind(g)|
  bool tame = false;
  std::int64_t pairing = 0;        ///< <g, d(g)>
  std::size_t minHomSelf = 0;      ///< on g without negative summands
  std::size_t eSelf = 0;
  GVector negativePart;            ///< stripped negative summands
  bool dAdditive = true;
  bool lowConfidence = false;
  std::vector<DecompositionSummand> summands;
};

inline ComponentReport componentReport(const BoundQuiverAlgebra& alg, const GVector& g, const SampleConfig& cfg) {
  ComponentReport r;
  r.g = g;
  const auto dec = genericDecomposition(alg, g, cfg);
  r.summands = dec.summands;
  r.indCount = dec.summands.size();
  const auto de = dOfG(alg, g, cfg);
  r.dOfG = de.d;
  r.lowConfidence = dec.lowConfidence || de.lowConfidence;
  r.pairing = pairing(g, r.dOfG);
  r.dimZ = glDim(r.dOfG) - r.pairing;
  r.tame = isTame(alg, g, cfg);
  r.eSelf = eInvariant(alg, g, g, cfg).value;
  DimensionVector sum(g.size());
  r.negativePart = GVector(g.size());
  for (const auto& s : dec.summands) {
    if (isNegative(s.g)) {
      r.negativePart += static_cast<std::int64_t>(s.multiplicity) * s.g;
      continue;
    }
    ++r.componentCount;
    sum += static_cast<std::int64_t>(s.multiplicity) * dOfG(alg, s.g, cfg).d;
  }
  r.dAdditive = sum == r.dOfG;
  const GVector stripped = g - r.negativePart;
  if (!stripped.isZero()) r.minHomSelf = minHom(alg, stripped, stripped, cfg);
  return r;
}

}  // namespace gvec
