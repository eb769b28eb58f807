#pragma once

#include <cstddef>
#include <vector>

#include "gvec/presentation.hpp"

namespace gvec {

/// Elements of M whose classes form a basis of top M, grouped by vertex.
inline detail::Generators topGenerators(const Representation& m) {
  const auto rt = radicalAndTop(m);
  detail::Generators g;
  for (int i = 0; i < m.algebra().vertexCount(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Matrix& r = rt.radicalBasis[ui];
    Matrix aug = hstack(r, Matrix::identity(m.field(), m.dim(i)));
    for (std::size_t c : rref(aug).pivots)
      if (c >= r.cols()) {
        g.vertices.push_back(i);
        g.elements.push_back(aug.column(c));
      }
  }
  return g;
}

/// (+)_s P_(gen[s]) -> M sending e_{gen[s]} to the generator.
inline ModuleMorphism coverMorphism(const Representation& m, const detail::Generators& g) {
  const auto& alg = m.algebra();
  Representation src = realizeProjectiveSum(alg, g.vertices);
  const auto off = detail::projectiveOffsets(alg, g.vertices);
  ModuleMorphism out{src, m, {}};
  for (int t = 0; t < alg.vertexCount(); ++t) {
    Matrix f(alg.field(), m.dim(t), src.dim(t));
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      const auto& blk = alg.block(t, g.vertices[k]);
      for (std::size_t x = 0; x < blk.size(); ++x)
        f.setBlock(0, off[static_cast<std::size_t>(t)][k] + x, m.pathMatrix(alg.basis()[blk[x]]) * g.elements[k]);
    }
    out.maps.push_back(std::move(f));
  }
  return out;
}

inline ModuleMorphism projectiveCover(const Representation& m) { return coverMorphism(m, topGenerators(m)); }

/// P^-1 -> P^0 -> M -> 0 with P^0 -> M and P^-1 -> Ker projective covers.
inline Presentation minimalPresentation(const Representation& m) {
  const auto& alg = m.algebra();
  const auto g0 = topGenerators(m);
  const ModuleMorphism pi = coverMorphism(m, g0);
  const VertexSubspace kb = kernelOf(pi);
  const Representation k = subrepresentation(pi.source, kb);
  auto g1 = topGenerators(k);
  for (std::size_t s = 0; s < g1.vertices.size(); ++s)
    g1.elements[s] = kb[static_cast<std::size_t>(g1.vertices[s])] * g1.elements[s];
  return Presentation(detail::inclusionOf(alg, g0.vertices, g1));
}

struct Minimized {
  Presentation minimal;
  std::vector<std::size_t> strippedContractibles;  ///< copies of (P_(i) -> P_(i)) iso
  std::vector<std::size_t> strippedZeroTargets;    ///< copies of (P_(i) -> 0)
};

/// Splits off the summands (P -> P) iso and (P -> 0). The remainder is
/// returned as the minimal presentation of Coker a, which is isomorphic to
/// the minimal summand of a by Krull-Schmidt.
inline Minimized minimize(const Presentation& a) {
  const auto n = static_cast<std::size_t>(a.algebra().vertexCount());
  if (isMinimal(a)) return {a, std::vector<std::size_t>(n, 0), std::vector<std::size_t>(n, 0)};
  Presentation m = minimalPresentation(cokernel(a));
  const auto ap = a.plusMultiplicities(), am = a.minusMultiplicities();
  const auto mp = m.plusMultiplicities(), mm = m.minusMultiplicities();
  Minimized out{std::move(m), std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.strippedContractibles[i] = ap[i] - mp[i];
    out.strippedZeroTargets[i] = am[i] - mm[i] - out.strippedContractibles[i];
  }
  return out;
}

/// dim Ext^1(M, N) from 0 -> Omega -> P^0 -> M -> 0:
/// ext^1 = hom(Omega, N) - hom(P^0, N) + hom(M, N).
inline std::size_t ext1(const Representation& m, const Representation& n) {
  const Presentation a = minimalPresentation(m);
  const ModuleMorphism ra = realize(a.map());
  const Representation omega = subrepresentation(ra.target, imageOf(ra));
  std::size_t homP0 = 0;
  for (int v : a.plusSummands()) homP0 += n.dim(v);
  return homDim(omega, n) + homDim(m, n) - homP0;
}

/// tau M = Ker(nu a) for the minimal presentation a of M.
inline Representation tau(const Representation& m) {
  const ModuleMorphism na = nakayama(minimalPresentation(m).map());
  return subrepresentation(na.source, kernelOf(na));
}

}  // namespace gvec
