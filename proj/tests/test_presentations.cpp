#include <gtest/gtest.h>

#include "common.hpp"

using namespace gvec;
using testing_support::fixture;
using testing_support::randomCokernel;
using testing_support::randomGVector;

namespace {

using Dims = std::vector<std::size_t>;

// P_src -> P_tgt with a single scalar coefficient on the first basis path
Presentation single(const BoundQuiverAlgebra& alg, std::vector<int> src, std::vector<int> tgt, Scalar c = 1) {
  ProjMap m(alg, std::move(src), std::move(tgt));
  if (!m.source().empty() && !m.target().empty() && !m.entry(0, 0).empty()) m.entry(0, 0)[0] = c;
  return Presentation(std::move(m));
}

Presentation randomPresentation(const BoundQuiverAlgebra& alg, const GVector& g, Rng& rng) {
  const auto s = split(g);
  return Presentation(ProjMap::random(alg, detail::expand(s.minus), detail::expand(s.plus), rng));
}

ProjMap randomAutomorphism(const BoundQuiverAlgebra& alg, const std::vector<int>& verts, Rng& rng) {
  for (;;) {
    ProjMap m = ProjMap::random(alg, verts, verts, rng);
    if (realize(m).isIsomorphism()) return m;
  }
}

Presentation conjugate(const Presentation& a, Rng& rng) {
  const auto& alg = a.algebra();
  const ProjMap u = randomAutomorphism(alg, a.minusSummands(), rng);
  const ProjMap v = randomAutomorphism(alg, a.plusSummands(), rng);
  return Presentation(compose(v, compose(a.map(), u)));
}

std::vector<Presentation> minimalSamples(const BoundQuiverAlgebra& alg, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Presentation> out;
  while (out.size() < count) {
    const auto m = randomCokernel(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
    if (m.totalDim() > 0) out.push_back(minimalPresentation(m));
  }
  return out;
}

GVector weightedSum(const std::vector<PresentationSummand>& pieces) {
  GVector g(pieces.front().presentation.algebra().vertexCount());
  for (const auto& s : pieces) g += static_cast<std::int64_t>(s.multiplicity) * gVectorOf(s.presentation);
  return g;
}

Dims cokernelDims(const std::vector<PresentationSummand>& pieces) {
  Dims d(pieces.front().presentation.algebra().vertexCount(), 0);
  for (const auto& s : pieces) {
    const auto c = cokernel(s.presentation).dims();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += s.multiplicity * c[i];
  }
  return d;
}

}  // namespace

TEST(GVectorOf, Examples) {
  const auto a2 = fixture("a2");
  EXPECT_EQ(gVectorOf(single(a2, {1}, {0})), (GVector{1, -1}));
  EXPECT_EQ(gVectorOf(single(a2, {1}, {})), (GVector{0, -1}));
  EXPECT_EQ(gVectorOf(Presentation::zero(a2)), (GVector{0, 0}));
  EXPECT_EQ(gVectorOf(single(a2, {0}, {0, 0})), (GVector{1, 0}));
  EXPECT_EQ(gVectorOf(directSum(single(a2, {1}, {0}), single(a2, {1}, {}))), (GVector{1, -2}));
}

TEST(ChainMaps, BasisElementsAreChainMaps) {
  for (const char* name : {"a3rel", "k3"}) {
    const auto alg = fixture(name);
    const auto as = minimalSamples(alg, 5, 13);
    for (const auto& a : as)
      for (const auto& b : as)
        for (const auto& m : chainMapBasis(a, b)) EXPECT_EQ(compose(m.v, a.map()), compose(b.map(), m.u));
  }
  const auto a2 = fixture("a2");
  EXPECT_EQ(endomorphismBasis(single(a2, {1}, {0})).size(), 1u);
  EXPECT_EQ(endomorphismBasis(single(a2, {}, {0})).size(), 1u);
}

TEST(HomotopyHomDim, Examples) {
  const auto a2 = fixture("a2");
  const auto s1 = single(a2, {1}, {0});
  EXPECT_EQ(homotopyHomDim(s1, s1), 0u);
  // P2[1] -> P1: the only map is not null-homotopic
  EXPECT_EQ(homotopyHomDim(single(a2, {1}, {}), single(a2, {}, {0})), 1u);
  EXPECT_EQ(homotopyHomDim(single(a2, {}, {0}), single(a2, {1}, {})), 0u);
  // S2 = P2 to S1: Hom(S1, tau S2) = 0 but Hom(S2, tau S1) = Hom(S2, S2) = 1
  const auto p2 = single(a2, {}, {1});
  EXPECT_EQ(homotopyHomDim(p2, s1), 0u);
  EXPECT_EQ(homotopyHomDim(s1, p2), 1u);
  // contractible summands do not change anything
  const auto id = Presentation(ProjMap::identity(a2, {0}));
  EXPECT_EQ(homotopyHomDim(directSum(s1, id), p2), 1u);
  EXPECT_EQ(homotopyHomDim(id, id), 0u);
}

TEST(HomotopyHomDim, DualPathThroughTau) {
  // hom(a, b[1]) = hom(Coker b, tau Coker a) when a is a minimal presentation of a module
  for (const char* name : {"a3rel", "k3", "a3", "k2"}) {
    const auto alg = fixture(name);
    const auto as = minimalSamples(alg, 6, 31);
    Rng rng(32);
    for (const auto& a : as) {
      const auto ta = tau(cokernel(a));
      for (int t = 0; t < 4; ++t) {
        const auto b = randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
        EXPECT_EQ(homotopyHomDim(a, b), homDim(cokernel(b), ta)) << name;
      }
      for (const auto& b : as) EXPECT_EQ(homotopyHomDim(a, b), homDim(cokernel(b), ta)) << name;
    }
  }
}

TEST(HomotopyHomDim, ConjugationInvariance) {
  Rng rng(6);
  for (const char* name : {"a3rel", "k3"}) {
    const auto alg = fixture(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
      const auto b = randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
      const auto base = homotopyHomDim(a, b);
      EXPECT_EQ(homotopyHomDim(conjugate(a, rng), b), base);
      EXPECT_EQ(homotopyHomDim(a, conjugate(b, rng)), base);
    }
  }
}

TEST(HomotopyHomDim, Additivity) {
  Rng rng(7);
  for (const char* name : {"a3rel", "k3", "a3"}) {
    const auto alg = fixture(name);
    for (int trial = 0; trial < 8; ++trial) {
      auto rnd = [&] { return randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng); };
      const auto a = rnd(), a2 = rnd(), b = rnd(), b2 = rnd();
      EXPECT_EQ(homotopyHomDim(directSum(a, a2), b), homotopyHomDim(a, b) + homotopyHomDim(a2, b));
      EXPECT_EQ(homotopyHomDim(a, directSum(b, b2)), homotopyHomDim(a, b) + homotopyHomDim(a, b2));
    }
  }
}

TEST(PresentationIso, Verdicts) {
  Rng rng(9);
  const auto k3 = fixture("k3");
  const auto a = randomPresentation(k3, GVector{1, -1}, rng);
  EXPECT_EQ(isomorphic(a, conjugate(a, rng), rng), PresentationIso::Isomorphic);
  EXPECT_EQ(isomorphic(a, randomPresentation(k3, GVector{2, -1}, rng), rng), PresentationIso::NotIsomorphic);
  const auto a2 = fixture("a2");
  // same terms, different maps: P2 -> P1 nonzero versus zero
  EXPECT_EQ(isomorphic(single(a2, {1}, {0}), single(a2, {1}, {0}, 0), rng), PresentationIso::NotIsomorphic);
}

TEST(IsMinimal, Examples) {
  const auto a2 = fixture("a2");
  EXPECT_TRUE(isMinimal(single(a2, {1}, {0})));
  EXPECT_TRUE(isMinimal(Presentation::zero(a2)));
  EXPECT_FALSE(isMinimal(Presentation(ProjMap::identity(a2, {0}))));
  EXPECT_FALSE(isMinimal(single(a2, {1}, {})));  // P2 -> 0 has P2 outside the radical kernel
  EXPECT_FALSE(isMinimal(single(a2, {1}, {0}, 0)));
}

TEST(Minimize, StripsContractiblesAndZeroTargets) {
  const auto a2 = fixture("a2");
  const auto s1 = single(a2, {1}, {0});
  const auto r = minimize(directSum(s1, Presentation(ProjMap::identity(a2, {0}))));
  EXPECT_EQ(gVectorOf(r.minimal), (GVector{1, -1}));
  EXPECT_EQ(r.strippedContractibles, (Dims{1, 0}));
  EXPECT_EQ(r.strippedZeroTargets, (Dims{0, 0}));
  const auto z = minimize(directSum(s1, single(a2, {1}, {})));
  EXPECT_EQ(gVectorOf(z.minimal), (GVector{1, -1}));
  EXPECT_EQ(z.strippedContractibles, (Dims{0, 0}));
  EXPECT_EQ(z.strippedZeroTargets, (Dims{0, 1}));
  const auto id = minimize(Presentation(ProjMap::identity(a2, {0})));
  EXPECT_TRUE(id.minimal.isZeroComplex());
  EXPECT_EQ(id.strippedContractibles, (Dims{1, 0}));
  EXPECT_EQ(id.strippedZeroTargets, (Dims{0, 0}));
  const auto same = minimize(s1);
  EXPECT_EQ(same.minimal.map(), s1.map());
  EXPECT_EQ(same.strippedContractibles, (Dims{0, 0}));
}

TEST(Minimize, PreservesCokernelAndGVectorBookkeeping) {
  Rng rng(10);
  for (const char* name : {"a3rel", "k3", "a3"}) {
    const auto alg = fixture(name);
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng);
      const auto r = minimize(a);
      EXPECT_TRUE(isMinimal(r.minimal));
      EXPECT_EQ(isomorphic(cokernel(r.minimal), cokernel(a), rng), IsoVerdict::Isomorphic);
      GVector zeroPart(alg.vertexCount());
      for (int i = 0; i < alg.vertexCount(); ++i) zeroPart[i] = static_cast<std::int64_t>(r.strippedZeroTargets[i]);
      EXPECT_EQ(gVectorOf(r.minimal) - zeroPart, gVectorOf(a)) << name;
    }
  }
}

TEST(FittingSplit, Examples) {
  Rng rng(11);
  const auto a2 = fixture("a2");
  const auto pieces = fittingSplit(directSum(single(a2, {1}, {0}), single(a2, {}, {0})), rng);
  ASSERT_EQ(pieces.size(), 2u);
  std::vector<GVector> gs;
  for (const auto& p : pieces) gs.push_back(gVectorOf(p.presentation));
  std::sort(gs.begin(), gs.end());
  EXPECT_EQ(gs, (std::vector<GVector>{GVector{1, -1}, GVector{1, 0}}));
  const auto withId = fittingSplit(directSum(single(a2, {1}, {0}), Presentation(ProjMap::identity(a2, {0}))), rng);
  EXPECT_EQ(withId.size(), 2u);
  // general K3 presentation of g = (1, -1) is indecomposable
  const auto k3 = fixture("k3");
  const auto one = fittingSplit(randomPresentation(k3, GVector{1, -1}, rng), rng);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front().multiplicity, 1u);
  EXPECT_EQ(one.front().residueDegree, 1u);
}

TEST(FittingSplit, RepeatedSummandGroups) {
  Rng rng(12);
  const auto a2 = fixture("a2");
  const auto s1 = single(a2, {1}, {0});
  const auto pieces = fittingSplit(conjugate(directSum(directSum(s1, s1), s1), rng), rng);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces.front().multiplicity, 3u);
  EXPECT_EQ(gVectorOf(pieces.front().presentation), (GVector{1, -1}));
}

TEST(FittingSplit, KroneckerResidueDegree) {
  // a general 2 x 2 pencil over F_p splits into two (1,-1) pieces or stays as one
  // piece with residue field F_{p^2}; either way it accounts for two summands
  const auto k2 = fixture("k2");
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pieces = fittingSplit(randomPresentation(k2, GVector{2, -2}, rng), rng);
    std::size_t count = 0;
    for (const auto& p : pieces) {
      count += p.multiplicity * p.residueDegree;
      if (p.residueDegree == 1) EXPECT_EQ(gVectorOf(p.presentation), (GVector{1, -1}));
    }
    EXPECT_EQ(count, 2u);
  }
}

TEST(FittingSplit, SumsMatchInput) {
  Rng rng(14);
  for (const char* name : {"a3rel", "k3", "a3", "k2"}) {
    const auto alg = fixture(name);
    for (int trial = 0; trial < 8; ++trial) {
      const auto a = conjugate(directSum(randomPresentation(alg, randomGVector(alg.vertexCount(), 2, rng), rng),
                                         randomPresentation(alg, randomGVector(alg.vertexCount(), 1, rng), rng)),
                               rng);
      if (a.isZeroComplex()) continue;
      const auto pieces = fittingSplit(a, rng);
      EXPECT_EQ(weightedSum(pieces), gVectorOf(a)) << name;
      EXPECT_EQ(cokernelDims(pieces), cokernel(a).dims()) << name;
      for (const auto& p : pieces) EXPECT_FALSE(p.presentation.isZeroComplex());
    }
  }
}
