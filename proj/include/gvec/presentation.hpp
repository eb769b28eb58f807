#pragma once

#include <cstddef>
#include <vector>

#include "gvec/polynomial.hpp"
#include "gvec/projective.hpp"
#include "gvec/types.hpp"

namespace gvec {

/// A 2-term complex P^-1 -> P^0 of projectives, P^-1 = (+)_l P_(source[l]),
/// P^0 = (+)_k P_(target[k]).
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(ProjMap map) : map_(std::move(map)) {}

  static Presentation zero(const BoundQuiverAlgebra& alg) { return Presentation(ProjMap(alg, {}, {})); }

  const ProjMap& map() const { return map_; }
  const BoundQuiverAlgebra& algebra() const { return map_.algebra(); }
  const std::vector<int>& minusSummands() const { return map_.source(); }
  const std::vector<int>& plusSummands() const { return map_.target(); }

  std::vector<std::size_t> minusMultiplicities() const { return count(map_.source()); }
  std::vector<std::size_t> plusMultiplicities() const { return count(map_.target()); }

  bool isZeroComplex() const { return map_.source().empty() && map_.target().empty(); }

 private:
  std::vector<std::size_t> count(const std::vector<int>& verts) const {
    std::vector<std::size_t> m(static_cast<std::size_t>(algebra().vertexCount()), 0);
    for (int v : verts) ++m[static_cast<std::size_t>(v)];
    return m;
  }

  ProjMap map_;
};

/// [P^0] - [P^-1].
inline GVector gVectorOf(const Presentation& a) {
  GVector g(static_cast<std::size_t>(a.algebra().vertexCount()));
  for (int v : a.plusSummands()) ++g[static_cast<std::size_t>(v)];
  for (int v : a.minusSummands()) --g[static_cast<std::size_t>(v)];
  return g;
}

inline Presentation directSum(const Presentation& a, const Presentation& b) {
  return Presentation(directSum(a.map(), b.map()));
}

/// Pair (u on P^-1, v on P^0) forming a chain map.
struct PresentationMorphism {
  ProjMap u;
  ProjMap v;
};

/// Endomorphism of a single presentation: v o a = a o u.
using PresentationEndo = PresentationMorphism;

namespace detail {

/// Matrix of a linear map whose arguments are ProjMaps of the given shapes;
/// columns are images of the coordinate basis, stacked in argument order.
template <typename Op>
Matrix linearOperator(const std::vector<ProjMap>& shapes, std::size_t codomainParams, Op&& op) {
  const PrimeField& f = shapes.front().algebra().field();
  std::size_t total = 0;
  for (const auto& s : shapes) total += s.paramCount();
  Matrix m(f, codomainParams, total);
  std::vector<ProjMap> args = shapes;
  std::size_t col = 0;
  for (std::size_t d = 0; d < shapes.size(); ++d) {
    const std::size_t pc = shapes[d].paramCount();
    std::vector<Scalar> p(pc, 0);
    for (std::size_t i = 0; i < pc; ++i, ++col) {
      p[i] = 1;
      args[d].setParams(p);
      const std::vector<Scalar> img = op(args).params();
      for (std::size_t r = 0; r < img.size(); ++r) m(r, col) = img[r];
      p[i] = 0;
    }
    args[d] = shapes[d];
  }
  return m;
}

inline std::size_t homParamCount(const BoundQuiverAlgebra& alg, const std::vector<int>& src,
                                 const std::vector<int>& tgt) {
  std::size_t c = 0;
  for (int w : tgt)
    for (int v : src) c += alg.cartan(v, w);
  return c;
}

}  // namespace detail

/// Basis of the chain maps a -> b.
inline std::vector<PresentationMorphism> chainMapBasis(const Presentation& a, const Presentation& b) {
  const auto& alg = a.algebra();
  ProjMap u0(alg, a.minusSummands(), b.minusSummands());
  ProjMap v0(alg, a.plusSummands(), b.plusSummands());
  if (u0.paramCount() + v0.paramCount() == 0) return {};
  const std::size_t cod = detail::homParamCount(alg, a.minusSummands(), b.plusSummands());
  Matrix op = detail::linearOperator({u0, v0}, cod, [&](const std::vector<ProjMap>& x) {
    return compose(x[1], a.map()) - compose(b.map(), x[0]);
  });
  Matrix ker = cod == 0 ? Matrix::identity(alg.field(), op.cols()) : nullspaceBasis(op);
  std::vector<PresentationMorphism> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<Scalar> p(ker.rows());
    for (std::size_t r = 0; r < ker.rows(); ++r) p[r] = ker(r, c);
    PresentationMorphism m{u0, v0};
    m.u.setParams(std::span<const Scalar>(p).first(u0.paramCount()));
    m.v.setParams(std::span<const Scalar>(p).subspan(u0.paramCount()));
    out.push_back(std::move(m));
  }
  return out;
}

inline std::vector<PresentationEndo> endomorphismBasis(const Presentation& a) { return chainMapBasis(a, a); }

/// hom_{K^b(proj)}(a, b[1]) = dim Hom(P_a^-1, P_b^0) - rank Phi with
/// Phi(s, t) = b o s + t o a; every map P_a^-1 -> P_b^0 is a chain map and
/// the image of Phi is exactly the null-homotopic ones.
inline std::size_t homotopyHomDim(const Presentation& a, const Presentation& b) {
  const auto& alg = a.algebra();
  const std::size_t cod = detail::homParamCount(alg, a.minusSummands(), b.plusSummands());
  if (cod == 0) return 0;
  ProjMap s0(alg, a.minusSummands(), b.minusSummands());
  ProjMap t0(alg, a.plusSummands(), b.plusSummands());
  if (s0.paramCount() + t0.paramCount() == 0) return cod;
  Matrix phi = detail::linearOperator({s0, t0}, cod, [&](const std::vector<ProjMap>& x) {
    return compose(b.map(), x[0]) + compose(x[1], a.map());
  });
  return cod - rank(std::move(phi));
}

/// Coker of the realized map P^-1 -> P^0.
inline Representation cokernel(const Presentation& a) { return cokernel(realize(a.map())); }

namespace detail {

/// Positions of the idempotent coordinates (the top) inside the vertex-i
/// space of a realized (+)_k P_(verts[k]).
inline std::vector<std::size_t> topCoordinates(const BoundQuiverAlgebra& alg, const std::vector<int>& verts, int i) {
  const auto off = projectiveOffsets(alg, verts);
  std::vector<std::size_t> out;
  const std::size_t e = alg.localIndex(alg.idempotentIndex(i));
  for (std::size_t k = 0; k < verts.size(); ++k)
    if (verts[k] == i) out.push_back(off[static_cast<std::size_t>(i)][k] + e);
  return out;
}

struct Generators {
  std::vector<int> vertices;
  std::vector<Matrix> elements;  ///< column vector in the realized space at that vertex
};

/// Generators of a projective summand W of a realized projective sum: the
/// elements of W whose top components form a basis of top(W).
inline Generators summandGenerators(const BoundQuiverAlgebra& alg, const std::vector<int>& verts,
                                    const VertexSubspace& w) {
  Generators g;
  for (int i = 0; i < alg.vertexCount(); ++i) {
    const Matrix& wi = w[static_cast<std::size_t>(i)];
    if (wi.cols() == 0) continue;
    const auto rows = topCoordinates(alg, verts, i);
    if (rows.empty()) continue;
    for (std::size_t c : rref(wi.selectRows(rows)).pivots) {
      g.vertices.push_back(i);
      g.elements.push_back(wi.column(c));
    }
  }
  return g;
}

/// The inclusion (+)_s P_(gen[s]) -> (+)_k P_(verts[k]) sending e_{gen[s]} to the generator.
inline ProjMap inclusionOf(const BoundQuiverAlgebra& alg, const std::vector<int>& verts, const Generators& g) {
  const auto off = projectiveOffsets(alg, verts);
  ProjMap m(alg, g.vertices, verts);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    const auto i = static_cast<std::size_t>(g.vertices[s]);
    for (std::size_t k = 0; k < verts.size(); ++k)
      for (std::size_t x = 0; x < m.entry(k, s).size(); ++x) m.entry(k, s)[x] = g.elements[s](off[i][k] + x, 0);
  }
  return m;
}

}  // namespace detail

/// The direct summand of `a` supported on the projective summands
/// W^-1 of P^-1 and W^0 of P^0 (with a(W^-1) inside W^0), rewritten over
/// standard projectives via generators of W^-1 and W^0.
inline Presentation restrictToSummand(const Presentation& a, const VertexSubspace& wMinus,
                                      const VertexSubspace& wPlus) {
  const auto& alg = a.algebra();
  const auto gm = detail::summandGenerators(alg, a.minusSummands(), wMinus);
  const auto gp = detail::summandGenerators(alg, a.plusSummands(), wPlus);
  const ModuleMorphism ra = realize(a.map());
  const ModuleMorphism iota = realize(detail::inclusionOf(alg, a.plusSummands(), gp));
  const auto offQ = detail::projectiveOffsets(alg, gp.vertices);
  ProjMap out(alg, gm.vertices, gp.vertices);
  for (std::size_t s = 0; s < gm.vertices.size(); ++s) {
    const auto i = static_cast<std::size_t>(gm.vertices[s]);
    auto y = solve(iota.maps[i], ra.maps[i] * gm.elements[s]);
    if (!y) throw std::logic_error("restrictToSummand: image leaves the target summand");
    for (std::size_t t = 0; t < gp.vertices.size(); ++t)
      for (std::size_t x = 0; x < out.entry(t, s).size(); ++x) out.entry(t, s)[x] = (*y)(offQ[i][t] + x, 0);
  }
  return Presentation(std::move(out));
}

enum class PresentationIso { Isomorphic, Undecided, NotIsomorphic };

/// Monte-Carlo isomorphism test of complexes: sample chain maps a -> b and
/// look for one invertible in both degrees.
inline PresentationIso isomorphic(const Presentation& a, const Presentation& b, Rng& rng, std::size_t rounds = 20) {
  if (a.minusMultiplicities() != b.minusMultiplicities() || a.plusMultiplicities() != b.plusMultiplicities())
    return PresentationIso::NotIsomorphic;
  const auto ab = chainMapBasis(a, b);
  if (ab.size() != endomorphismBasis(a).size() || ab.size() != endomorphismBasis(b).size())
    return PresentationIso::NotIsomorphic;
  const auto& alg = a.algebra();
  for (std::size_t r = 0; r < rounds; ++r) {
    ProjMap u(alg, a.minusSummands(), b.minusSummands());
    ProjMap v(alg, a.plusSummands(), b.plusSummands());
    for (const auto& m : ab) {
      Scalar c = uniform(alg.field(), rng);
      u = u + m.u.scaled(c);
      v = v + m.v.scaled(c);
    }
    if (realize(u).isIsomorphism() && realize(v).isIsomorphism()) return PresentationIso::Isomorphic;
  }
  return PresentationIso::Undecided;
}

struct PresentationSummand {
  Presentation presentation;
  std::size_t multiplicity = 1;
  /// End/rad of the summand is F_{p^k}: over the algebraic closure it splits
  /// into k Galois-conjugate summands, each with g-vector g/k.
  std::size_t residueDegree = 1;
  bool isoUndecided = false;  ///< equal g-vector to another group but no isomorphism found
};

namespace detail {

/// Realized action of an endomorphism on P^-1 (+) P^0, one matrix per vertex and degree.
inline std::vector<Matrix> realizedBlocks(const PresentationEndo& e) {
  std::vector<Matrix> out = realize(e.u).maps;
  for (auto& m : realize(e.v).maps) out.push_back(std::move(m));
  return out;
}

/// Minimal polynomial of the block-diagonal action (Krylov per block, so
/// correct with high probability).
inline Poly blockMinimalPolynomial(const std::vector<Matrix>& blocks, Rng& rng) {
  Poly mu{1};
  for (const auto& m : blocks) {
    if (m.rows() == 0) continue;
    mu = poly::lcm(m.field(), mu, krylovPolynomial(m, randomMatrix(m.field(), m.rows(), 1, rng)));
  }
  return mu;
}

}  // namespace detail

/// Krull-Schmidt splitting by Fitting's lemma. For a random endomorphism f
/// of the complex, the minimal polynomial is factored over F_p; a proper
/// irreducible factor h gives F = h(f)^N, whose rank is stable, so that
/// the complex is ker F (+) im F in both degrees and the split recurses. A
/// summand is declared indecomposable after `rounds` consecutive random f
/// that do not split it, or at once if its endomorphism algebra is k. For
/// those the minimal polynomial is a power of one irreducible, whose degree
/// is the residue degree. The output is always a valid decomposition;
/// maximality holds with high probability. Isomorphic summands are grouped
/// into multiplicities.
inline std::vector<PresentationSummand> fittingSplit(const Presentation& a, Rng& rng, std::size_t rounds = 12) {
  if (rounds == 0) throw std::invalid_argument("fittingSplit: rounds must be positive");
  const auto& alg = a.algebra();
  const PrimeField& f = alg.field();
  std::vector<Presentation> work{a};
  std::vector<std::pair<Presentation, std::size_t>> indecomposables;
  auto totalRank = [](const std::vector<Matrix>& ms) {
    std::size_t r = 0;
    for (const auto& m : ms) r += rank(m);
    return r;
  };
  while (!work.empty()) {
    Presentation x = std::move(work.back());
    work.pop_back();
    if (x.isZeroComplex()) continue;
    if (x.minusSummands().size() + x.plusSummands().size() == 1) {
      indecomposables.emplace_back(std::move(x), 1);
      continue;
    }
    const auto endo = endomorphismBasis(x);
    if (endo.size() <= 1) {
      indecomposables.emplace_back(std::move(x), 1);
      continue;
    }
    const auto nu = static_cast<std::size_t>(alg.vertexCount());
    bool split = false;
    std::size_t residue = 1;
    for (std::size_t attempt = 0; attempt < rounds && !split; ++attempt) {
      PresentationEndo e{ProjMap(alg, x.minusSummands(), x.minusSummands()),
                         ProjMap(alg, x.plusSummands(), x.plusSummands())};
      for (const auto& b : endo) {
        Scalar c = uniform(f, rng);
        e.u = e.u + b.u.scaled(c);
        e.v = e.v + b.v.scaled(c);
      }
      std::vector<Matrix> fm = detail::realizedBlocks(e);
      const auto factors = poly::factorSquarefree(f, poly::squarefreePart(f, detail::blockMinimalPolynomial(fm, rng)), rng);
      if (factors.size() == 1) {
        residue = std::max(residue, static_cast<std::size_t>(poly::degree(factors.front())));
        continue;
      }
      if (factors.empty()) continue;
      const Poly& h = factors[std::uniform_int_distribution<std::size_t>(0, factors.size() - 1)(rng)];
      for (auto& m : fm) m = evaluate(h, m);
      std::size_t r = totalRank(fm);
      for (;;) {
        for (auto& m : fm) m = m * m;
        const std::size_t r2 = totalRank(fm);
        if (r2 == r) break;
        r = r2;
      }
      std::size_t total = 0;
      for (const auto& m : fm) total += m.rows();
      if (r == 0 || r == total) continue;
      VertexSubspace imU, imV, kerU, kerV;
      for (std::size_t i = 0; i < fm.size(); ++i) {
        (i < nu ? imU : imV).push_back(columnSpaceBasis(fm[i]));
        (i < nu ? kerU : kerV).push_back(nullspaceBasis(fm[i]));
      }
      work.push_back(restrictToSummand(x, imU, imV));
      work.push_back(restrictToSummand(x, kerU, kerV));
      split = true;
    }
    if (!split) indecomposables.emplace_back(std::move(x), residue);
  }

  std::vector<PresentationSummand> groups;
  for (auto& [p, k] : indecomposables) {
    const GVector g = gVectorOf(p);
    bool placed = false, undecided = false;
    for (auto& grp : groups) {
      if (gVectorOf(grp.presentation) != g || grp.residueDegree != k) continue;
      auto verdict = isomorphic(grp.presentation, p, rng);
      if (verdict == PresentationIso::Isomorphic) {
        ++grp.multiplicity;
        placed = true;
        break;
      }
      if (verdict == PresentationIso::Undecided) grp.isoUndecided = undecided = true;
    }
    if (!placed) groups.push_back({std::move(p), 1, k, undecided});
  }
  return groups;
}

/// image in rad P^0 and kernel in rad P^-1.
inline bool isMinimal(const Presentation& a) {
  const auto& alg = a.algebra();
  const ModuleMorphism ra = realize(a.map());
  for (int i = 0; i < alg.vertexCount(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const auto topPlus = detail::topCoordinates(alg, a.plusSummands(), i);
    if (!topPlus.empty() && !ra.maps[ui].selectRows(topPlus).isZero()) return false;
    const auto topMinus = detail::topCoordinates(alg, a.minusSummands(), i);
    if (!topMinus.empty() && !nullspaceBasis(ra.maps[ui]).selectRows(topMinus).isZero()) return false;
  }
  return true;
}

}  // namespace gvec
