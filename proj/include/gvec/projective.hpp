#pragma once

#include <cstddef>
#include <vector>

#include "gvec/algebra.hpp"
#include "gvec/representation.hpp"

namespace gvec {

/// A morphism  (+)_l P_(src[l])  ->  (+)_k P_(tgt[k])  between direct sums of
/// indecomposable projectives. Hom(P_(j), P_(i)) = e_j Lambda e_i acting by
/// right multiplication, so block (k, l) holds local coordinates of an
/// element of e_{src[l]} Lambda e_{tgt[k]}.
class ProjMap {
 public:
  ProjMap() = default;
  ProjMap(BoundQuiverAlgebra alg, std::vector<int> src, std::vector<int> tgt)
      : alg_(std::move(alg)), src_(std::move(src)), tgt_(std::move(tgt)) {
    blocks_.resize(src_.size() * tgt_.size());
    for (std::size_t k = 0; k < tgt_.size(); ++k)
      for (std::size_t l = 0; l < src_.size(); ++l) entry(k, l).assign(alg_.cartan(src_[l], tgt_[k]), 0);
  }

  static ProjMap identity(const BoundQuiverAlgebra& alg, const std::vector<int>& verts) {
    ProjMap m(alg, verts, verts);
    for (std::size_t k = 0; k < verts.size(); ++k) m.entry(k, k)[alg.localIndex(alg.idempotentIndex(verts[k]))] = 1;
    return m;
  }

  static ProjMap random(const BoundQuiverAlgebra& alg, const std::vector<int>& src, const std::vector<int>& tgt,
                        Rng& rng) {
    ProjMap m(alg, src, tgt);
    for (auto& b : m.blocks_)
      for (auto& x : b) x = uniform(alg.field(), rng);
    return m;
  }

  const BoundQuiverAlgebra& algebra() const { return alg_; }
  const std::vector<int>& source() const { return src_; }
  const std::vector<int>& target() const { return tgt_; }

  std::vector<Scalar>& entry(std::size_t k, std::size_t l) { return blocks_[k * src_.size() + l]; }
  const std::vector<Scalar>& entry(std::size_t k, std::size_t l) const { return blocks_[k * src_.size() + l]; }

  bool isZero() const {
    for (const auto& b : blocks_)
      for (auto x : b)
        if (x) return false;
    return true;
  }

  /// Number of free coefficients, i.e. dim Hom(source, target).
  std::size_t paramCount() const {
    std::size_t c = 0;
    for (const auto& b : blocks_) c += b.size();
    return c;
  }

  std::vector<Scalar> params() const {
    std::vector<Scalar> p;
    for (const auto& b : blocks_) p.insert(p.end(), b.begin(), b.end());
    return p;
  }

  void setParams(std::span<const Scalar> p) {
    std::size_t i = 0;
    for (auto& b : blocks_)
      for (auto& x : b) x = p[i++];
  }

  ProjMap operator+(const ProjMap& o) const {
    ProjMap r = *this;
    const PrimeField& f = alg_.field();
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t i = 0; i < blocks_[b].size(); ++i) r.blocks_[b][i] = f.add(r.blocks_[b][i], o.blocks_[b][i]);
    return r;
  }

  ProjMap operator-(const ProjMap& o) const { return *this + o.scaled(alg_.field().neg(1)); }

  ProjMap scaled(Scalar s) const {
    ProjMap r = *this;
    for (auto& b : r.blocks_)
      for (auto& x : b) x = alg_.field().mul(x, s);
    return r;
  }

  friend bool operator==(const ProjMap& a, const ProjMap& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.blocks_ == b.blocks_;
  }

 private:
  BoundQuiverAlgebra alg_;
  std::vector<int> src_, tgt_;
  std::vector<std::vector<Scalar>> blocks_;
};

/// f o g. Composition of right multiplications reverses the product:
/// (f o g)(r, p) = sum_q g(q, p) * f(r, q).
inline ProjMap compose(const ProjMap& f, const ProjMap& g) {
  if (f.source() != g.target()) throw std::invalid_argument("compose: middle objects differ");
  const auto& alg = f.algebra();
  ProjMap out(alg, g.source(), f.target());
  for (std::size_t r = 0; r < f.target().size(); ++r)
    for (std::size_t p = 0; p < g.source().size(); ++p) {
      auto& dst = out.entry(r, p);
      for (std::size_t q = 0; q < g.target().size(); ++q)
        alg.accumulateProduct(g.source()[p], g.target()[q], f.target()[r], g.entry(q, p), f.entry(r, q), dst);
    }
  return out;
}

inline ProjMap directSum(const ProjMap& a, const ProjMap& b) {
  std::vector<int> src = a.source(), tgt = a.target();
  src.insert(src.end(), b.source().begin(), b.source().end());
  tgt.insert(tgt.end(), b.target().begin(), b.target().end());
  ProjMap m(a.algebra(), src, tgt);
  for (std::size_t k = 0; k < a.target().size(); ++k)
    for (std::size_t l = 0; l < a.source().size(); ++l) m.entry(k, l) = a.entry(k, l);
  for (std::size_t k = 0; k < b.target().size(); ++k)
    for (std::size_t l = 0; l < b.source().size(); ++l)
      m.entry(a.target().size() + k, a.source().size() + l) = b.entry(k, l);
  return m;
}

namespace detail {

/// offsets[t][k]: start of summand k inside the vertex-t space of (+)_k P_(verts[k]).
inline std::vector<std::vector<std::size_t>> projectiveOffsets(const BoundQuiverAlgebra& alg,
                                                               const std::vector<int>& verts) {
  const int n = alg.vertexCount();
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(verts.size() + 1, 0));
  for (int t = 0; t < n; ++t)
    for (std::size_t k = 0; k < verts.size(); ++k) off[t][k + 1] = off[t][k] + alg.cartan(t, verts[k]);
  return off;
}

inline std::vector<Scalar> unit(std::size_t n, std::size_t i) {
  std::vector<Scalar> u(n, 0);
  u[i] = 1;
  return u;
}

}  // namespace detail

/// (+)_k Lambda e_{verts[k]}; the vertex-t space has basis
/// block(t, verts[0]) followed by block(t, verts[1]), ...
inline Representation realizeProjectiveSum(const BoundQuiverAlgebra& alg, const std::vector<int>& verts) {
  const auto off = detail::projectiveOffsets(alg, verts);
  const auto& q = alg.quiver();
  std::vector<std::size_t> dims;
  for (int t = 0; t < q.vertexCount; ++t) dims.push_back(off[t].back());
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    Matrix m(alg.field(), dims[t], dims[s]);
    const auto alpha = detail::unit(alg.cartan(t, s), alg.localIndex(alg.arrowIndex(static_cast<int>(a))));
    for (std::size_t k = 0; k < verts.size(); ++k)
      for (std::size_t x = 0; x < alg.cartan(s, verts[k]); ++x) {
        auto img = alg.multiply(t, s, verts[k], alpha, detail::unit(alg.cartan(s, verts[k]), x));
        for (std::size_t y = 0; y < img.size(); ++y) m(off[t][k] + y, off[s][k] + x) = img[y];
      }
    arrows.push_back(std::move(m));
  }
  return {alg, std::move(dims), std::move(arrows)};
}

inline ModuleMorphism realize(const ProjMap& f) {
  const auto& alg = f.algebra();
  Representation src = realizeProjectiveSum(alg, f.source());
  Representation tgt = realizeProjectiveSum(alg, f.target());
  const auto offS = detail::projectiveOffsets(alg, f.source());
  const auto offT = detail::projectiveOffsets(alg, f.target());
  ModuleMorphism out{src, tgt, {}};
  for (int t = 0; t < alg.vertexCount(); ++t) {
    Matrix m(alg.field(), tgt.dim(t), src.dim(t));
    for (std::size_t l = 0; l < f.source().size(); ++l) {
      const int v = f.source()[l];
      for (std::size_t x = 0; x < alg.cartan(t, v); ++x) {
        const auto ex = detail::unit(alg.cartan(t, v), x);
        for (std::size_t k = 0; k < f.target().size(); ++k) {
          const auto& u = f.entry(k, l);
          if (std::all_of(u.begin(), u.end(), [](Scalar s) { return s == 0; })) continue;
          auto img = alg.multiply(t, v, f.target()[k], ex, u);
          for (std::size_t y = 0; y < img.size(); ++y) m(offT[t][k] + y, offS[t][l] + x) = img[y];
        }
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// P_(i) = Lambda e_i; its vertex-j space has basis e_j Lambda e_i.
inline Representation projective(const BoundQuiverAlgebra& alg, int i) { return realizeProjectiveSum(alg, {i}); }

/// (+)_k D(e_{verts[k]} Lambda); the vertex-j space of D(e_i Lambda) is dual
/// to e_i Lambda e_j, in the dual of the path basis.
inline Representation realizeInjectiveSum(const BoundQuiverAlgebra& alg, const std::vector<int>& verts) {
  const auto& q = alg.quiver();
  const int n = q.vertexCount;
  std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(verts.size() + 1, 0));
  for (int t = 0; t < n; ++t)
    for (std::size_t k = 0; k < verts.size(); ++k) off[t][k + 1] = off[t][k] + alg.cartan(verts[k], t);
  std::vector<std::size_t> dims;
  for (int t = 0; t < n; ++t) dims.push_back(off[t].back());
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int j = q.arrows[a].source, jp = q.arrows[a].target;
    Matrix m(alg.field(), dims[jp], dims[j]);
    const auto alpha = detail::unit(alg.cartan(jp, j), alg.localIndex(alg.arrowIndex(static_cast<int>(a))));
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const int i = verts[k];
      // transpose of x -> x*alpha : e_i Lambda e_jp -> e_i Lambda e_j
      for (std::size_t x = 0; x < alg.cartan(i, jp); ++x) {
        auto img = alg.multiply(i, jp, j, detail::unit(alg.cartan(i, jp), x), alpha);
        for (std::size_t y = 0; y < img.size(); ++y) m(off[jp][k] + x, off[j][k] + y) = img[y];
      }
    }
    arrows.push_back(std::move(m));
  }
  return {alg, std::move(dims), std::move(arrows)};
}

/// I_(i) = nu P_(i) = D(e_i Lambda).
inline Representation injective(const BoundQuiverAlgebra& alg, int i) { return realizeInjectiveSum(alg, {i}); }

/// nu f between the injective sums. For a block u in e_v Lambda e_w the dual
/// map at vertex t is the transpose of y -> u*y : e_w Lambda e_t -> e_v Lambda e_t.
inline ModuleMorphism nakayama(const ProjMap& f) {
  const auto& alg = f.algebra();
  const int n = alg.vertexCount();
  Representation src = realizeInjectiveSum(alg, f.source());
  Representation tgt = realizeInjectiveSum(alg, f.target());
  auto offsets = [&](const std::vector<int>& verts) {
    std::vector<std::vector<std::size_t>> off(n, std::vector<std::size_t>(verts.size() + 1, 0));
    for (int t = 0; t < n; ++t)
      for (std::size_t k = 0; k < verts.size(); ++k) off[t][k + 1] = off[t][k] + alg.cartan(verts[k], t);
    return off;
  };
  const auto offS = offsets(f.source()), offT = offsets(f.target());
  ModuleMorphism out{src, tgt, {}};
  for (int t = 0; t < n; ++t) {
    Matrix m(alg.field(), tgt.dim(t), src.dim(t));
    for (std::size_t k = 0; k < f.target().size(); ++k) {
      const int w = f.target()[k];
      for (std::size_t l = 0; l < f.source().size(); ++l) {
        const int v = f.source()[l];
        const auto& u = f.entry(k, l);
        for (std::size_t y = 0; y < alg.cartan(w, t); ++y) {
          auto img = alg.multiply(v, w, t, u, detail::unit(alg.cartan(w, t), y));
          for (std::size_t x = 0; x < img.size(); ++x) m(offT[t][k] + y, offS[t][l] + x) = img[x];
        }
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

/// Basis of Hom(P_(j), P_(i)): right multiplication by each basis path of e_j Lambda e_i.
inline std::vector<ModuleMorphism> homBasisProjectives(const BoundQuiverAlgebra& alg, int j, int i) {
  std::vector<ModuleMorphism> out;
  for (std::size_t b = 0; b < alg.cartan(j, i); ++b) {
    ProjMap m(alg, {j}, {i});
    m.entry(0, 0)[b] = 1;
    out.push_back(realize(m));
  }
  return out;
}

}  // namespace gvec
