#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gvec/algebra.hpp"
#include "gvec/matrix.hpp"

namespace gvec {

/// Per-vertex column bases of a subspace of a representation.
using VertexSubspace = std::vector<Matrix>;

/// A finite-dimensional left Lambda-module as a quiver representation:
/// one vector space k^{d_i} per vertex and a d_t x d_s matrix per arrow.
class Representation {
 public:
  Representation() = default;
  Representation(BoundQuiverAlgebra alg, std::vector<std::size_t> dims, std::vector<Matrix> arrows)
      : alg_(std::move(alg)), dims_(std::move(dims)), arrows_(std::move(arrows)) {
    const auto& q = alg_.quiver();
    if (dims_.size() != static_cast<std::size_t>(q.vertexCount) || arrows_.size() != q.arrows.size())
      throw std::invalid_argument("representation shape does not match the quiver");
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].rows() != dims_[q.arrows[a].target] || arrows_[a].cols() != dims_[q.arrows[a].source])
        throw std::invalid_argument("arrow matrix '" + q.arrows[a].name + "' has the wrong shape");
    }
  }

  static Representation zero(const BoundQuiverAlgebra& alg) {
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < alg.arrowCount(); ++a) arrows.emplace_back(alg.field(), 0, 0);
    return {alg, std::vector<std::size_t>(static_cast<std::size_t>(alg.vertexCount()), 0), std::move(arrows)};
  }

  const BoundQuiverAlgebra& algebra() const { return alg_; }
  const PrimeField& field() const { return alg_.field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
  std::size_t totalDim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
  const Matrix& arrow(std::size_t a) const { return arrows_[a]; }
  const std::vector<Matrix>& arrows() const { return arrows_; }

  /// Action of a path; product of arrow matrices in composition order.
  Matrix pathMatrix(const Path& p) const {
    Matrix m = Matrix::identity(field(), dim(p.source));
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) m = arrows_[static_cast<std::size_t>(*it)] * m;
    return m;
  }

  bool satisfiesRelations() const {
    const auto& spec = alg_.spec();
    std::map<std::string, int> byName;
    for (std::size_t a = 0; a < spec.quiver.arrows.size(); ++a) byName[spec.quiver.arrows[a].name] = static_cast<int>(a);
    for (const auto& rel : spec.relations) {
      std::optional<Matrix> sum;
      for (const auto& term : rel) {
        Path p;
        for (const auto& name : term.path) p.arrows.push_back(byName.at(name));
        p.source = spec.quiver.arrows[p.arrows.back()].source;
        p.target = spec.quiver.arrows[p.arrows.front()].target;
        Matrix t = pathMatrix(p).scaled(field().reduce(term.coeff));
        sum = sum ? *sum + t : t;
      }
      if (sum && !sum->isZero()) return false;
    }
    return true;
  }

 private:
  BoundQuiverAlgebra alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> arrows_;
};

/// One d'_i x d_i matrix per vertex.
struct ModuleMorphism {
  Representation source;
  Representation target;
  std::vector<Matrix> maps;

  bool commutes() const {
    const auto& q = source.algebra().quiver();
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const auto s = static_cast<std::size_t>(q.arrows[a].source);
      const auto t = static_cast<std::size_t>(q.arrows[a].target);
      if (!(maps[t] * source.arrow(a) == target.arrow(a) * maps[s])) return false;
    }
    return true;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& m : maps) r += gvec::rank(m);
    return r;
  }

  bool isIsomorphism() const {
    for (const auto& m : maps)
      if (!isInvertible(m)) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::size_t> homOffsets(const Representation& m, const Representation& n) {
  std::vector<std::size_t> off(m.dims().size() + 1, 0);
  for (std::size_t v = 0; v < m.dims().size(); ++v) off[v + 1] = off[v] + n.dims()[v] * m.dims()[v];
  return off;
}

/// Linear system whose kernel is Hom(M, N), in the unknowns f_v[r][c].
inline Matrix homSystem(const Representation& m, const Representation& n) {
  const auto& q = m.algebra().quiver();
  const auto off = homOffsets(m, n);
  std::size_t eqs = 0;
  for (const auto& a : q.arrows) eqs += n.dim(a.target) * m.dim(a.source);
  const PrimeField& f = m.field();
  Matrix sys(f, eqs, off.back());
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    const Matrix& ma = m.arrow(a);
    const Matrix& na = n.arrow(a);
    const std::size_t ms = m.dims()[s], mt = m.dims()[t], ns = n.dims()[s], nt = n.dims()[t];
    for (std::size_t r = 0; r < nt; ++r)
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        // (f_t M_a)[r][c] - (N_a f_s)[r][c]
        for (std::size_t k = 0; k < mt; ++k)
          if (ma(k, c)) sys(row, off[t] + r * mt + k) = f.add(sys(row, off[t] + r * mt + k), ma(k, c));
        for (std::size_t k = 0; k < ns; ++k)
          if (na(r, k)) sys(row, off[s] + k * ms + c) = f.sub(sys(row, off[s] + k * ms + c), na(r, k));
      }
  }
  return sys;
}

}  // namespace detail

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<ModuleMorphism> basis;
};

inline std::size_t homDim(const Representation& m, const Representation& n) {
  Matrix sys = detail::homSystem(m, n);
  return sys.cols() - rank(sys);
}

inline HomSpace homSpace(const Representation& m, const Representation& n) {
  Matrix sys = detail::homSystem(m, n);
  Matrix ker = nullspaceBasis(sys);
  const auto off = detail::homOffsets(m, n);
  HomSpace h{ker.cols(), {}};
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    ModuleMorphism f{m, n, {}};
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
      Matrix mv(m.field(), n.dims()[v], m.dims()[v]);
      for (std::size_t r = 0; r < mv.rows(); ++r)
        for (std::size_t c = 0; c < mv.cols(); ++c) mv(r, c) = ker(off[v] + r * mv.cols() + c, b);
      f.maps.push_back(std::move(mv));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

/// Uniformly random element of a hom space given by a basis.
inline ModuleMorphism randomMorphism(const Representation& m, const Representation& n,
                                     const std::vector<ModuleMorphism>& basis, Rng& rng) {
  const PrimeField& f = m.field();
  ModuleMorphism out{m, n, {}};
  for (std::size_t v = 0; v < m.dims().size(); ++v) out.maps.emplace_back(f, n.dims()[v], m.dims()[v]);
  for (const auto& b : basis) {
    Scalar c = uniform(f, rng);
    for (std::size_t v = 0; v < out.maps.size(); ++v) out.maps[v] = out.maps[v] + b.maps[v].scaled(c);
  }
  return out;
}

inline Representation directSum(const Representation& m, const Representation& n) {
  const auto& q = m.algebra().quiver();
  std::vector<std::size_t> dims(m.dims().size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = m.dims()[v] + n.dims()[v];
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    Matrix x(m.field(), dims[t], dims[s]);
    x.setBlock(0, 0, m.arrow(a));
    x.setBlock(m.dims()[t], m.dims()[s], n.arrow(a));
    arrows.push_back(std::move(x));
  }
  return {m.algebra(), std::move(dims), std::move(arrows)};
}

/// Submodule spanned by `basis` (must be closed under the arrows), in that basis.
inline Representation subrepresentation(const Representation& m, const VertexSubspace& basis) {
  const auto& q = m.algebra().quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : basis) dims.push_back(b.cols());
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    auto x = solve(basis[t], m.arrow(a) * basis[s]);
    if (!x) throw std::logic_error("subspace is not closed under arrow '" + q.arrows[a].name + "'");
    arrows.push_back(std::move(*x));
  }
  return {m.algebra(), std::move(dims), std::move(arrows)};
}

struct Quotient {
  Representation module;
  std::vector<Matrix> projection;  ///< per vertex, full row rank, kernel = the subspace
};

/// M / U for a submodule U given by per-vertex spanning sets (need not be independent).
inline Quotient quotient(const Representation& m, const VertexSubspace& spanning) {
  const auto& q = m.algebra().quiver();
  const PrimeField& f = m.field();
  std::vector<Matrix> proj, rightInv;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < spanning.size(); ++v) {
    Matrix p = spanning[v].cols() == 0 ? Matrix::identity(f, m.dims()[v]) : leftNullspace(spanning[v]);
    dims.push_back(p.rows());
    auto ri = solve(p, Matrix::identity(f, p.rows()));
    rightInv.push_back(*ri);
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto s = static_cast<std::size_t>(q.arrows[a].source);
    const auto t = static_cast<std::size_t>(q.arrows[a].target);
    arrows.push_back(proj[t] * m.arrow(a) * rightInv[s]);
  }
  return {Representation(m.algebra(), std::move(dims), std::move(arrows)), std::move(proj)};
}

inline VertexSubspace kernelOf(const ModuleMorphism& f) {
  VertexSubspace k;
  for (const auto& m : f.maps) k.push_back(nullspaceBasis(m));
  return k;
}

inline VertexSubspace imageOf(const ModuleMorphism& f) {
  VertexSubspace k;
  for (const auto& m : f.maps) k.push_back(columnSpaceBasis(m));
  return k;
}

inline Representation cokernel(const ModuleMorphism& f) {
  return quotient(f.target, imageOf(f)).module;
}

struct RadicalAndTop {
  VertexSubspace radicalBasis;     ///< rad M as a subspace of M
  Representation radical;          ///< rad M as a module
  std::vector<std::size_t> top;    ///< multiplicity of S_(i) in M / rad M
};

/// rad M at vertex j is the sum of the images of the arrows ending at j.
inline RadicalAndTop radicalAndTop(const Representation& m) {
  const auto& q = m.algebra().quiver();
  const PrimeField& f = m.field();
  VertexSubspace rad;
  std::vector<std::size_t> top;
  for (int v = 0; v < q.vertexCount; ++v) {
    Matrix span(f, m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v) span = hstack(span, m.arrow(a));
    Matrix b = columnSpaceBasis(span);
    top.push_back(m.dim(v) - b.cols());
    rad.push_back(std::move(b));
  }
  Representation r = subrepresentation(m, rad);
  return {std::move(rad), std::move(r), std::move(top)};
}

inline Representation simple(const BoundQuiverAlgebra& alg, int i) {
  Representation z = Representation::zero(alg);
  std::vector<std::size_t> dims(static_cast<std::size_t>(alg.vertexCount()), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  std::vector<Matrix> arrows;
  for (const auto& a : alg.quiver().arrows) arrows.emplace_back(alg.field(), dims[a.target], dims[a.source]);
  return {alg, std::move(dims), std::move(arrows)};
}

enum class IsoVerdict { Isomorphic, Undecided, NotIsomorphic };

/// Certificate search: sample Hom(M, N) and stop at the first invertible
/// element. Differing dimension vectors or hom dimensions settle "no" exactly;
/// otherwise `rounds` failures give Undecided.
inline IsoVerdict isomorphic(const Representation& m, const Representation& n, Rng& rng, std::size_t rounds = 20) {
  if (m.dims() != n.dims()) return IsoVerdict::NotIsomorphic;
  HomSpace h = homSpace(m, n);
  if (h.dimension != homDim(m, m) || homDim(n, n) != h.dimension) return IsoVerdict::NotIsomorphic;
  for (std::size_t r = 0; r < rounds; ++r)
    if (randomMorphism(m, n, h.basis, rng).isIsomorphism()) return IsoVerdict::Isomorphic;
  return IsoVerdict::Undecided;
}

}  // namespace gvec
