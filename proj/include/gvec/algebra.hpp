#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gvec/field.hpp"
#include "gvec/matrix.hpp"

namespace gvec {

struct Arrow {
  std::string name;
  int source = 0;  ///< 0-based vertex
  int target = 0;
};

struct Quiver {
  int vertexCount = 0;
  std::vector<Arrow> arrows;
};

/// A path in Q. `arrows` is in function-composition order: arrows.front()
/// is applied last, so "beta alpha" with alpha: 1->2, beta: 2->3 is {beta, alpha}.
/// The trivial path e_v has no arrows and source == target == v.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct RelationTerm {
  std::int64_t coeff = 0;
  std::vector<std::string> path;  ///< arrow names, leftmost applied last
};

using Relation = std::vector<RelationTerm>;

/// Input to buildAlgebra: Q, generators of I, and the nilpotency bound m
/// (every path of length >= m must lie in I).
struct AlgebraSpec {
  Quiver quiver;
  std::vector<Relation> relations;
  int nilpotency = 2;
};

class AlgebraError : public std::runtime_error {
 public:
  enum class Kind { MalformedQuiver, MalformedRelation, NotAdmissible };

  AlgebraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline const char* toString(AlgebraError::Kind k) {
  switch (k) {
    case AlgebraError::Kind::MalformedQuiver: return "MalformedQuiver";
    case AlgebraError::Kind::MalformedRelation: return "MalformedRelation";
    case AlgebraError::Kind::NotAdmissible: return "NotAdmissible";
  }
  return "?";
}

/// Sparse linear combination of basis elements (global indices).
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Lambda = kQ/I over F_p realized on a basis of normal paths.
///
/// Elements of e_j Lambda e_i (paths from i to j) are handled in "local"
/// coordinates: a vector of length cartan(j, i) over block(j, i).
/// The object is immutable and cheap to copy (shared state).
class BoundQuiverAlgebra {
 public:
  const PrimeField& field() const { return d_->field; }
  const AlgebraSpec& spec() const { return d_->spec; }
  const Quiver& quiver() const { return d_->spec.quiver; }
  int vertexCount() const { return d_->spec.quiver.vertexCount; }
  std::size_t arrowCount() const { return d_->spec.quiver.arrows.size(); }
  std::size_t dim() const { return d_->basis.size(); }

  const std::vector<Path>& basis() const { return d_->basis; }
  const std::vector<std::size_t>& block(int j, int i) const { return d_->blocks[idx(j, i)]; }
  std::size_t cartan(int j, int i) const { return block(j, i).size(); }
  std::size_t localIndex(std::size_t global) const { return d_->local[global]; }
  std::size_t idempotentIndex(int v) const { return d_->idempotent[static_cast<std::size_t>(v)]; }
  std::size_t arrowIndex(int a) const { return d_->arrowBasis[static_cast<std::size_t>(a)]; }

  /// C[j][i] = dim e_j Lambda e_i; column i is [P_(i)].
  std::vector<std::vector<std::size_t>> cartanMatrix() const {
    const int n = vertexCount();
    std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) c[j][i] = cartan(j, i);
    return c;
  }

  /// Product of two global basis elements.
  const SparseVec& product(std::size_t x, std::size_t y) const { return d_->mult[x * dim() + y]; }

  /// x in e_a Lambda e_b, y in e_b Lambda e_c, both local; returns x*y in
  /// e_a Lambda e_c, local.
  std::vector<Scalar> multiply(int a, int b, int c, std::span<const Scalar> x,
                               std::span<const Scalar> y) const {
    std::vector<Scalar> out(cartan(a, c), 0);
    accumulateProduct(a, b, c, x, y, out);
    return out;
  }

  /// out += x*y, shapes as in multiply().
  void accumulateProduct(int a, int b, int c, std::span<const Scalar> x, std::span<const Scalar> y,
                         std::span<Scalar> out) const {
    const PrimeField& f = field();
    const auto& t = d_->tensors[(static_cast<std::size_t>(a) * n() + b) * n() + c];
    const std::size_t ny = cartan(b, c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < ny; ++j) {
        if (y[j] == 0) continue;
        Scalar s = f.mul(x[i], y[j]);
        for (const auto& [k, v] : t[i * ny + j]) out[k] = f.add(out[k], f.mul(s, v));
      }
    }
  }

  std::string pathName(const Path& p) const {
    if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      if (k) s += "*";
      s += quiver().arrows[static_cast<std::size_t>(p.arrows[k])].name;
    }
    return s;
  }

  /// Same algebra rebuilt over another prime.
  BoundQuiverAlgebra withPrime(std::uint64_t p) const;

  friend BoundQuiverAlgebra buildAlgebra(const AlgebraSpec& spec, PrimeField field);

 private:
  struct Data {
    PrimeField field;
    AlgebraSpec spec;
    std::vector<Path> basis;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> local;
    std::vector<std::size_t> idempotent;
    std::vector<std::size_t> arrowBasis;
    std::vector<SparseVec> mult;
    // tensors[(a*n+b)*n+c][i*cartan(b,c)+j]: local product of block(a,b)[i] and block(b,c)[j]
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> tensors;
  };

  std::size_t n() const { return static_cast<std::size_t>(vertexCount()); }
  std::size_t idx(int j, int i) const { return static_cast<std::size_t>(j) * n() + static_cast<std::size_t>(i); }

  std::shared_ptr<const Data> d_;
};

namespace detail {

inline void validateQuiver(const AlgebraSpec& spec) {
  using K = AlgebraError::Kind;
  const Quiver& q = spec.quiver;
  if (q.vertexCount < 1) throw AlgebraError(K::MalformedQuiver, "quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : q.arrows) {
    if (a.name.empty()) throw AlgebraError(K::MalformedQuiver, "arrow with empty name");
    if (!names.insert(a.name).second)
      throw AlgebraError(K::MalformedQuiver, "duplicate arrow name '" + a.name + "'");
    if (a.source < 0 || a.source >= q.vertexCount || a.target < 0 || a.target >= q.vertexCount)
      throw AlgebraError(K::MalformedQuiver, "arrow '" + a.name + "' has an endpoint outside [1, " +
                                                 std::to_string(q.vertexCount) + "]");
  }
  if (spec.nilpotency < 2) throw AlgebraError(K::MalformedQuiver, "nilpotency bound must be at least 2");
}

struct ResolvedRelation {
  int source = 0;
  int target = 0;
  std::vector<std::pair<std::vector<int>, Scalar>> terms;
  std::size_t minLength = 0;
};

inline std::vector<ResolvedRelation> resolveRelations(const AlgebraSpec& spec, const PrimeField& f) {
  using K = AlgebraError::Kind;
  const Quiver& q = spec.quiver;
  std::map<std::string, int> byName;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) byName[q.arrows[a].name] = static_cast<int>(a);

  std::vector<ResolvedRelation> out;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    const std::string where = "relation " + std::to_string(r + 1);
    std::map<std::vector<int>, Scalar> combined;
    int src = -1, tgt = -1;
    for (std::size_t t = 0; t < spec.relations[r].size(); ++t) {
      const auto& term = spec.relations[r][t];
      const std::string at = where + ", term " + std::to_string(t + 1);
      if (term.path.empty()) throw AlgebraError(K::MalformedRelation, at + ": empty path");
      std::vector<int> arrows;
      for (const auto& name : term.path) {
        auto it = byName.find(name);
        if (it == byName.end()) throw AlgebraError(K::MalformedRelation, at + ": unknown arrow '" + name + "'");
        arrows.push_back(it->second);
      }
      for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
        if (q.arrows[arrows[k]].source != q.arrows[arrows[k + 1]].target)
          throw AlgebraError(K::MalformedRelation,
                             at + ": arrows '" + term.path[k] + "' and '" + term.path[k + 1] + "' do not compose");
      }
      int s = q.arrows[arrows.back()].source, e = q.arrows[arrows.front()].target;
      if (src < 0) {
        src = s;
        tgt = e;
      } else if (s != src || e != tgt) {
        throw AlgebraError(K::MalformedRelation, at + ": paths of a relation must be parallel");
      }
      Scalar c = f.reduce(term.coeff);
      combined[arrows] = f.add(combined[arrows], c);
    }
    ResolvedRelation rel{src, tgt, {}, SIZE_MAX};
    for (auto& [arrows, c] : combined) {
      if (c == 0) continue;
      if (arrows.size() < 2)
        throw AlgebraError(K::NotAdmissible,
                           where + ": a term of length " + std::to_string(arrows.size()) +
                               " is not in the square of the arrow ideal");
      rel.minLength = std::min(rel.minLength, arrows.size());
      rel.terms.emplace_back(arrows, c);
    }
    if (!rel.terms.empty()) out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace detail

/// Builds kQ/I. Paths of length <= m are enumerated, the ideal generated by
/// the relations is reduced blockwise, and the leading (longest) paths of the
/// reduced ideal are eliminated, leaving a basis of normal paths. A normal
/// path of length m means I does not contain J^m: NotAdmissible.
inline BoundQuiverAlgebra buildAlgebra(const AlgebraSpec& spec, PrimeField field) {
  using K = AlgebraError::Kind;
  detail::validateQuiver(spec);
  const auto relations = detail::resolveRelations(spec, field);
  const Quiver& q = spec.quiver;
  const int n = q.vertexCount;
  const auto m = static_cast<std::size_t>(spec.nilpotency);
  constexpr std::size_t kMaxPaths = 200000;

  // Enumerate paths of length <= m, by length.
  std::vector<Path> paths;
  for (int v = 0; v < n; ++v) paths.push_back({v, v, {}});
  std::size_t levelBegin = 0;
  for (std::size_t len = 1; len <= m; ++len) {
    std::size_t levelEnd = paths.size();
    for (std::size_t p = levelBegin; p < levelEnd; ++p) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[p].target) continue;
        Path np{paths[p].source, q.arrows[a].target, {}};
        np.arrows.reserve(len);
        np.arrows.push_back(static_cast<int>(a));
        np.arrows.insert(np.arrows.end(), paths[p].arrows.begin(), paths[p].arrows.end());
        paths.push_back(std::move(np));
        if (paths.size() > kMaxPaths)
          throw AlgebraError(K::NotAdmissible, "more than " + std::to_string(kMaxPaths) +
                                                   " paths below the nilpotency bound; lower it or add relations");
      }
    }
    levelBegin = levelEnd;
  }

  std::map<Path, std::size_t> pathIndex;
  for (std::size_t i = 0; i < paths.size(); ++i) pathIndex.emplace(paths[i], i);
  std::vector<std::vector<std::size_t>> bySource(n), byTarget(n);
  std::vector<std::vector<std::size_t>> byBlock(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    bySource[paths[i].source].push_back(i);
    byTarget[paths[i].target].push_back(i);
    byBlock[static_cast<std::size_t>(paths[i].target * n + paths[i].source)].push_back(i);
  }

  auto concat = [&](const Path& x, const Path& y) {
    Path r{y.source, x.target, x.arrows};
    r.arrows.insert(r.arrows.end(), y.arrows.begin(), y.arrows.end());
    return r;
  };

  // Ideal generators u*rel*v, truncated at length m, grouped by block.
  std::vector<std::vector<std::map<std::size_t, Scalar>>> gens(static_cast<std::size_t>(n * n));
  for (const auto& rel : relations) {
    for (std::size_t u : bySource[rel.target]) {
      for (std::size_t v : byTarget[rel.source]) {
        if (paths[u].length() + rel.minLength + paths[v].length() > m) continue;
        std::map<std::size_t, Scalar> row;
        for (const auto& [w, c] : rel.terms) {
          if (paths[u].length() + w.size() + paths[v].length() > m) continue;
          Path mid{rel.source, rel.target, w};
          Path full = concat(concat(paths[u], mid), paths[v]);
          auto& slot = row[pathIndex.at(full)];
          slot = field.add(slot, c);
        }
        if (!row.empty())
          gens[static_cast<std::size_t>(paths[u].target * n + paths[v].source)].push_back(std::move(row));
      }
    }
  }

  // Blockwise elimination; columns ordered longest-first so pivots land on leading paths.
  std::vector<SparseVec> normalForm(paths.size());
  std::vector<bool> isNormal(paths.size(), true);
  std::vector<std::size_t> basisOf(paths.size(), SIZE_MAX);
  for (std::size_t b = 0; b < byBlock.size(); ++b) {
    if (gens[b].empty()) continue;
    const auto& cols = byBlock[b];
    std::map<std::size_t, std::size_t> colOf;
    for (std::size_t k = 0; k < cols.size(); ++k) colOf[cols[k]] = cols.size() - 1 - k;
    Matrix g(field, gens[b].size(), cols.size());
    for (std::size_t r = 0; r < gens[b].size(); ++r)
      for (const auto& [p, c] : gens[b][r]) g(r, colOf.at(p)) = c;
    Echelon e = rref(std::move(g));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::size_t pivotPath = cols[cols.size() - 1 - e.pivots[r]];
      isNormal[pivotPath] = false;
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      std::size_t pivotPath = cols[cols.size() - 1 - e.pivots[r]];
      SparseVec nf;
      for (std::size_t c = e.pivots[r] + 1; c < cols.size(); ++c) {
        Scalar x = e.reduced(r, c);
        if (x != 0) nf.emplace_back(cols[cols.size() - 1 - c], field.neg(x));
      }
      normalForm[pivotPath] = std::move(nf);
    }
  }

  auto d = std::make_shared<typename BoundQuiverAlgebra::Data>();
  d->field = field;
  d->spec = spec;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!isNormal[i]) continue;
    if (paths[i].length() >= m) {
      Path p = paths[i];
      std::string name;
      for (std::size_t k = 0; k < p.arrows.size(); ++k)
        name += (k ? "*" : "") + q.arrows[static_cast<std::size_t>(p.arrows[k])].name;
      throw AlgebraError(K::NotAdmissible, "path " + name + " of length " + std::to_string(m) +
                                               " is nonzero modulo the relations; increase m or add relations");
    }
    basisOf[i] = d->basis.size();
    d->basis.push_back(paths[i]);
  }
  // Normal forms now in terms of basis indices.
  std::vector<SparseVec> nfBasis(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (isNormal[i]) {
      if (basisOf[i] != SIZE_MAX) nfBasis[i] = {{basisOf[i], 1}};
    } else {
      for (const auto& [p, c] : normalForm[i]) nfBasis[i].emplace_back(basisOf[p], c);
    }
  }

  const std::size_t dim = d->basis.size();
  d->blocks.assign(static_cast<std::size_t>(n * n), {});
  d->local.assign(dim, 0);
  for (std::size_t x = 0; x < dim; ++x) {
    auto& blk = d->blocks[static_cast<std::size_t>(d->basis[x].target * n + d->basis[x].source)];
    d->local[x] = blk.size();
    blk.push_back(x);
  }
  d->idempotent.resize(n);
  for (int v = 0; v < n; ++v) d->idempotent[v] = basisOf[pathIndex.at(Path{v, v, {}})];
  d->arrowBasis.resize(q.arrows.size());
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    Path p{q.arrows[a].source, q.arrows[a].target, {static_cast<int>(a)}};
    d->arrowBasis[a] = basisOf[pathIndex.at(p)];
  }

  d->mult.assign(dim * dim, {});
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      const Path& px = d->basis[x];
      const Path& py = d->basis[y];
      if (px.source != py.target || px.length() + py.length() > m) continue;
      d->mult[x * dim + y] = nfBasis[pathIndex.at(concat(px, py))];
    }
  }

  const auto nn = static_cast<std::size_t>(n);
  d->tensors.assign(nn * nn * nn, {});
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = 0; b < nn; ++b)
      for (std::size_t c = 0; c < nn; ++c) {
        const auto& bx = d->blocks[a * nn + b];
        const auto& by = d->blocks[b * nn + c];
        auto& t = d->tensors[(a * nn + b) * nn + c];
        t.assign(bx.size() * by.size(), {});
        for (std::size_t i = 0; i < bx.size(); ++i)
          for (std::size_t j = 0; j < by.size(); ++j)
            for (const auto& [k, v] : d->mult[bx[i] * dim + by[j]]) t[i * by.size() + j].emplace_back(d->local[k], v);
      }

  BoundQuiverAlgebra alg;
  alg.d_ = std::move(d);
  return alg;
}

inline BoundQuiverAlgebra BoundQuiverAlgebra::withPrime(std::uint64_t p) const {
  return buildAlgebra(spec(), PrimeField(p));
}

}  // namespace gvec
