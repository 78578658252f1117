#include <algorithm>

#include "kronlab/errors.hpp"
#include "kronlab/repcat.hpp"

namespace kronlab {

Rep::Rep(Quiver quiver, DimVector dims, std::vector<RatMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertex_count()) throw InputError("dims length does not match the quiver");
  if (!dims_.is_nonnegative()) throw InputError("representation dims must be non-negative");
  if (maps_.size() != quiver_.arrows().size()) throw InputError("expected one matrix per arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = quiver_.arrow(a);
    if (maps_[a].rows() != dim(ar.source) || maps_[a].cols() != dim(ar.target))
      throw InputError("matrix of arrow " + std::to_string(a + 1) + " has the wrong shape");
  }
}

Rep Rep::zero(const Quiver& q) {
  std::vector<RatMatrix> maps(q.arrows().size());
  return Rep(q, DimVector(q.vertex_count()), std::move(maps));
}

Rep Rep::projective(const Quiver& q, std::size_t v) {
  if (v >= q.vertex_count()) throw InputError("vertex out of range");
  DimVector dims(q.vertex_count());
  for (std::size_t w = 0; w < q.vertex_count(); ++w) dims[w] = static_cast<std::int64_t>(q.paths_between(v, w).size());
  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    const auto& from = q.paths_between(v, ar.source);
    RatMatrix m(from.size(), static_cast<std::size_t>(dims[ar.target]));
    for (std::size_t i = 0; i < from.size(); ++i) m(i, q.extend(from[i], a)) = 1;
    maps.push_back(std::move(m));
  }
  return Rep(q, std::move(dims), std::move(maps));
}

Rep Rep::injective(const Quiver& q, std::size_t v) {
  if (v >= q.vertex_count()) throw InputError("vertex out of range");
  DimVector dims(q.vertex_count());
  for (std::size_t w = 0; w < q.vertex_count(); ++w) dims[w] = static_cast<std::int64_t>(q.paths_between(w, v).size());
  std::vector<RatMatrix> maps;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    const auto& to = q.paths_between(ar.target, v);
    RatMatrix m(static_cast<std::size_t>(dims[ar.source]), to.size());
    for (std::size_t j = 0; j < to.size(); ++j) m(q.prepend(a, to[j]), j) = 1;
    maps.push_back(std::move(m));
  }
  return Rep(q, std::move(dims), std::move(maps));
}

Rep Rep::simple(const Quiver& q, std::size_t v) {
  if (v >= q.vertex_count()) throw InputError("vertex out of range");
  DimVector dims = DimVector::unit(q.vertex_count(), v);
  std::vector<RatMatrix> maps;
  for (const auto& ar : q.arrows())
    maps.emplace_back(static_cast<std::size_t>(dims[ar.source]), static_cast<std::size_t>(dims[ar.target]));
  return Rep(q, std::move(dims), std::move(maps));
}

Rep Rep::random(const Quiver& q, const DimVector& dims, long bound, std::mt19937_64& rng) {
  if (dims.size() != q.vertex_count() || !dims.is_nonnegative()) throw InputError("invalid dimension vector");
  std::vector<RatMatrix> maps;
  for (const auto& ar : q.arrows())
    maps.push_back(random_matrix(static_cast<std::size_t>(dims[ar.source]), static_cast<std::size_t>(dims[ar.target]),
                                 bound, rng));
  return Rep(q, dims, std::move(maps));
}

RatMatrix Rep::path_map(const Path& p) const {
  RatMatrix m = RatMatrix::identity(dim(p.source));
  for (std::size_t a : p.arrows) m = m * maps_[a];
  return m;
}

Rep Rep::dual() const {
  std::vector<RatMatrix> maps;
  maps.reserve(maps_.size());
  for (const auto& m : maps_) maps.push_back(m.transpose());
  return Rep(quiver_.opposite(), dims_, std::move(maps));
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver() == b.quiver())) throw InputError("direct sum of representations of different quivers");
  const Quiver& q = a.quiver();
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& x = a.map(k);
    const auto& y = b.map(k);
    RatMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(m));
  }
  return Rep(q, a.dims() + b.dims(), std::move(maps));
}

bool is_morphism(const Rep& x, const Rep& y, const Morphism& f) {
  if (!(x.quiver() == y.quiver())) throw InputError("morphism between representations of different quivers");
  const Quiver& q = x.quiver();
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v].rows() != x.dim(v) || f[v].cols() != y.dim(v)) return false;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(x.map(a) * f[ar.target] == f[ar.source] * y.map(a))) return false;
  }
  return true;
}

HomSpace hom_space(const Rep& x, const Rep& y) {
  if (!(x.quiver() == y.quiver())) throw InputError("Hom between representations of different quivers");
  const Quiver& q = x.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + x.dim(v) * y.dim(v);
  std::vector<std::size_t> eq_off(q.arrows().size() + 1, 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    eq_off[a + 1] = eq_off[a] + x.dim(ar.source) * y.dim(ar.target);
  }
  // Unknown (v,i,j) is f_v[i][j]; equation (a,r,c) is entry (r,c) of X_a f_w - f_u Y_a.
  RatMatrix sys(off[n], eq_off.back());
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t u = ar.source, w = ar.target;
    const RatMatrix& xa = x.map(a);
    const RatMatrix& ya = y.map(a);
    for (std::size_t r = 0; r < x.dim(u); ++r)
      for (std::size_t c = 0; c < y.dim(w); ++c) {
        const std::size_t eq = eq_off[a] + r * y.dim(w) + c;
        for (std::size_t k = 0; k < x.dim(w); ++k) sys(off[w] + k * y.dim(w) + c, eq) += xa(r, k);
        for (std::size_t k = 0; k < y.dim(u); ++k) sys(off[u] + r * y.dim(u) + k, eq) -= ya(k, c);
      }
  }
  const RatMatrix ker = kernel_basis(sys);
  HomSpace h{x, y, {}};
  for (std::size_t b = 0; b < ker.rows(); ++b) {
    Morphism f;
    for (std::size_t v = 0; v < n; ++v) {
      RatMatrix m(x.dim(v), y.dim(v));
      for (std::size_t i = 0; i < x.dim(v); ++i)
        for (std::size_t j = 0; j < y.dim(v); ++j) m(i, j) = ker(b, off[v] + i * y.dim(v) + j);
      f.push_back(std::move(m));
    }
    h.basis.push_back(std::move(f));
  }
  return h;
}

namespace {

// S^+ at every vertex, sinks first. `arrows` tracks the current orientation;
// each arrow ends up reversed twice, so the result lives on the original quiver.
Rep reflect_all_sinks(const Rep& x) {
  const Quiver& q = x.quiver();
  std::vector<Arrow> arrows = q.arrows();
  std::vector<RatMatrix> maps = x.maps();
  std::vector<std::size_t> dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = x.dim(v);

  const auto& topo = q.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const std::size_t k = *it;
    std::vector<std::size_t> incoming;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].source == k) throw ModelInconsistency("reflection at a vertex that is not a sink");
      if (arrows[a].target == k) incoming.push_back(a);
    }
    std::size_t total = 0;
    for (std::size_t a : incoming) total += dims[arrows[a].source];
    RatMatrix stacked(total, dims[k]);
    std::size_t r0 = 0;
    for (std::size_t a : incoming) {
      for (std::size_t i = 0; i < maps[a].rows(); ++i)
        for (std::size_t j = 0; j < dims[k]; ++j) stacked(r0 + i, j) = maps[a](i, j);
      r0 += maps[a].rows();
    }
    const RatMatrix ker = kernel_basis(stacked);
    r0 = 0;
    for (std::size_t a : incoming) {
      const std::size_t width = dims[arrows[a].source];
      RatMatrix m(ker.rows(), width);
      for (std::size_t i = 0; i < ker.rows(); ++i)
        for (std::size_t j = 0; j < width; ++j) m(i, j) = ker(i, r0 + j);
      r0 += width;
      maps[a] = std::move(m);
      std::swap(arrows[a].source, arrows[a].target);
    }
    dims[k] = ker.rows();
  }
  DimVector d(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) d[v] = static_cast<std::int64_t>(dims[v]);
  return Rep(q, std::move(d), std::move(maps));
}

}  // namespace

Rep coxeter_functor(const Rep& x, Direction dir) {
  if (dir == Direction::forward) return reflect_all_sinks(x);
  const Rep back = reflect_all_sinks(x.dual()).dual();
  return Rep(x.quiver(), back.dims(), back.maps());
}

}  // namespace kronlab
