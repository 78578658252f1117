#include <map>
#include <tuple>

#include "kronlab/errors.hpp"
#include "kronlab/repcat.hpp"

namespace kronlab {

namespace {

// Offsets of the generator blocks inside (Q0)_w.
std::vector<std::size_t> block_offsets(const Quiver& q, const ProjectivePresentation& p, std::size_t w) {
  std::vector<std::size_t> off(p.generators.size() + 1, 0);
  for (std::size_t g = 0; g < p.generators.size(); ++g)
    off[g + 1] = off[g] + q.paths_between(p.generators[g].vertex, w).size();
  return off;
}

// Indices of the columns of [fixed | candidates] (as column vectors) chosen
// greedily after the fixed ones; i.e. candidates independent modulo span(fixed).
std::vector<std::size_t> extend_modulo(const std::vector<RatVector>& fixed, const std::vector<RatVector>& candidates,
                                       std::size_t length) {
  if (candidates.empty() || length == 0) return {};
  RatMatrix t(length, fixed.size() + candidates.size());
  for (std::size_t c = 0; c < fixed.size(); ++c)
    for (std::size_t r = 0; r < length; ++r) t(r, c) = fixed[c][r];
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t r = 0; r < length; ++r) t(r, fixed.size() + c) = candidates[c][r];
  std::vector<std::size_t> chosen;
  for (std::size_t c : row_echelon(t).pivot_columns)
    if (c >= fixed.size()) chosen.push_back(c - fixed.size());
  return chosen;
}

RatMatrix incoming_images(const Rep& x, std::size_t v) {
  const Quiver& q = x.quiver();
  RatMatrix images(0, x.dim(v));
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    if (q.arrow(a).target != v) continue;
    for (std::size_t r = 0; r < x.map(a).rows(); ++r) images.append_row(x.map(a).row(r));
  }
  return images;
}

}  // namespace

DimVector top_dims(const Rep& x) {
  DimVector d(x.quiver().vertex_count());
  for (std::size_t v = 0; v < d.size(); ++v)
    d[v] = static_cast<std::int64_t>(x.dim(v) - (x.dim(v) == 0 ? 0 : rank(incoming_images(x, v))));
  return d;
}

DimVector ProjectivePresentation::q0_multiplicities(std::size_t n) const {
  DimVector d(n);
  for (const auto& g : generators) ++d[g.vertex];
  return d;
}

DimVector ProjectivePresentation::q1_multiplicities(std::size_t n) const {
  DimVector d(n);
  for (const auto& r : relations) ++d[r.vertex];
  return d;
}

ProjectivePresentation projective_presentation(const Rep& x) {
  const Quiver& q = x.quiver();
  const std::size_t n = q.vertex_count();
  ProjectivePresentation pres;

  // Top of X: a complement of the arrow images at each vertex, lifted by unit vectors.
  for (std::size_t v = 0; v < n; ++v) {
    if (x.dim(v) == 0) continue;
    std::vector<bool> pivot(x.dim(v), false);
    for (std::size_t c : row_echelon(incoming_images(x, v)).pivot_columns) pivot[c] = true;
    for (std::size_t j = 0; j < x.dim(v); ++j) {
      if (pivot[j]) continue;
      RatVector e(x.dim(v));
      e[j] = 1;
      pres.generators.push_back({v, std::move(e)});
    }
  }

  // Kernel of Q0 -> X, vertex by vertex.
  std::vector<std::vector<std::size_t>> offsets(n);
  std::vector<RatMatrix> kernels(n);
  for (std::size_t w = 0; w < n; ++w) {
    offsets[w] = block_offsets(q, pres, w);
    RatMatrix pi(offsets[w].back(), x.dim(w));
    for (std::size_t g = 0; g < pres.generators.size(); ++g) {
      const auto& gen = pres.generators[g];
      const auto& paths = q.paths_between(gen.vertex, w);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        const RatVector img = row_times(gen.coords, x.path_map(paths[p]));
        for (std::size_t j = 0; j < img.size(); ++j) pi(offsets[w][g] + p, j) = img[j];
      }
    }
    if (rank(pi) != x.dim(w)) throw ModelInconsistency("projective cover is not surjective");
    kernels[w] = kernel_basis(pi);
  }

  // Generators of the kernel: elements not reached from other vertices by arrows.
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t len = offsets[w].back();
    std::vector<RatVector> images;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (ar.target != w) continue;
      const std::size_t u = ar.source;
      for (std::size_t k = 0; k < kernels[u].rows(); ++k) {
        RatVector img(len);
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
          const auto& paths = q.paths_between(pres.generators[g].vertex, u);
          for (std::size_t p = 0; p < paths.size(); ++p) {
            const Rational& c = kernels[u](k, offsets[u][g] + p);
            if (sgn(c) != 0) img[offsets[w][g] + q.extend(paths[p], a)] += c;
          }
        }
        images.push_back(std::move(img));
      }
    }
    if (images.empty()) {
      for (std::size_t k = 0; k < kernels[w].rows(); ++k) pres.relations.push_back({w, kernels[w].row_vector(k)});
      continue;
    }
    std::vector<RatVector> candidates;
    for (std::size_t k = 0; k < kernels[w].rows(); ++k) candidates.push_back(kernels[w].row_vector(k));
    for (std::size_t c : extend_modulo(images, candidates, len)) pres.relations.push_back({w, candidates[c]});
  }
  return pres;
}

PresentedRep::PresentedRep(Rep x)
    : rep_(std::move(x)), dual_(rep_.dual()), top_(top_dims(rep_)), dual_top_(top_dims(dual_)),
      cache_(std::make_shared<Cache>()) {}

const ProjectivePresentation& PresentedRep::presentation() const {
  std::call_once(cache_->own_flag, [this] { cache_->own = projective_presentation(rep_); });
  return cache_->own;
}

const ProjectivePresentation& PresentedRep::dual_presentation() const {
  std::call_once(cache_->dual_flag, [this] { cache_->dual = projective_presentation(dual_); });
  return cache_->dual;
}

namespace {

// Sizes of Hom(Q0,Y) and Hom(Q1,Y) for a minimal presentation of X, from the
// top of X alone: the multiplicity of P(v) in Q1 is dim Ext^1(X,S_v) =
// top_v - <dim X, e_v>.
std::pair<std::size_t, std::size_t> system_shape(const Quiver& q, const DimVector& x, const DimVector& top,
                                                 const DimVector& y) {
  std::int64_t rows = 0, cols = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const std::int64_t q1 = top[v] - euler_form(q, x, DimVector::unit(q.vertex_count(), v));
    rows += top[v] * y[v];
    cols += q1 * y[v];
  }
  return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)};
}

// Matrix of Hom(Q0,Y) -> Hom(Q1,Y) with Hom(P(v),Y) identified with Y_v.
RatMatrix hom_restriction_matrix(const ProjectivePresentation& p, const Rep& y) {
  const Quiver& q = y.quiver();
  std::size_t rows = 0, cols = 0;
  for (const auto& g : p.generators) rows += y.dim(g.vertex);
  for (const auto& r : p.relations) cols += y.dim(r.vertex);
  RatMatrix m(rows, cols);
  std::vector<std::size_t> row_off(p.generators.size() + 1, 0);
  for (std::size_t g = 0; g < p.generators.size(); ++g) row_off[g + 1] = row_off[g] + y.dim(p.generators[g].vertex);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, RatMatrix> path_maps;
  auto path_map = [&](std::size_t u, std::size_t w, std::size_t idx) -> const RatMatrix& {
    auto key = std::make_tuple(u, w, idx);
    auto it = path_maps.find(key);
    if (it == path_maps.end()) it = path_maps.emplace(key, y.path_map(q.paths_between(u, w)[idx])).first;
    return it->second;
  };

  std::size_t col = 0;
  for (const auto& rel : p.relations) {
    const std::size_t w = rel.vertex;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      const std::size_t v = p.generators[g].vertex;
      const auto& paths = q.paths_between(v, w);
      for (std::size_t k = 0; k < paths.size(); ++k, ++pos) {
        const Rational& c = rel.coords[pos];
        if (sgn(c) == 0) continue;
        const RatMatrix& yp = path_map(v, w, k);
        for (std::size_t i = 0; i < y.dim(v); ++i)
          for (std::size_t j = 0; j < y.dim(w); ++j)
            if (sgn(yp(i, j)) != 0) m(row_off[g] + i, col + j) += c * yp(i, j);
      }
    }
    col += y.dim(w);
  }
  return m;
}

}  // namespace

HomExt hom_ext(const PresentedRep& x, const PresentedRep& y, RankMethod method, bool same) {
  const Quiver& q = x.rep().quiver();
  if (!(q == y.rep().quiver())) throw InputError("Hom/Ext between representations of different quivers");
  const std::int64_t euler = euler_form(q, x.rep().dims(), y.rep().dims());

  // Hom_Q(X,Y) = Hom_{Q^op}(DY,DX), and likewise for Ext^1.
  const auto [a_rows, a_cols] = system_shape(q, x.rep().dims(), x.top(), y.rep().dims());
  const auto [b_rows, b_cols] = system_shape(y.dual().quiver(), y.rep().dims(), y.dual_top(), x.rep().dims());
  const bool use_a = a_rows * a_cols <= b_rows * b_cols;
  const RatMatrix m = use_a ? hom_restriction_matrix(x.presentation(), y.rep())
                            : hom_restriction_matrix(y.dual_presentation(), x.dual());
  if (static_cast<std::int64_t>(m.rows()) - static_cast<std::int64_t>(m.cols()) != euler)
    throw ModelInconsistency("presentation does not match the Euler form");

  if (method == RankMethod::certified) {
    std::int64_t lower = std::max<std::int64_t>(euler, 0);
    if (same && !x.rep().is_zero()) lower = std::max<std::int64_t>(lower, 1);
    if (auto rp = rank_mod_p(m)) {
      const std::int64_t upper = static_cast<std::int64_t>(m.rows() - *rp);
      if (upper == lower)
        return {static_cast<std::size_t>(lower), static_cast<std::size_t>(lower - euler)};
    }
  }
  const std::size_t r = rank(m);
  return {m.rows() - r, m.cols() - r};
}

HomExt hom_ext(const Rep& x, const Rep& y, RankMethod method) {
  const PresentedRep px(x);
  if (x == y) return hom_ext(px, px, method, true);
  return hom_ext(px, PresentedRep(y), method);
}

std::size_t ext1_dim(const Rep& x, const Rep& y) { return hom_ext(x, y).ext; }

}  // namespace kronlab
