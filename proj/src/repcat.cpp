#include <algorithm>

#include "kronlab/errors.hpp"
#include "kronlab/repcat.hpp"

namespace kronlab {

namespace {

RatVector flatten(const Morphism& f) {
  RatVector out;
  for (const auto& m : f)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& x : m.row(r)) out.push_back(x);
  return out;
}

Morphism compose(const Morphism& a, const Morphism& b) {
  Morphism out;
  for (std::size_t v = 0; v < a.size(); ++v) out.push_back(a[v] * b[v]);
  return out;
}

}  // namespace

std::size_t end_radical_dim(const Rep& x) {
  const HomSpace end = hom_space(x, x);
  const std::size_t k = end.dim();
  if (k <= 1) return 0;
  std::vector<RatVector> flat;
  for (const auto& f : end.basis) flat.push_back(flatten(f));
  const RatMatrix basis = RatMatrix::from_rows(flat, flat.front().size());

  // c[i][j] holds the coordinates of e_i e_j.
  std::vector<std::vector<RatVector>> c(k, std::vector<RatVector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto coords = solve(basis, flatten(compose(end.basis[i], end.basis[j])));
      if (!coords) throw ModelInconsistency("endomorphism product left the Hom space");
      c[i][j] = std::move(*coords);
    }
  // tr(L_{e_s}) = sum_l c[s][l][l]; the trace form is G_ij = tr(L_{e_i e_j}).
  RatVector trace(k);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t l = 0; l < k; ++l) trace[s] += c[s][l][l];
  RatMatrix g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t s = 0; s < k; ++s) g(i, j) += c[i][j][s] * trace[s];
  return k - rank(g);
}

bool is_indecomposable(const Rep& x) {
  if (x.is_zero()) throw InputError("the zero representation has no indecomposability status");
  const std::size_t end = hom_space(x, x).dim();
  if (end == 1) return true;
  return end - end_radical_dim(x) == 1;
}

bool is_rigid(const Rep& x) {
  if (x.is_zero()) return true;
  const PresentedRep px(x);
  return hom_ext(px, px, RankMethod::certified, true).ext == 0;
}

Rep generic_rigid_rep(const Quiver& q, const DimVector& d, std::size_t trials, long bound, std::mt19937_64& rng) {
  if (d.size() != q.vertex_count() || !d.is_nonnegative() || d.is_zero())
    throw InputError("generic_rigid_rep needs a non-zero, non-negative dimension vector");
  // End = k and Ext^1 = 0 force q(d) = dim End - dim Ext^1 = 1.
  if (tits_form(q, d) != 1) throw GenericityError("genericity not attained at " + to_string(d));
  for (std::size_t t = 0; t < trials; ++t) {
    Rep x = Rep::random(q, d, bound, rng);
    const PresentedRep px(x);
    const HomExt he = hom_ext(px, px, RankMethod::certified, true);
    if (he.hom == 1 && he.ext == 0) return x;
  }
  throw GenericityError("genericity not attained at " + to_string(d));
}

bool is_schur_root(const Quiver& q, const DimVector& d, std::size_t trials, long bound, std::mt19937_64& rng) {
  if (d.size() != q.vertex_count() || !d.is_nonnegative() || d.is_zero())
    throw InputError("is_schur_root needs a non-zero, non-negative dimension vector");
  for (std::size_t t = 0; t < trials; ++t) {
    const PresentedRep px(Rep::random(q, d, bound, rng));
    if (hom_ext(px, px, RankMethod::certified, true).hom == 1) return true;
  }
  return false;
}

bool iso_check(const Rep& x, const Rep& y) {
  if (!(x.quiver() == y.quiver())) throw InputError("iso_check on representations of different quivers");
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  const HomSpace h = hom_space(x, y);
  if (h.dim() == 0) return false;
  std::mt19937_64 rng = derived_rng(0, {static_cast<std::int64_t>(h.dim())});
  std::uniform_int_distribution<long> coef(-10, 10);
  const std::size_t n = x.quiver().vertex_count();
  for (int attempt = 0; attempt < 4; ++attempt) {
    Morphism f;
    for (std::size_t v = 0; v < n; ++v) f.emplace_back(x.dim(v), y.dim(v));
    for (const auto& b : h.basis) {
      const Rational c(coef(rng));
      for (std::size_t v = 0; v < n; ++v) f[v] = f[v] + c * b[v];
    }
    bool invertible = true;
    for (std::size_t v = 0; v < n && invertible; ++v) invertible = rank(f[v]) == x.dim(v);
    if (invertible) return true;
  }
  return false;
}

Rep kronecker_standard(int m, KroneckerFamily which, std::size_t i, std::uint64_t seed) {
  if (m < 1) throw InputError("m must be at least 1");
  const Quiver q = Quiver::kronecker(m);
  if (which == KroneckerFamily::regular) throw InputError("regular modules have no standard representative");
  const bool proj = which == KroneckerFamily::preprojective;
  if (i == 0) return proj ? Rep::projective(q, 0) : Rep::injective(q, 1);
  if (i == 1) return proj ? Rep::projective(q, 1) : Rep::injective(q, 0);
  const auto idx = static_cast<std::int64_t>(i);
  const DimVector d = proj ? kronecker_preprojective_dim(m, idx) : kronecker_preinjective_dim(m, idx);
  std::mt19937_64 rng = derived_rng(seed, {proj ? 0 : 1, idx, m});
  return generic_rigid_rep(q, d, kDefaultTrials, kDefaultEntryBound, rng);
}

Rep tau_rigid(const Rep& x, Direction dir, std::size_t trials, long bound, std::uint64_t seed) {
  const Quiver& q = x.quiver();
  if (x.is_zero()) throw DomainError("tau of the zero representation");
  // For a rigid indecomposable, being projective (injective) is decided by its
  // dimension vector: the rigid indecomposable at a real root is unique.
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (dir == Direction::forward && x.dims() == Rep::projective(q, v).dims())
      throw DomainError("tau of a projective representation");
    if (dir == Direction::inverse && x.dims() == Rep::injective(q, v).dims())
      throw DomainError("inverse tau of an injective representation");
  }
  const DimVector d = coxeter_transform(q, x.dims(), dir);
  if (!d.is_nonnegative()) throw DomainError("Coxeter image " + to_string(d) + " is not a dimension vector");
  std::vector<std::int64_t> salt(d.entries());
  salt.push_back(dir == Direction::forward ? 1 : -1);
  std::mt19937_64 rng = derived_rng(seed, salt);
  return generic_rigid_rep(q, d, trials, bound, rng);
}

std::vector<DimVector> rigid_indec_classify(int m, std::int64_t bound, std::size_t trials, std::uint64_t seed) {
  if (m < 2) throw InputError("classification needs m >= 2");
  if (bound < 1) throw InputError("bound must be at least 1");
  const Quiver q = Quiver::kronecker(m);
  std::vector<DimVector> out;
  for (std::int64_t a = 0; a <= bound; ++a)
    for (std::int64_t b = 0; b <= bound; ++b) {
      const DimVector d{a, b};
      if (d.is_zero() || tits_form(q, d) != 1) continue;
      std::mt19937_64 rng = derived_rng(seed, {a, b});
      try {
        generic_rigid_rep(q, d, trials, kDefaultEntryBound, rng);
        out.push_back(d);
      } catch (const GenericityError&) {
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kronlab
