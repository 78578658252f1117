#pragma once

// Representations of acyclic quivers over Q and their homological invariants.
//
// A representation carries one matrix per arrow; the matrix of u -> w has shape
// dims[u] x dims[w] and acts on row vectors, x |-> x * X_a. A morphism is one
// matrix per vertex and the intertwiner condition reads X_a * f_w = f_u * Y_a.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "kronlab/exact_la.hpp"
#include "kronlab/roots.hpp"

namespace kronlab {

class Rep {
 public:
  /// Throws InputError if a matrix shape disagrees with dims.
  Rep(Quiver quiver, DimVector dims, std::vector<RatMatrix> maps);

  static Rep zero(const Quiver& q);
  static Rep projective(const Quiver& q, std::size_t v);
  static Rep injective(const Quiver& q, std::size_t v);
  static Rep simple(const Quiver& q, std::size_t v);
  /// Integer matrices with entries uniform in [-bound, bound].
  static Rep random(const Quiver& q, const DimVector& dims, long bound, std::mt19937_64& rng);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  const RatMatrix& map(std::size_t a) const { return maps_[a]; }
  const std::vector<RatMatrix>& maps() const { return maps_; }
  bool is_zero() const { return dims_.is_zero(); }

  /// Composite of the arrow maps along p; the identity for a trivial path.
  RatMatrix path_map(const Path& p) const;

  /// Transposed maps over the opposite quiver.
  Rep dual() const;

  friend bool operator==(const Rep& a, const Rep& b) {
    return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  Quiver quiver_;
  DimVector dims_;
  std::vector<RatMatrix> maps_;
};

Rep direct_sum(const Rep& a, const Rep& b);

using Morphism = std::vector<RatMatrix>;  // one matrix per vertex

bool is_morphism(const Rep& x, const Rep& y, const Morphism& f);

struct HomSpace {
  Rep source;
  Rep target;
  std::vector<Morphism> basis;
  std::size_t dim() const { return basis.size(); }
};

/// Basis of all intertwiners, from the kernel of the stacked relations.
HomSpace hom_space(const Rep& x, const Rep& y);

/// Minimal presentation Q1 -> Q0 -> X -> 0. Q0 has one summand P(v) per
/// generator; (Q0)_w is coordinatized by pairs (generator g, path v_g -> w) in
/// generator order. Each relation is an element of (Q0)_{vertex} and spans one
/// summand P(vertex) of Q1.
struct ProjectivePresentation {
  struct Element {
    std::size_t vertex;
    RatVector coords;
  };
  std::vector<Element> generators;  // coords in X_vertex
  std::vector<Element> relations;   // coords in (Q0)_vertex

  DimVector q0_multiplicities(std::size_t n) const;
  DimVector q1_multiplicities(std::size_t n) const;
};

ProjectivePresentation projective_presentation(const Rep& x);

/// Multiplicities of the projective cover: dim of X_v modulo the arrow images.
DimVector top_dims(const Rep& x);

/// A representation with presentations of itself and of its dual, built on
/// first use, so Hom/Ext can be computed from whichever side yields the
/// smaller system. Copies share the cached presentations.
class PresentedRep {
 public:
  explicit PresentedRep(Rep x);

  const Rep& rep() const { return rep_; }
  const Rep& dual() const { return dual_; }
  const DimVector& top() const { return top_; }
  const DimVector& dual_top() const { return dual_top_; }
  const ProjectivePresentation& presentation() const;
  const ProjectivePresentation& dual_presentation() const;

 private:
  struct Cache {
    std::once_flag own_flag, dual_flag;
    ProjectivePresentation own, dual;
  };
  Rep rep_;
  Rep dual_;
  DimVector top_;
  DimVector dual_top_;
  std::shared_ptr<Cache> cache_;
};

enum class RankMethod {
  /// Modular rank, accepted when it meets the Euler lower bound; exact otherwise.
  certified,
  exact,
};

struct HomExt {
  std::size_t hom = 0;
  std::size_t ext = 0;
  friend bool operator==(const HomExt&, const HomExt&) = default;
};

/// dim Hom(X,Y) and dim Ext^1(X,Y) as kernel and cokernel of
/// Hom(Q0,Y) -> Hom(Q1,Y). `same` declares X == Y, which sharpens the lower
/// bound used by the certified method.
HomExt hom_ext(const PresentedRep& x, const PresentedRep& y, RankMethod method = RankMethod::certified,
               bool same = false);
HomExt hom_ext(const Rep& x, const Rep& y, RankMethod method = RankMethod::certified);

std::size_t ext1_dim(const Rep& x, const Rep& y);

std::size_t end_radical_dim(const Rep& x);
bool is_indecomposable(const Rep& x);
bool is_rigid(const Rep& x);

inline constexpr std::size_t kDefaultTrials = 8;
inline constexpr long kDefaultEntryBound = 10;

/// Sampled representation with End = k and Ext^1 = 0; GenericityError otherwise.
Rep generic_rigid_rep(const Quiver& q, const DimVector& d, std::size_t trials, long bound, std::mt19937_64& rng);
bool is_schur_root(const Quiver& q, const DimVector& d, std::size_t trials, long bound, std::mt19937_64& rng);
bool iso_check(const Rep& x, const Rep& y);

enum class KroneckerFamily { preprojective, preinjective, regular };

/// P_i or I_i of the Kronecker quiver K_m (regular is rejected).
Rep kronecker_standard(int m, KroneckerFamily which, std::size_t i, std::uint64_t seed = 0);

/// The rigid indecomposable at coxeter_transform(dim X), sampled and verified.
Rep tau_rigid(const Rep& x, Direction dir, std::size_t trials = kDefaultTrials, long bound = kDefaultEntryBound,
              std::uint64_t seed = 0);

/// tau or tau^-1 as a composite of reflection functors. Agrees with the
/// Auslander-Reiten translate on indecomposables that are not projective
/// (forward) or not injective (inverse).
Rep coxeter_functor(const Rep& x, Direction dir);

/// Every d with entries <= bound, q(d) = 1 and a verified rigid sample; sorted.
std::vector<DimVector> rigid_indec_classify(int m, std::int64_t bound, std::size_t trials, std::uint64_t seed);

}  // namespace kronlab
