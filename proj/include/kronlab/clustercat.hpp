#pragma once

// A fundamental-domain model of the cluster category of the Kronecker algebra
// K_m: indecomposable K_m-modules plus one shifted projective P(v)[1] per
// vertex, with Hom given by the two-term orbit formula
//   Hom(A,B) = Hom_H(A,B) + Ext^1_H(A, tau^-1 B)
// and shift [1] = tau on modules.
//
// Rigid objects are addressed through the orbit index: M_j = P_j for j >= 0,
// M_-1 = P(1)[1], M_-2 = P(0)[1], M_-3-i = I_i, and shift(M_j, k) = M_{j-2k}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kronlab/repcat.hpp"
#include "kronlab/report.hpp"

namespace kronlab {

class ClusterIndec {
 public:
  enum class Tag { preprojective, preinjective, regular, shifted_projective };

  static ClusterIndec preprojective(std::int64_t i);
  static ClusterIndec preinjective(std::int64_t i);
  static ClusterIndec shifted_projective(std::size_t v);
  /// tau^k of the generic module at `base`; base must be a non-real root.
  static ClusterIndec regular(DimVector base, std::int64_t tau_power = 0);
  /// M_j of the orbit dictionary.
  static ClusterIndec orbit(std::int64_t j);

  Tag tag() const { return tag_; }
  bool is_module() const { return tag_ != Tag::shifted_projective; }
  bool is_regular() const { return tag_ == Tag::regular; }
  /// P_i / I_i index, vertex of P(v)[1], or tau power of a regular object.
  std::int64_t index() const { return index_; }
  const DimVector& base() const { return base_; }
  std::optional<std::int64_t> orbit_index() const;

  /// "M3", "M-1", "R(2,2)", "R(2,2)^-1".
  std::string label() const;

  friend bool operator==(const ClusterIndec&, const ClusterIndec&) = default;
  /// Orbit objects by orbit index, then regular objects by (base, tau power).
  friend std::strong_ordering operator<=>(const ClusterIndec& a, const ClusterIndec& b);

 private:
  ClusterIndec(Tag t, std::int64_t i, DimVector b) : tag_(t), index_(i), base_(std::move(b)) {}
  Tag tag_;
  std::int64_t index_;
  DimVector base_;
};

/// Finite multiset of indecomposables in sorted order.
class ClusterObject {
 public:
  ClusterObject() = default;
  ClusterObject(std::initializer_list<ClusterIndec> xs);
  explicit ClusterObject(std::vector<ClusterIndec> xs);
  const std::vector<ClusterIndec>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  friend bool operator==(const ClusterObject&, const ClusterObject&) = default;

 private:
  std::vector<ClusterIndec> summands_;
};

using TiltingSet = std::set<ClusterIndec>;

std::string to_string(const TiltingSet& t);

struct ClusterOptions {
  int m = 3;
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  long entry_bound = kDefaultEntryBound;
  /// Modules whose dimension entries all stay below this can be realized by
  /// sampled representations.
  std::int64_t explicit_bound = 45;
  /// Compute every module pair within the explicit bound from representations.
  /// Off by default: only pairs of regular modules need it, the component
  /// rules decide the rest.
  bool prefer_explicit = false;
  /// Test hook: a value returned here replaces the computed cluster Hom dimension.
  std::function<std::optional<std::size_t>(const ClusterIndec&, const ClusterIndec&)> hom_override;
};

struct Window {
  std::int64_t index_radius = 6;  // M_j with |j| <= index_radius
  std::int64_t module_bound = 45;  // P_i, I_i with entries <= module_bound
  std::int64_t regular_bound = 4;  // regular objects at bases with entries <= regular_bound
};

class ClusterModel {
 public:
  /// Throws InputError for m < 2.
  explicit ClusterModel(ClusterOptions opts);

  int m() const { return opts_.m; }
  const Quiver& quiver() const { return quiver_; }
  const ClusterOptions& options() const { return opts_; }

  /// Dimension vector of a module object; DomainError for P(v)[1].
  DimVector dims(const ClusterIndec& a) const;
  /// Class in the Grothendieck group of H: dims for modules, -dim P(v) for P(v)[1].
  DimVector class_of(const ClusterIndec& a) const;
  bool is_projective(const ClusterIndec& a) const;
  bool is_injective(const ClusterIndec& a) const;

  ClusterIndec shift(const ClusterIndec& a, std::int64_t k) const;

  /// Sampled representation of a module object within the explicit bound.
  Rep rep(const ClusterIndec& a) const;

  /// dim Hom_H and dim Ext^1_H between module objects.
  HomExt module_hom_ext(const ClusterIndec& a, const ClusterIndec& b) const;

  std::size_t hom(const ClusterIndec& a, const ClusterIndec& b) const;
  std::size_t hom(const ClusterObject& a, const ClusterObject& b) const;

  /// Whether Hom(A, A[1]) = 0 for a single indecomposable. Regular objects are
  /// rejected without a computation: Ext^1(Z,Z) >= 1 - q(dim Z) >= 1.
  bool is_self_rigid(const ClusterIndec& a) const;

  /// Whether the generic module at d has no self-extensions.
  bool generic_is_rigid(const DimVector& d) const;

 private:
  struct State {
    std::mutex mu;
    std::map<ClusterIndec, std::shared_ptr<const PresentedRep>> reps;
    std::map<std::pair<ClusterIndec, ClusterIndec>, HomExt> module_homs;
    std::map<std::pair<ClusterIndec, ClusterIndec>, std::size_t> homs;
  };

  const PresentedRep& presented(const ClusterIndec& a) const;
  HomExt rule_hom_ext(const ClusterIndec& a, const ClusterIndec& b) const;
  std::size_t compute_hom(const ClusterIndec& a, const ClusterIndec& b) const;

  ClusterOptions opts_;
  Quiver quiver_;
  std::shared_ptr<State> state_;
};

bool is_2_rigid(const ClusterModel& model, const ClusterObject& a);
bool is_2_rigid(const ClusterModel& model, const TiltingSet& t);

/// Every indecomposable of the window, sorted.
std::vector<ClusterIndec> window_objects(const ClusterModel& model, const Window& w);

/// T is 2-rigid and no window indecomposable outside T keeps it 2-rigid.
bool is_cluster_tilting_window(const ClusterModel& model, const TiltingSet& t, const Window& w);

/// Window indecomposables Z outside D with D + Z cluster tilting in the window.
std::vector<ClusterIndec> complements(const ClusterModel& model, const TiltingSet& d, const Window& w);

/// Replaces X by the other complement of T - X. InputError if X is not in T,
/// WindowError if the window holds no second complement.
TiltingSet mutate(const ClusterModel& model, const TiltingSet& t, const ClusterIndec& x, const Window& w);

/// C_i = {M_i, M_{i+1}}.
TiltingSet standard_tilting(std::int64_t i);

/// (dim Hom(M_i, A), dim Hom(M_{i+1}, A)) for T = {M_i, M_{i+1}}, the
/// dimension vector of Hom(T, A) over End(T) = K_m.
DimVector functor_F(const ClusterModel& model, const TiltingSet& t, const ClusterObject& a);
DimVector functor_F(const ClusterModel& model, const TiltingSet& t, const ClusterIndec& a);

/// The two summands of a standard tilting set in orbit order; InputError otherwise.
std::pair<ClusterIndec, ClusterIndec> tilting_pair(const TiltingSet& t);

/// Density, rigidity preservation and the Serre relation F(A[1]) = tau F(A)
/// over the window objects without summands in T[1].
Report verify_equivalence_window(const ClusterModel& model, const TiltingSet& t, const Window& w);

struct TorsionDecomposition {
  DimVector c1;  // multiplicities of (M_i, M_{i+1}) in C_1
  DimVector c0;  // multiplicities in C_0
};

/// A triangle C_1 -> C_0 -> A with C_0, C_1 in add T, read off the minimal
/// projective presentation of F(A). DomainError for A in T[1],
/// ModelInconsistency if F(A) = 0 otherwise or the class bookkeeping fails.
TorsionDecomposition torsion_decomposition_check(const ClusterModel& model, const ClusterIndec& a,
                                                 const TiltingSet& t);

struct ArQuadrangle {
  ClusterIndec other;  // the summand of T besides X
  std::size_t b1 = 0;  // B_1 = other^b1
  std::size_t b0 = 0;  // B_0 = other^b0
};

/// Middle terms of the AR 4-angle X -> B_1 -> B_0 -> X in add T, checked
/// against the mutation of T at X. Window failures propagate.
ArQuadrangle ar_quadrangle(const ClusterModel& model, const TiltingSet& t, const ClusterIndec& x, const Window& w);

}  // namespace kronlab
