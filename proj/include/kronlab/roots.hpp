#pragma once

// Quivers, dimension vectors and the root combinatorics attached to them.
//
// Vertices are 0-based here. The JSON and command-line layers translate to the
// 1-based numbering users see.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kronlab {

class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<std::int64_t> xs) : v_(xs) {}
  explicit DimVector(std::vector<std::int64_t> xs) : v_(std::move(xs)) {}

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return v_.size(); }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  const std::vector<std::int64_t>& entries() const { return v_; }

  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_nonpositive() const;
  std::int64_t max_entry() const;
  std::int64_t total() const;

  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator-(DimVector a);
  friend DimVector operator*(std::int64_t s, DimVector a);

  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  std::vector<std::int64_t> v_;
};

/// "(1,0)"
std::string to_string(const DimVector& d);

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path is a sequence of composable arrow indices; the empty sequence at a
/// vertex is the trivial path there.
struct Path {
  std::size_t source;
  std::size_t target;
  std::vector<std::size_t> arrows;
};

class Quiver {
 public:
  /// Throws InputError on out-of-range endpoints or oriented cycles.
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  /// m parallel arrows 1 -> 0, so that P(0) is simple and dim P(1) = (m,1).
  static Quiver kronecker(int m);
  /// Linear A_n: i -> i+1.
  static Quiver linear(std::size_t n);

  std::size_t vertex_count() const { return data_->n; }
  const std::vector<Arrow>& arrows() const { return data_->arrows; }
  const Arrow& arrow(std::size_t a) const { return data_->arrows[a]; }

  /// Same vertices, every arrow reversed; arrow indices are preserved.
  Quiver opposite() const;

  /// Sources first.
  const std::vector<std::size_t>& topological_order() const { return data_->topo; }

  /// All paths from u to w, the trivial one included when u == w.
  const std::vector<Path>& paths_between(std::size_t u, std::size_t w) const {
    return data_->paths[u * data_->n + w];
  }
  /// Index of `p` followed by arrow `a` among paths_between(p.source, target(a)).
  std::size_t extend(const Path& p, std::size_t a) const;
  /// Index of arrow `a` followed by `p`.
  std::size_t prepend(std::size_t a, const Path& p) const;

  /// Number of arrows u -> w.
  std::size_t arrow_count(std::size_t u, std::size_t w) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.data_->n == b.data_->n && a.data_->arrows == b.data_->arrows;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Arrow> arrows;
    std::vector<std::size_t> topo;
    std::vector<std::vector<Path>> paths;
  };
  std::shared_ptr<const Data> data_;
};

/// <d,e> = sum_v d_v e_v - sum_{u->w} d_u e_w
std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
std::int64_t symmetric_form(const Quiver& q, const DimVector& d, const DimVector& e);
std::int64_t tits_form(const Quiver& q, const DimVector& d);

/// s_i(d) = d - (d, alpha_i) alpha_i
DimVector simple_reflection(const Quiver& q, std::size_t i, const DimVector& d);
/// Applies the reflections left to right, matching the right action on row vectors.
DimVector apply_reflections(const Quiver& q, const DimVector& d, const std::vector<std::size_t>& word);

/// Positive real roots with every entry <= bound, sorted.
std::vector<DimVector> positive_real_roots(const Quiver& q, std::int64_t bound);

struct KroneckerSequences {
  std::vector<DimVector> preprojective;
  std::vector<DimVector> preinjective;
};
KroneckerSequences kronecker_sequences(int m, std::size_t count);
DimVector kronecker_preprojective_dim(int m, std::int64_t i);
DimVector kronecker_preinjective_dim(int m, std::int64_t i);

enum class Direction { forward, inverse };

/// Forward is the action of tau on classes of non-projective indecomposables
/// (reflections at sinks first); inverse is tau^-1.
DimVector coxeter_transform(const Quiver& q, const DimVector& d, Direction dir);

}  // namespace kronlab
