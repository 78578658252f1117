#pragma once

// Exact linear algebra over the rationals.
//
// Vectors are rows and act on matrices from the left: the kernel of M is
// {v : vM = 0} and solve() finds x with xA = b.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kronlab {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// Convenience for literals in tests and fixtures.
  static RatMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);
  /// Stacks equally long row vectors; `cols` fixes the width when `rows` is empty.
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RatVector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// v * M for a row vector v of length M.rows().
RatVector row_times(std::span<const Rational> v, const RatMatrix& m);
bool is_zero_vector(std::span<const Rational> v);

/// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Rows form a basis of {v : vM = 0}; rows(M) - rank(M) of them, each primitive integral.
RatMatrix kernel_basis(const RatMatrix& m);

/// One solution of xA = b, or nullopt when inconsistent. Requires b.size() == A.cols().
std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b);

/// Reduced row echelon form over Q together with its pivot columns.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon row_echelon(const RatMatrix& m);

/// Integer entries drawn uniformly from [-bound, bound].
RatMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng);

/// Deterministic generator for a (root seed, salt) pair.
std::mt19937_64 derived_rng(std::uint64_t root_seed, std::initializer_list<std::int64_t> salt);
std::mt19937_64 derived_rng(std::uint64_t root_seed, std::span<const std::int64_t> salt);

// Arithmetic modulo a word-sized prime. Over any prime p, rank_p(M) <= rank_Q(M)
// for the reduction of M, so a modular rank is a certified lower bound on the
// rational rank.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Rank of M reduced mod p; nullopt if some denominator vanishes mod p.
std::optional<std::size_t> rank_mod_p(const RatMatrix& m, std::uint64_t p = kDefaultPrime);

std::string to_string(const Rational& q);  // always "p/q"
Rational parse_rational(const std::string& text);  // accepts "p/q" and "p"

}  // namespace kronlab
