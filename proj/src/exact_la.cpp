#include "kronlab/exact_la.hpp"

#include <algorithm>
#include <utility>

#include "kronlab/errors.hpp"

namespace kronlab {

namespace {

// Row-major integer matrix used by the fraction-free kernels.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;

  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  void swap_rows(std::size_t r, std::size_t s) {
    if (r == s) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(r, c), at(s, c));
  }
};

// Clears denominators row by row. Row scaling preserves the row space and the
// right null space, which is all the callers need.
IntMatrix integer_rows(const RatMatrix& m) {
  IntMatrix out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols())};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (const auto& q : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out.at(r, c) = q.get_num() * (scale / q.get_den());
    }
  }
  return out;
}

std::size_t bareiss_rank(IntMatrix& m) {
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const mpz_class& piv = m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const mpz_class lead = m.at(i, c);
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

// Fraction-free Gauss-Jordan. On return every pivot entry equals `scale` and
// pivot columns are zero outside their pivot row.
struct IntRref {
  IntMatrix m;
  std::vector<std::size_t> pivots;
  mpz_class scale = 1;
};

IntRref fraction_free_rref(IntMatrix m) {
  IntRref out;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    const mpz_class piv = m.at(r, c);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const mpz_class lead = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (j == c) continue;
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), m.at(r, j).get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = piv;
    out.pivots.push_back(c);
    ++r;
  }
  out.scale = prev;
  out.m = std::move(m);
  return out;
}

void make_primitive(std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  RatMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("from_ints: ragged rows");
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& row : rows) m.append_row(row);
  return m;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw InputError("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatVector row_times(std::span<const Rational> v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw InputError("row_times: length mismatch");
  RatVector out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

bool is_zero_vector(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  IntMatrix a = m.rows() <= m.cols() ? integer_rows(m) : integer_rows(m.transpose());
  return bareiss_rank(a);
}

RatMatrix kernel_basis(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix out(0, n);
  if (n == 0) return out;
  if (m.cols() == 0) return RatMatrix::identity(n);
  // Left kernel of M is the right null space of M^T.
  IntRref rr = fraction_free_rref(integer_rows(m.transpose()));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> v(n, 0);
    v[f] = rr.scale;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.m.at(i, f);
    make_primitive(v);
    RatVector row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = Rational(v[k]);
    out.append_row(row);
  }
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.cols()) throw InputError("solve: right-hand side length does not match matrix width");
  const std::size_t unknowns = a.rows();
  // xA = b  <=>  A^T x^T = b^T; augment with b as the last column.
  RatMatrix aug(a.cols(), unknowns + 1);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug(i, j) = a(j, i);
    aug(i, unknowns) = b[i];
  }
  IntRref rr = fraction_free_rref(integer_rows(aug));
  RatVector x(unknowns);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == unknowns) return std::nullopt;
    Rational q(rr.m.at(i, unknowns), rr.scale);
    q.canonicalize();
    x[rr.pivots[i]] = q;
  }
  return x;
}

RowEchelon row_echelon(const RatMatrix& m) {
  RowEchelon out;
  out.reduced = RatMatrix(0, m.cols());
  if (m.rows() == 0 || m.cols() == 0) return out;
  IntRref rr = fraction_free_rref(integer_rows(m));
  out.pivot_columns = rr.pivots;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    RatVector row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row[j] = Rational(rr.m.at(i, j), rr.scale);
      row[j].canonicalize();
    }
    out.reduced.append_row(row);
  }
  return out;
}

RatMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  if (bound < 1) throw InputError("random_matrix: bound must be at least 1");
  std::uniform_int_distribution<long> dist(-bound, bound);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

std::mt19937_64 derived_rng(std::uint64_t root_seed, std::span<const std::int64_t> salt) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * salt.size());
  auto push = [&](std::uint64_t x) {
    words.push_back(static_cast<std::uint32_t>(x));
    words.push_back(static_cast<std::uint32_t>(x >> 32));
  };
  push(root_seed);
  for (std::int64_t s : salt) push(static_cast<std::uint64_t>(s));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::mt19937_64 derived_rng(std::uint64_t root_seed, std::initializer_list<std::int64_t> salt) {
  return derived_rng(root_seed, std::span<const std::int64_t>(salt.begin(), salt.size()));
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal: " + text);
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InputError("zero denominator in rational literal: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace kronlab
