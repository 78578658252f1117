#include <utility>

#include "kronlab/exact_la.hpp"

namespace kronlab {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const RatMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m(r, c);
      if (sgn(q) == 0) continue;
      const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      a[r * cols + c] = mul_mod(num, pow_mod(den, p - 2, p), p);
    }

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const std::uint64_t inv = pow_mod(a[rank * cols + c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t f = mul_mod(a[i * cols + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t s = mul_mod(f, a[rank * cols + j], p);
        std::uint64_t& x = a[i * cols + j];
        x = x >= s ? x - s : x + p - s;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace kronlab
