#include "seaweed/exact.hpp"

#include <stdexcept>
#include <utility>

namespace seaweed {

int rank_exact(IntMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpz_class& pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class& lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // m[i][j] = (pivot*m[i][j] - lead*m[r][j]) / prev, exact.
        t = pivot * m[i][j];
        if (lead != 0 && m[r][j] != 0) t -= lead * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

IntMatrix clear_denominators(const RatMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_class l = 1;
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    out[i].reserve(m[i].size());
    for (const auto& q : m[i]) out[i].push_back(q.get_num() * (l / q.get_den()));
  }
  return out;
}

}  // namespace

int rank_exact(const RatMatrix& m) { return rank_exact(clear_denominators(m)); }

int nullity_exact(const RatMatrix& m) { return static_cast<int>(m.size()) - rank_exact(m); }

std::optional<RatVector> solve_unique(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_unique: size mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const mpq_class inv = 1 / a[c][c];
    for (std::size_t j = c; j < n; ++j) a[c][j] *= inv;
    b[c] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (a[c][j] != 0) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  return b;
}

RatMatrix multiply(const RatMatrix& x, const RatMatrix& y) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  const std::size_t m = k ? y.front().size() : 0;
  RatMatrix out(n, RatVector(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].size() != k) throw std::invalid_argument("multiply: size mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (y[l][j] != 0) out[i][j] += x[i][l] * y[l][j];
    }
  }
  return out;
}

}  // namespace seaweed
