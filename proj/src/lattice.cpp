#include "resint/lattice.hpp"

#include <algorithm>

#include "resint/errors.hpp"

namespace resint {

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Row-reduces m in place with unimodular row operations, mirrored on `track`,
// until m is in echelon form; returns the number of nonzero rows.
std::size_t echelon(IntMatrix& m, IntMatrix* track) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t pivot_row = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    if (track) std::swap((*track)[a], (*track)[b]);
  };
  // row[a] -= q * row[b]
  auto subtract = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c) m[a][c] -= q * m[b][c];
    if (track) {
      for (std::size_t c = 0; c < (*track)[a].size(); ++c) (*track)[a][c] -= q * (*track)[b][c];
    }
  };
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid down the column until a single nonzero entry remains at or below pivot_row.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (m[r][col] != 0 && (best == rows || abs(m[r][col]) < abs(m[best][col]))) best = r;
      }
      if (best == rows) break;
      swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (m[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[pivot_row][col].get_mpz_t());
        subtract(r, pivot_row, q);
        if (m[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

}  // namespace

IntMatrix integer_left_kernel(const IntMatrix& a) {
  const std::size_t rows = a.size();
  IntMatrix m = a;
  IntMatrix track(rows, IntVector(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) track[i][i] = 1;
  const std::size_t nonzero = echelon(m, &track);
  IntMatrix kernel;
  for (std::size_t r = nonzero; r < rows; ++r) {
    if (!is_zero(m[r])) throw InvariantViolation("echelon form left a nonzero row below the pivots");
    kernel.push_back(track[r]);
  }
  return kernel;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  IntMatrix m;
  for (const auto& g : generators) {
    if (!is_zero(g)) m.push_back(g);
  }
  const std::size_t r = echelon(m, nullptr);
  m.resize(r);
  return m;
}

Integer gram_determinant(const IntMatrix& rows) {
  const std::size_t r = rows.size();
  if (r == 0) return 1;
  IntMatrix g(r, IntVector(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < rows[i].size(); ++c) g[i][j] += rows[i][c] * rows[j][c];
    }
  }
  // Bareiss elimination.
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    if (g[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < r && g[p][k] == 0) ++p;
      if (p == r) return 0;
      std::swap(g[p], g[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) {
        g[i][j] = (g[i][j] * g[k][k] - g[i][k] * g[k][j]) / prev;
      }
    }
    prev = g[k][k];
  }
  return sign * g[r - 1][r - 1];
}

bool lattice_contains(const IntMatrix& basis, const IntVector& k) {
  if (is_zero(k)) return true;
  IntMatrix joint = basis;
  joint.push_back(k);
  const IntMatrix b = lattice_basis(joint);
  return b.size() == basis.size() && gram_determinant(b) == gram_determinant(basis);
}

std::size_t rank_of(const IntMatrix& m) {
  IntMatrix copy = m;
  return echelon(copy, nullptr);
}

IntMatrix lll_reduce(IntMatrix b) {
  const std::size_t n = b.size();
  if (n <= 1) return b;
  // Exact Gram-Schmidt recomputed after each change; sizes here are tiny.
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> norms(n);
  auto gram_schmidt = [&]() {
    std::vector<std::vector<Rational>> star(n);
    for (std::size_t i = 0; i < n; ++i) {
      star[i].assign(b[i].begin(), b[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        Rational num;
        for (std::size_t c = 0; c < b[i].size(); ++c) num += Rational(b[i][c]) * star[j][c];
        mu[i][j] = norms[j].is_zero() ? Rational(0) : num / norms[j];
        for (std::size_t c = 0; c < b[i].size(); ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norms[i] = Rational(0);
      for (const auto& v : star[i]) norms[i] += v * v;
    }
  };
  gram_schmidt();
  const Rational delta(3, 4);
  std::size_t k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw InvariantViolation("lattice reduction did not terminate");
    for (std::size_t j = k; j-- > 0;) {
      const Rational m = mu[k][j];
      const Integer r = floor(m + Rational(1, 2));
      if (r != 0) {
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[j][c];
        gram_schmidt();
      }
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

}  // namespace resint
