#include "gradr/modlinear.hpp"

#include <numeric>

#include "gradr/errors.hpp"

namespace gradr {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// g = gcd(a, b) = x*a + y*b with g >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(IntMatrix A, std::vector<std::int64_t> b,
                                                   std::int64_t M) {
  if (M < 1) throw InvalidArgument("solve_mod: modulus must be positive");
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A.front().size() : 0;
  if (b.size() != rows) throw InvalidArgument("solve_mod: right-hand side size mismatch");
  if (M == 1) return std::vector<std::int64_t>(cols, 0);
  for (auto& row : A) {
    if (row.size() != cols) throw InvalidArgument("solve_mod: ragged matrix");
    for (auto& v : row) v = mod(v, M);
  }
  for (auto& v : b) v = mod(v, M);

  // V accumulates column operations: x = V y.
  IntMatrix V(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

  // Row transform [x y; -b' a'] on rows r1, r2 (determinant 1).
  auto row_op = [&](std::size_t r1, std::size_t r2, std::int64_t p, std::int64_t q,
                    std::int64_t s, std::int64_t t) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto u = A[r1][c], w = A[r2][c];
      A[r1][c] = mod(p * u + q * w, M);
      A[r2][c] = mod(s * u + t * w, M);
    }
    const auto u = b[r1], w = b[r2];
    b[r1] = mod(p * u + q * w, M);
    b[r2] = mod(s * u + t * w, M);
  };
  auto col_op = [&](std::size_t c1, std::size_t c2, std::int64_t p, std::int64_t q,
                    std::int64_t s, std::int64_t t) {
    for (std::size_t r = 0; r < rows; ++r) {
      const auto u = A[r][c1], w = A[r][c2];
      A[r][c1] = mod(p * u + q * w, M);
      A[r][c2] = mod(s * u + t * w, M);
    }
    for (std::size_t r = 0; r < cols; ++r) {
      const auto u = V[r][c1], w = V[r][c2];
      V[r][c1] = mod(p * u + q * w, M);
      V[r][c2] = mod(s * u + t * w, M);
    }
  };

  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: nonzero entry of the trailing block whose ideal is largest.
    std::size_t pr = rows, pc = cols;
    std::int64_t best = M;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (A[r][c] != 0) {
          const auto g = std::gcd(A[r][c], M);
          if (g < best) {
            best = g;
            pr = r;
            pc = c;
          }
        }
    if (pr == rows) break;
    if (pr != t) {
      std::swap(A[pr], A[t]);
      std::swap(b[pr], b[t]);
    }
    if (pc != t) col_op(t, pc, 0, 1, 1, 0);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (A[r][t] == 0) continue;
        const auto a = A[t][t], e = A[r][t];
        if (e % a == 0) {
          row_op(t, r, 1, 0, -(e / a), 1);
        } else {
          std::int64_t x, y;
          const auto g = ext_gcd(a, e, x, y);
          row_op(t, r, x, y, -(e / g), a / g);
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (A[t][c] == 0) continue;
        const auto a = A[t][t], e = A[t][c];
        if (e % a == 0) {
          col_op(t, c, 1, 0, -(e / a), 1);
        } else {
          std::int64_t x, y;
          const auto g = ext_gcd(a, e, x, y);
          col_op(t, c, x, y, -(e / g), a / g);
          dirty = true;
        }
      }
    }
    ++rank;
  }

  // Diagonal system d_i y_i = b_i.
  std::vector<std::int64_t> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::int64_t d = i < rank ? A[i][i] : 0;
    if (d == 0) {
      if (b[i] != 0) return std::nullopt;
      continue;
    }
    const auto g = std::gcd(d, M);
    if (b[i] % g != 0) return std::nullopt;
    const auto m = M / g;
    std::int64_t inv, unused;
    ext_gcd(mod(d / g, m), m, inv, unused);
    y[i] = mod(mod(b[i] / g, m) * mod(inv, m), m);
  }
  std::vector<std::int64_t> x(cols, 0);
  for (std::size_t r = 0; r < cols; ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < cols; ++c) acc = mod(acc + V[r][c] * y[c], M);
    x[r] = acc;
  }
  return x;
}

}  // namespace gradr
