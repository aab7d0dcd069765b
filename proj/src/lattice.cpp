#include "hypaut/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include <gmpxx.h>

#include "hypaut/errors.hpp"

namespace hypaut {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in lattice computation");
  return r;
}

using BigMatrix = std::vector<std::vector<mpz_class>>;

BigMatrix big_identity(int n) {
  BigMatrix m(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_a <- row_a + q * row_b
void add_row(BigMatrix& m, int a, int b, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m[a].size(); ++j) m[a][j] += q * m[b][j];
}

void add_col(BigMatrix& m, int a, int b, const mpz_class& q) {
  if (q == 0) return;
  for (auto& row : m) row[a] += q * row[b];
}

void swap_cols(BigMatrix& m, int a, int b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(BigMatrix& m, int a) {
  for (auto& x : m[a]) x = -x;
}

// Nearest-integer quotient, so remainders have absolute value <= |b|/2.
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class r = a - q * b;
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

std::int64_t narrow(const mpz_class& x) {
  if (!x.fits_slong_p()) throw Error("integer overflow in lattice computation");
  return x.get_si();
}

IntMatrix narrow(const BigMatrix& m) {
  IntMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) r[i].push_back(narrow(x));
  return r;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
    }
  }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& input, int cols) {
  const int rows = static_cast<int>(input.size());
  BigMatrix a(rows);
  for (int i = 0; i < rows; ++i)
    for (auto x : input[i]) a[i].emplace_back(static_cast<long>(x));
  BigMatrix U = big_identity(rows);
  BigMatrix V = big_identity(cols);
  SmithForm out;
  out.rows = rows;
  out.cols = cols;

  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the trailing submatrix.
    int pr = -1, pc = -1;
    mpz_class best = 0;
    for (int i = t; i < rows; ++i) {
      for (int j = t; j < cols; ++j) {
        mpz_class v = abs(a[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    std::swap(U[t], U[pr]);
    swap_cols(a, t, pc);
    swap_cols(V, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = round_div(a[i][t], a[t][t]);
        add_row(a, i, t, -q);
        add_row(U, i, t, -q);
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          std::swap(U[t], U[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = round_div(a[t][j], a[t][t]);
        add_col(a, j, t, -q);
        add_col(V, j, t, -q);
        if (a[t][j] != 0) {
          swap_cols(a, t, j);
          swap_cols(V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the whole trailing block.
      for (int i = t + 1; i < rows && clean; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(a, t, i, 1);
            add_row(U, t, i, 1);
            clean = false;
            break;
          }
        }
      }
    }
    if (a[t][t] < 0) {
      negate_row(a, t);
      negate_row(U, t);
    }
    out.diagonal.push_back(narrow(a[t][t]));
    ++t;
  }
  out.rank = t;
  out.U = narrow(U);
  out.V = narrow(V);
  return out;
}

std::int64_t bareiss_determinant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return 0;
      std::swap(a[k], a[swap_with]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) throw Error("integer overflow in determinant");
        a[i][j] = static_cast<std::int64_t>(q);
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace hypaut
