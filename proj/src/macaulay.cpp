// Macaulay matrix test for smoothness.
//
// F is smooth iff the Jacobian ideal contains every form of degree
// e = m(d-2)+1 (m variables).  The map (G_0..G_{m-1}) -> sum G_i dF/dX_i is
// graded by Z^m / L, where L is spanned by the differences of the support
// exponents of F, so it splits into independent blocks.  Each block is first
// ranked modulo a prime p = 1 (mod N); full rank there proves full rank over
// Q(zeta_N).  Deficient blocks are re-ranked exactly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hypaut/errors.hpp"
#include "hypaut/geometry.hpp"
#include "hypaut/lattice.hpp"

namespace hypaut {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimeField {
  u64 p = 0;
  u64 omega = 1;  // primitive N-th root of unity mod p
  int level = 1;
};

PrimeField choose_prime(int level) {
  PrimeField pf;
  pf.level = level;
  u64 n = static_cast<u64>(level);
  u64 k = ((1ULL << 30) / n) + 1;
  while (!is_prime(k * n + 1)) ++k;
  pf.p = k * n + 1;
  auto factors = prime_factors(pf.p - 1);
  for (u64 g = 2;; ++g) {
    bool generator = true;
    for (u64 q : factors) {
      if (powmod(g, (pf.p - 1) / q, pf.p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      pf.omega = powmod(g, (pf.p - 1) / n, pf.p);
      break;
    }
  }
  return pf;
}

// Image of x under zeta_N -> omega; nullopt if a denominator vanishes mod p.
std::optional<u64> reduce_mod_p(const CycloNum& x, const PrimeField& pf) {
  const int lv = x.level();
  u64 w = powmod(pf.omega, static_cast<u64>(pf.level / lv), pf.p);
  u64 acc = 0;
  u64 wk = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      mpz_class num = c.get_num() % mpz_class(static_cast<unsigned long>(pf.p));
      if (num < 0) num += static_cast<unsigned long>(pf.p);
      mpz_class den = c.get_den() % mpz_class(static_cast<unsigned long>(pf.p));
      if (den == 0) return std::nullopt;
      u64 nv = num.get_ui();
      u64 dv = den.get_ui();
      u64 term = mulmod(nv, powmod(dv, pf.p - 2, pf.p), pf.p);
      acc = (acc + mulmod(term, wk, pf.p)) % pf.p;
    }
    wk = mulmod(wk, w, pf.p);
  }
  return acc;
}

int rank_mod_p(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    u64 inv = powmod(a[r][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64 f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

void monomials_of_degree(int m, int deg, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (m == 0) return;
  rec(rec, 0, deg);
}

struct Term {
  std::vector<int> exps;
  CycloNum coeff;
};

}  // namespace

int exact_rank(std::vector<std::vector<CycloNum>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    CycloNum inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      CycloNum f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

MacaulayOutcome macaulay_surjectivity(const HomogPoly& f, std::int64_t cap) {
  const int m = f.num_vars();
  const int d = f.degree();
  MacaulayOutcome out;
  if (f.is_zero() || d < 2) throw Error("Macaulay test needs a nonzero form of degree >= 2");
  const int e = m * (d - 2) + 1;
  const int g_deg = e - (d - 1);
  out.degree_e = e;

  // Grading lattice.
  const auto support = f.support();
  IntMatrix diffs;
  for (std::size_t k = 1; k < support.size(); ++k) {
    std::vector<std::int64_t> row(m);
    for (int i = 0; i < m; ++i) row[i] = support[k].exps[i] - support[0].exps[i];
    diffs.push_back(std::move(row));
  }
  SmithForm snf = smith_normal_form(diffs, m);
  auto key_of = [&](const std::vector<int>& x) {
    std::vector<std::int64_t> key(m);
    for (int j = 0; j < m; ++j) {
      std::int64_t s = 0;
      for (int i = 0; i < m; ++i) s += static_cast<std::int64_t>(x[i]) * snf.V[i][j];
      if (j < snf.rank) {
        std::int64_t q = snf.diagonal[j];
        s %= q;
        if (s < 0) s += q;
      }
      key[j] = s;
    }
    return key;
  };

  std::vector<std::vector<int>> row_monos, g_monos;
  monomials_of_degree(m, e, row_monos);
  monomials_of_degree(m, g_deg, g_monos);

  std::map<std::vector<std::int64_t>, int> block_id;
  std::vector<std::vector<int>> block_rows;   // global row indices
  std::vector<std::vector<std::pair<int, int>>> block_cols;  // (i, g_mono index)
  std::vector<int> row_block(row_monos.size()), row_local(row_monos.size());
  auto encode = [&](const std::vector<int>& x) {
    std::int64_t c = 0;
    for (int v : x) c = c * (e + 1) + v;
    return c;
  };
  std::unordered_map<std::int64_t, int> row_index;
  row_index.reserve(row_monos.size() * 2);
  for (std::size_t r = 0; r < row_monos.size(); ++r) {
    auto key = key_of(row_monos[r]);
    auto [it, inserted] = block_id.emplace(key, static_cast<int>(block_rows.size()));
    if (inserted) {
      block_rows.emplace_back();
      block_cols.emplace_back();
    }
    row_block[r] = it->second;
    row_local[r] = static_cast<int>(block_rows[it->second].size());
    block_rows[it->second].push_back(static_cast<int>(r));
    row_index.emplace(encode(row_monos[r]), static_cast<int>(r));
  }

  std::vector<std::vector<Term>> partials(m);
  for (int i = 0; i < m; ++i) {
    HomogPoly p = partial(f, i);
    for (const auto& [mono, c] : p.terms()) partials[i].push_back({mono.exps, c});
  }

  for (int i = 0; i < m; ++i) {
    if (partials[i].empty()) continue;
    for (std::size_t gi = 0; gi < g_monos.size(); ++gi) {
      std::vector<int> x = g_monos[gi];
      for (int k = 0; k < m; ++k) x[k] += partials[i][0].exps[k];
      auto it = block_id.find(key_of(x));
      if (it == block_id.end()) continue;
      block_cols[it->second].emplace_back(i, static_cast<int>(gi));
    }
  }

  out.blocks = static_cast<int>(block_rows.size());
  out.rows = static_cast<std::int64_t>(row_monos.size());
  for (const auto& bc : block_cols) out.cols += static_cast<std::int64_t>(bc.size());

  for (std::size_t b = 0; b < block_rows.size(); ++b) {
    const auto nr = static_cast<std::int64_t>(block_rows[b].size());
    const auto nc = static_cast<std::int64_t>(block_cols[b].size());
    if (nc < nr) return out;
    if (nr * nc > cap) {
      out.capped = true;
      return out;
    }
  }

  int level = 1;
  for (const auto& [mono, c] : f.terms()) level = std::lcm(level, c.level());
  const PrimeField pf = choose_prime(level);

  for (std::size_t b = 0; b < block_rows.size(); ++b) {
    const auto& rows = block_rows[b];
    const auto& cols = block_cols[b];
    std::vector<std::vector<CycloNum>> exact(rows.size(), std::vector<CycloNum>(cols.size()));
    std::vector<std::vector<u64>> modp(rows.size(), std::vector<u64>(cols.size(), 0));
    bool reducible = true;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto [i, gi] = cols[c];
      for (const auto& t : partials[i]) {
        std::vector<int> x = g_monos[gi];
        for (int k = 0; k < m; ++k) x[k] += t.exps[k];
        int r = row_index.at(encode(x));
        int lr = row_local[r];
        exact[lr][c] += t.coeff;
      }
    }
    for (std::size_t r = 0; r < rows.size() && reducible; ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (exact[r][c].is_zero()) continue;
        auto v = reduce_mod_p(exact[r][c], pf);
        if (!v) {
          reducible = false;
          break;
        }
        modp[r][c] = *v;
      }
    }
    const int target = static_cast<int>(rows.size());
    if (reducible && rank_mod_p(std::move(modp), pf.p) == target) continue;
    ++out.exact_blocks;
    if (exact_rank(std::move(exact)) < target) return out;
  }
  out.surjective = true;
  return out;
}

}  // namespace hypaut
