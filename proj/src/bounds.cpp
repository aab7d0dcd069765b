#include "hypaut/bounds.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include "hypaut/errors.hpp"

namespace hypaut {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, b, &r)) throw UnsupportedRange("bound overflows 64-bit integers");
  }
  return r;
}

// |1 - (1-d)^a|
std::int64_t zheng_term(int d, int a) { return std::llabs(1 - ipow(1 - d, a)); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t r;
  if (__builtin_mul_overflow(a / g, b, &r)) throw UnsupportedRange("bound overflows 64-bit integers");
  return r;
}

// All strictly increasing sequences of positive integers with sum <= budget.
void increasing_sequences(int budget, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int next_min, int left) {
    if (!cur.empty()) visit(cur);
    for (int a = next_min; a <= left; ++a) {
      cur.push_back(a);
      rec(a + 1, left - a);
      cur.pop_back();
    }
  };
  rec(1, budget);
}

}  // namespace

IntSet badr_bars_divisors(int d) {
  if (d < 4) throw UnsupportedRange("badr_bars_divisors requires d >= 4");
  std::int64_t D = d;
  return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D, D * D - 3 * D + 3};
}

IntSet zheng_integers(int n, int d) {
  if (d < 3 || n < 1) throw UnsupportedRange("zheng_integers requires d >= 3 and n >= 1");
  const int m = n + 2;
  IntSet out;
  out.insert(zheng_term(d, m) / d);
  out.insert(ipow(d - 1, n + 1));
  for (int a = 1; a <= n + 1; ++a) out.insert(zheng_term(d, a));
  increasing_sequences(m, [&](const std::vector<int>& as) {
    std::int64_t l = 1;
    int sum = 0;
    for (int a : as) {
      l = lcm_checked(l, zheng_term(d, a));
      sum += a;
    }
    if (as.size() >= 2) out.insert(l);
    for (int b = 2; sum + b <= m; ++b) out.insert(lcm_checked(l, ipow(d - 1, b - 1)));
  });
  return out;
}

IntSet theorem11_divisors(int n, int d, int codim) {
  if (n < 2) throw UnsupportedRange("theorem11_divisors requires n >= 2");
  if (d < 3) throw UnsupportedRange("theorem11_divisors requires d >= 3");
  const std::int64_t D = d;
  if (codim == 1) return {D, D - 1, D - 2};
  if (codim != 2) throw UnsupportedRange("theorem11_divisors: codim must be 1 or 2");
  const std::int64_t q = D * D - 3 * D + 3;
  if (n >= 4) return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D};
  if (n == 3) return {(D - 1) * D, (D - 1) * (D - 1), (D - 2) * D, q, (D - 2) * (D - 1)};
  return {(D - 1) * (D - 1) * D, (D - 1) * (D - 1) * (D - 1), q * D, q * (D - 1), (D - 2) * (D - 1) * D,
          (D - 2) * (D - 1) * (D - 1)};
}

std::string theorem11_side_condition(int codim) {
  return codim == 1 ? "order >= 3 dividing d-2 requires n = 2" : "";
}

bool divides_some(std::int64_t x, const IntSet& s) {
  if (x == 0) return false;
  for (auto v : s) {
    if (v != 0 && v % x == 0) return true;
  }
  return false;
}

}  // namespace hypaut
