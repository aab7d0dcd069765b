#include "hypaut/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hypaut/errors.hpp"
#include "parse_detail.hpp"

namespace hypaut {

namespace {

std::mutex g_phi_mutex;
std::map<int, std::vector<mpz_class>> g_phi_cache;

std::vector<mpz_class> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    int dd = static_cast<int>(den.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (int k = dn; k >= dd; --k) {
      mpz_class c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic polynomial index must be positive");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<mpz_class> poly;
  if (n == 1) {
    poly = {mpz_class(-1), mpz_class(1)};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  // std::map never invalidates references on insert.
  auto [it, inserted] = g_phi_cache.emplace(n, std::move(poly));
  return it->second;
}

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

CycloNum::CycloNum() : level_(1), coeffs_(1, mpq_class(0)) {}

CycloNum::CycloNum(long value) : level_(1), coeffs_(1, mpq_class(value)) {}

CycloNum::CycloNum(const mpq_class& value, int level) : level_(level) {
  if (level < 1) throw Error("cyclotomic level must be positive");
  coeffs_.assign(euler_phi(level), mpq_class(0));
  coeffs_[0] = value;
}

CycloNum::CycloNum(int level, std::vector<mpq_class> coeffs, bool canonical) : level_(level) {
  if (canonical) {
    coeffs_ = std::move(coeffs);
  } else {
    canonicalize(std::move(coeffs));
  }
}

void CycloNum::canonicalize(std::vector<mpq_class> v) {
  const int n = level_;
  // Fold z^k for k >= n using z^n = 1.
  if (static_cast<int>(v.size()) > n) {
    for (std::size_t k = n; k < v.size(); ++k) v[k % n] += v[k];
    v.resize(n);
  }
  const auto& phi = cyclotomic_polynomial(n);
  const int deg = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(v.size()) - 1; k >= deg; --k) {
    if (sgn(v[k]) == 0) continue;
    mpq_class c = v[k];
    for (int j = 0; j <= deg; ++j) {
      if (phi[j] != 0) v[k - deg + j] -= c * phi[j];
    }
  }
  v.resize(deg, mpq_class(0));
  coeffs_ = std::move(v);
}

CycloNum CycloNum::root_of_unity(int n, long k) {
  if (n < 1) throw Error("root_of_unity requires N >= 1");
  long r = ((k % n) + n) % n;
  std::vector<mpq_class> v(r + 1, mpq_class(0));
  v[r] = 1;
  return CycloNum(n, std::move(v), false);
}

CycloNum CycloNum::from_power_coeffs(int level, std::vector<mpq_class> coeffs) {
  if (level < 1) throw Error("cyclotomic level must be positive");
  if (coeffs.empty()) coeffs.push_back(0);
  return CycloNum(level, std::move(coeffs), false);
}

CycloNum CycloNum::embed(int m) const {
  if (m < 1 || m % level_ != 0) throw Error("embed: target level must be a multiple of the current level");
  if (m == level_) return *this;
  const int step = m / level_;
  std::vector<mpq_class> v(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1, mpq_class(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * step] = coeffs_[k];
  return CycloNum(m, std::move(v), false);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

bool CycloNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

mpq_class CycloNum::rational_value() const {
  if (!is_rational()) throw Error("value is not rational");
  return coeffs_[0];
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (rhs.level_ == level_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  int m = lcm_int(level_, rhs.level_);
  CycloNum a = embed(m);
  CycloNum b = rhs.embed(m);
  a += b;
  return *this = std::move(a);
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  if (rhs.is_rational()) {
    const mpq_class s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (rhs.level_ != level_) {
    int m = lcm_int(level_, rhs.level_);
    CycloNum a = embed(m);
    a *= rhs.embed(m);
    return *this = std::move(a);
  }
  std::vector<mpq_class> prod(coeffs_.size() + rhs.coeffs_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  canonicalize(std::move(prod));
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycloNum(mpq_class(1) / coeffs_[0], level_);
  // Solve x * y = 1: columns of the multiplication matrix are x * z^j.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
  CycloNum col = *this;
  const CycloNum z = root_of_unity(level_, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
    col *= z;
  }
  m[0][n] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw DivisionByZero();
    std::swap(m[piv], m[c]);
    mpq_class inv = mpq_class(1) / m[c][c];
    for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<mpq_class> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n];
  return CycloNum(level_, std::move(y), true);
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  int m = lcm_int(a.level_, b.level_);
  return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(mpq_class(1), level_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<int> CycloNum::root_order() const {
  if (is_zero()) return std::nullopt;
  const int m = lcm_int(2, level_);
  if (!pow(m).is_one()) return std::nullopt;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0 && pow(d).is_one()) return d;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> CycloNum::as_root_of_unity() const {
  auto ord = root_order();
  if (!ord) return std::nullopt;
  const int m = *ord;
  for (int k = 0; k < m; ++k) {
    if (std::gcd(k, m) != 1 && !(m == 1 && k == 0)) continue;
    if (root_of_unity(m, k) == *this) return std::make_pair(m, k);
  }
  return std::nullopt;
}

namespace {

std::string rational_text(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string CycloNum::to_string() const {
  if (is_rational()) return rational_text(coeffs_[0]);
  if (auto root = as_root_of_unity()) {
    auto [m, k] = *root;
    std::string s = "z" + std::to_string(m);
    if (k != 1) s += "^" + std::to_string(k);
    return s;
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpq_class c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    mpq_class a = abs(c);
    if (k == 0) {
      out << rational_text(a);
      continue;
    }
    if (a != 1) out << rational_text(a) << "*";
    out << "z" << level_;
    if (k != 1) out << "^" << k;
  }
  return out.str();
}

namespace detail {

CycloNum parse_scalar_factor(TokenStream& ts) {
  const Token& t = ts.peek();
  switch (t.kind) {
    case Tok::Number: {
      mpz_class num = ts.next().number;
      if (ts.accept(Tok::Slash)) {
        mpz_class den = ts.expect(Tok::Number, "denominator").number;
        if (den == 0) throw DivisionByZero();
        mpq_class q(num, den);
        q.canonicalize();
        return CycloNum(q);
      }
      return CycloNum(mpq_class(num));
    }
    case Tok::Zeta: {
      long level = ts.next().index;
      if (level < 1) ts.fail("root of unity level must be positive");
      long k = 1;
      if (ts.accept(Tok::Caret)) k = parse_exponent(ts);
      return CycloNum::root_of_unity(static_cast<int>(level), k);
    }
    case Tok::LParen: {
      ts.next();
      CycloNum v = parse_scalar_expr(ts);
      ts.expect(Tok::RParen, "')'");
      if (ts.accept(Tok::Caret)) v = v.pow(parse_exponent(ts));
      return v;
    }
    default:
      ts.fail("expected a scalar");
  }
}

CycloNum parse_scalar_expr(TokenStream& ts) {
  auto term = [&]() {
    CycloNum v = parse_scalar_factor(ts);
    while (ts.accept(Tok::Star)) v *= parse_scalar_factor(ts);
    return v;
  };
  bool neg = false;
  if (ts.accept(Tok::Minus)) {
    neg = true;
  } else {
    ts.accept(Tok::Plus);
  }
  CycloNum total = term();
  if (neg) total = -total;
  for (;;) {
    if (ts.accept(Tok::Plus)) {
      total += term();
    } else if (ts.accept(Tok::Minus)) {
      total -= term();
    } else {
      break;
    }
  }
  return total;
}

}  // namespace detail

CycloNum parse_scalar(std::string_view text) {
  detail::TokenStream ts(detail::tokenize(text));
  CycloNum v = detail::parse_scalar_expr(ts);
  if (ts.peek().kind != detail::Tok::End) ts.fail("trailing input");
  return v;
}

}  // namespace hypaut
