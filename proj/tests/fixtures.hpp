#pragma once

#include <complex>
#include <cmath>
#include <string>
#include <vector>

#include "hypaut/cyclo.hpp"
#include "hypaut/poly.hpp"

namespace fixtures {

inline const std::vector<std::string>& polynomials() {
  static const std::vector<std::string> list = {
      "X0^3 + X1^3 + X2^3",
      "X0^3 + X1^3 + X2^3 + X3^3",
      "X0^4 + X1^4 + X2^4 + X3^4",
      "X0^5 + X1^5 + X2^5 + X3^5",
      "X0^3*X1 + X1^3*X2 + X2^3*X0",
      "X0^2*X1 + X1^2*X2 + X2^3",
      "X0^3 + X1^3 + X2^3 - 3*X0*X1*X2",
      "X0^3 + X1^3 + X2^3 + X0*X3^2 + X1*X4^2",
      "X0^4 + X1^4 + X2^4 + X0*X3^3 + X1*X4^3",
      "X0^4*X1 + X1^4*X2 + X2^4*X3 + X3^4*X0",
      "z3*X0^3 + (1 + z4)*X1^2*X2 - 1/2*X2^3",
      "X0^2*X1^2 + z5^2*X0*X1*X2^2 + 7*X3^4",
  };
  return list;
}

// Floating-point evaluation oracle.
inline std::complex<double> eval_c(const hypaut::CycloNum& x) {
  std::complex<double> s = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < x.coeffs().size(); ++k)
    s += x.coeffs()[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / x.level());
  return s;
}

inline std::complex<double> eval_c(const hypaut::HomogPoly& f, const std::vector<std::complex<double>>& pt) {
  std::complex<double> s = 0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> t = eval_c(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) t *= std::pow(pt[i], m.exps[i]);
    s += t;
  }
  return s;
}

inline bool close(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) < 1e-7 * (1 + std::abs(a) + std::abs(b));
}

}  // namespace fixtures
