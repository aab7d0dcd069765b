#include "hypaut/geometry.hpp"

#include <algorithm>
#include <set>

#include "hypaut/errors.hpp"

namespace hypaut {

std::string to_string(SmoothVerdict v) {
  switch (v) {
    case SmoothVerdict::Smooth: return "Smooth";
    case SmoothVerdict::Singular: return "Singular";
    case SmoothVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(SmoothMethod m) {
  return m == SmoothMethod::VertexScreen ? "VertexScreen" : "MacaulayRank";
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No: return "false";
    case Tri::Yes: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

SmoothnessCertificate smoothness(const HomogPoly& f, std::int64_t cap) {
  SmoothnessCertificate cert;
  const int m = f.num_vars();
  if (f.is_zero()) {
    cert.verdict = SmoothVerdict::Singular;
    cert.detail = "zero polynomial";
    return cert;
  }
  if (f.degree() == 1) {
    cert.verdict = SmoothVerdict::Smooth;
    cert.detail = "hyperplane";
    return cert;
  }
  IncidenceProfile prof = support_queries(f);
  for (int i = 0; i < m; ++i) {
    if (prof.vertices[i].red_flag) {
      cert.verdict = SmoothVerdict::Singular;
      std::vector<int> pt(m, 0);
      pt[i] = 1;
      cert.witness = pt;
      cert.detail = "all partial derivatives vanish at P" + std::to_string(i);
      return cert;
    }
  }
  cert.method = SmoothMethod::MacaulayRank;
  MacaulayOutcome mo = macaulay_surjectivity(f, cap);
  cert.degree_e = mo.degree_e;
  cert.rows = mo.rows;
  cert.cols = mo.cols;
  cert.blocks = mo.blocks;
  cert.exact_blocks = mo.exact_blocks;
  if (mo.capped) {
    cert.verdict = SmoothVerdict::Inconclusive;
    cert.detail = "Macaulay block exceeds size cap " + std::to_string(cap);
  } else if (mo.surjective) {
    cert.verdict = SmoothVerdict::Smooth;
    cert.detail = "Jacobian ideal contains all forms of degree " + std::to_string(mo.degree_e);
  } else {
    cert.verdict = SmoothVerdict::Singular;
    cert.detail = "Jacobian ideal misses forms of degree " + std::to_string(mo.degree_e);
  }
  return cert;
}

std::optional<int> FixedLocusReport::dimension() const {
  if (!codim) return std::nullopt;
  return n - *codim;
}

namespace {

using UPoly = std::vector<CycloNum>;  // coefficient of x^k at index k

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& b) {
  trim(a);
  CycloNum lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    CycloNum q = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

int distinct_roots_binary(const HomogPoly& f, int x, int y) {
  if (f.is_zero()) throw Error("binary form is zero");
  const int d = f.degree();
  UPoly p(d + 1);
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 0; i < f.num_vars(); ++i) {
      if (i != x && i != y && mono.exps[i] != 0) throw Error("form involves other variables");
    }
    p[mono.exps[x]] += c;
  }
  trim(p);
  int affine_degree = static_cast<int>(p.size()) - 1;
  int count = affine_degree < d ? 1 : 0;  // the point x-axis at infinity, [1:0]
  if (affine_degree >= 1) {
    UPoly dp;
    for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(p[k] * CycloNum(static_cast<long>(k)));
    UPoly g = poly_gcd(p, dp);
    count += affine_degree - (static_cast<int>(g.size()) - 1);
  }
  return count;
}

FixedLocusReport fixed_locus(const HomogPoly& f, const DiagAut& g) {
  auto mult = semi_invariance_multiplier(f, g.eigenvalues());
  if (std::holds_alternative<NotSemiInvariant>(mult)) {
    const auto& w = std::get<NotSemiInvariant>(mult);
    throw NotAnAutomorphism("automorphism does not preserve the hypersurface: monomials " + w.first.to_string() +
                            " and " + w.second.to_string() + " have different characters");
  }
  FixedLocusReport rep;
  rep.n = f.num_vars() - 2;
  EigenStructure es = eigen_structure(g);
  std::optional<int> max_dim;
  bool any_positive_hypersurface = false;
  bool finite = true;
  std::int64_t points = 0;
  for (std::size_t k = 0; k < es.spaces.size(); ++k) {
    FixedSlice s;
    s.space = es.spaces[k];
    s.exp = es.exps[k];
    s.dim_projective = static_cast<int>(s.space.size()) - 1;
    std::set<int> keep(s.space.begin(), s.space.end());
    HomogPoly res = restrict_to_span(f, keep);
    s.restriction_zero = res.is_zero();
    if (s.restriction_zero) {
      s.dim = s.dim_projective;
      if (s.dim_projective >= 1) {
        rep.contains_line = Tri::Yes;
        finite = false;
      } else {
        s.points = 1;
        points += 1;
      }
    } else if (s.dim_projective >= 1) {
      s.dim = s.dim_projective - 1;
      if (s.dim_projective == 1) {
        s.points = distinct_roots_binary(res, s.space[0], s.space[1]);
        points += *s.points;
      } else {
        finite = false;
        any_positive_hypersurface = true;
      }
    } else {
      s.points = 0;
    }
    if (s.dim && (!max_dim || *s.dim > *max_dim)) max_dim = s.dim;
    rep.slices.push_back(std::move(s));
  }
  if (max_dim) rep.codim = rep.n - *max_dim;
  if (rep.contains_line != Tri::Yes && any_positive_hypersurface) rep.contains_line = Tri::Unknown;
  if (finite) rep.point_count = points;
  return rep;
}

int projection_degree(const HomogPoly& f, const std::vector<int>& r_plane, const std::vector<int>& complement) {
  std::set<int> a(r_plane.begin(), r_plane.end());
  std::set<int> b(complement.begin(), complement.end());
  if (a.empty() || b.empty() || static_cast<int>(a.size() + b.size()) != f.num_vars()) {
    throw Error("projection_degree: index sets must partition the coordinates");
  }
  for (int i : a) {
    if (b.count(i)) throw Error("projection_degree: index sets overlap");
  }
  bool a_in = restrict_to_span(f, a).is_zero();
  bool b_in = restrict_to_span(f, b).is_zero();
  const int d = f.degree();
  if (a_in && b_in) return d - 2;
  if (a_in || b_in) return d - 1;
  return d;
}

GaloisVerdict galois_by_theorem(const HomogPoly& f, const DiagAut& g) {
  GaloisVerdict v;
  EigenStructure es = eigen_structure(g);
  if (es.r != 2) {
    v.reason = es.r == 1 ? "identity" : "more than two eigenvalues";
    return v;
  }
  int a = 0, b = 1;
  if (es.exps[0] == 0) {
    a = 1;
    b = 0;
  } else if (es.exps[1] != 0 && es.spaces[1].size() < es.spaces[0].size()) {
    a = 1;
    b = 0;
  }
  v.block = es.spaces[a];
  v.complement = es.spaces[b];
  v.r = static_cast<int>(v.block.size()) - 1;
  const int ord = order_in_pgl(g);
  const int deg = projection_degree(f, v.block, v.complement);
  v.m = ord;
  if (ord < 2) {
    v.reason = "identity";
    return v;
  }
  if (ord != deg) {
    v.reason = "order " + std::to_string(ord) + " differs from projection degree " + std::to_string(deg);
    return v;
  }
  v.galois = true;
  v.reason = "eigenvalue block matches projection degree";
  return v;
}

}  // namespace hypaut
