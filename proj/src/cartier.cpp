#include "cartier.hpp"

#include <cassert>
#include <map>
#include <numeric>

#include "points.hpp"

namespace anum {

namespace {

// Engine-flow exponent ceiling; anything above it is an overflow logic error.
void check_exponent_bound(const BiPoly& a, const CurveParams& pr) {
  u64 bound = pr.n * pr.p + pr.n + pr.m * pr.p;
  for (const auto& [mono, c] : a.terms()) {
    (void)c;
    assert(mono.ex <= bound && mono.ey <= bound);
    (void)mono;
  }
  (void)bound;
}

}  // namespace

BiPoly cartier_apply(const BiPoly& h, const CurveParams& params) {
  u64 p = params.p;
  BiPoly expanded(p);
  if (h.is_zero()) return BiPoly(p);
  if (h.term_count() == 1) {
    const auto& [mono, c] = *h.terms().begin();
    expanded = trinomial_power_shift(p, params.n, params.m, mono.ex, mono.ey).scaled(c);
  } else {
    BiPoly f(p);
    f.add_term(0, params.n, 1);      // y^n
    f.add_term(1, 0, p - 1);         // -x
    f.add_term(params.m, 0, p - 1);  // -x^m
    BiPoly power = BiPoly::monomial(p, 0, 0, 1);
    for (u64 t = 0; t < p - 1; ++t) power = power * f;
    expanded = power * h;
  }
  check_exponent_bound(expanded, params);
  return curve_reduce(root_exponents(nabla(expanded)), params.n, params.m);
}

CartierMatrix cartier_matrix(const CurveParams& params) {
  auto basis = enumerate_basis(params);
  std::map<BasisEntry, std::size_t> row_of;
  for (std::size_t r = 0; r < basis.size(); ++r) row_of[basis[r]] = r;

  CartierMatrix mat{params.g, params.p, {}, params};
  mat.columns.assign(params.g, std::vector<u64>(params.g, 0));

  for (std::size_t c = 0; c < basis.size(); ++c) {
    // omega_(a,b) = x^(a-1) dx / y^b = h dx / y^(n-1) with h = x^(a-1) y^(n-1-b)
    BiPoly h = BiPoly::monomial(params.p, basis[c].a - 1, params.n - 1 - basis[c].b, 1);
    BiPoly image = cartier_apply(h, params);
    for (const auto& [mono, coeff] : image.terms()) {
      if (mono.ey > params.n - 1)
        throw ImageOutsideBasis("image term y-degree " + std::to_string(mono.ey) +
                                " not curve-reduced");
      BasisEntry target{mono.ex + 1, params.n - 1 - mono.ey};
      auto it = row_of.find(target);
      if (it == row_of.end())
        throw ImageOutsideBasis("image monomial x^" + std::to_string(mono.ex) + "*y^" +
                                std::to_string(mono.ey) + " of basis element (" +
                                std::to_string(basis[c].a) + "," + std::to_string(basis[c].b) +
                                ") lies outside the basis");
      mat.columns[c][it->second] = coeff;
    }
  }
  return mat;
}

namespace {

u64 rank_of(std::vector<std::vector<u64>> cols, u64 p, u64 dim) {
  u64 r = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols.size() && pivot_row < dim; ++c) {
    // first nonzero entry at or below pivot_row
    std::size_t pr = pivot_row;
    while (pr < dim && cols[c][pr] == 0) ++pr;
    if (pr == dim) continue;
    std::swap(cols[c][pr], cols[c][pivot_row]);
    for (std::size_t cc = c + 1; cc < cols.size(); ++cc) std::swap(cols[cc][pr], cols[cc][pivot_row]);
    u64 inv = inv_mod(cols[c][pivot_row], p);
    for (std::size_t cc = c + 1; cc < cols.size(); ++cc) {
      u64 factor = mulmod(cols[cc][pivot_row], inv, p);
      if (factor == 0) continue;
      for (std::size_t rr = pivot_row; rr < dim; ++rr)
        cols[cc][rr] = submod(cols[cc][rr], mulmod(factor, cols[c][rr], p), p);
    }
    ++pivot_row;
    ++r;
  }
  return r;
}

std::vector<std::vector<u64>> mat_mul(const std::vector<std::vector<u64>>& a,
                                      const std::vector<std::vector<u64>>& b, u64 p, u64 dim) {
  // both column-major: (a*b) column j = a applied to b's column j
  std::vector<std::vector<u64>> r(dim, std::vector<u64>(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      u64 v = b[j][k];
      if (v == 0) continue;
      for (std::size_t i = 0; i < dim; ++i)
        r[j][i] = addmod(r[j][i], mulmod(v, a[k][i], p), p);
    }
  }
  return r;
}

}  // namespace

u64 rank(const CartierMatrix& mat) { return rank_of(mat.columns, mat.p, mat.g); }

u64 a_number(const CurveParams& params) {
  return params.g - rank(cartier_matrix(params));
}

u64 p_rank(const CurveParams& params) {
  CartierMatrix mat = cartier_matrix(params);
  auto power = mat.columns;
  // square until the exponent reaches g; the rank is then stable
  for (u64 e = 1; e < params.g; e *= 2) power = mat_mul(power, power, params.p, params.g);
  return rank_of(power, params.p, params.g);
}

u64 congruence_count(const CurveParams& params, ExponentMode em, IndexMode im, HRange hr) {
  u64 p = params.p;
  u64 hmax = (hr == HRange::half) ? (p - 1) / 2 : p - 1;

  std::vector<std::pair<u64, u64>> indices;
  if (im == IndexMode::derived_basis) {
    for (const auto& e : enumerate_basis(params))
      indices.emplace_back(e.a - 1, params.n - 1 - e.b);
  } else {
    indices = enumerate_paper_index_set(params);
  }

  u64 count = 0;
  for (const auto& [i, j] : indices) {
    bool solvable = false;
    for (u64 h = 0; h <= hmax && !solvable; ++h) {
      for (u64 k = 0; k <= h; ++k) {
        bool ok;
        if (em == ExponentMode::honest) {
          ok = (params.m * k + h - k + i) % p == p - 1 &&
               (params.n * (p - 1 - h) + j) % p == p - 1;
        } else {
          ok = (k * params.m + h - k + j) % p == 0 &&
               ((p - 1 - h) * params.n + i) % p == p - 1;
        }
        if (ok) {
          solvable = true;
          break;
        }
      }
    }
    if (solvable) ++count;
  }
  return count;
}

Rational make_rational(i64 num, i64 den) {
  if (den == 0) throw Error(ErrorKind::internal, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational paper_a_formula(const CurveParams& params) {
  i64 m = static_cast<i64>(params.m);
  i64 q = static_cast<i64>(params.q);
  i64 p = static_cast<i64>(params.p);
  return make_rational((m - 1) * (2 * q + 3 * p - 5), 20);
}

RankFormula paper_rank_formula(const CurveParams& params) {
  i64 m = static_cast<i64>(params.m);
  i64 q = static_cast<i64>(params.q);
  i64 p = static_cast<i64>(params.p);
  RankFormula f;
  f.total = make_rational(3 * (q - p) * (m - 1), 20);
  i64 pw = 1;  // p^(t-1) for t = 2..s
  for (unsigned t = 2; t <= params.s; ++t) {
    pw *= p;
    f.increments.push_back(make_rational(3 * pw * (p - 1) * (m - 1), 20));
  }
  return f;
}

VerificationReport verify(const CurveParams& params) {
  VerificationReport r;
  r.p = params.p;
  r.s = params.s;
  r.m = params.m;
  r.n = params.n;
  r.q = params.q;
  r.g = params.g;

  CartierMatrix mat = cartier_matrix(params);
  r.matrix_rank = rank(mat);
  r.a_number = params.g - r.matrix_rank;
  r.p_rank = p_rank(params);
  r.cc_honest = congruence_count(params, ExponentMode::honest, IndexMode::derived_basis, HRange::full);
  r.cc_paper = congruence_count(params, ExponentMode::paper_literal, IndexMode::paper_literal, HRange::half);
  r.formula_rank = paper_rank_formula(params).total;
  r.formula_a = paper_a_formula(params);

  if (point_count_feasible(params, 2 * params.s)) {
    PointCount pc = count_points(params, 2 * params.s);
    r.have_points = true;
    r.points_total = pc.total;
    r.maximal = pc.total == params.q * params.q + 1 + 2 * params.g * params.q;
  }

  r.flags.hypotheses_ok = params.hyp.all();
  r.flags.cc_honest_matches_rank = r.cc_honest == r.matrix_rank;
  r.flags.cc_paper_matches_rank = r.cc_paper == r.matrix_rank;
  r.flags.formula_rank_integral = r.formula_rank.integral();
  r.flags.formula_a_integral = r.formula_a.integral();
  r.flags.formula_rank_matches_matrix =
      r.formula_rank.integral() && r.formula_rank.num >= 0 &&
      static_cast<u64>(r.formula_rank.num) == r.matrix_rank;
  r.flags.formula_a_matches_matrix =
      r.formula_a.integral() && r.formula_a.num >= 0 &&
      static_cast<u64>(r.formula_a.num) == r.a_number;
  r.flags.supersingular = r.p_rank == 0;
  return r;
}

}  // namespace anum
