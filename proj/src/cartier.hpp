#pragma once

#include <optional>
#include <vector>

#include "bipoly.hpp"
#include "curve.hpp"

namespace anum {

// Dense g x g matrix over F_p; column c holds the coordinates of the image
// of basis element c. Entries live in the prime field, where the p-th-root
// twist of the operator acts trivially, so kernel dimension of the
// semilinear operator equals the matrix kernel dimension.
struct CartierMatrix {
  u64 g;
  u64 p;
  std::vector<std::vector<u64>> columns;  // columns[c][r]
  CurveParams params;
};

// C(h dx/F_y) = (d^(2p-2)/dx^(p-1) dy^(p-1) (F^(p-1) h))^(1/p) dx/F_y,
// computed as trinomial expansion (monomial h) or poly_mul (general h),
// then nabla, root_exponents, curve_reduce. F^(p-1) h is expanded in the
// free polynomial ring; reduction happens only after the root step.
BiPoly cartier_apply(const BiPoly& h, const CurveParams& params);

CartierMatrix cartier_matrix(const CurveParams& params);

// Exact rank over F_p, Gaussian elimination with the first nonzero entry
// of each column as pivot.
u64 rank(const CartierMatrix& mat);

u64 a_number(const CurveParams& params);  // g - rank

// Stable rank of the iterated matrix: rank of A^(2^ceil(log2 g)) >= A^g.
u64 p_rank(const CurveParams& params);

enum class ExponentMode { honest, paper_literal };
enum class IndexMode { derived_basis, paper_literal };
enum class HRange { half, full };  // 0 <= h <= (p-1)/2  vs  0 <= h <= p-1

// Number of index pairs (i, j) in the chosen set for which some (h, k),
// 0 <= k <= h, solves the chosen congruence system mod p.
//   honest        x: m k + h - k + i == p-1,  y: n (p-1-h) + j == p-1
//   paper_literal x: (p-1-h) n + i   == p-1,  y: k m + h - k + j == 0
u64 congruence_count(const CurveParams& params, ExponentMode em, IndexMode im, HRange hr);

struct Rational {
  i64 num;
  i64 den;  // > 0, reduced
  bool integral() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(i64 num, i64 den);

// (m-1)(2q+3p-5)/20 as an exact rational with integrality flag.
Rational paper_a_formula(const CurveParams& params);

// Closed form 3(q-p)(m-1)/20, together with the per-s recursion increments
// 3 p^(t-1) (p-1)(m-1)/20 for t = 2..s (the s = 1 rank is 0).
struct RankFormula {
  Rational total;
  std::vector<Rational> increments;
};
RankFormula paper_rank_formula(const CurveParams& params);

struct VerificationReport {
  u64 p = 0;
  unsigned s = 0;
  u64 m = 0;
  u64 n = 0;
  u64 q = 0;
  u64 g = 0;
  u64 matrix_rank = 0;
  u64 a_number = 0;
  u64 p_rank = 0;
  u64 cc_honest = 0;  // honest / derived_basis / full
  u64 cc_paper = 0;   // paper_literal / paper_literal / half
  Rational formula_rank{0, 1};
  Rational formula_a{0, 1};
  bool have_points = false;
  u64 points_total = 0;
  bool maximal = false;
  struct Flags {
    bool hypotheses_ok = false;
    bool cc_honest_matches_rank = false;
    bool cc_paper_matches_rank = false;
    bool formula_rank_integral = false;
    bool formula_a_integral = false;
    bool formula_rank_matches_matrix = false;
    bool formula_a_matches_matrix = false;
    bool supersingular = false;
    friend bool operator==(const Flags&, const Flags&) = default;
  } flags;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Aggregates everything; disagreement with the closed formulas is a flag,
// never a throw. Point counting is included when q^2 is under the
// brute-force guard.
VerificationReport verify(const CurveParams& params);

}  // namespace anum
