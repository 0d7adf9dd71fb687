#pragma once

#include <utility>
#include <vector>

#include "fp.hpp"

namespace anum {

// The standing gcd and shape hypotheses on (p, s, m). Construction records
// them instead of rejecting, so boundary cases stay explorable; strict mode
// turns any failure into an error.
struct HypothesisFlags {
  bool gcd_n_m;     // gcd(n, m) = 1
  bool gcd_q_n;     // gcd(q, n) = 1
  bool gcd_q_m1;    // gcd(q, m-1) = 1
  bool m_shape;     // m in {2, 3} or m = p^b with b | s
  bool gcd_p_m1;    // gcd(p, m-1) = 1

  bool all() const { return gcd_n_m && gcd_q_n && gcd_q_m1 && m_shape && gcd_p_m1; }
};

// y^n = x^m + x with n = (q+1)/2, q = p^s.
struct CurveParams {
  u64 p;
  unsigned s;
  u64 m;
  u64 n;  // (q+1)/2
  u64 q;  // p^s
  u64 g;  // (n-1)(m-1)/2
  HypothesisFlags hyp;
};

CurveParams validate_params(u64 p, unsigned s, u64 m, bool strict = false);

u64 genus(const CurveParams& params);

// The differential x^(a-1) dx / y^b.
struct BasisEntry {
  u64 a;
  u64 b;
  friend auto operator<=>(const BasisEntry&, const BasisEntry&) = default;
};

// Holomorphic-differential basis: all (a, b) with 1 <= b <= n-1 and
// 1 <= a <= floor((m b - 1)/n), sorted by (b, a). The bounds come from
// divisor valuations: at the single place over x = infinity (v(x) = -n,
// v(y) = -m, v(dx) = -n-1) holomorphy reads n a <= m b - 1; at each branch
// place over a root of x^m + x (where v(y) = 1, v(dx) = n-1) it reads
// b <= n - 1. Count must equal g.
std::vector<BasisEntry> enumerate_basis(const CurveParams& params);

// The index set {(i, j) >= 0 : 1 <= n i + m j <= g} exactly as printed in
// the source basis claim; kept for the congruence count's literal mode and
// for discrepancy reports. Its cardinality generally differs from g.
std::vector<std::pair<u64, u64>> enumerate_paper_index_set(const CurveParams& params);

}  // namespace anum
