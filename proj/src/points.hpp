#pragma once

#include "curve.hpp"

namespace anum {

struct PointCount {
  unsigned e;
  u64 affine;
  u64 at_infinity;  // exactly 1: gcd(n, m) = 1 forces a single place over x = infinity
  u64 total;
  bool has_hw_interval;  // only for even e
  u64 hw_lo;
  u64 hw_hi;
};

inline constexpr u64 kPointCountGuard = 10'000'000;

bool point_count_feasible(const CurveParams& params, unsigned e);

// Brute force over F_{p^e}: for each x, the number of y with y^n = z,
// z = x^m + x, is 1 if z = 0, else d = gcd(n, p^e - 1) when
// z^((p^e-1)/d) = 1 and 0 otherwise. irred_index picks which irreducible
// polynomial models the field (counts must not depend on it).
PointCount count_points(const CurveParams& params, unsigned e, unsigned irred_index = 0);

// total over F_{q^2} equals q^2 + 1 + 2 g q.
bool is_maximal(const CurveParams& params);

}  // namespace anum
