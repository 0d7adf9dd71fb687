#include "points.hpp"

#include <cmath>
#include <numeric>

#include "extfield.hpp"

namespace anum {

namespace {

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

bool point_count_feasible(const CurveParams& params, unsigned e) {
  u64 order = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (order > kPointCountGuard / params.p) return false;
    order *= params.p;
  }
  return order <= kPointCountGuard;
}

PointCount count_points(const CurveParams& params, unsigned e, unsigned irred_index) {
  if (!point_count_feasible(params, e))
    throw FieldTooLarge("p^e exceeds the brute-force guard of 1e7");

  ExtFieldCtx ctx = ExtFieldCtx::make(params.p, e, irred_index);
  u64 order = ctx.order();
  u64 d = std::gcd(params.n, order - 1);
  u64 test_exp = (order - 1) / d;

  u64 affine = 0;
  for (u64 idx = 0; idx < order; ++idx) {
    ExtElement x = ext_from_index(ctx, idx);
    ExtElement z;
    if (ext_is_zero(x)) {
      z = x;  // 0^m + 0
    } else {
      z = ext_add(ctx, ext_pow(ctx, x, params.m), x);
    }
    if (ext_is_zero(z)) {
      affine += 1;
    } else if (ext_pow(ctx, z, test_exp) == ext_one(ctx)) {
      affine += d;
    }
  }

  PointCount pc{e, affine, 1, affine + 1, false, 0, 0};
  u64 root = isqrt(order);
  if (e % 2 == 0) {
    pc.has_hw_interval = true;
    u64 spread = 2 * params.g * root;
    pc.hw_lo = order + 1 > spread ? order + 1 - spread : 0;
    pc.hw_hi = order + 1 + spread;
  }
  return pc;
}

bool is_maximal(const CurveParams& params) {
  PointCount pc = count_points(params, 2 * params.s);
  return pc.total == params.q * params.q + 1 + 2 * params.g * params.q;
}

}  // namespace anum
