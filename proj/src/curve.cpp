#include "curve.hpp"

#include <numeric>

namespace anum {

CurveParams validate_params(u64 p, unsigned s, u64 m, bool strict) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (p <= 3)
    throw InvalidPrime("characteristic " + std::to_string(p) + " unsupported; p > 3 required");
  if (s < 1) throw Error(ErrorKind::invalid_input, "s must be >= 1");
  if (m < 2) throw Error(ErrorKind::invalid_input, "m must be >= 2");

  u64 q = 1;
  for (unsigned i = 0; i < s; ++i) {
    if (q > (u64(1) << 40) / p)
      throw FieldTooLarge("q = p^s exceeds the supported range");
    q *= p;
  }
  u64 n = (q + 1) / 2;  // q odd
  u64 g = (n - 1) * (m - 1) / 2;
  if (g == 0) throw ZeroGenus();

  HypothesisFlags hyp{};
  hyp.gcd_n_m = std::gcd(n, m) == 1;
  hyp.gcd_q_n = std::gcd(q, n) == 1;
  hyp.gcd_q_m1 = std::gcd(q, m - 1) == 1;
  hyp.gcd_p_m1 = std::gcd(p, m - 1) == 1;
  hyp.m_shape = (m == 2 || m == 3);
  if (!hyp.m_shape) {
    u64 pw = p;
    for (unsigned b = 1; pw <= m; ++b, pw *= p) {
      if (pw == m && s % b == 0) {
        hyp.m_shape = true;
        break;
      }
    }
  }

  if (strict && !hyp.all())
    throw HypothesisViolated("hypothesis flags fail for (p,s,m) = (" + std::to_string(p) +
                             "," + std::to_string(s) + "," + std::to_string(m) + ")");

  return CurveParams{p, s, m, n, q, g, hyp};
}

u64 genus(const CurveParams& params) {
  u64 g = (params.n - 1) * (params.m - 1) / 2;
  // n - 1 = (q - 1)/2, so the two printed forms agree.
  if (g != (params.q - 1) * (params.m - 1) / 4)
    throw Error(ErrorKind::internal, "genus identity violated");
  return g;
}

std::vector<BasisEntry> enumerate_basis(const CurveParams& params) {
  std::vector<BasisEntry> entries;
  for (u64 b = 1; b <= params.n - 1; ++b) {
    u64 amax = (params.m * b - 1) / params.n;
    for (u64 a = 1; a <= amax; ++a) entries.push_back(BasisEntry{a, b});
  }
  if (entries.size() != params.g)
    throw BasisCountMismatch("basis has " + std::to_string(entries.size()) +
                             " entries but genus is " + std::to_string(params.g));
  return entries;
}

std::vector<std::pair<u64, u64>> enumerate_paper_index_set(const CurveParams& params) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 i = 0; params.n * i <= params.g; ++i) {
    for (u64 j = 0; params.n * i + params.m * j <= params.g; ++j) {
      if (params.n * i + params.m * j >= 1) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace anum
