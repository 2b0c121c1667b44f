#include "achiral/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "achiral/error.hpp"

namespace achiral::numtheory {
namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

constexpr u64 kTrialDivisionBound = 1'000'000;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n is odd, composite and has no factor below
// the trial-division bound.
u64 pollard_rho(u64 n) {
  std::mt19937_64 rng(n);
  while (true) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 g = 1;
    u64 q = 1;
    u64 x = 0;
    u64 ys = 0;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1U) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = (mul_mod(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_large_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  collect_large_factors(d, out);
  collect_large_factors(n / d, out);
}

// Root of x^2 = -1 mod p for a prime p = 1 mod 4.
u64 sqrt_minus_one_mod_prime(u64 p) {
  for (u64 c = 2;; ++c) {
    if (pow_mod(c, (p - 1) / 2, p) == p - 1) return pow_mod(c, (p - 1) / 4, p);
  }
}

// Extended Euclid inverse of a modulo m (gcd(a, m) = 1).
u64 inverse_mod(u64 a, u64 m) {
  i128 t = 0;
  i128 new_t = 1;
  i128 r = m;
  i128 new_r = a % m;
  while (new_r != 0) {
    const i128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw InvalidInput("factorize: n must be positive");
  Factorization result;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.push_back({p, e});
  };
  take(2);
  for (u64 p = 3; p <= kTrialDivisionBound && p * p <= n; p += 2) take(p);
  if (n == 1) return result;
  // Trial division covered every factor up to min(sqrt(n), bound).
  if (n <= kTrialDivisionBound * kTrialDivisionBound) {
    result.push_back({n, 1});
    return result;
  }
  std::vector<u64> primes;
  collect_large_factors(n, primes);
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

u64 r2(u64 n) {
  u64 count = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (p % 4 == 1) {
      count *= e + 1;
    } else if (p % 4 == 3 && e % 2 == 1) {
      return 0;
    }
  }
  return count;
}

u64 r2_0(u64 n) {
  u64 count = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (p == 2) {
      if (e > 1) return 0;
    } else if (p % 4 == 3) {
      return 0;
    } else {
      count *= 2;
    }
  }
  return count;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

std::vector<TwoSquares> two_square_decompositions(u64 n) {
  std::vector<TwoSquares> result;
  for (u64 a = 0; 2 * static_cast<u128>(a) * a <= n; ++a) {
    const u64 rest = n - a * a;
    const u64 b = isqrt(rest);
    if (b * b == rest) result.push_back({a, b});
  }
  return result;
}

SumOfSquaresTest is_sum_two_squares(u64 n) {
  for (const auto& [p, e] : factorize(n)) {
    if (p % 4 == 3 && e % 2 == 1) return {false, p};
  }
  return {true, std::nullopt};
}

u64 totient(u64 n) {
  u64 phi = n;
  for (const auto& pe : factorize(n)) phi = phi / pe.prime * (pe.prime - 1);
  return phi;
}

unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).size()); }

std::vector<u64> sqrt_minus_one_roots(u64 n) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("sqrt_minus_one_roots: n must be odd and > 1");
  // Roots modulo each prime power, combined by CRT.
  std::vector<u64> roots{0};
  u64 modulus = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (p % 4 == 3) return {};
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    // Hensel lift from p to p^e; derivative 2r is a unit since p is odd.
    u64 r = sqrt_minus_one_mod_prime(p);
    for (u64 mod = p; mod < pe;) {
      mod = static_cast<u128>(mod) * mod >= pe ? pe : mod * mod;
      const u64 f = (mul_mod(r, r, mod) + 1) % mod;
      const u64 step = mul_mod(f, inverse_mod(2 * r % mod, mod), mod);
      r = (r + mod - step) % mod;
    }
    std::vector<u64> next;
    const u64 inv = inverse_mod(modulus % pe, pe);
    for (u64 x : roots) {
      for (u64 target : {r, pe - r}) {
        // Solve y = x mod modulus, y = target mod pe.
        const u64 diff = (target + pe - x % pe) % pe;
        const u64 k = mul_mod(diff, inv, pe);
        next.push_back(x + modulus * k);
      }
    }
    roots = std::move(next);
    modulus *= pe;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::ChiralCertified ? "ChiralCertified" : "Inconclusive";
}

std::string_view to_string(ChiralityReason r) {
  switch (r) {
    case ChiralityReason::None: return "none";
    case ChiralityReason::NegativeSignedDeterminant: return "negative signed determinant";
    case ChiralityReason::NineDivisibility: return "divisible by 3 but not by 9";
    case ChiralityReason::ResidueMod36: return "residue mod 36 not attained by achiral knots";
    case ChiralityReason::NotSumOfTwoSquares: return "not a sum of two squares";
  }
  return "unknown";
}

ChiralityVerdict chirality_filter(u64 det, std::optional<std::int64_t> signed_det) {
  if (det == 0 || det % 2 == 0) throw InvalidInput("chirality_filter: determinant must be odd and positive");
  if (signed_det && static_cast<u64>(*signed_det < 0 ? -*signed_det : *signed_det) != det) {
    throw InvalidInput("chirality_filter: |signed determinant| must equal the determinant");
  }
  auto chiral = [](ChiralityReason r) { return ChiralityVerdict{Verdict::ChiralCertified, r}; };
  if (signed_det && *signed_det < 0) return chiral(ChiralityReason::NegativeSignedDeterminant);
  if (det % 3 == 0 && det % 9 != 0) return chiral(ChiralityReason::NineDivisibility);
  const u64 residue = det % 36;
  if (std::find(std::begin(kAchiralResidues36), std::end(kAchiralResidues36), residue) ==
      std::end(kAchiralResidues36)) {
    return chiral(ChiralityReason::ResidueMod36);
  }
  if (r2(det) == 0) return chiral(ChiralityReason::NotSumOfTwoSquares);
  return {};
}

u64 fibonacci(unsigned n) {
  if (n > 93) throw InvalidInput("fibonacci: index exceeds 64-bit range");
  u64 a = 0;
  u64 b = 1;
  for (unsigned i = 0; i < n; ++i) {
    const u64 next = a + b;
    a = b;
    b = next;
  }
  return a;
}

u64 lucas(unsigned n) {
  if (n > 91) throw InvalidInput("lucas: index exceeds 64-bit range");
  u64 a = 2;
  u64 b = 1;
  for (unsigned i = 0; i < n; ++i) {
    const u64 next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::pair<bool, bool> fib_lucas_identities(unsigned n) {
  if (n > 45) throw InvalidInput("fib_lucas_identities: n must be <= 45");
  const u128 fn = fibonacci(n);
  const u128 fn1 = fibonacci(n + 1);
  const u128 ln = lucas(n);
  const u128 ln1 = lucas(n + 1);
  const bool fib = fibonacci(2 * n + 1) == fn * fn + fn1 * fn1;
  const bool luc = static_cast<u128>(lucas(2 * n + 1)) + 2 * static_cast<u128>(lucas(2 * n)) ==
                   ln * ln + ln1 * ln1;
  return {fib, luc};
}

}  // namespace achiral::numtheory
