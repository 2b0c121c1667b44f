#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace achiral::numtheory {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime, strictly increasing. factorize(1) is empty.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);

// Quarter of the number of lattice points on the circle of radius sqrt(n),
// via the divisor-character sum #{d | n : d = 1 mod 4} - #{d | n : d = 3 mod 4}.
std::uint64_t r2(std::uint64_t n);

// Number of ordered pairs (a, b) of coprime naturals with a^2 + b^2 = n (n > 1).
std::uint64_t r2_0(std::uint64_t n);

struct TwoSquares {
  std::uint64_t a = 0;  // a <= b
  std::uint64_t b = 0;

  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

// All a^2 + b^2 = n with 0 <= a <= b, sorted by a.
std::vector<TwoSquares> two_square_decompositions(std::uint64_t n);

struct SumOfSquaresTest {
  bool representable = false;
  // Smallest prime = 3 mod 4 carrying an odd exponent when not representable.
  std::optional<std::uint64_t> witness;
};

SumOfSquaresTest is_sum_two_squares(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);
unsigned omega(std::uint64_t n);

// All x in [1, n-1] with x^2 = -1 (mod n), ascending. Requires n odd, n > 1.
std::vector<std::uint64_t> sqrt_minus_one_roots(std::uint64_t n);

bool is_perfect_square(std::uint64_t n);
std::uint64_t isqrt(std::uint64_t n);

enum class Verdict { ChiralCertified, Inconclusive };

enum class ChiralityReason {
  None,
  NegativeSignedDeterminant,
  NineDivisibility,
  ResidueMod36,
  NotSumOfTwoSquares,
};

struct ChiralityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  ChiralityReason reason = ChiralityReason::None;
};

std::string_view to_string(Verdict v);
std::string_view to_string(ChiralityReason r);

// Residues mod 36 attained by determinants of achiral knots.
inline constexpr std::uint64_t kAchiralResidues36[] = {1, 5, 9, 13, 17, 25, 29};

// Determinant-only chirality certificate. Criteria are tried in the order
// sign, 3-but-not-9 divisibility, residue mod 36, two-squares; the first that
// fires is reported. Throws InvalidInput for even det or |signed_det| != det.
ChiralityVerdict chirality_filter(std::uint64_t det,
                                  std::optional<std::int64_t> signed_det = std::nullopt);

// F_1 = F_2 = 1. Defined for n <= 93.
std::uint64_t fibonacci(unsigned n);
// L_0 = 2, L_1 = 1. Defined for n <= 91.
std::uint64_t lucas(unsigned n);

// (F_{2n+1} == F_n^2 + F_{n+1}^2, L_{2n+1} + 2 L_{2n} == L_n^2 + L_{n+1}^2).
// Defined for n <= 45.
std::pair<bool, bool> fib_lucas_identities(unsigned n);

}  // namespace achiral::numtheory
