#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace achiral::tangles {

// Continued fraction a1 + 1/(a2 + 1/(... + 1/an)). Zero entries and the
// degenerate values 1/0 = inf, inf + x = inf, 1/inf = 0 are allowed.
using ContinuedFraction = std::vector<std::int64_t>;

// Conway notation of a rational tangle, (a1 a2 ... an).
using ConwayNotation = std::vector<std::int64_t>;

// A pair (p, q) read as the fraction p/q, with infinity = (1, 0). The pair is
// kept unreduced (connected sums scale both entries); the first nonzero entry
// is nonnegative.
class KrebesFraction {
 public:
  KrebesFraction(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  KrebesFraction reduced() const;

  friend bool operator==(const KrebesFraction&, const KrebesFraction&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

KrebesFraction eval_cf(std::span<const std::int64_t> cf);

// Fraction of the tangle (a1 ... an); this is eval_cf of the reversed list.
KrebesFraction tangle_fraction(std::span<const std::int64_t> conway);

// Nonnegative continued fraction of p/q for p, q >= 0 not both zero:
// eval_cf(continued_fraction(p, q)) == (p, q) reduced. (1, 0) yields {}.
ContinuedFraction continued_fraction(std::int64_t p, std::int64_t q);

// Conway notation of a nonnegative tangle with fraction p/q; the inverse of
// tangle_fraction on coprime nonnegative pairs.
ConwayNotation conway_of_fraction(std::int64_t p, std::int64_t q);

KrebesFraction kr_sum(const KrebesFraction& x, const KrebesFraction& y);
KrebesFraction kr_transpose(const KrebesFraction& x);
// Connected sum with a knot of determinant d scales both closures by d.
KrebesFraction kr_connected_sum(const KrebesFraction& x, std::int64_t d);

// Determinant p^2 + q^2 of the closure of T plus its mirrored transpose.
std::uint64_t tsum_det(const KrebesFraction& x);

// Whitespace-separated signed integers, e.g. "3 1 1 3".
ConwayNotation parse_conway(std::string_view text);
std::string format_conway(std::span<const std::int64_t> conway);

// Element of the three-strand diagram algebra at loop value zero, over the
// basis {1, U2, U1, U1U2, U2U1} (U1 caps strands 1-2, U2 caps strands 2-3,
// products read top to bottom).
struct TL3Element {
  std::array<std::int64_t, 5> coeff{};

  friend bool operator==(const TL3Element&, const TL3Element&) = default;
};

// Pairing of basis elements: 1 when the closure of s over the reflection of t
// is a single loop, 0 otherwise.
inline constexpr std::array<std::array<int, 5>, 5> kTL3PairingTable = {{
    {0, 0, 0, 1, 1},
    {0, 1, 0, 0, 0},
    {0, 0, 1, 0, 0},
    {1, 0, 0, 0, 1},
    {1, 0, 0, 1, 0},
}};

std::int64_t tl3_pairing(const TL3Element& s, const TL3Element& t);

// Three-strand tangle: a crossing on strands 1-2 over a tangle with bracket
// coefficients (A, B) on strands 2-3 over one with (X, Y) on strands 1-2.
TL3Element stack_element(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b);

// Same with the top crossing replaced by a tangle with coefficients (C, D).
TL3Element stack_element(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                         std::int64_t c, std::int64_t d);

std::int64_t square_det_1(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b);
std::int64_t square_det_2(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t d);
// f1^2 + f2^2 with f1 = X(AD + BC) + Y(AC + BD), f2 = Y(AD - BC).
std::int64_t minus_achiral_det(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               std::int64_t x, std::int64_t y);

}  // namespace achiral::tangles
