#pragma once

#include <cstdint>
#include <vector>

#include "achiral/tangles.hpp"

namespace achiral::census {

// Two-bridge knot S(p, q): p odd, 0 < q < p, gcd(p, q) = 1.
class SchubertForm {
 public:
  // Throws InvalidInput when the pair is not a valid form.
  SchubertForm(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t q() const noexcept { return q_; }

  friend bool operator==(const SchubertForm&, const SchubertForm&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

// Same knot up to orientation: q' = q^{+-1} mod p. The insensitive relation
// also identifies mirror images, q' = -q^{+-1}. Throws InvalidInput for
// different p.
bool schubert_equivalent(const SchubertForm& a, const SchubertForm& b, bool chirality_sensitive);

// q^2 = -1 mod p.
bool is_achiral_rational(const SchubertForm& s);

// r2_0(n) / 2 for odd n > 2, otherwise 0.
std::uint64_t count_achiral_rational(std::uint64_t n);
// (phi(n) + r2_0(n) + 2^omega(n)) / 4, knots up to mirror image. Odd n > 1.
std::uint64_t count_rational_by_det(std::uint64_t n);
// (phi(n) + 2^omega(n)) / 2, chiral pairs counted twice. Odd n > 1.
std::uint64_t count_rational_chiral_twice(std::uint64_t n);

// 2^(w((p+1)/2) - 1) + 2^(w((p-1)/2) - 1) - 1 for odd p >= 3, where a term
// with w = 0 counts as 1.
std::uint64_t km_upper_bound(std::uint64_t p);

// Equivalence classes of forms with numerator p, each listed by its sorted
// members; classes are sorted by smallest member.
struct RationalClass {
  std::vector<std::uint64_t> members;
  bool achiral = false;

  std::uint64_t representative() const { return members.front(); }
};

std::vector<RationalClass> rational_classes(std::uint64_t p, bool chirality_sensitive = false);

enum class SeriesKind { A, B };

struct SeriesEntry {
  tangles::ConwayNotation notation;
  std::uint64_t det = 0;
};

// A: (n 1 1 n), n >= 1. B: (3 (1 2)^n 1 1 1 1 (2 1)^n 3), n >= 0.
SeriesEntry achiral_u1_series(SeriesKind kind, unsigned n);

}  // namespace achiral::census
