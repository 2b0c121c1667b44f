#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace achiral::alexander {

// Nonzero even entries a1 .. a2g with p/q = a1 + 1/(a2 + ... + 1/a2g).
struct EvenExpansion {
  std::vector<std::int64_t> entries;

  int genus() const noexcept { return static_cast<int>(entries.size() / 2); }
};

// Replaces q by q - p when q is odd, then takes the unique even quotient with
// remainder smaller than the divisor at every step. Throws InvalidInput unless
// p is odd and gcd(p, q) = 1.
EvenExpansion even_expansion(std::int64_t p, std::int64_t q);

// Laurent polynomial with coefficients for exponents -g .. g.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly() = default;
  // coeffs[0] is the coefficient of t^-g; throws unless the size is odd.
  explicit SymmetricLaurentPoly(std::vector<std::int64_t> coeffs);

  int max_degree() const noexcept { return static_cast<int>(coeffs_.size() / 2); }
  std::int64_t coefficient(int exponent) const;
  std::int64_t leading_coefficient() const { return coefficient(max_degree()); }
  // Value at t = 1 or t = -1.
  std::int64_t evaluate(std::int64_t t_value) const;
  bool is_palindromic() const;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const SymmetricLaurentPoly&, const SymmetricLaurentPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_{1};
};

// "coeff:exponent" pairs separated by spaces, lowest exponent first.
std::string to_text(const SymmetricLaurentPoly& poly);
SymmetricLaurentPoly parse_poly(std::string_view text);

// Alexander polynomial of S(p, q) normalized by Delta(1) = 1, from the
// tridiagonal recurrence D_k = c_k D_{k-1} + t D_{k-2} with
// c_k = (-1)^(k+1) (a_k / 2)(1 - t) and Delta = t^-g D_2g.
SymmetricLaurentPoly alexander_rational(std::int64_t p, std::int64_t q);

// (-1)^g times the product of the a_k / 2, the top coefficient of the
// polynomial above.
std::int64_t leading_coeff(const EvenExpansion& expansion);

// |leading coefficient| is a perfect square. Throws InvalidInput unless
// S(p, q) is achiral.
bool square_leading_check(std::int64_t p, std::int64_t q);

}  // namespace achiral::alexander
