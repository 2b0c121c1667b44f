#include "achiral/alexander.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "achiral/bigint.hpp"
#include "achiral/census.hpp"
#include "achiral/diagram.hpp"
#include "achiral/diagram_builder.hpp"
#include "achiral/error.hpp"
#include "achiral/numtheory.hpp"
#include "achiral/realize.hpp"
#include "achiral/tangles.hpp"
#include "oracles.hpp"

namespace ax = achiral::alexander;
namespace dg = achiral::diagrams;
namespace oracle = achiral::oracle;
using Coeffs = std::vector<std::int64_t>;

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST(EvenExpansion, Examples) {
  EXPECT_EQ(ax::even_expansion(5, 2).entries, (Coeffs{2, 2}));
  EXPECT_EQ(ax::even_expansion(3, 1).genus(), 1);
  EXPECT_EQ(ax::even_expansion(25, 7).genus(), 3);
  EXPECT_THROW(ax::even_expansion(6, 1), achiral::InvalidInput);
  EXPECT_THROW(ax::even_expansion(9, 3), achiral::InvalidInput);
}

TEST(EvenExpansion, EvaluatesBack) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const std::int64_t p = 3 + 2 * static_cast<std::int64_t>(rng() % 1000);
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
    if (std::gcd(p, q) != 1) continue;
    const auto e = ax::even_expansion(p, q);
    for (auto a : e.entries) {
      ASSERT_NE(a, 0);
      ASSERT_EQ(a % 2, 0);
    }
    ASSERT_EQ(e.entries.size() % 2, 0U);
    const auto [num, den] = oracle::continued_fraction_value(e.entries);
    const std::int64_t qq = q % 2 == 1 ? q - p : q;
    // num/den equals p/qq as a reduced fraction, up to a common sign.
    ASSERT_EQ(num * qq, den * p) << p << "/" << q;
    ASSERT_EQ(abs(num), p);
  }
}

TEST(Polynomial, Examples) {
  EXPECT_EQ(ax::alexander_rational(5, 2).coefficients(), (Coeffs{-1, 3, -1}));
  EXPECT_EQ(ax::alexander_rational(3, 1).coefficients(), (Coeffs{1, -1, 1}));
  EXPECT_EQ(ax::alexander_rational(9, 2).coefficients(), (Coeffs{-2, 5, -2}));
  EXPECT_EQ(ax::alexander_rational(7, 1).coefficients(), (Coeffs{1, -1, 1, -1, 1, -1, 1}));
  EXPECT_THROW(ax::alexander_rational(8, 3), achiral::InvalidInput);
}

TEST(Polynomial, LeadingCoefficientExamples) {
  EXPECT_EQ(ax::leading_coeff({{2, 2}}), -1);
  EXPECT_EQ(ax::leading_coeff({{2, 4}}), -2);
  EXPECT_EQ(ax::leading_coeff({{2, 2, 2, 2}}), 1);
  EXPECT_EQ(ax::leading_coeff(ax::even_expansion(9, 2)), ax::alexander_rational(9, 2).leading_coefficient());
}

TEST(Polynomial, RandomLaws) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 500) {
    const std::int64_t p = 3 + 2 * static_cast<std::int64_t>(rng() % 999);
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
    if (std::gcd(p, q) != 1) continue;
    ++checked;
    const auto poly = ax::alexander_rational(p, q);
    const auto e = ax::even_expansion(p, q);
    ASSERT_EQ(poly.evaluate(1), 1) << p << "/" << q;
    ASSERT_TRUE(poly.is_palindromic());
    ASSERT_EQ(iabs(poly.evaluate(-1)), p);
    ASSERT_EQ(poly.max_degree(), e.genus());
    ASSERT_EQ(poly.leading_coefficient(), ax::leading_coeff(e));
    achiral::BigInt product = 1;
    for (auto a : e.entries) product *= a;
    ASSERT_EQ(abs(product), achiral::BigInt(iabs(poly.leading_coefficient())) << (2 * e.genus()));
    // Sign of the top coefficient against the value at -1.
    const int g = e.genus();
    const std::int64_t sign_top = poly.leading_coefficient() > 0 ? 1 : -1;
    const std::int64_t sign_minus = poly.evaluate(-1) > 0 ? 1 : -1;
    ASSERT_EQ(sign_top, (g % 2 == 0 ? 1 : -1) * sign_minus) << p << "/" << q;
  }
}

TEST(Polynomial, InvariantUnderSchubertMoves) {
  for (std::int64_t p = 3; p <= 151; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto base = ax::alexander_rational(p, q);
      EXPECT_EQ(base, ax::alexander_rational(p, p - q));
      std::int64_t inv = 1;
      while ((inv * q) % p != 1) ++inv;
      EXPECT_EQ(base, ax::alexander_rational(p, inv));
    }
}

TEST(Polynomial, MatchesFoxCalculusOnDiagrams) {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 60) {
    const std::int64_t p = 3 + 2 * static_cast<std::int64_t>(rng() % 200);
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
    if (std::gcd(p, q) != 1) continue;
    const auto notation = achiral::tangles::conway_of_fraction(p, q);
    const auto d = dg::compile_rational(notation);
    if (d.crossing_count() > 22) continue;
    ++checked;
    EXPECT_EQ(oracle::alexander_from_diagram(d), ax::alexander_rational(p, q).coefficients())
        << p << "/" << q;
  }
}

TEST(Polynomial, AchiralSquaresAndAlternation) {
  int achiral_seen = 0;
  for (std::int64_t p = 5; p <= 999; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (!achiral::census::is_achiral_rational({static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)}))
        continue;
      ++achiral_seen;
      ASSERT_TRUE(ax::square_leading_check(p, q)) << p << "/" << q;
      const auto c = ax::alexander_rational(p, q).coefficients();
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        ASSERT_NE(c[i], 0);
        ASSERT_LT(c[i] * c[i + 1], 0) << p << "/" << q;
      }
    }
  EXPECT_GT(achiral_seen, 100);
  EXPECT_THROW(ax::square_leading_check(3, 1), achiral::InvalidInput);
}

TEST(Polynomial, TorusConnectedSum) {
  const auto cert = achiral::realize::realize_achiral(9);
  ASSERT_TRUE(cert.diagram.has_value());
  const auto fox = oracle::alexander_from_diagram(*cert.diagram);
  EXPECT_EQ(fox, (Coeffs{1, -2, 3, -2, 1}));
  const auto trefoil = ax::alexander_rational(3, 1).coefficients();
  EXPECT_EQ(fox, multiply(trefoil, trefoil));
  const auto cert49 = achiral::realize::realize_achiral(49);
  ASSERT_TRUE(cert49.diagram.has_value());
  const ax::SymmetricLaurentPoly poly(oracle::alexander_from_diagram(*cert49.diagram));
  EXPECT_EQ(iabs(poly.evaluate(-1)), 49);
  const auto seven = ax::alexander_rational(7, 1).coefficients();
  EXPECT_EQ(poly.coefficients(), multiply(seven, seven));
}

TEST(Polynomial, TextRoundTrip) {
  const auto poly = ax::alexander_rational(25, 7);
  EXPECT_EQ(ax::parse_poly(ax::to_text(poly)), poly);
  EXPECT_EQ(ax::to_text(ax::alexander_rational(5, 2)), "-1:-1 3:0 -1:1");
  EXPECT_THROW(ax::parse_poly("3x"), achiral::InvalidInput);
  EXPECT_THROW(ax::parse_poly("a:1"), achiral::InvalidInput);
  EXPECT_EQ(ax::parse_poly("").coefficients(), (Coeffs{0}));
  EXPECT_THROW(ax::SymmetricLaurentPoly(Coeffs{1, 2}), achiral::InvalidInput);
  EXPECT_THROW(poly.evaluate(2), achiral::InvalidInput);
}
