#include "achiral/census.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "achiral/diagram.hpp"
#include "achiral/diagram_builder.hpp"
#include "achiral/error.hpp"
#include "achiral/json_io.hpp"
#include "achiral/numtheory.hpp"
#include "achiral/tangles.hpp"
#include "oracles.hpp"

namespace cs = achiral::census;
namespace nt = achiral::numtheory;
namespace dg = achiral::diagrams;
namespace oracle = achiral::oracle;
using cs::SchubertForm;

TEST(SchubertForm, Validation) {
  EXPECT_NO_THROW(SchubertForm(5, 2));
  EXPECT_THROW(SchubertForm(6, 1), achiral::InvalidInput);
  EXPECT_THROW(SchubertForm(5, 0), achiral::InvalidInput);
  EXPECT_THROW(SchubertForm(5, 5), achiral::InvalidInput);
  EXPECT_THROW(SchubertForm(9, 3), achiral::InvalidInput);
}

TEST(SchubertForm, Equivalence) {
  EXPECT_TRUE(cs::schubert_equivalent({5, 2}, {5, 3}, true));
  EXPECT_TRUE(cs::schubert_equivalent({985, 288}, {985, 697}, false));
  EXPECT_FALSE(cs::schubert_equivalent({985, 288}, {985, 697}, true));
  EXPECT_EQ(985 - 288, 697);
  EXPECT_TRUE(cs::schubert_equivalent({985, 288}, {985, 407}, true));
  EXPECT_EQ((288 * 407) % 985, 1);
  EXPECT_FALSE(cs::schubert_equivalent({5, 1}, {5, 2}, false));
  EXPECT_THROW(cs::schubert_equivalent({5, 1}, {7, 1}, false), achiral::InvalidInput);
}

TEST(SchubertForm, Achirality) {
  EXPECT_TRUE(cs::is_achiral_rational({5, 2}));
  EXPECT_FALSE(cs::is_achiral_rational({3, 1}));
  EXPECT_TRUE(cs::is_achiral_rational({25, 7}));
  EXPECT_TRUE(cs::is_achiral_rational({29, 12}));
}

TEST(SchubertForm, AchiralIffPalindromicNotation) {
  // Achiral forms are exactly the numerators of palindromes (h, reverse h).
  for (std::uint64_t p = 3; p <= 301; p += 2) {
    std::set<std::uint64_t> from_palindromes;
    for (std::int64_t b = 1; b * b < static_cast<std::int64_t>(p); ++b)
      for (std::int64_t a = 1; a < b; ++a) {
        if (static_cast<std::uint64_t>(a * a + b * b) != p || std::gcd(a, b) != 1) continue;
        auto half = achiral::tangles::conway_of_fraction(b, a);
        auto full = half;
        full.insert(full.end(), half.rbegin(), half.rend());
        const auto f = achiral::tangles::tangle_fraction(full);
        ASSERT_EQ(f.p(), static_cast<std::int64_t>(p));
        from_palindromes.insert(static_cast<std::uint64_t>(f.q() % f.p()));
      }
    for (std::uint64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const bool achiral = cs::is_achiral_rational({p, q});
      bool equivalent_to_palindrome = false;
      for (auto r : from_palindromes)
        equivalent_to_palindrome |= cs::schubert_equivalent({p, q}, {p, r}, false);
      EXPECT_EQ(achiral, equivalent_to_palindrome) << p << "," << q;
    }
  }
}

TEST(Counts, Examples) {
  EXPECT_EQ(cs::count_achiral_rational(5), 1U);
  EXPECT_EQ(cs::count_achiral_rational(2), 0U);
  EXPECT_EQ(cs::count_achiral_rational(65), 2U);
  EXPECT_EQ(cs::count_rational_by_det(15), 3U);
  EXPECT_EQ(cs::count_rational_by_det(5), 2U);
  EXPECT_EQ(cs::count_rational_by_det(3), 1U);
  EXPECT_EQ(cs::count_rational_chiral_twice(5), 3U);
  EXPECT_EQ(cs::count_rational_chiral_twice(15), 6U);
  EXPECT_EQ(cs::count_rational_chiral_twice(3), 2U);
  EXPECT_THROW(cs::count_rational_by_det(4), achiral::InvalidInput);
  EXPECT_THROW(cs::count_rational_by_det(1), achiral::InvalidInput);
}

TEST(Counts, MatchOrbitScans) {
  for (std::uint64_t n = 3; n <= 999; n += 2) {
    const auto once = cs::count_rational_by_det(n);
    const auto twice = cs::count_rational_chiral_twice(n);
    const auto achiral = cs::count_achiral_rational(n);
    ASSERT_EQ(achiral, oracle::unit_class_count(n, false, true)) << n;
    ASSERT_EQ(once, oracle::unit_class_count(n, false)) << n;
    ASSERT_EQ(twice, oracle::unit_class_count(n, true)) << n;
    ASSERT_EQ(twice, 2 * once - achiral) << n;
    ASSERT_GT(once, 0U);
    ASSERT_EQ(cs::rational_classes(n).size(), once);
    ASSERT_EQ(cs::rational_classes(n, true).size(), twice);
  }
}

TEST(Counts, SingleClassOnlyForThree) {
  for (std::uint64_t n = 3; n <= 999; n += 2)
    EXPECT_EQ(cs::count_rational_by_det(n) == 1, oracle::unit_class_count(n, false) == 1);
  EXPECT_EQ(cs::count_rational_by_det(3), 1U);
  EXPECT_EQ(cs::count_rational_by_det(5), 2U);
}

TEST(Classes, Fifteen) {
  const auto classes = cs::rational_classes(15);
  ASSERT_EQ(classes.size(), 3U);
  EXPECT_EQ(classes[0].members, (std::vector<std::uint64_t>{1, 14}));
  EXPECT_EQ(classes[1].members, (std::vector<std::uint64_t>{2, 7, 8, 13}));
  EXPECT_EQ(classes[2].members, (std::vector<std::uint64_t>{4, 11}));
  for (const auto& c : classes) EXPECT_FALSE(c.achiral);
  const auto five = cs::rational_classes(5);
  ASSERT_EQ(five.size(), 2U);
  EXPECT_TRUE(five[1].achiral);
  EXPECT_EQ(five[1].representative(), 2U);
}

TEST(Classes, ExportFormats) {
  const auto classes = cs::rational_classes(15);
  const auto j = achiral::io::classes_to_json(15, classes);
  EXPECT_EQ(j.size(), 3U);
  const auto csv = achiral::io::classes_to_csv(15, classes);
  EXPECT_NE(csv.find("15,2,"), std::string::npos) << csv;
}

TEST(Duplication, S985) {
  // S(985, 288) and S(985, 697) lie in one mirror-insensitive class.
  for (const auto& c : cs::rational_classes(985)) {
    const bool has288 = std::count(c.members.begin(), c.members.end(), 288U) > 0;
    const bool has697 = std::count(c.members.begin(), c.members.end(), 697U) > 0;
    EXPECT_EQ(has288, has697);
  }
  for (const auto& c : cs::rational_classes(985, true)) {
    const bool has288 = std::count(c.members.begin(), c.members.end(), 288U) > 0;
    const bool has697 = std::count(c.members.begin(), c.members.end(), 697U) > 0;
    EXPECT_FALSE(has288 && has697);
  }
}

TEST(ClassBound, Examples) {
  EXPECT_EQ(cs::km_upper_bound(985), 5U);
  EXPECT_EQ(nt::omega(493), 2U);
  EXPECT_EQ(nt::omega(492), 3U);
  EXPECT_EQ(cs::km_upper_bound(5), 1U);
  EXPECT_EQ(cs::km_upper_bound(3), 1U);
  EXPECT_THROW(cs::km_upper_bound(4), achiral::InvalidInput);
  EXPECT_THROW(cs::km_upper_bound(1), achiral::InvalidInput);
}

TEST(Series, Examples) {
  const auto a1 = cs::achiral_u1_series(cs::SeriesKind::A, 1);
  EXPECT_EQ(a1.notation, (achiral::tangles::ConwayNotation{1, 1, 1, 1}));
  EXPECT_EQ(a1.det, 5U);
  EXPECT_EQ(cs::achiral_u1_series(cs::SeriesKind::A, 2).det, 13U);
  const auto b0 = cs::achiral_u1_series(cs::SeriesKind::B, 0);
  EXPECT_EQ(b0.notation, (achiral::tangles::ConwayNotation{3, 1, 1, 1, 1, 3}));
  EXPECT_EQ(b0.det, 65U);
  EXPECT_THROW(cs::achiral_u1_series(cs::SeriesKind::A, 0), achiral::InvalidInput);
}

TEST(Series, DeterminantsMatchDiagrams) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto e = cs::achiral_u1_series(cs::SeriesKind::A, n);
    EXPECT_EQ(dg::det(dg::compile_rational(e.notation)), e.det) << n;
  }
  for (unsigned n = 0; n <= 2; ++n) {
    const auto e = cs::achiral_u1_series(cs::SeriesKind::B, n);
    EXPECT_EQ(dg::det(dg::compile_rational(e.notation)), e.det) << n;
  }
}

TEST(Series, Growth) {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto e = cs::achiral_u1_series(cs::SeriesKind::A, n);
    EXPECT_EQ(e.det, static_cast<std::uint64_t>((n + 1) * (n + 1) + n * n));
    EXPECT_EQ(e.det % 2, 1U);
    EXPECT_GT(nt::r2_0(e.det), 0U);
  }
  double previous_ratio = 0;
  std::uint64_t previous = cs::achiral_u1_series(cs::SeriesKind::B, 0).det;
  for (unsigned n = 1; n <= 10; ++n) {
    const auto det = cs::achiral_u1_series(cs::SeriesKind::B, n).det;
    EXPECT_GT(nt::r2_0(det), 0U);
    const double ratio = static_cast<double>(det) / static_cast<double>(previous);
    EXPECT_GT(ratio, 1.5);
    if (n >= 5) EXPECT_NEAR(ratio, previous_ratio, 1e-3 * ratio);
    previous_ratio = ratio;
    previous = det;
  }
}
