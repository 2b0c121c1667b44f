#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "achiral/diagram.hpp"
#include "achiral/numtheory.hpp"
#include "achiral/tangles.hpp"

namespace achiral::realize {

enum class CertificateKind {
  Rational,
  AlternatingConnectedSumTangle,
  TorusConnectedSum,
  StrongPlusTemplate,
  CatalogReference,
};

std::string to_string(CertificateKind k);

// Parameters (X, Y, A, B, C, D) of the three-strand template.
using TemplateParameters = std::array<std::int64_t, 6>;

struct RealizationCertificate {
  std::uint64_t n = 0;
  numtheory::TwoSquares decomposition;
  CertificateKind kind = CertificateKind::Rational;
  // Rational: the palindromic notation. AlternatingConnectedSumTangle: the
  // half tangle, tied with a (2, tsum_factor)-torus knot.
  tangles::ConwayNotation notation;
  std::int64_t tsum_factor = 1;
  std::optional<TemplateParameters> template_parameters;
  // Family row "7+8k", "11+16k", "19+16k" or "composite", and its k.
  std::string family;
  std::int64_t family_k = 0;
  std::string catalog_name;
  std::optional<diagrams::LinkDiagram> diagram;
  std::uint64_t claimed_det = 0;
  // Determinant per method, filled whenever a diagram is present.
  std::vector<std::pair<diagrams::DetMethod, std::uint64_t>> transcript;
};

// Achiral knot with determinant n for odd n. Prefers a coprime decomposition
// (smallest a), then n = 0 + p^2, then a common factor g > 1. Throws
// NotSumOfTwoSquares, and InvalidInput for even n.
RealizationCertificate realize_achiral(std::uint64_t n);

// Palindromic rational knot; throws NoCoprimeDecomposition when r2_0(n) = 0.
RealizationCertificate realize_achiral_rational(std::uint64_t n);

// Squares with no prime alternating achiral knot. Taken from exhaustive knot
// tables up to 16 crossings, which are not recomputed here.
inline constexpr std::array<std::uint64_t, 3> kExcludedSquares{1, 9, 49};

// Tabulated prime alternating achiral knots used for squares outside the
// families below.
struct CatalogEntry {
  std::uint64_t det;
  const char* name;
};
inline constexpr std::array<CatalogEntry, 2> kSquareCatalog{{{121, "10_123"}, {361, "12_1019"}}};

inline constexpr int kFamilyCompileMaxK = 5;
inline constexpr int kCompositeCompileMaxCrossings = 48;

// Prime alternating achiral knot candidate with determinant n = p^2. Throws
// ExcludedValue for p in {1, 3, 7} and InvalidInput when n is not an odd
// square. Template diagrams are compiled within the budgets above.
RealizationCertificate realize_square_prime_alternating(std::uint64_t n);

// Template parameters of the prime families; nullopt when p is not a prime
// 3 mod 4 covered by a row with k >= 1.
struct FamilyInstance {
  std::string row;
  std::int64_t k = 0;
  TemplateParameters parameters{};
};
std::optional<FamilyInstance> square_family(std::uint64_t p);
TemplateParameters family_parameters(const std::string& row, std::int64_t k);

// Whether the diagram's own checkerboard graph is a cycle or a bond, i.e. a
// (2, n)-torus link diagram.
bool is_two_bridge_torus_diagram(const diagrams::LinkDiagram& d);

// det >= n, and det >= 2n - 3 unless a (2, n)-torus diagram. Throws
// InvalidInput unless the diagram is alternating and reduced.
bool crowell_bound_check(const diagrams::LinkDiagram& d);

// det >= n(n - 3) for 2n crossings; throws InvalidInput for an odd count.
bool achiral_bound_check(const diagrams::LinkDiagram& d);

}  // namespace achiral::realize
