#include "achiral/realize.hpp"

#include <algorithm>
#include <numeric>

#include "achiral/diagram_builder.hpp"
#include "achiral/error.hpp"

namespace achiral::realize {
namespace {

using diagrams::LinkDiagram;

// Every certificate carrying a diagram is checked before it is returned.
void verify(RealizationCertificate& cert) {
  cert.claimed_det = cert.n;
  if (!cert.diagram) return;
  const LinkDiagram& d = *cert.diagram;
  if (!diagrams::is_knot(d)) throw Error("realization produced a link for " + std::to_string(cert.n));
  if (!diagrams::is_alternating(d)) {
    throw Error("realization produced a non-alternating diagram for " + std::to_string(cert.n));
  }
  const auto report = diagrams::det_report(d, diagrams::DetMethod::All);
  cert.transcript = report.values;
  if (report.value != cert.n) {
    throw Error("realization of " + std::to_string(cert.n) + " has determinant " +
                std::to_string(report.value));
  }
}

void require_odd(std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw InvalidInput("determinant must be odd and positive, got " + std::to_string(n));
}

RealizationCertificate unknot_certificate() {
  RealizationCertificate cert;
  cert.n = 1;
  cert.decomposition = {0, 1};
  cert.kind = CertificateKind::Rational;
  cert.diagram = LinkDiagram();
  verify(cert);
  return cert;
}

RealizationCertificate rational_from(std::uint64_t n, numtheory::TwoSquares pair) {
  RealizationCertificate cert;
  cert.n = n;
  cert.decomposition = pair;
  cert.kind = CertificateKind::Rational;
  auto half = tangles::conway_of_fraction(static_cast<std::int64_t>(pair.b),
                                          static_cast<std::int64_t>(pair.a));
  cert.notation = half;
  cert.notation.insert(cert.notation.end(), half.rbegin(), half.rend());
  cert.diagram = diagrams::compile_rational(cert.notation);
  verify(cert);
  return cert;
}

std::optional<numtheory::TwoSquares> coprime_pair(std::uint64_t n) {
  for (const auto& pair : numtheory::two_square_decompositions(n)) {
    if (pair.a > 0 && std::gcd(pair.a, pair.b) == 1) return pair;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Rational: return "Rational";
    case CertificateKind::AlternatingConnectedSumTangle: return "AlternatingConnectedSumTangle";
    case CertificateKind::TorusConnectedSum: return "TorusConnectedSum";
    case CertificateKind::StrongPlusTemplate: return "StrongPlusTemplate";
    case CertificateKind::CatalogReference: return "CatalogReference";
  }
  return "?";
}

RealizationCertificate realize_achiral(std::uint64_t n) {
  require_odd(n);
  const auto test = numtheory::is_sum_two_squares(n);
  if (!test.representable) throw NotSumOfTwoSquares(n, *test.witness);
  if (n == 1) return unknot_certificate();
  if (const auto pair = coprime_pair(n)) return rational_from(n, *pair);

  const auto pairs = numtheory::two_square_decompositions(n);
  RealizationCertificate cert;
  cert.n = n;
  if (pairs.front().a == 0) {
    const auto p = static_cast<std::int64_t>(pairs.front().b);
    cert.decomposition = pairs.front();
    cert.kind = CertificateKind::TorusConnectedSum;
    cert.notation = {p};
    cert.diagram = diagrams::connected_sum(diagrams::torus_2(p), diagrams::mirror(diagrams::torus_2(p)));
  } else {
    const auto pair = pairs.front();
    const auto g = static_cast<std::int64_t>(std::gcd(pair.a, pair.b));
    cert.decomposition = pair;
    cert.kind = CertificateKind::AlternatingConnectedSumTangle;
    cert.notation = tangles::conway_of_fraction(static_cast<std::int64_t>(pair.b) / g,
                                                static_cast<std::int64_t>(pair.a) / g);
    cert.tsum_factor = g;
    cert.diagram = diagrams::compile_tsum(cert.notation, g);
  }
  verify(cert);
  return cert;
}

RealizationCertificate realize_achiral_rational(std::uint64_t n) {
  require_odd(n);
  if (n == 1) return unknot_certificate();
  const auto pair = coprime_pair(n);
  if (!pair) throw NoCoprimeDecomposition(n);
  return rational_from(n, *pair);
}

TemplateParameters family_parameters(const std::string& row, std::int64_t k) {
  if (row == "7+8k") return {1, k, 2, 3, 1, 2};
  if (row == "11+16k") return {1, k, 2, 7, 1, 2};
  if (row == "19+16k") return {1, k, 4, 3, 1, 4};
  throw InvalidInput("unknown family row '" + row + "'");
}

std::optional<FamilyInstance> square_family(std::uint64_t p) {
  if (!numtheory::is_prime(p) || p % 4 != 3) return std::nullopt;
  const auto sp = static_cast<std::int64_t>(p);
  FamilyInstance out;
  if (p % 8 == 7) {
    out.row = "7+8k";
    out.k = (sp - 7) / 8;
  } else if (p % 16 == 11) {
    out.row = "11+16k";
    out.k = (sp - 11) / 16;
  } else {
    out.row = "19+16k";
    out.k = (sp - 19) / 16;
  }
  if (out.k < 1) return std::nullopt;
  out.parameters = family_parameters(out.row, out.k);
  return out;
}

RealizationCertificate realize_square_prime_alternating(std::uint64_t n) {
  if (n % 2 == 0 || !numtheory::is_perfect_square(n)) {
    throw InvalidInput(std::to_string(n) + " is not an odd perfect square");
  }
  const std::uint64_t p = numtheory::isqrt(n);
  if (std::find(kExcludedSquares.begin(), kExcludedSquares.end(), n) != kExcludedSquares.end()) {
    throw ExcludedValue(n);
  }

  RealizationCertificate cert;
  cert.n = n;
  cert.decomposition = {0, p};
  if (!numtheory::is_prime(p)) {
    const std::uint64_t u = numtheory::factorize(p).front().prime;
    const auto y = static_cast<std::int64_t>(u) - 1;
    const auto a = static_cast<std::int64_t>(p / u) - 1;
    cert.kind = CertificateKind::StrongPlusTemplate;
    cert.family = "composite";
    cert.template_parameters = TemplateParameters{1, y, a, 1, 1, 1};
    if (2 * (y + a + 1) <= kCompositeCompileMaxCrossings) {
      cert.diagram = diagrams::compile_dsquare(1, y, a, 1, 1, 1);
    }
  } else if (p % 4 == 1) {
    auto rational = realize_achiral_rational(n);
    return rational;
  } else if (const auto* entry = std::find_if(kSquareCatalog.begin(), kSquareCatalog.end(),
                                              [n](const CatalogEntry& e) { return e.det == n; });
             entry != kSquareCatalog.end()) {
    cert.kind = CertificateKind::CatalogReference;
    cert.catalog_name = entry->name;
  } else {
    const auto family = square_family(p);
    if (!family) throw Error("no square family covers " + std::to_string(p));
    cert.kind = CertificateKind::StrongPlusTemplate;
    cert.family = family->row;
    cert.family_k = family->k;
    cert.template_parameters = family->parameters;
    const auto [x, y, a, b, c, d] = family->parameters;
    if (tangles::square_det_2(x, y, a, b, c, d) != static_cast<std::int64_t>(n)) {
      throw Error("family closed form does not give " + std::to_string(n));
    }
    if (family->k <= kFamilyCompileMaxK) cert.diagram = diagrams::compile_dsquare(x, y, a, b, c, d);
  }
  verify(cert);
  return cert;
}

bool is_two_bridge_torus_diagram(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return false;
  const auto g = diagrams::checkerboard_graph(d, diagrams::Color::Black);
  const int v = g.vertex_count();
  const int e = g.edge_count();
  if (v == 2) {
    return std::all_of(g.edges().begin(), g.edges().end(), [](const auto& edge) { return edge.first != edge.second; });
  }
  if (v != e) return false;
  std::vector<int> degree(static_cast<std::size_t>(v), 0);
  for (const auto& [a, b] : g.edges()) {
    ++degree[a];
    ++degree[b];
  }
  return std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; }) && g.is_connected();
}

bool crowell_bound_check(const LinkDiagram& d) {
  if (!diagrams::is_alternating(d)) throw InvalidInput("crowell_bound_check needs an alternating diagram");
  if (!diagrams::is_reduced(d)) throw InvalidInput("crowell_bound_check needs a reduced diagram");
  const auto n = static_cast<std::uint64_t>(d.crossing_count());
  const std::uint64_t det = diagrams::det(d, diagrams::DetMethod::Goeritz);
  if (det < n) return false;
  return is_two_bridge_torus_diagram(d) || det + 3 >= 2 * n;
}

bool achiral_bound_check(const LinkDiagram& d) {
  if (d.crossing_count() % 2 != 0) {
    throw InvalidInput("achiral_bound_check needs an even crossing count, got " +
                       std::to_string(d.crossing_count()));
  }
  const std::int64_t n = d.crossing_count() / 2;
  const auto det = static_cast<std::int64_t>(diagrams::det(d, diagrams::DetMethod::Goeritz));
  return det >= n * (n - 3);
}

}  // namespace achiral::realize
