#include "achiral/alexander.hpp"

#include <numeric>
#include <sstream>

#include "achiral/census.hpp"
#include "achiral/error.hpp"
#include "achiral/numtheory.hpp"

namespace achiral::alexander {
namespace {

// Polynomials in t with coefficient i at t^i.
using Poly = std::vector<std::int64_t>;

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Nearest even integer to num/den, which is never an odd integer here.
std::int64_t even_quotient(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // floor(num / den) then adjust to the even neighbour within distance 1.
  std::int64_t f = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --f;
  if (num % den == 0) return f;
  return f % 2 == 0 ? f : f + 1;
}

}  // namespace

EvenExpansion even_expansion(std::int64_t p, std::int64_t q) {
  if (p % 2 == 0) throw InvalidInput("even_expansion needs odd p");
  if (std::gcd(p, q) != 1) throw InvalidInput("even_expansion needs gcd(p, q) = 1");
  if (q % 2 != 0) q -= p;
  EvenExpansion out;
  std::int64_t num = p;
  std::int64_t den = q;
  while (den != 0) {
    const std::int64_t a = even_quotient(num, den);
    out.entries.push_back(a);
    const std::int64_t r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

SymmetricLaurentPoly::SymmetricLaurentPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0) throw InvalidInput("symmetric polynomial needs an odd coefficient count");
}

std::int64_t SymmetricLaurentPoly::coefficient(int exponent) const {
  const int g = max_degree();
  if (exponent < -g || exponent > g) return 0;
  return coeffs_[static_cast<std::size_t>(exponent + g)];
}

std::int64_t SymmetricLaurentPoly::evaluate(std::int64_t t_value) const {
  if (t_value != 1 && t_value != -1) throw InvalidInput("evaluate supports t = 1 and t = -1");
  std::int64_t sum = 0;
  const int g = max_degree();
  for (int e = -g; e <= g; ++e) sum += coefficient(e) * ((t_value == -1 && (e % 2 != 0)) ? -1 : 1);
  return sum;
}

bool SymmetricLaurentPoly::is_palindromic() const {
  for (int e = 1; e <= max_degree(); ++e) {
    if (coefficient(e) != coefficient(-e)) return false;
  }
  return true;
}

std::string to_text(const SymmetricLaurentPoly& poly) {
  std::ostringstream out;
  const int g = poly.max_degree();
  for (int e = -g; e <= g; ++e) {
    if (e > -g) out << ' ';
    out << poly.coefficient(e) << ':' << e;
  }
  return out.str();
}

SymmetricLaurentPoly parse_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<std::pair<int, std::int64_t>> terms;
  int g = 0;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) throw InvalidInput("polynomial term '" + token + "' lacks ':'");
    try {
      const std::int64_t c = std::stoll(token.substr(0, colon));
      const int e = std::stoi(token.substr(colon + 1));
      terms.emplace_back(e, c);
      g = std::max(g, e < 0 ? -e : e);
    } catch (const std::logic_error&) {
      throw InvalidInput("malformed polynomial term '" + token + "'");
    }
  }
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(2 * g + 1), 0);
  for (const auto& [e, c] : terms) coeffs[static_cast<std::size_t>(e + g)] += c;
  return SymmetricLaurentPoly(std::move(coeffs));
}

SymmetricLaurentPoly alexander_rational(std::int64_t p, std::int64_t q) {
  const census::SchubertForm form(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q));
  const EvenExpansion e = even_expansion(static_cast<std::int64_t>(form.p()), static_cast<std::int64_t>(form.q()));
  Poly before{0};
  Poly current{1};
  for (std::size_t k = 1; k <= e.entries.size(); ++k) {
    const std::int64_t b = e.entries[k - 1] / 2;
    const std::int64_t s = (k % 2 == 1) ? b : -b;
    const Poly c{s, -s};
    Poly next = add(mul(c, current), mul(Poly{0, 1}, before));
    before = std::move(current);
    current = std::move(next);
  }
  current.resize(e.entries.size() + 1, 0);
  return SymmetricLaurentPoly(std::move(current));
}

std::int64_t leading_coeff(const EvenExpansion& expansion) {
  std::int64_t product = expansion.genus() % 2 == 0 ? 1 : -1;
  for (std::int64_t a : expansion.entries) product *= a / 2;
  return product;
}

bool square_leading_check(std::int64_t p, std::int64_t q) {
  const census::SchubertForm form(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q));
  if (!census::is_achiral_rational(form)) {
    throw InvalidInput("square_leading_check needs an achiral form, S(" + std::to_string(p) + "," +
                       std::to_string(q) + ") is not");
  }
  const std::int64_t lead = alexander_rational(p, q).leading_coefficient();
  return numtheory::is_perfect_square(static_cast<std::uint64_t>(lead < 0 ? -lead : lead));
}

}  // namespace achiral::alexander
