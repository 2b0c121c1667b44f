#include "achiral/tangles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "achiral/error.hpp"

namespace achiral::tangles {

KrebesFraction::KrebesFraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p == 0 && q == 0) throw InvalidInput("KrebesFraction: (0, 0) is not a fraction");
  if (p < 0 || (p == 0 && q < 0)) {
    p_ = -p;
    q_ = -q;
  }
}

KrebesFraction KrebesFraction::reduced() const {
  const std::int64_t g = std::gcd(p_, q_);
  return {p_ / g, q_ / g};
}

KrebesFraction eval_cf(std::span<const std::int64_t> cf) {
  // Projective evaluation from the tail: x -> a + 1/x acts on (p, q) as
  // (a p + q, p); the starting value is infinity.
  std::int64_t p = 1;
  std::int64_t q = 0;
  for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
    const std::int64_t next = *it * p + q;
    q = p;
    p = next;
  }
  return KrebesFraction(p, q).reduced();
}

KrebesFraction tangle_fraction(std::span<const std::int64_t> conway) {
  if (conway.empty()) throw InvalidInput("tangle_fraction: empty notation");
  ConwayNotation reversed(conway.rbegin(), conway.rend());
  return eval_cf(reversed);
}

ContinuedFraction continued_fraction(std::int64_t p, std::int64_t q) {
  if (p < 0 || q < 0 || (p == 0 && q == 0)) {
    throw InvalidInput("continued_fraction: expects nonnegative (p, q) not both zero");
  }
  ContinuedFraction cf;
  while (q != 0) {
    cf.push_back(p / q);
    const std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return cf;
}

ConwayNotation conway_of_fraction(std::int64_t p, std::int64_t q) {
  ContinuedFraction cf = continued_fraction(p, q);
  return ConwayNotation(cf.rbegin(), cf.rend());
}

KrebesFraction kr_sum(const KrebesFraction& x, const KrebesFraction& y) {
  return {x.p() * y.q() + y.p() * x.q(), x.q() * y.q()};
}

KrebesFraction kr_transpose(const KrebesFraction& x) { return {x.q(), x.p()}; }

KrebesFraction kr_connected_sum(const KrebesFraction& x, std::int64_t d) {
  if (d == 0) throw InvalidInput("kr_connected_sum: factor must be nonzero");
  return {d * x.p(), d * x.q()};
}

std::uint64_t tsum_det(const KrebesFraction& x) {
  const auto p = static_cast<std::uint64_t>(x.p() < 0 ? -x.p() : x.p());
  const auto q = static_cast<std::uint64_t>(x.q() < 0 ? -x.q() : x.q());
  return p * p + q * q;
}

ConwayNotation parse_conway(std::string_view text) {
  std::istringstream in{std::string(text)};
  ConwayNotation out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw InvalidInput("parse_conway: not an integer: '" + token + "'");
    }
    if (used != token.size()) throw InvalidInput("parse_conway: not an integer: '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw InvalidInput("parse_conway: empty notation");
  return out;
}

std::string format_conway(std::span<const std::int64_t> conway) {
  std::string out;
  for (std::size_t i = 0; i < conway.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(conway[i]);
  }
  return out;
}

std::int64_t tl3_pairing(const TL3Element& s, const TL3Element& t) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) sum += s.coeff[i] * t.coeff[j] * kTL3PairingTable[i][j];
  }
  return sum;
}

TL3Element stack_element(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b) {
  return stack_element(x, y, a, b, 1, 1);
}

TL3Element stack_element(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                         std::int64_t c, std::int64_t d) {
  // (C + D U1)(A + B U2)(X + Y U1) with U1^2 = 0 and U1 U2 U1 = U1.
  return {{a * c * x, b * c * x, a * c * y + a * d * x + b * d * y, b * d * x, b * c * y}};
}

std::int64_t square_det_1(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b) {
  const std::int64_t root = (x + y) * (a + b);
  return root * root;
}

std::int64_t square_det_2(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                          std::int64_t c, std::int64_t d) {
  const std::int64_t root = x * (d * a + b * c) + y * (b * d + a * c);
  return root * root;
}

std::int64_t minus_achiral_det(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                               std::int64_t x, std::int64_t y) {
  const std::int64_t f1 = x * (a * d + b * c) + y * (a * c + b * d);
  const std::int64_t f2 = y * (a * d - b * c);
  return f1 * f1 + f2 * f2;
}

}  // namespace achiral::tangles
