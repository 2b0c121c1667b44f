#include "achiral/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "achiral/error.hpp"
#include "achiral/numtheory.hpp"

namespace achiral::census {
namespace {


std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ typedef unsigned __int128 wide;
  return static_cast<std::uint64_t>(static_cast<wide>(a) * b % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  auto r = static_cast<std::int64_t>(m);
  auto new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

void require_odd_above_one(std::uint64_t n, const char* what) {
  if (n < 3 || n % 2 == 0) throw InvalidInput(std::string(what) + ": n must be odd and greater than 1");
}

}  // namespace

SchubertForm::SchubertForm(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {
  if (p % 2 == 0) throw InvalidInput("Schubert form needs odd p, got " + std::to_string(p));
  if (q == 0 || q >= p) throw InvalidInput("Schubert form needs 0 < q < p");
  if (std::gcd(p, q) != 1) throw InvalidInput("Schubert form needs gcd(p, q) = 1");
}

bool schubert_equivalent(const SchubertForm& a, const SchubertForm& b, bool chirality_sensitive) {
  if (a.p() != b.p()) throw InvalidInput("schubert_equivalent: forms have different p");
  const std::uint64_t p = a.p();
  const std::uint64_t inv = inverse_mod(a.q(), p);
  if (b.q() == a.q() || b.q() == inv) return true;
  if (chirality_sensitive) return false;
  return b.q() == p - a.q() || b.q() == p - inv;
}

bool is_achiral_rational(const SchubertForm& s) {
  return mul_mod(s.q(), s.q(), s.p()) == s.p() - 1;
}

std::uint64_t count_achiral_rational(std::uint64_t n) {
  if (n <= 2 || n % 2 == 0) return 0;
  return numtheory::r2_0(n) / 2;
}

std::uint64_t count_rational_by_det(std::uint64_t n) {
  require_odd_above_one(n, "count_rational_by_det");
  return (numtheory::totient(n) + numtheory::r2_0(n) + (std::uint64_t{1} << numtheory::omega(n))) / 4;
}

std::uint64_t count_rational_chiral_twice(std::uint64_t n) {
  require_odd_above_one(n, "count_rational_chiral_twice");
  return (numtheory::totient(n) + (std::uint64_t{1} << numtheory::omega(n))) / 2;
}

std::uint64_t km_upper_bound(std::uint64_t p) {
  require_odd_above_one(p, "km_upper_bound");
  auto term = [](std::uint64_t m) -> std::uint64_t {
    const unsigned w = numtheory::omega(m);
    return w == 0 ? 1 : std::uint64_t{1} << (w - 1);
  };
  return term((p + 1) / 2) + term((p - 1) / 2) - 1;
}

std::vector<RationalClass> rational_classes(std::uint64_t p, bool chirality_sensitive) {
  require_odd_above_one(p, "rational_classes");
  std::vector<bool> seen(p, false);
  std::vector<RationalClass> out;
  for (std::uint64_t q = 1; q < p; ++q) {
    if (seen[q] || std::gcd(p, q) != 1) continue;
    const std::uint64_t inv = inverse_mod(q, p);
    std::set<std::uint64_t> members{q, inv};
    if (!chirality_sensitive) {
      members.insert(p - q);
      members.insert(p - inv);
    }
    RationalClass c;
    c.members.assign(members.begin(), members.end());
    c.achiral = is_achiral_rational(SchubertForm(p, q));
    for (auto m : c.members) seen[m] = true;
    out.push_back(std::move(c));
  }
  return out;
}

SeriesEntry achiral_u1_series(SeriesKind kind, unsigned n) {
  tangles::ConwayNotation half;
  if (kind == SeriesKind::A) {
    if (n < 1) throw InvalidInput("series A starts at n = 1");
    half = {static_cast<std::int64_t>(n), 1};
  } else {
    half = {3};
    for (unsigned i = 0; i < n; ++i) {
      half.push_back(1);
      half.push_back(2);
    }
    half.push_back(1);
    half.push_back(1);
  }
  SeriesEntry e;
  e.notation = half;
  e.notation.insert(e.notation.end(), half.rbegin(), half.rend());
  const auto f = tangles::tangle_fraction(e.notation);
  e.det = static_cast<std::uint64_t>(f.p() < 0 ? -f.p() : f.p());
  return e;
}

}  // namespace achiral::census
