#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "achiral/bigint.hpp"
#include "achiral/diagram.hpp"
#include "achiral/plangraph.hpp"

// Slow, independent reference computations used to check the library. None of
// these call into the code they are meant to check.
namespace achiral::oracle {

// Lattice points on m1^2 + m2^2 = n, divided by four.
std::uint64_t r2(std::uint64_t n);
// Ordered pairs (a, b) of nonnegative coprime integers with a^2 + b^2 = n.
std::uint64_t r2_0(std::uint64_t n);
// Pairs a <= b with a^2 + b^2 = n, by scanning a.
std::vector<std::pair<std::uint64_t, std::uint64_t>> decompositions(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
unsigned omega(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> roots_of_minus_one(std::uint64_t n);

// Classes of units q mod n under q -> q^-1, and also q -> -q unless
// chirality-sensitive. With achiral_only, only classes of roots of -1 count.
std::uint64_t unit_class_count(std::uint64_t n, bool sensitive, bool achiral_only = false);

// a1 + 1/(a2 + 1/(...)) as a reduced fraction; q = 0 stands for infinity.
std::pair<BigInt, BigInt> continued_fraction_value(const std::vector<std::int64_t>& entries);

// Counts loops of every splice state by walking the resolved curves.
std::uint64_t monocyclic_states(const diagrams::LinkDiagram& d);
// Spanning trees by trying every (V-1)-subset of edges.
std::uint64_t spanning_trees(const plangraph::PlanarMultigraph& g);

// Alexander polynomial of a knot diagram from its Wirtinger presentation and
// Fox derivatives, normalized to be symmetric with value 1 at t = 1.
// Coefficients run from t^-g to t^g.
std::vector<std::int64_t> alexander_from_diagram(const diagrams::LinkDiagram& d);

// Three-strand Temperley-Lieb diagrams as perfect matchings on six points:
// top 0..2 are points 0..2, bottom 0..2 are points 3..5.
using Matching = std::vector<int>;
// Basis id, U2, U1, U1U2, U2U1; U1 caps strands 0-1, U2 strands 1-2, and a
// product lists the upper factor first.
std::vector<Matching> tl3_basis();
Matching tl3_reflect(const Matching& m);
// a on top of b; loops closed in the middle are added to loops.
Matching tl3_compose(const Matching& a, const Matching& b, int& loops);
int tl3_trace_loops(const Matching& m);

// Random positive Conway notation with at most max_crossings crossings.
std::vector<std::int64_t> random_notation(std::mt19937_64& rng, int max_crossings);

}  // namespace achiral::oracle
