#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "achiral/diagram.hpp"

namespace achiral::diagrams {

// Crossings joined by wires. Every port is wired to exactly one other port;
// ports not owned by a crossing are loose ends of a tangle.
class PortGraph {
 public:
  int new_port();
  void wire(int a, int b);
  // Ports listed in slot order 0..3; returns the crossing's index.
  int add_crossing(const std::array<int, 4>& ports);
  // Copies other into this graph; returns the offset added to its port ids.
  int absorb(const PortGraph& other);
  // Splices the wires ending at loose ends a and b into one.
  void join(int a, int b);

  int partner(int port) const { return partner_.at(static_cast<std::size_t>(port)); }
  int free_loops() const noexcept { return free_loops_; }
  std::vector<std::array<int, 4>>& crossings() noexcept { return crossings_; }
  const std::vector<std::array<int, 4>>& crossings() const noexcept { return crossings_; }

  // Closed diagram. Throws InvalidInput on loose ends and LinkNotKnot when
  // free loops split off beside the crossings.
  LinkDiagram to_diagram() const;

 private:
  std::vector<int> partner_;
  std::vector<std::array<int, 4>> crossings_;
  int free_loops_ = 0;
};

// A 2-tangle. Loose ends in counterclockwise order are NW, SW, SE, NE.
struct Tangle {
  enum End { NW = 0, NE = 1, SW = 2, SE = 3 };
  PortGraph graph;
  std::array<int, 4> ends{};
};

Tangle zero_tangle();
Tangle infinity_tangle();
// Horizontal crossing; sign +1 has its under-strand from SW to NE.
Tangle crossing_tangle(int sign);
Tangle vertical_crossing_tangle(int sign);

Tangle tangle_sum(const Tangle& s, const Tangle& t);
// s placed above t.
Tangle tangle_product(const Tangle& s, const Tangle& t);
Tangle rotate(const Tangle& t);
Tangle mirror(const Tangle& t);
// Reflection in a vertical line.
Tangle reflect(const Tangle& t);

LinkDiagram numerator_closure(const Tangle& t);
LinkDiagram denominator_closure(const Tangle& t);

// Twists in the order a1 .. an, the last one horizontal; numerator and
// denominator closures have determinants |p| and |q| of tangle_fraction.
Tangle rational_tangle(std::span<const std::int64_t> conway);
// Alternating rational tangle with fraction p/q for coprime p, q >= 0.
Tangle rational_tangle_of_fraction(std::int64_t p, std::int64_t q);

// Tangle with strands entering at the top and leaving at the bottom, ports
// numbered left to right.
struct StrandTangle {
  PortGraph graph;
  std::vector<int> top;
  std::vector<int> bottom;
};

// t occupies positions i and i + 1 of width strands; the others pass straight.
StrandTangle place(const Tangle& t, int i, int width);
// a above b.
StrandTangle stack(const StrandTangle& a, const StrandTangle& b);
// Reflection in a vertical line; strand i trades places with strand width-1-i.
StrandTangle reflect(const StrandTangle& t);
LinkDiagram trace_closure(const StrandTangle& t);

// Numerator closure of the rational tangle; throws InvalidInput on an empty
// notation or a zero entry.
LinkDiagram compile_rational(std::span<const std::int64_t> conway);

// Numerator closure of T + mirror(rotate(T)) for the rational tangle T of the
// notation, with a (2, d)-torus knot tied into one strand of T when d > 1.
// The result is alternating; throws LinkNotKnot when it is a link.
LinkDiagram compile_tsum(std::span<const std::int64_t> conway, std::int64_t d = 1);

// Trace closure of the three-strand stack T below reflect(T). Reflecting the
// whole diagram only rotates the closure, so the knot is achiral. Rational
// tangles of fractions C/D on strands 1-2 at the top, A/B on 2-3 and X/Y on
// 1-2 at the bottom, made alternating. Throws NonRealizable for a pair that is
// not coprime and nonnegative, and LinkNotKnot for links.
LinkDiagram compile_dsquare(std::int64_t x, std::int64_t y, std::int64_t a, std::int64_t b,
                            std::int64_t c = 1, std::int64_t d = 1);

// Closure of p half twists; the sign picks the handedness.
LinkDiagram torus_2(std::int64_t p);

}  // namespace achiral::diagrams
