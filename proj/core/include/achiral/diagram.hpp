#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "achiral/plangraph.hpp"

namespace achiral::diagrams {

// Arcs listed counterclockwise around the crossing. Slots 0 and 2 carry the
// under-strand, slots 1 and 3 the over-strand.
struct Crossing {
  int id = 0;
  std::array<int, 4> arcs{};
};

// A connected planar link diagram, immutable once built. A dart 4c + s is the
// occurrence of an arc in slot s of crossing c; it also names the corner
// between slots s - 1 and s, which is how faces are indexed. The default
// diagram is the crossingless unknot.
class LinkDiagram {
 public:
  LinkDiagram();

  // Throws InvalidInput naming the offending crossing id when an arc does not
  // occur exactly twice, the diagram is split, or face tracing fails Euler.
  explicit LinkDiagram(std::vector<Crossing> crossings);

  // Crossing ids are assigned 0, 1, ...
  static LinkDiagram from_arcs(const std::vector<std::array<int, 4>>& arcs);

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return 2 * crossing_count(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::vector<std::array<int, 4>> arc_table() const;

  // Dart of the other occurrence of the same arc.
  int twin(int dart) const { return twin_.at(static_cast<std::size_t>(dart)); }
  // Arc of a dart renumbered into 0 .. arc_count() - 1.
  int arc_index(int dart) const { return arc_index_.at(static_cast<std::size_t>(dart)); }

  int face_count() const noexcept { return face_count_; }
  const std::vector<int>& face_of_dart() const noexcept { return face_of_dart_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> twin_;
  std::vector<int> arc_index_;
  std::vector<int> face_of_dart_;
  int face_count_ = 2;
};

enum class Color { Black, White };

// Two-colouring of the faces. Black is the colour of the face at dart 0.
struct CheckerboardColoring {
  std::vector<Color> face_color;

  Color color_of_dart(const LinkDiagram& d, int dart) const {
    return face_color[static_cast<std::size_t>(d.face_of_dart()[static_cast<std::size_t>(dart)])];
  }
};

CheckerboardColoring checkerboard_coloring(const LinkDiagram& d);

// One vertex per face of the given colour, one edge per crossing, embedded by
// the order of crossings around each face. Edge c joins the corners of
// crossing c that carry the colour; its dart 2c sits at the lower slot.
plangraph::PlanarMultigraph checkerboard_graph(const LinkDiagram& d, Color color);

// |det| of the Goeritz matrix on white regions with the last row and column
// removed. A crossing contributes +1 when its corner between slots 3 and 0 is
// white and -1 otherwise.
std::uint64_t goeritz_det(const LinkDiagram& d);

inline constexpr int kStateBudget = 24;

// Splice choice 0 joins slots 0-1 and 2-3; choice 1 joins 1-2 and 3-0. Bit c
// of a state is the choice at crossing c. Throws BudgetExceeded past
// kStateBudget crossings.
std::uint64_t monocyclic_state_count(const LinkDiagram& d);
void for_each_monocyclic_state(const LinkDiagram& d,
                               const std::function<void(std::uint32_t)>& visit);

// Loop count of the full resolution by a state.
int state_loop_count(const LinkDiagram& d, std::uint32_t state);

// The crossings whose splice merges the two black corners.
std::uint32_t state_tree_edges(const LinkDiagram& d, std::uint32_t state);

// True iff state_tree_edges maps monocyclic states bijectively onto spanning
// trees of the black checkerboard graph. Requires an alternating diagram.
bool state_tree_bijection_check(const LinkDiagram& d);

enum class DetMethod { Goeritz, States, Trees, All };

std::string to_string(DetMethod m);
DetMethod parse_det_method(const std::string& text);

struct DetReport {
  std::uint64_t value = 0;
  std::vector<std::pair<DetMethod, std::uint64_t>> values;
};

// States and trees need an alternating diagram. All runs Goeritz always, trees
// on alternating diagrams and states when also within kStateBudget; it throws
// MethodDisagreement when the values differ.
DetReport det_report(const LinkDiagram& d, DetMethod method = DetMethod::All);
std::uint64_t det(const LinkDiagram& d, DetMethod method = DetMethod::All);

bool is_alternating(const LinkDiagram& d);
int component_count(const LinkDiagram& d);
bool is_knot(const LinkDiagram& d);
// Crossings of this diagram; the crossing number of the link when the
// diagram is reduced and alternating.
int crossing_number(const LinkDiagram& d);
// No nugatory crossing, i.e. no loop in either checkerboard graph.
bool is_reduced(const LinkDiagram& d);

// Joins the diagrams along one arc each, picking the reconnection that keeps
// two alternating diagrams alternating.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b);

// Exchanges over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);
// Reflection of the plane; the link becomes its mirror image.
LinkDiagram reflect(const LinkDiagram& d);
// Changes crossings so that all have the type of crossing 0.
LinkDiagram make_alternating(const LinkDiagram& d);

}  // namespace achiral::diagrams
