#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "achiral/bigint.hpp"

namespace achiral::plangraph {

// A connected planar multigraph stored as a combinatorial map. Edge e owns
// darts 2e (at its first endpoint) and 2e + 1 (at its second); the edge
// involution is d ^ 1. When a rotation system is present, next_ccw(d) is the
// dart following d counterclockwise around its vertex. Loops and parallel
// edges are allowed.
class PlanarMultigraph {
 public:
  using Edge = std::pair<int, int>;

  // Abstract multigraph without an embedding.
  PlanarMultigraph(int vertex_count, std::vector<Edge> edges);

  // Embedded multigraph. rotations[v] lists the darts at v counterclockwise.
  // Throws InvalidInput if the rotations do not partition the darts, the map
  // is disconnected, or V - E + F != 2.
  PlanarMultigraph(int vertex_count, std::vector<Edge> edges,
                   std::vector<std::vector<int>> rotations);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_rotation() const noexcept { return !next_ccw_.empty() || edges_.empty(); }
  int dart_vertex(int dart) const;
  int next_ccw(int dart) const;
  std::vector<std::vector<int>> rotations() const;

  // Orbits of the face permutation d -> next_ccw(d ^ 1); requires a rotation.
  int face_count() const;
  std::vector<int> face_of_dart() const;

  bool is_connected() const;

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<int> next_ccw_;
};

// Face-vertex exchanged map; requires a rotation system.
PlanarMultigraph dual(const PlanarMultigraph& g);

// Number of spanning trees by the matrix-tree theorem. Loops are ignored.
BigInt spanning_tree_count(const PlanarMultigraph& g);

// A vertex lying in two or more blocks; a loop is a block of its own.
bool has_cut_vertex(const PlanarMultigraph& g);

enum class SelfDualMode {
  Abstract,  // g and dual(g) isomorphic as multigraphs
  Map,       // isomorphic as maps, orientation reversal allowed
};

inline constexpr int kSelfDualEdgeBudget = 64;

// Throws BudgetExceeded beyond kSelfDualEdgeBudget edges.
bool is_self_dual(const PlanarMultigraph& g, SelfDualMode mode = SelfDualMode::Abstract);

// Multigraph isomorphism by colour refinement plus backtracking.
bool are_isomorphic(const PlanarMultigraph& g, const PlanarMultigraph& h);

// Map isomorphism determined by the image of one dart.
bool are_map_isomorphic(const PlanarMultigraph& g, const PlanarMultigraph& h,
                        bool allow_reflection = true);

// spanning_tree_count(g) >= n(n - 3) for a self-dual g with 2n edges.
// Throws InvalidInput for an odd edge count.
bool selfdual_tree_bound_check(const PlanarMultigraph& g);

}  // namespace achiral::plangraph
