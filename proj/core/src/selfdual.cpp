#include "achiral/selfdual.hpp"

#include "achiral/error.hpp"
#include "achiral/realize.hpp"

namespace achiral::plangraph {

PlanarMultigraph realize_selfdual(std::uint64_t n) {
  const auto cert = realize::realize_achiral(n);
  PlanarMultigraph g = diagrams::checkerboard_graph(*cert.diagram, diagrams::Color::Black);
  if (spanning_tree_count(g) != BigInt(n)) {
    throw Error("checkerboard graph of the realization of " + std::to_string(n) +
                " has the wrong tree count");
  }
  if (g.edge_count() <= kSelfDualEdgeBudget && !is_self_dual(g)) {
    throw Error("checkerboard graph of the realization of " + std::to_string(n) +
                " is not self-dual");
  }
  return g;
}

}  // namespace achiral::plangraph
