#pragma once

#include <cstdint>

#include "achiral/plangraph.hpp"

namespace achiral::plangraph {

// Black checkerboard graph of realize::realize_achiral(n)'s diagram. Its tree
// count is checked to be n and, within kSelfDualEdgeBudget, its self-duality.
PlanarMultigraph realize_selfdual(std::uint64_t n);

}  // namespace achiral::plangraph
