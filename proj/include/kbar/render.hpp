#pragma once

#include <string>

#include "kbar/tree.hpp"

namespace kbar {

// Schematic SVG of the arc diagram: disk outline, boundary particles in
// cyclic order, nested arcs/loops per bubble nesting. Deterministic layout.
std::string render_disk_svg(const BubbleTree& t);

// Dual partially-planar tree as a DOT graph; spatial edges dashed.
std::string render_dual_dot(const BubbleTree& t);

}  // namespace kbar
