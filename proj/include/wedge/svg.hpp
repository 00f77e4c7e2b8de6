#pragma once

#include "wedge/connector.hpp"

#include <span>
#include <string>

namespace wedge
{
// Deterministic SVG: dots for points, distinct colors for the three
// anchors, wedge boundary rays clipped at 1.5x the instance diameter,
// and mutual-containment edges (drawn for instances up to 2000 points).
// Byte-identical output for identical inputs.
std::string render_svg(std::span<Point const> points, Assignment const * assignment,
                       Tolerance const & tol = {});
}  // namespace wedge
