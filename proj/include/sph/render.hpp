#pragma once

#include <iosfwd>

#include "sph/clustering.hpp"
#include "sph/persistence.hpp"

namespace sph {

/// Persistence diagram as SVG with birth on x and death on y. Essential
/// features sit on a dashed line above the finite range. H0 points are
/// circles and H1 points squares.
void render_diagram_svg(std::ostream& out, const PersistenceDiagram& diagram);

/// Dendrogram as SVG with leaves along the bottom and merge height upwards.
void render_dendrogram_svg(std::ostream& out, const Dendrogram& dendrogram);

}  // namespace sph
