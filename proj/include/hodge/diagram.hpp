#pragma once

#include <set>
#include <string>
#include <utility>

#include "hodge/lmhs.hpp"

namespace hodge {

/**
 * @brief A (p,q)-diagram: nodes with multiplicities on an integer lattice.
 *
 * Nodes of dimension 1 are drawn plain, nodes of dimension >= 2 circled.
 * Optional arrows (p,q) -> (p-1,q-1) mark the action of N.
 */
struct DiagramSpec {
    DimTable nodes;  ///< nonzero entries only; std::map keeps (p asc, q asc)
    int p_min = 0, p_max = 0, q_min = 0, q_max = 0;
    std::set<std::pair<int, int>> arrows;  ///< sources (p,q) of arrows to (p-1,q-1)
};

/**
 * @brief Build a spec whose axis range covers the origin and every node;
 * an empty table yields the range [0,2] x [0,2].
 */
DiagramSpec make_diagram(const DimTable& nodes);

/** @brief Deligne-splitting diagram of an LMHS with arrows where N is nonzero on I^{p,q}. */
DiagramSpec make_diagram(const LmhsDatum& l);

/**
 * @brief Text rendering, top row q = q_max. '*' marks dimension 1, '@'
 * dimension >= 2, '.' an empty cell on an axis, ' ' any other empty cell.
 * Cells are separated by one space; arrows are not drawn.
 */
std::string render_ascii(const DiagramSpec& d);

/**
 * @brief SVG rendering on a fixed 20px lattice: axes as lines, every node a
 * filled circle, circled nodes an extra stroked ring, arrows as lines with a
 * marker head.
 */
std::string render_svg(const DiagramSpec& d);

}  // namespace hodge
