#pragma once

#include <string>

#include "sievekit/dyck.hpp"
#include "sievekit/frieze.hpp"

namespace sievekit {

// Staggered text layout matching the usual frieze array drawings; cell_width 0
// picks the width from the longest entry.
std::string render_frieze(const FriezePattern& F, long repeat = 2, long cell_width = 0);
std::string render_frieze(const InfiniteFrieze& F, long rows, long repeat = 2,
                          long cell_width = 0);

// order-p orbifold table: row v_i, column v_j holds f(v_i, v_j)
std::string render_orbifold_table(const OrbifoldFrieze& F);

std::string render_dyck(const MDyckPath& D);

} // namespace sievekit
