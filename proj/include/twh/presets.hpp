#pragma once

#include <string>
#include <vector>

#include "twh/datum.hpp"

namespace twh {

// d = 1, Z/2 acting by inversion, trivial cocycle.
BernsteinDatum sl2_iwahori_datum();
// d-torus with the trivial group.
BernsteinDatum trivial_group_datum(std::size_t d);
// (Z/2)^2 acting on the 2-torus by inverting either coordinate, cocycle (a,b),(a',b') -> b a' / 2.
BernsteinDatum quaternion_datum();

}  // namespace twh
