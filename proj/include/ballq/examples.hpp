#pragma once

#include "ballq/torus.hpp"

namespace ballq {

// Eight-curve arrangement on E x E over the Gaussian integers, with the
// order-two automorphism "phi" = (-w + (1+i)/2, z + (1+i)/2), the conjugating
// map "psi" and the standard involution "phi1"; group "bielliptic" = <phi>.
Arrangement z2_arrangement();

// Fourteen-curve arrangement on C^2/(Z[i] x (4Z + iZ)) with the order-four
// automorphism "phi" = (i*w + (1+i)/2, z + 1); group "bielliptic" = <phi>.
Arrangement z4_arrangement();

// The eight historical curves on E x E; translating by (1/2, 1/2) carries
// them onto the z2 arrangement's lines.
Arrangement holzapfel_arrangement();

}  // namespace ballq
