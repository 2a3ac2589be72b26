#pragma once

#include "biquot/quadric_system.hpp"
#include "biquot/unipoly.hpp"

#include <array>
#include <vector>

namespace biquot {

// Galois orbit of non-rational linear forms L with L^2 in the system:
// L = form[0](theta) x1 + form[1](theta) x2 + form[2](theta) x3 with
// minimal_polynomial(theta) = 0.
struct RankOneOrbit {
    UniPoly minimal_polynomial;   // monic, irreducible over Q, degree >= 2
    std::array<UniPoly, 3> form;  // reduced modulo the minimal polynomial
};

struct RankOneClassification {
    std::vector<Vector> rational;      // up to scalar, first nonzero coefficient 1, sorted
    std::vector<RankOneOrbit> orbits;  // sorted by minimal polynomial
};

// Squares of linear forms in a system of quadrics on Q^3 of dimension at most 4,
// via the annihilating conics. Positive-dimensional loci throw DegenerateInput.
RankOneClassification rank_one_elements(const QuadricSystem& system);

} // namespace biquot
