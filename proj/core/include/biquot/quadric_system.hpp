#pragma once

#include "biquot/hompoly.hpp"
#include "biquot/linalg.hpp"

#include <vector>

namespace biquot {

// Linear system of quadrics on Q^k, stored as symmetric Gram matrices
// (q(x) = x^T G x, so the coefficient of x_i x_j, i < j, is 2 G_ij).
struct QuadricSystem {
    std::size_t ambient_dim = 0;
    std::vector<Matrix> basis;

    std::size_t dimension() const { return basis.size(); }
    std::vector<HomPoly> quadrics() const;
};

Matrix gram_matrix(const HomPoly& quadric);
HomPoly quadric_from_gram(const Matrix& gram);

// Coordinates of a quadric on the monomial basis monomials(k, 2).
Vector quadric_coordinates(const HomPoly& quadric);

// Validates independence; throws InvalidInput otherwise.
QuadricSystem make_quadric_system(std::size_t ambient_dim, const std::vector<HomPoly>& quadrics);

bool same_span(const QuadricSystem& a, const QuadricSystem& b);

} // namespace biquot
