#pragma once

#include "biquot/biquotient.hpp"
#include "biquot/classes.hpp"

namespace biquot {

// Gram matrix of (u, v) -> T(u, v, z) on V = span(x0..x4).
Matrix t2_quadratic_form(const Rational& a0, const Rational& a1);

// Columns of `complement` (5 x 4) together with y must form a basis of V.
Matrix t2_induced_form(const Rational& a0, const Rational& a1, const Matrix& complement);

// Default complement: unit vectors without the coordinate chosen by the circle-bundle height rule.
Matrix t2_default_complement(const Rational& a0, const Rational& a1);

SquareClass t2_det_class(const Rational& a0, const Rational& a1);
SquareClass t2_det_class(const Rational& a0, const Rational& a1, const Matrix& complement);

} // namespace biquot
