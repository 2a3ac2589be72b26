#pragma once

#include "biquot/biquotient.hpp"
#include "biquot/classes.hpp"
#include "biquot/unipoly.hpp"

#include <memory>

namespace biquot {

// Lower-triangular action with a21 = 0, a31 = 1, a32 = 2, a41 = 1, a42 = 2, a43 = 0.
TorusActionMatrix t3_action();

// x3 -> x3 - x1/2 - x2, x4 -> x4 - x1/2 - x2
Matrix t3_substitution();

// Q[x1..x4]/(x1^2, x2^2, x3^2 - x1 x2, x4^2 - x1 x2) through degree 4, shared.
std::shared_ptr<const GradedQuotient> t3_ring();

// Circle bundle with y = x4 - (a x1 + b x2 + c x3), W = span(x1, x2, x3).
CircleBundleData t3_circle_bundle(const Rational& a, const Rational& b, const Rational& c);

// Kernel of S^2 W -> H^4(Y) in the coordinates x1, x2, x3.
QuadricSystem t3_kernel_system(const Rational& a, const Rational& b, const Rational& c);

// Monic quadratic in t whose roots make (a x1 + b x2 + t x3)^2 lie in the kernel system.
UniPoly t3_membership_quadratic(const Rational& a, const Rational& b, const Rational& c);

// 4 [((2ab - c^2 - 1)/(2c))^2 - 1]
Rational t3_delta(const Rational& a, const Rational& b, const Rational& c);

// Square class of the discriminant of the membership quadratic; DegenerateInput when it is 0.
SquareClass t3_discriminant_class(const Rational& a, const Rational& b, const Rational& c);

} // namespace biquot
