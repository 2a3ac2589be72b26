#pragma once

#include "biquot/cubic.hpp"
#include "biquot/quadric_system.hpp"
#include "biquot/unipoly.hpp"

#include <string>

namespace biquot {

struct NumericCheck {
    bool ok = false;
    double max_residual = 0;
    std::size_t solutions = 0;
    std::string detail;
};

// Floating-point solutions of F = Hess(F) = 0 on the charts nu = 1 and mu = 1
// (Newton in C^2 from a fixed grid of starts); each solution's line [mu : nu]
// must be a root of `lines` with relative residual below tol, and three
// distinct lines must be found. F must have its node at [1,0,0].
NumericCheck check_inflection_lines_numerically(const TernaryCubic& f, const BinaryCubic& lines, double tol = 1e-9);

// Solves "(a x1 + b x2 + t x3)^2 lies in the system" in floating point from an
// independently computed annihilator and compares the roots with those of q.
NumericCheck check_membership_numerically(const QuadricSystem& system, const Rational& a, const Rational& b, const UniPoly& q, double tol = 1e-9);

} // namespace biquot
