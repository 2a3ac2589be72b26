#pragma once

#include "biquot/gaussian.hpp"
#include "biquot/hompoly.hpp"
#include "biquot/linalg.hpp"
#include "biquot/quadric_system.hpp"

#include <array>
#include <string>
#include <vector>

namespace biquot {

// Plane cubic in (lambda, mu, nu).
class TernaryCubic {
public:
    TernaryCubic() : poly_(3) {}
    explicit TernaryCubic(HomPoly poly);

    Rational coefficient(int l, int m, int n) const { return poly_.coefficient({l, m, n}); }
    const HomPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    // F(P (lambda, mu, nu)^T)
    TernaryCubic transform(const Matrix& p) const;
    TernaryCubic scaled(const Rational& c) const { return TernaryCubic(c * poly_); }

    std::string to_string() const;

    friend bool operator==(const TernaryCubic&, const TernaryCubic&) = default;

private:
    HomPoly poly_;
};

// a mu^2 + b mu nu + c nu^2
struct BinaryQuadratic {
    Rational mm, mn, nn;
    friend bool operator==(const BinaryQuadratic&, const BinaryQuadratic&) = default;
};

// c[0] mu^3 + c[1] mu^2 nu + c[2] mu nu^2 + c[3] nu^3
struct BinaryCubic {
    std::array<Rational, 4> c;
    friend bool operator==(const BinaryCubic&, const BinaryCubic&) = default;
    std::string to_string() const;
};

// det(lambda G1 + mu G2 + nu G3) for a net of quadrics on Q^3.
TernaryCubic det_cubic(const QuadricSystem& net);

struct SingularPoints {
    enum class Status {
        proven,           // the list is complete
        search_exhausted, // bounded-height search finished; larger points not excluded
    };
    std::vector<Vector> points; // projective, first nonzero coordinate 1, sorted
    Status status = Status::proven;
};

// All rational singular points, by elimination: a resultant in lambda on the
// chart nu = 1 gives every possible mu, each is solved exactly, and the line
// nu = 0 is solved directly. Status is always proven. Positive-dimensional
// singular loci throw DegenerateInput.
SingularPoints singular_points(const TernaryCubic& f);

// Bounded search: chart nu = 1 with lambda, mu of height <= bound, the line
// nu = 0 with lambda of height <= bound, and [1,0,0]; double prefilter, exact check.
SingularPoints singular_points_search(const TernaryCubic& f, int height_bound);

// Coefficient of lambda when F = lambda q(mu, nu) + c(mu, nu).
BinaryQuadratic tangent_cone(const TernaryCubic& f);

// Lines from the node [1,0,0] to the three inflection points, for a cubic with
// tangent cone proportional to mu^2 + nu^2. Obtained by eliminating lambda from
// F = Hess(F) = 0 and removing the tangent-cone factor; the result is checked to be
// harmonic (no (mu^2+nu^2)*linear component) and scaled so that the family
// -lambda(mu^2+nu^2) + alpha mu^2 nu + beta mu nu^2 gives
// beta mu^3 - 3 alpha mu^2 nu - 3 beta mu nu^2 + alpha nu^3.
BinaryCubic inflection_lines(const TernaryCubic& f);

// Harmonic cubic with the given (alpha, beta).
BinaryCubic harmonic_cubic(const Rational& alpha, const Rational& beta);

// Reads alpha from nu^3 and beta from mu^3; enforces the -3 alpha, -3 beta pattern.
GaussianRational alpha_beta(const BinaryCubic& b);

// mu -> c mu + d nu, nu -> -d mu + c nu
BinaryCubic rotate_cubic(const BinaryCubic& b, const Rational& c, const Rational& d);

// (alpha + beta i)(c + d i)^3
GaussianRational rotate_alpha_beta(const Rational& alpha, const Rational& beta, const Rational& c, const Rational& d);

// Cubic with its unique rational singular point moved to [1,0,0] and its tangent
// cone made exactly mu^2 + nu^2 by a rational projective change of coordinates
// and a nonzero scalar.
struct NodalNormalForm {
    TernaryCubic cubic;
    Matrix transform;  // cubic = scale * F(transform * x)
    Rational scale;
};

NodalNormalForm normalize_nodal_cubic(const TernaryCubic& f);

} // namespace biquot
