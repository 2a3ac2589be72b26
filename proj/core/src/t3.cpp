#include "biquot/t3.hpp"

#include "biquot/errors.hpp"

namespace biquot {

namespace {

void require_nonzero(const Rational& a, const Rational& b, const Rational& c)
{
    if (a == 0 || b == 0 || c == 0)
        throw InvalidInput("t3: a, b, c must be nonzero");
}

} // namespace

TorusActionMatrix t3_action()
{
    return TorusActionMatrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 1, 0}, {1, 2, 0, 1}});
}

Matrix t3_substitution()
{
    const Rational h = make_rational(-1, 2);
    return Matrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {h, -1, 1, 0}, {h, -1, 0, 1}};
}

std::shared_ptr<const GradedQuotient> t3_ring()
{
    static const std::shared_ptr<const GradedQuotient> ring =
        std::make_shared<const GradedQuotient>(change_of_variables(quotient_ring(t3_action(), 4), t3_substitution()));
    return ring;
}

CircleBundleData t3_circle_bundle(const Rational& a, const Rational& b, const Rational& c)
{
    require_nonzero(a, b, c);
    return circle_bundle_degree4(t3_ring(), {-a, -b, -c, Rational(1)}, 3);
}

QuadricSystem t3_kernel_system(const Rational& a, const Rational& b, const Rational& c)
{
    return t3_circle_bundle(a, b, c).kernel;
}

UniPoly t3_membership_quadratic(const Rational& a, const Rational& b, const Rational& c)
{
    const QuadricSystem sys = t3_kernel_system(a, b, c);
    std::vector<Vector> members;
    for (const auto& q : sys.quadrics())
        members.push_back(quadric_coordinates(q));
    const SubspaceReducer red(members, 6);

    // (a x1 + b x2 + t x3)^2 on x1^2, x1x2, x1x3, x2^2, x2x3, x3^2, split by powers of t.
    const Rational z = 0;
    const Vector v0{a * a, 2 * a * b, z, b * b, z, z};
    const Vector v1{z, z, 2 * a, z, 2 * b, z};
    const Vector v2{z, z, z, z, z, Rational(1)};
    const Vector r0 = red.reduce(v0), r1 = red.reduce(v1), r2 = red.reduce(v2);

    UniPoly g;
    for (std::size_t k = 0; k < r0.size(); ++k)
        g = gcd(g, UniPoly({r0[k], r1[k], r2[k]}));
    if (g.degree() != 2)
        throw DegenerateInput("t3_membership_quadratic: membership locus is not cut out by a quadratic");
    return g;
}

Rational t3_delta(const Rational& a, const Rational& b, const Rational& c)
{
    require_nonzero(a, b, c);
    const Rational x = (2 * a * b - c * c - 1) / (2 * c);
    return 4 * (x * x - 1);
}

SquareClass t3_discriminant_class(const Rational& a, const Rational& b, const Rational& c)
{
    const Rational d = discriminant_quadratic(t3_membership_quadratic(a, b, c));
    if (d == 0)
        throw DegenerateInput("t3_discriminant_class: discriminant is zero");
    return square_class(d);
}

} // namespace biquot
