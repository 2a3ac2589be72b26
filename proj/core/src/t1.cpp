#include "biquot/t1.hpp"

#include "biquot/errors.hpp"

#include <algorithm>

namespace biquot {

T1Invariant make_t1_invariant(const GaussianRational& ab)
{
    if (ab.is_zero())
        throw InvalidInput("t1 invariant: alpha and beta are both zero");
    CubeClassModQ u = cube_class_mod_Q(ab);
    CubeClassModQ v = cube_class_mod_Q(GaussianRational(ab.im, ab.re));
    if (to_string(v) < to_string(u))
        std::swap(u, v);
    return {u, v};
}

std::string to_string(const T1Invariant& t)
{
    return to_string(t.first) + "|" + to_string(t.second);
}

T1Invariant parse_t1_invariant(std::string_view text)
{
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
        throw InvalidInput("t1 invariant: expected \"class|class\"");
    T1Invariant t{parse_cube_class(text.substr(0, bar)), parse_cube_class(text.substr(bar + 1))};
    if (to_string(t.second) < to_string(t.first))
        throw InvalidInput("t1 invariant: members not in canonical order");
    if (conjugate_class(t.first) != t.second)
        throw InvalidInput("t1 invariant: members are not conjugate");
    return t;
}

TorusActionMatrix t1_action(const Integer& b1, const Integer& c1)
{
    if (!b1.fits_slong_p() || !c1.fits_slong_p())
        throw InvalidInput("t1_action: parameters out of range");
    return TorusActionMatrix({{1, 0, 0}, {b1.get_si(), 1, 1}, {c1.get_si(), 2, 1}});
}

std::pair<Rational, Rational> t1_parameters(const Integer& b1, const Integer& c1)
{
    return {make_rational(c1, 4), make_rational(2 * b1 - c1, 4)};
}

GaussianRational t1_alpha_beta(const Rational& a, const Rational& b)
{
    return GaussianRational(4) * pow(GaussianRational(a, b), 2);
}

QuadricSystem t1_net(const Rational& a, const Rational& b)
{
    const auto x1 = HomPoly::variable(3, 0), x2 = HomPoly::variable(3, 1), x3 = HomPoly::variable(3, 2);
    const HomPoly r1 = x1 * x1;
    const HomPoly r2 = Rational(2) * (x2 * (Rational(2 * (a + b)) * x1 + x2 + x3));
    const HomPoly r3 = x3 * (Rational(4 * a) * x1 + Rational(2) * x2 + x3);
    return make_quadric_system(3, {r1, r2, r3});
}

T1Invariant t1_invariant(const Integer& b1, const Integer& c1)
{
    if (b1 == 0 && c1 == 0)
        throw InvalidInput("t1_invariant: (b1, c1) = (0, 0) is excluded");
    const auto [a, b] = t1_parameters(b1, c1);
    return make_t1_invariant(t1_alpha_beta(a, b));
}

T1PipelineResult t1_pipeline(const QuadricSystem& net)
{
    T1PipelineResult r;
    r.cubic = det_cubic(net);
    r.normal_form = normalize_nodal_cubic(r.cubic);
    r.inflection = inflection_lines(r.normal_form.cubic);
    r.alpha_beta = alpha_beta(r.inflection);
    r.invariant = make_t1_invariant(r.alpha_beta);
    return r;
}

T1PipelineResult t1_pipeline(const Integer& b1, const Integer& c1)
{
    if (b1 == 0 && c1 == 0)
        throw InvalidInput("t1_pipeline: (b1, c1) = (0, 0) is excluded");
    const GradedQuotient ring = quotient_ring(t1_action(b1, c1), 4);
    return t1_pipeline(kernel_of_square_map(ring));
}

std::pair<Integer, Integer> t1_realize_class(const GaussianRational& w)
{
    if (w.is_zero())
        throw InvalidInput("t1_realize_class: w must be nonzero");
    const auto [g, d] = clear_denominator(pow(w, 2));
    (void)d;
    return {2 * (g.re + g.im), 4 * g.re};
}

} // namespace biquot
