#include "biquot/classes.hpp"
#include "biquot/cubic.hpp"
#include "biquot/errors.hpp"
#include "biquot/numeric.hpp"
#include "biquot/rank_one.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace biquot;

namespace {

HomPoly poly(std::string_view s, std::size_t n)
{
    return HomPoly::parse(s, n);
}

TernaryCubic cubic(std::string_view s)
{
    return TernaryCubic(poly(s, 3));
}

// -lambda(mu^2 + nu^2) + alpha mu^2 nu + beta mu nu^2
TernaryCubic family(const Rational& alpha, const Rational& beta)
{
    HomPoly::Terms t{{{1, 2, 0}, Rational(-1)}, {{1, 0, 2}, Rational(-1)}};
    if (alpha != 0)
        t[{0, 2, 1}] = alpha;
    if (beta != 0)
        t[{0, 1, 2}] = beta;
    return TernaryCubic(HomPoly(3, t));
}

Vector point(long a, long b, long c)
{
    return {Rational(a), Rational(b), Rational(c)};
}

Matrix random_invertible(testing::Rng& rng, std::size_t n)
{
    while (true) {
        Matrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) = rng.integer(-3, 3);
        if (determinant(p) != 0)
            return p;
    }
}

SquareClass sq(const Rational& q)
{
    return square_class(q);
}

} // namespace

TEST_CASE("determinant cubic")
{
    testing::Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        const Rational a = rng.rational(), b = rng.rational();
        const TernaryCubic f = det_cubic(t1_net(a, b));
        const TernaryCubic expected(HomPoly(3, {{{1, 2, 0}, Rational(-1)}, {{1, 0, 2}, Rational(-1)}}) +
                                    HomPoly(3, {{{0, 2, 1}, 4 * (a * a - b * b)}}) + HomPoly(3, {{{0, 1, 2}, 8 * a * b}}));
        CHECK(f == expected);
    }

    const QuadricSystem diag = make_quadric_system(3, {poly("x1^2", 3), poly("x2^2", 3), poly("x3^2", 3)});
    CHECK(det_cubic(diag) == cubic("x1*x2*x3"));

    for (int t = 0; t < 50; ++t) {
        const QuadricSystem net = t1_net(rng.rational(), rng.rational());
        const TernaryCubic f = det_cubic(net);

        const Matrix p = random_invertible(rng, 3);
        QuadricSystem moved{3, {}};
        for (const Matrix& g : net.basis)
            moved.basis.push_back(p.transpose() * g * p);
        const Rational dp = determinant(p);
        CHECK(det_cubic(moved) == f.scaled(dp * dp));

        const Matrix m = random_invertible(rng, 3);
        QuadricSystem mixed{3, {}};
        for (std::size_t i = 0; i < 3; ++i) {
            Matrix g(3, 3);
            for (std::size_t j = 0; j < 3; ++j)
                g = g + m(i, j) * net.basis[j];
            mixed.basis.push_back(g);
        }
        // sum_i l_i (M G)_i = sum_j (M^T l)_j G_j
        CHECK(det_cubic(mixed) == f.transform(m.transpose()));
    }
}

TEST_CASE("singular points")
{
    const SingularPoints node = singular_points(family(4, 0));
    CHECK(node.status == SingularPoints::Status::proven);
    CHECK(node.points == std::vector<Vector>{point(1, 0, 0)});

    CHECK(singular_points(cubic("x1^3+x2^3+x3^3")).points.empty());
    CHECK(singular_points(cubic("x1*x2*x3")).points == std::vector<Vector>{point(0, 0, 1), point(0, 1, 0), point(1, 0, 0)});
    CHECK_THROWS_AS(singular_points(cubic("x1^2*x2")), DegenerateInput);

    // cuspidal cubic
    CHECK(singular_points(cubic("x2^3-x1^2*x3")).points == std::vector<Vector>{point(0, 0, 1)});

    testing::Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        const TernaryCubic f = det_cubic(t1_net(rng.rational(6, 3), rng.rational(6, 3)));
        if (f.coefficient(0, 2, 1) == 0 && f.coefficient(0, 1, 2) == 0)
            continue;
        const SingularPoints exact = singular_points(f);
        const SingularPoints search = singular_points_search(f, 12);
        CHECK(exact.points == search.points);
        CHECK(search.status == SingularPoints::Status::search_exhausted);
        for (const Vector& p : exact.points)
            for (std::size_t v = 0; v < 3; ++v)
                CHECK(f.poly().derivative(v).evaluate(p) == 0);
    }
    for (int t = 0; t < 30; ++t) {
        const Matrix p = random_invertible(rng, 3);
        const TernaryCubic f = family(rng.nonzero_rational(5, 3), rng.rational(5, 3)).transform(p);
        const auto pts = singular_points(f).points;
        REQUIRE(pts.size() == 1);
        CHECK(singular_points_search(f, 20).points == pts);
    }
}

TEST_CASE("tangent cone")
{
    CHECK(tangent_cone(family(3, 5)) == BinaryQuadratic{Rational(-1), Rational(0), Rational(-1)});
    CHECK(tangent_cone(cubic("x1*x2^2-x1*x3^2+x2^3")) == BinaryQuadratic{Rational(1), Rational(0), Rational(-1)});
    CHECK(tangent_cone(cubic("x1*x2*x3")) == BinaryQuadratic{Rational(0), Rational(1), Rational(0)});
    CHECK_THROWS_AS(tangent_cone(cubic("x1^2*x2+x2^3")), InvalidInput);
}

TEST_CASE("inflection lines")
{
    testing::Rng rng(59);
    for (int t = 0; t < 20; ++t) {
        Rational a = rng.rational(), b = rng.rational();
        if (a == 0 && b == 0)
            a = 1;
        const GaussianRational ab = t1_alpha_beta(a, b);
        const TernaryCubic f = family(ab.re, ab.im);
        const BinaryCubic lines = inflection_lines(f);
        CHECK(lines == harmonic_cubic(ab.re, ab.im));
        CHECK(lines.c[0] == ab.im);
        CHECK(lines.c[1] == -3 * ab.re);
        CHECK(lines.c[2] == -3 * ab.im);
        CHECK(lines.c[3] == ab.re);
        // harmonic: no (mu^2 + nu^2) * linear component
        CHECK(3 * lines.c[0] + lines.c[2] == 0);
        CHECK(lines.c[1] + 3 * lines.c[3] == 0);
        const NumericCheck n = check_inflection_lines_numerically(f, lines);
        CHECK_MESSAGE(n.ok, n.detail);
        CHECK(n.max_residual < 1e-9);
    }
    const BinaryCubic one = inflection_lines(family(1, 0));
    CHECK(one == BinaryCubic{{Rational(0), Rational(-3), Rational(0), Rational(1)}});
    CHECK(one.to_string() == "-3*mu^2*nu+nu^3");
    CHECK_THROWS(inflection_lines(family(0, 0)));

    // a wrong candidate is rejected by the numeric oracle
    CHECK_FALSE(check_inflection_lines_numerically(family(4, 0), harmonic_cubic(4, 1)).ok);
}

TEST_CASE("alpha and beta extraction")
{
    CHECK(alpha_beta(harmonic_cubic(7, -2)) == GaussianRational(7, -2));
    CHECK_THROWS_AS(alpha_beta(BinaryCubic{{Rational(1), Rational(0), Rational(0), Rational(1)}}), DegenerateInput);
}

TEST_CASE("rotation law")
{
    CHECK(rotate_alpha_beta(3, 5, 1, 0) == GaussianRational(3, 5));
    CHECK(rotate_alpha_beta(4, 0, 0, 1) == GaussianRational(0, -4));
    CHECK(alpha_beta(rotate_cubic(harmonic_cubic(4, 0), 0, 1)) == GaussianRational(0, -4));
    CHECK_THROWS_AS(rotate_alpha_beta(1, 1, 0, 0), InvalidInput);

    testing::Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        const Rational alpha = rng.rational(), beta = rng.rational();
        Rational c = rng.rational(), d = rng.rational();
        if (c == 0 && d == 0)
            c = 1;
        const GaussianRational expected = GaussianRational(alpha, beta) * pow(GaussianRational(c, d), 3);
        CHECK(alpha_beta(rotate_cubic(harmonic_cubic(alpha, beta), c, d)) == expected);
        CHECK(rotate_alpha_beta(alpha, beta, c, d) == expected);
        if (alpha != 0 || beta != 0)
            CHECK(cube_class_mod_Q(expected) == cube_class_mod_Q(GaussianRational(alpha, beta)));
    }
}

TEST_CASE("nodal normal form")
{
    testing::Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        const Rational alpha = rng.nonzero_rational(6, 3), beta = rng.rational(6, 3);
        const TernaryCubic f = family(alpha, beta).transform(random_invertible(rng, 3)).scaled(rng.nonzero_rational());
        const NodalNormalForm n = normalize_nodal_cubic(f);
        CHECK(n.cubic == f.transform(n.transform).scaled(n.scale));
        const BinaryQuadratic q = tangent_cone(n.cubic);
        CHECK(q == BinaryQuadratic{Rational(1), Rational(0), Rational(1)});
        CHECK(singular_points(n.cubic).points == std::vector<Vector>{point(1, 0, 0)});
    }
    CHECK_THROWS(normalize_nodal_cubic(cubic("x1^3+x2^3+x3^3")));
}

TEST_CASE("t1 invariant")
{
    CHECK(to_string(t1_invariant(2, 0)) == "1|1");
    CHECK(to_string(t1_invariant(6, 8)) == "5:1|5:2");
    CHECK(t1_alpha_beta(2, 1) == GaussianRational(12, 16));
    CHECK(t1_parameters(6, 8) == std::pair<Rational, Rational>{Rational(2), Rational(1)});
    CHECK_THROWS_AS(t1_invariant(0, 0), InvalidInput);
    CHECK(parse_t1_invariant("5:1|5:2") == t1_invariant(6, 8));
    CHECK_THROWS_AS(parse_t1_invariant("5:2|5:1"), InvalidInput);
    CHECK_THROWS_AS(parse_t1_invariant("5:1|5:1"), InvalidInput);

    testing::Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        const Integer b1 = rng.integer(-15, 15), c1 = rng.integer(-15, 15);
        if (b1 == 0 && c1 == 0)
            continue;
        const T1Invariant closed = t1_invariant(b1, c1);
        const T1PipelineResult p = t1_pipeline(b1, c1);
        CHECK(p.invariant == closed);
        CHECK(closed.second == conjugate_class(closed.first));
        CHECK(parse_t1_invariant(to_string(closed)) == closed);
    }

    for (int t = 0; t < 50; ++t) {
        const Rational a = rng.rational(), b = rng.nonzero_rational();
        const GaussianRational ab = t1_alpha_beta(a, b);
        const T1Invariant base = make_t1_invariant(ab);

        // scaling each relation of the net
        const QuadricSystem net = t1_net(a, b);
        QuadricSystem scaled{3, {}};
        for (const Matrix& g : net.basis)
            scaled.basis.push_back(rng.nonzero_rational() * g);
        CHECK(t1_pipeline(scaled).invariant == base);

        Rational c = rng.rational(), d = rng.rational();
        if (c == 0 && d == 0)
            d = 1;
        CHECK(make_t1_invariant(rotate_alpha_beta(ab.re, ab.im, c, d)) == base);

        // mu <-> nu exchanges alpha and beta
        const T1Invariant swapped = make_t1_invariant(GaussianRational(ab.im, ab.re));
        CHECK(swapped == base);
        CHECK(cube_class_mod_Q(GaussianRational(ab.im, ab.re)) == conjugate_class(cube_class_mod_Q(ab)));
    }
}

TEST_CASE("realizing classes")
{
    CHECK(t1_realize_class(GaussianRational(1)) == std::pair<Integer, Integer>{2, 4});
    CHECK(t1_realize_class(GaussianRational(2, 1)) == std::pair<Integer, Integer>{14, 12});
    CHECK(t1_realize_class(GaussianRational(3, 2)) == std::pair<Integer, Integer>{34, 20});
    CHECK(to_string(t1_invariant(2, 4)) == "1|1");
    for (long p : {5L, 13L, 17L, 29L}) {
        const GaussianInteger pi = split_prime(Integer(p));
        const auto [b1, c1] = t1_realize_class(GaussianRational(pi));
        const T1Invariant inv = t1_invariant(b1, c1);
        const CubeClassModQ target = cube_class_mod_Q(GaussianRational(pi));
        CHECK((inv.first == target || inv.second == target));
        CHECK(inv.first.residues.count(Integer(p)) == 1);
    }
}

TEST_CASE("t2 quadratic form")
{
    const Matrix g = t2_quadratic_form(1, 1);
    const Matrix pattern{{1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}};
    CHECK(3 * g == pattern);

    const Matrix g2 = t2_quadratic_form(2, 1);
    const Matrix pattern2{{1, 2, 0, 0, 0}, {2, 4, 1, 0, 0}, {0, 1, 0, 4, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 0, 2}};
    CHECK(3 * g2 == pattern2);

    const KleinData k = klein_ring(2, 1);
    CHECK(is_zero(g2 * k.y));
    CHECK_THROWS_AS(t2_quadratic_form(0, 1), InvalidInput);
}

TEST_CASE("t2 determinant class")
{
    CHECK(to_string(t2_det_class(1, 1)) == "-1");
    CHECK(to_string(t2_det_class(1, -1)) == "1");
    for (long p : {2L, 3L, 5L})
        CHECK(to_string(t2_det_class(p, 1)) == "-" + std::to_string(p));

    testing::Rng rng(73);
    for (int t = 0; t < 20; ++t) {
        const Rational a0 = rng.nonzero_rational(), a1 = rng.nonzero_rational();
        const SquareClass expected = square_class(-a0 * a1);
        CHECK(t2_det_class(a0, a1) == expected);
        const KleinData k = klein_ring(a0, a1);

        for (int s = 0; s < 5; ++s) {
            Matrix b(5, 4);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    b(i, j) = rng.integer(-4, 4);
            Matrix full(5, 5);
            for (std::size_t i = 0; i < 5; ++i) {
                full(i, 0) = k.y[i];
                for (std::size_t j = 0; j < 4; ++j)
                    full(i, j + 1) = b(i, j);
            }
            if (determinant(full) == 0) {
                CHECK_THROWS_AS(t2_det_class(a0, a1, b), InvalidInput);
                continue;
            }
            CHECK(t2_det_class(a0, a1, b) == expected);
            // basis change of W and a global scaling of the form
            const Matrix induced = t2_induced_form(a0, a1, b);
            const Matrix p = random_invertible(rng, 4);
            const Rational lambda = rng.nonzero_rational();
            CHECK(square_class(determinant(lambda * (p.transpose() * induced * p))) == expected);
        }
    }
}

TEST_CASE("t3 membership quadratic")
{
    CHECK(t3_membership_quadratic(1, 1, 1).to_string() == "t^2-2*t+2");
    CHECK(t3_delta(1, 1, 1) == -4);
    CHECK(to_string(t3_discriminant_class(1, 1, 1)) == "-1");
    CHECK_THROWS_AS(t3_membership_quadratic(0, 1, 1), InvalidInput);

    for (long p : {3L, 5L, 7L, 11L}) {
        CHECK(t3_discriminant_class(1, p + 2, 1) == sq(p * (p + 2)));
    }

    // (2ab - c^2 - 1)^2 = 4c^2: a = 1, b = 2, c = 1
    CHECK(t3_delta(1, 2, 1) == 0);
    CHECK_THROWS_AS(t3_discriminant_class(1, 2, 1), DegenerateInput);

    testing::Rng rng(79);
    for (int t = 0; t < 20; ++t) {
        const Rational a = rng.nonzero_rational(), b = rng.nonzero_rational(), c = rng.nonzero_rational();
        const UniPoly q = t3_membership_quadratic(a, b, c);
        CHECK(q.coeff(2) == 1);
        CHECK(q.coeff(1) == (-c * c - 2 * a * b + 1) / c);
        CHECK(q.coeff(0) == 2 * a * b);
        if (t3_delta(a, b, c) == 0)
            continue;
        CHECK(discriminant_quadratic(q) == t3_delta(a, b, c));
        CHECK(t3_discriminant_class(a, b, c) == square_class(4 * (((2 * a * b - c * c - 1) / (2 * c)) * ((2 * a * b - c * c - 1) / (2 * c)) - 1)));
        const NumericCheck n = check_membership_numerically(t3_kernel_system(a, b, c), a, b, q);
        CHECK_MESSAGE(n.ok, n.detail);
    }
}

TEST_CASE("rank one elements")
{
    const RankOneClassification r = rank_one_elements(t3_kernel_system(1, 1, 1));
    CHECK(r.rational == std::vector<Vector>{point(0, 1, 0), point(1, 0, 0)});
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].minimal_polynomial == t3_membership_quadratic(1, 1, 1));

    const QuadricSystem three = make_quadric_system(3, {poly("x1^2", 3), poly("x2^2", 3), poly("x3^2-x1*x2", 3)});
    const RankOneClassification r3 = rank_one_elements(three);
    CHECK(r3.rational == std::vector<Vector>{point(0, 1, 0), point(1, 0, 0)});
    CHECK(r3.orbits.empty());

    // contains x1^2, x2^2, x3^2 and x1 x2: the conic x1 x2 is a square only on its lines
    const QuadricSystem four = make_quadric_system(3, {poly("x1^2", 3), poly("x2^2", 3), poly("x3^2", 3), poly("x1*x2", 3)});
    CHECK_THROWS_AS(rank_one_elements(four), DegenerateInput);

    const QuadricSystem diag4 = make_quadric_system(3, {poly("x1^2", 3), poly("x2^2", 3), poly("x3^2", 3), poly("x1*x2+x2*x3+x1*x3", 3)});
    const RankOneClassification rd = rank_one_elements(diag4);
    CHECK(rd.rational.size() >= 3);

    testing::Rng rng(83);
    int checked = 0;
    while (checked < 20) {
        const Rational a = rng.nonzero_rational(), b = rng.nonzero_rational(), c = rng.nonzero_rational();
        if (t3_delta(a, b, c) == 0)
            continue;
        ++checked;
        const RankOneClassification k = rank_one_elements(t3_kernel_system(a, b, c));
        const UniPoly q = t3_membership_quadratic(a, b, c);
        if (rational_roots(q).empty()) {
            CHECK(k.rational == std::vector<Vector>{point(0, 1, 0), point(1, 0, 0)});
            REQUIRE(k.orbits.size() == 1);
            CHECK(k.orbits[0].minimal_polynomial.degree() == 2);
            CHECK(square_class(discriminant_quadratic(k.orbits[0].minimal_polynomial)) == t3_discriminant_class(a, b, c));
        } else {
            CHECK(k.orbits.empty());
            CHECK(k.rational.size() == 4);
        }

        // invariance of the splitting field under a substitution of x1, x2, x3
        const Matrix p = random_invertible(rng, 3);
        const QuadricSystem base = t3_kernel_system(a, b, c);
        QuadricSystem moved{3, {}};
        for (const Matrix& g : base.basis)
            moved.basis.push_back(p.transpose() * g * p);
        const RankOneClassification km = rank_one_elements(moved);
        CHECK(km.rational.size() == k.rational.size());
        REQUIRE(km.orbits.size() == k.orbits.size());
        for (std::size_t i = 0; i < k.orbits.size(); ++i)
            CHECK(square_class(discriminant_quadratic(km.orbits[i].minimal_polynomial)) ==
                  square_class(discriminant_quadratic(k.orbits[i].minimal_polynomial)));
    }
}
