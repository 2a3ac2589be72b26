#include "biquot/biquotient.hpp"
#include "biquot/errors.hpp"
#include "biquot/graded_quotient.hpp"
#include "biquot/hompoly.hpp"
#include "biquot/t1.hpp"
#include "biquot/t3.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace biquot;

namespace {

HomPoly poly(std::string_view s, std::size_t n)
{
    return HomPoly::parse(s, n);
}

GradedQuotient ring(std::vector<std::string> rels, std::size_t n, int max_degree)
{
    std::vector<HomPoly> r;
    for (const auto& s : rels)
        r.push_back(poly(s, n));
    return GradedQuotient(n, std::move(r), max_degree);
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

std::size_t binom2(std::size_t n)
{
    return n * (n + 1) / 2;
}

} // namespace

TEST_CASE("polynomial text round trip")
{
    const HomPoly p = poly("x1^2 - 3/2*x1*x3 + x2*x3", 3);
    CHECK(p.exponent_sum() == 2);
    CHECK(p.degree() == 4);
    CHECK(p.to_string() == "x1^2-3/2*x1*x3+x2*x3");
    CHECK(HomPoly::parse(p.to_string(), 3) == p);
    CHECK_THROWS_AS(poly("x0*x4", 5), InvalidInput);
    CHECK(HomPoly::parse("x0*x4", 5, 0).to_string(0) == "x0*x4");
    CHECK_THROWS_AS(poly("x1^2 + x2", 3), InvalidInput);
    CHECK_THROWS_AS(poly("x4", 3), InvalidInput);
    CHECK(poly("x1*x2", 3) - poly("x2*x1", 3) == HomPoly(3));
}

TEST_CASE("graded dimensions")
{
    for (auto [b1, c1] : {std::pair{0, 0}, {3, -7}, {-2, 5}}) {
        const GradedQuotient r = quotient_ring(t1_action(b1, c1), 6);
        CHECK(r.dim(0) == 1);
        CHECK(r.dim(2) == 3);
        CHECK(r.dim(4) == 3);
        CHECK(r.dim(6) == 1);
    }
    const GradedQuotient free3(3, {}, 4);
    CHECK(free3.dim(4) == 6);
    CHECK(t3_ring()->dim(4) == 6);
    CHECK_THROWS_AS(free3.dim(6), InvalidInput);
    CHECK_THROWS_AS(free3.dim(3), InvalidInput);
}

TEST_CASE("complete intersections")
{
    CHECK(is_complete_intersection(quotient_ring(t1_action(0, 0))));
    CHECK_FALSE(is_complete_intersection(ring({"x1^2", "x1*x2", "x1*x3"}, 3, 8)));
    CHECK(is_complete_intersection(quotient_ring(t3_action())));
    CHECK(is_complete_intersection(*t3_ring()));
    CHECK(complete_intersection_series(3, {4, 4, 4}, 8) == std::vector<long long>{1, 3, 3, 1, 0});
}

TEST_CASE("products in the quotient")
{
    const GradedQuotient r1 = quotient_ring(t1_action(2, 3));
    const HomPoly x1 = HomPoly::variable(3, 0), x2 = HomPoly::variable(3, 1);
    CHECK(is_zero(product_in_quotient(r1, x1, x1)));

    const GradedQuotient free3(3, {}, 4);
    const Vector c = product_in_quotient(free3, x1, x2);
    const auto& basis = free3.basis(4);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(c[i] == (basis[i] == Exponents{1, 1, 0} ? 1 : 0));

    const auto& r3 = *t3_ring();
    const HomPoly y1 = HomPoly::variable(4, 0), y2 = HomPoly::variable(4, 1), y3 = HomPoly::variable(4, 2);
    CHECK(product_in_quotient(r3, y3, y3) == product_in_quotient(r3, y1, y2));
    CHECK_FALSE(is_zero(product_in_quotient(r3, y1, y2)));
}

TEST_CASE("kernel of the square map")
{
    const GradedQuotient r = quotient_ring(t1_action(5, -2));
    const QuadricSystem k = kernel_of_square_map(r);
    CHECK(k.dimension() == 3);
    CHECK(same_span(k, make_quadric_system(3, r.relations())));

    CHECK(kernel_of_square_map(GradedQuotient(3, {}, 4)).dimension() == 0);

    testing::Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<std::int64_t>> a(3, std::vector<std::int64_t>(3, 0));
        for (int i = 0; i < 3; ++i) {
            a[i][i] = rng.integer(0, 1) ? 1 : -1;
            for (int j = 0; j < i; ++j)
                a[i][j] = rng.integer(-4, 4);
        }
        const GradedQuotient q = quotient_ring(TorusActionMatrix(a));
        const QuadricSystem ker = kernel_of_square_map(q);
        Matrix prod(q.dim(4), binom2(3));
        std::size_t col = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j, ++col) {
                const Vector v = product_in_quotient(q, HomPoly::variable(3, i), HomPoly::variable(3, j));
                for (std::size_t r = 0; r < v.size(); ++r)
                    prod(r, col) = v[r];
            }
        CHECK(ker.dimension() + rank(prod) == binom2(3));
    }
}

TEST_CASE("multiplication by a class")
{
    const KleinData k = klein_ring(1, 1);
    const MultiplicationMap m = mult_by_class(*k.ring, HomPoly::linear(k.y));
    REQUIRE(m.kernel.size() == 1);
    CHECK(m.kernel.size() == m.cokernel.size());

    const MultiplicationMap zero = mult_by_class(*k.ring, HomPoly(5));
    CHECK(zero.kernel.size() == 5);
    CHECK(zero.rank == 0);

    testing::Rng rng(23);
    for (int t = 0; t < 10; ++t) {
        Vector y(5);
        for (auto& v : y)
            v = rng.rational(9, 4);
        if (is_zero(y))
            continue;
        const MultiplicationMap g = mult_by_class(*k.ring, HomPoly::linear(y));
        CHECK(g.kernel.size() == g.cokernel.size());
        CHECK(g.kernel.size() + g.rank == 5);
    }
    Vector y{Rational(1), Rational(2), Rational(0), Rational(-1), Rational(3)};
    const MultiplicationMap g = mult_by_class(*k.ring, HomPoly::linear(y));
    CHECK(determinant(g.matrix) != 0);
    CHECK(g.kernel.empty());
}

TEST_CASE("change of variables")
{
    const GradedQuotient integral = quotient_ring(t3_action(), 4);
    const GradedQuotient rational = change_of_variables(integral, t3_substitution());
    const GradedQuotient expected = ring({"x1^2", "x2^2", "x3^2-x1*x2", "x4^2-x1*x2"}, 4, 4);
    CHECK(same_ideal(rational, expected));
    CHECK(same_ideal(*t3_ring(), expected));

    const GradedQuotient r1 = quotient_ring(t1_action(3, 1));
    CHECK(change_of_variables(r1, Matrix::identity(3)).relations() == r1.relations());

    Matrix singular(3, 3);
    singular(0, 0) = 1;
    CHECK_THROWS_AS(change_of_variables(r1, singular), InvalidInput);

    testing::Rng rng(29);
    for (int t = 0; t < 50; ++t) {
        const Matrix p = random_invertible(rng, 3);
        const GradedQuotient moved = change_of_variables(r1, p);
        for (int d = 0; d <= 6; d += 2)
            CHECK(moved.dim(d) == r1.dim(d));
        if (t < 10)
            CHECK(same_ideal(change_of_variables(moved, *inverse(p)), r1));
    }
}
