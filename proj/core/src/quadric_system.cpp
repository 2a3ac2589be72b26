#include "biquot/quadric_system.hpp"

#include "biquot/errors.hpp"

namespace biquot {

std::vector<HomPoly> QuadricSystem::quadrics() const
{
    std::vector<HomPoly> out;
    for (const auto& g : basis)
        out.push_back(quadric_from_gram(g));
    return out;
}

Matrix gram_matrix(const HomPoly& quadric)
{
    const std::size_t k = quadric.variable_count();
    if (!quadric.is_zero() && quadric.exponent_sum() != 2)
        throw InvalidInput("gram_matrix: polynomial is not quadratic");
    Matrix g(k, k);
    for (const auto& [e, c] : quadric.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            for (int m = 0; m < e[i]; ++m)
                idx.push_back(i);
        if (idx[0] == idx[1]) {
            g(idx[0], idx[0]) = c;
        } else {
            g(idx[0], idx[1]) = c / 2;
            g(idx[1], idx[0]) = c / 2;
        }
    }
    return g;
}

HomPoly quadric_from_gram(const Matrix& gram)
{
    if (!gram.is_symmetric())
        throw InvalidInput("quadric_from_gram: matrix is not symmetric");
    const std::size_t k = gram.rows();
    HomPoly::Terms terms;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Exponents e(k, 0);
            e[i] += 1;
            e[j] += 1;
            terms.emplace(std::move(e), i == j ? gram(i, i) : Rational(2 * gram(i, j)));
        }
    return HomPoly(k, std::move(terms));
}

Vector quadric_coordinates(const HomPoly& quadric)
{
    const auto monos = monomials(quadric.variable_count(), 2);
    Vector v;
    v.reserve(monos.size());
    for (const auto& m : monos)
        v.push_back(quadric.coefficient(m));
    return v;
}

QuadricSystem make_quadric_system(std::size_t ambient_dim, const std::vector<HomPoly>& quadrics)
{
    QuadricSystem sys;
    sys.ambient_dim = ambient_dim;
    std::vector<Vector> rows;
    for (const auto& q : quadrics) {
        if (q.variable_count() != ambient_dim)
            throw InvalidInput("make_quadric_system: quadric in the wrong number of variables");
        rows.push_back(quadric_coordinates(q));
        sys.basis.push_back(gram_matrix(q));
    }
    const std::size_t n = ambient_dim * (ambient_dim + 1) / 2;
    if (rank(Matrix::from_rows(rows, n)) != rows.size())
        throw InvalidInput("make_quadric_system: quadrics are linearly dependent");
    return sys;
}

bool same_span(const QuadricSystem& a, const QuadricSystem& b)
{
    if (a.ambient_dim != b.ambient_dim || a.dimension() != b.dimension())
        return false;
    const std::size_t n = a.ambient_dim * (a.ambient_dim + 1) / 2;
    std::vector<Vector> rows;
    for (const auto& q : a.quadrics())
        rows.push_back(quadric_coordinates(q));
    const SubspaceReducer span(rows, n);
    for (const auto& q : b.quadrics())
        if (!span.contains(quadric_coordinates(q)))
            return false;
    return true;
}

} // namespace biquot
