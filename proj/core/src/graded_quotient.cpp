#include "biquot/graded_quotient.hpp"

#include "biquot/errors.hpp"

#include <numeric>

namespace biquot {
namespace {

Vector poly_coordinates(const HomPoly& p, const std::vector<Exponents>& monos, const std::map<Exponents, std::size_t>& index)
{
    Vector v(monos.size(), Rational(0));
    for (const auto& [e, c] : p.terms())
        v[index.at(e)] = c;
    return v;
}

} // namespace

GradedQuotient::GradedQuotient(std::size_t generators, std::vector<HomPoly> relations, int max_degree)
    : generators_(generators), relations_(std::move(relations)), max_degree_(max_degree)
{
    if (generators == 0)
        throw InvalidInput("GradedQuotient: need at least one generator");
    if (max_degree < 0 || max_degree % 2 != 0)
        throw InvalidInput("GradedQuotient: max degree must be even and nonnegative");
    for (const auto& r : relations_) {
        if (r.variable_count() != generators)
            throw InvalidInput("GradedQuotient: relation in the wrong number of variables");
        if (r.is_zero())
            throw InvalidInput("GradedQuotient: zero relation");
    }
    for (int d = 0; d <= max_degree; d += 2) {
        Piece piece;
        piece.monomials = monomials(generators, d / 2);
        for (std::size_t i = 0; i < piece.monomials.size(); ++i)
            piece.index.emplace(piece.monomials[i], i);
        std::vector<Vector> spanning;
        for (const auto& r : relations_) {
            const int rest = d / 2 - r.exponent_sum();
            if (rest < 0)
                continue;
            for (const auto& m : monomials(generators, rest)) {
                const HomPoly mono(generators, HomPoly::Terms{{m, Rational(1)}});
                spanning.push_back(poly_coordinates(mono * r, piece.monomials, piece.index));
            }
        }
        std::vector<std::size_t> preference(piece.monomials.size());
        std::iota(preference.rbegin(), preference.rend(), 0);
        piece.relations = SubspaceReducer(spanning, piece.monomials.size(), preference);
        for (std::size_t j : piece.relations.complement())
            piece.basis.push_back(piece.monomials[j]);
        pieces_.push_back(std::move(piece));
    }
}

const GradedQuotient::Piece& GradedQuotient::piece(int degree) const
{
    if (degree % 2 != 0)
        throw InvalidInput("graded piece requested in odd degree " + std::to_string(degree));
    if (degree < 0 || degree > max_degree_)
        throw InvalidInput("degree " + std::to_string(degree) + " outside computed range [0, " + std::to_string(max_degree_) + "]");
    return pieces_[static_cast<std::size_t>(degree / 2)];
}

std::size_t GradedQuotient::dim(int degree) const { return piece(degree).basis.size(); }

const std::vector<Exponents>& GradedQuotient::basis(int degree) const { return piece(degree).basis; }

Vector GradedQuotient::coordinates(const HomPoly& p) const
{
    if (p.is_zero())
        throw InvalidInput("coordinates: zero polynomial has no degree");
    if (p.variable_count() != generators_)
        throw InvalidInput("coordinates: polynomial in the wrong number of variables");
    const Piece& pc = piece(p.degree());
    return pc.relations.reduce(poly_coordinates(p, pc.monomials, pc.index));
}

bool GradedQuotient::is_zero_class(const HomPoly& p) const
{
    return p.is_zero() || is_zero(coordinates(p));
}

std::vector<HomPoly> GradedQuotient::canonical_relations(int degree) const
{
    const Piece& pc = piece(degree);
    const RowEchelon& e = pc.relations.echelon();
    std::vector<HomPoly> out;
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
        HomPoly::Terms terms;
        for (std::size_t j = 0; j < pc.monomials.size(); ++j)
            if (e.reduced(i, j) != 0)
                terms.emplace(pc.monomials[j], e.reduced(i, j));
        out.emplace_back(generators_, std::move(terms));
    }
    return out;
}

bool same_ideal(const GradedQuotient& a, const GradedQuotient& b)
{
    if (a.generator_count() != b.generator_count())
        return false;
    const int top = std::min(a.max_degree(), b.max_degree());
    for (int d = 0; d <= top; d += 2) {
        if (a.dim(d) != b.dim(d))
            return false;
        for (const auto& r : a.canonical_relations(d))
            if (!b.is_zero_class(r))
                return false;
    }
    return true;
}

std::vector<long long> complete_intersection_series(std::size_t generators, const std::vector<int>& relation_degrees, int max_degree)
{
    const std::size_t len = static_cast<std::size_t>(max_degree / 2) + 1;
    std::vector<long long> series(len, 0);
    series[0] = 1;
    for (int deg : relation_degrees) {
        const std::size_t shift = static_cast<std::size_t>(deg / 2);
        for (std::size_t k = len; k-- > shift;)
            series[k] -= series[k - shift];
    }
    for (std::size_t g = 0; g < generators; ++g)
        for (std::size_t k = 1; k < len; ++k)
            series[k] += series[k - 1];
    return series;
}

bool is_complete_intersection(const GradedQuotient& ring)
{
    if (ring.relations().size() != ring.generator_count())
        return false;
    std::vector<int> degrees;
    for (const auto& r : ring.relations())
        degrees.push_back(r.degree());
    const auto expected = complete_intersection_series(ring.generator_count(), degrees, ring.max_degree());
    for (int d = 0; d <= ring.max_degree(); d += 2)
        if (static_cast<long long>(ring.dim(d)) != expected[static_cast<std::size_t>(d / 2)])
            return false;
    return true;
}

Vector product_in_quotient(const GradedQuotient& ring, const HomPoly& u, const HomPoly& v)
{
    if ((!u.is_zero() && u.degree() != 2) || (!v.is_zero() && v.degree() != 2))
        throw InvalidInput("product_in_quotient: factors must have degree 2");
    const HomPoly uv = u * v;
    if (uv.is_zero())
        return Vector(ring.dim(4), Rational(0));
    return ring.coordinates(uv);
}

QuadricSystem kernel_of_square_map(const GradedQuotient& ring)
{
    const std::size_t n = ring.generator_count();
    if (ring.dim(2) != n)
        throw InvalidInput("kernel_of_square_map: degree-2 piece is not spanned freely by the generators");
    const auto quad_monos = monomials(n, 2);
    std::vector<Vector> columns;
    for (const auto& m : quad_monos)
        columns.push_back(ring.coordinates(HomPoly(n, HomPoly::Terms{{m, Rational(1)}})));
    const Matrix product = Matrix::from_columns(columns, ring.dim(4));
    std::vector<HomPoly> quadrics;
    for (const auto& v : kernel(product)) {
        HomPoly::Terms terms;
        for (std::size_t j = 0; j < quad_monos.size(); ++j)
            if (v[j] != 0)
                terms.emplace(quad_monos[j], v[j]);
        quadrics.emplace_back(n, std::move(terms));
    }
    return make_quadric_system(n, quadrics);
}

MultiplicationMap mult_by_class(const GradedQuotient& ring, const HomPoly& y)
{
    const std::size_t n = ring.generator_count();
    if (!y.is_zero() && y.degree() != 2)
        throw InvalidInput("mult_by_class: class must have degree 2");
    if (y.variable_count() != n)
        throw InvalidInput("mult_by_class: class in the wrong number of variables");
    const std::size_t target = ring.dim(4);
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < n; ++j)
        columns.push_back(product_in_quotient(ring, y, HomPoly::variable(n, j)));
    MultiplicationMap out;
    out.matrix = Matrix::from_columns(columns, target);
    out.rank = rank(out.matrix);
    out.kernel = kernel(out.matrix);
    const SubspaceReducer image(columns, target);
    for (std::size_t k : image.complement()) {
        Vector e(target, Rational(0));
        e[k] = 1;
        out.cokernel.push_back(std::move(e));
    }
    return out;
}

GradedQuotient change_of_variables(const GradedQuotient& ring, const Matrix& substitution)
{
    const std::size_t n = ring.generator_count();
    if (substitution.rows() != n || substitution.cols() != n)
        throw InvalidInput("change_of_variables: substitution must be n x n");
    if (determinant(substitution) == 0)
        throw InvalidInput("change_of_variables: substitution is singular");
    std::vector<HomPoly> rewritten;
    for (const auto& r : ring.relations())
        rewritten.push_back(r.substitute(substitution));
    return GradedQuotient(n, std::move(rewritten), ring.max_degree());
}

} // namespace biquot
