#include "biquot/t2.hpp"

#include "biquot/errors.hpp"

namespace biquot {

Matrix t2_quadratic_form(const Rational& a0, const Rational& a1)
{
    const KleinData k = klein_ring(a0, a1);
    return k.form.contract(k.z);
}

Matrix t2_induced_form(const Rational& a0, const Rational& a1, const Matrix& complement)
{
    const KleinData k = klein_ring(a0, a1);
    if (complement.rows() != 5 || complement.cols() != 4)
        throw InvalidInput("t2_induced_form: complement must be a 5x4 matrix");
    std::vector<Vector> cols{k.y};
    for (std::size_t j = 0; j < 4; ++j)
        cols.push_back(complement.column(j));
    if (determinant(Matrix::from_columns(cols, 5)) == 0)
        throw InvalidInput("t2_induced_form: columns do not complement y");
    const Matrix g = k.form.contract(k.z);
    return complement.transpose() * g * complement;
}

Matrix t2_default_complement(const Rational& a0, const Rational& a1)
{
    const KleinData k = klein_ring(a0, a1);
    const CircleBundleData c = circle_bundle_degree4(k.ring, k.y);
    Matrix b(5, 4);
    for (std::size_t j = 0; j < c.complement.size(); ++j)
        b(c.complement[j], j) = 1;
    return b;
}

SquareClass t2_det_class(const Rational& a0, const Rational& a1, const Matrix& complement)
{
    const Rational d = determinant(t2_induced_form(a0, a1, complement));
    if (d == 0)
        throw DegenerateInput("t2_det_class: induced form on V/<y> is degenerate");
    return square_class(d);
}

SquareClass t2_det_class(const Rational& a0, const Rational& a1)
{
    return t2_det_class(a0, a1, t2_default_complement(a0, a1));
}

} // namespace biquot
