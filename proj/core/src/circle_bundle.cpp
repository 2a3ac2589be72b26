#include "biquot/biquotient.hpp"

#include "biquot/errors.hpp"

namespace biquot {

std::size_t CircleBundleData::image_dim() const { return rank(product); }

CircleBundleData circle_bundle_degree4(std::shared_ptr<const GradedQuotient> base, const Vector& euler_class, std::optional<std::size_t> dropped)
{
    if (!base)
        throw InvalidInput("circle_bundle_degree4: missing base ring");
    const std::size_t n = base->generator_count();
    if (euler_class.size() != n)
        throw InvalidInput("circle_bundle_degree4: Euler class has the wrong dimension");
    if (is_zero(euler_class))
        throw InvalidInput("circle_bundle_degree4: Euler class must be nonzero");
    if (base->max_degree() < 4)
        throw InvalidInput("circle_bundle_degree4: base ring must be computed through degree 4");

    CircleBundleData data;
    data.base = base;
    data.euler_class = euler_class;
    if (dropped) {
        if (*dropped >= n || euler_class[*dropped] == 0)
            throw InvalidInput("circle_bundle_degree4: dropped coordinate must carry a nonzero coefficient of y");
        data.dropped = *dropped;
    } else {
        Integer best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (euler_class[i] == 0)
                continue;
            const Integer h = height(euler_class[i]);
            if (h >= best) {
                best = h;
                data.dropped = i;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (i != data.dropped)
            data.complement.push_back(i);

    const HomPoly y = HomPoly::linear(euler_class);
    const std::size_t h4 = base->dim(4);
    std::vector<Vector> image;
    for (std::size_t j = 0; j < n; ++j)
        image.push_back(product_in_quotient(*base, y, HomPoly::variable(n, j)));
    data.y_image = SubspaceReducer(image, h4);
    data.target_dim = data.y_image.complement().size();

    const std::size_t k = data.complement.size();
    const auto w_monos = monomials(k, 2);
    std::vector<Vector> columns;
    for (const auto& m : w_monos) {
        Exponents e(n, 0);
        for (std::size_t a = 0; a < k; ++a)
            e[data.complement[a]] = m[a];
        const HomPoly p(n, HomPoly::Terms{{e, Rational(1)}});
        columns.push_back(data.y_image.reduce(base->is_zero_class(p) ? Vector(h4, Rational(0)) : base->coordinates(p)));
    }
    data.product = Matrix::from_columns(columns, data.target_dim);
    std::vector<HomPoly> quadrics;
    for (const auto& v : kernel(data.product)) {
        HomPoly::Terms terms;
        for (std::size_t j = 0; j < w_monos.size(); ++j)
            if (v[j] != 0)
                terms.emplace(w_monos[j], v[j]);
        quadrics.emplace_back(k, std::move(terms));
    }
    data.kernel = make_quadric_system(k, quadrics);
    return data;
}

} // namespace biquot
