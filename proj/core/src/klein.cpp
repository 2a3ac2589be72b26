#include "biquot/biquotient.hpp"

#include "biquot/errors.hpp"

namespace biquot {

Rational TrilinearForm::evaluate(const Vector& u, const Vector& v, const Vector& w) const
{
    if (u.size() != n_ || v.size() != n_ || w.size() != n_)
        throw InvalidInput("TrilinearForm::evaluate: dimension mismatch");
    Rational total = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (v[j] == 0)
                continue;
            for (std::size_t k = 0; k < n_; ++k)
                if (w[k] != 0)
                    total += (*this)(i, j, k) * u[i] * v[j] * w[k];
        }
    }
    return total;
}

Matrix TrilinearForm::contract(const Vector& u) const
{
    if (u.size() != n_)
        throw InvalidInput("TrilinearForm::contract: dimension mismatch");
    Matrix g(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                g(j, k) += u[i] * (*this)(i, j, k);
    }
    return g;
}

TrilinearForm klein_form()
{
    TrilinearForm t(5);
    const Rational third(1, 3);
    // a_i^2 a_{i+1}: 3 T(i, i, i+1) = 1
    for (std::size_t i = 0; i < 5; ++i) {
        const std::size_t j = (i + 1) % 5;
        t.at(i, i, j) = third;
        t.at(i, j, i) = third;
        t.at(j, i, i) = third;
    }
    return t;
}

GradedQuotient ring_from_trilinear(const TrilinearForm& t)
{
    const std::size_t n = t.dim();
    const auto quad_monos = monomials(n, 2);
    // column per monomial x_i x_j: the functional T(x_i, x_j, .)
    Matrix pairing(n, quad_monos.size());
    for (std::size_t c = 0; c < quad_monos.size(); ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (int m = 0; m < quad_monos[c][i]; ++m)
                idx.push_back(i);
        for (std::size_t k = 0; k < n; ++k)
            pairing(k, c) = t(idx[0], idx[1], k);
    }
    std::vector<HomPoly> relations;
    for (const auto& v : kernel(pairing)) {
        HomPoly::Terms terms;
        for (std::size_t j = 0; j < quad_monos.size(); ++j)
            if (v[j] != 0)
                terms.emplace(quad_monos[j], v[j]);
        relations.emplace_back(n, std::move(terms));
    }
    return GradedQuotient(n, std::move(relations), 4);
}

KleinData klein_ring(const Rational& a0, const Rational& a1)
{
    if (a0 == 0 || a1 == 0)
        throw InvalidInput("klein_ring: a0 and a1 must be nonzero");
    static const std::shared_ptr<const GradedQuotient> ring = std::make_shared<const GradedQuotient>(ring_from_trilinear(klein_form()));
    KleinData k;
    k.ring = ring;
    k.form = klein_form();
    k.a0 = a0;
    k.a1 = a1;
    k.a2 = a0 * a0 / a1;
    k.y = {a0, -a1, Rational(0), Rational(a1 * a1 * a1 / (a0 * a0)), Rational(0)};
    k.z = {a0, a1, k.a2, Rational(0), Rational(0)};
    return k;
}

} // namespace biquot
