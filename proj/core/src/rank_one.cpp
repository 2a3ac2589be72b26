#include "biquot/rank_one.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace biquot {

namespace {

using Conic = Matrix; // l^T G l

struct Found {
    std::vector<Vector> rational;
    std::vector<RankOneOrbit> orbits;
};

UniPoly c(const Rational& v)
{
    return UniPoly::constant(v);
}

// Conic on the chart l = (1, y, z) as a polynomial in y over Q[z].
std::vector<UniPoly> chart_a(const Conic& g)
{
    return {UniPoly({g(0, 0), 2 * g(0, 2), g(2, 2)}), UniPoly({2 * g(0, 1), 2 * g(1, 2)}), c(g(1, 1))};
}

UniPoly chart_b(const Conic& g)
{
    return UniPoly({g(1, 1), 2 * g(1, 2), g(2, 2)});
}

UniPoly in_y_at(const std::vector<UniPoly>& f, const Rational& z)
{
    std::vector<Rational> v;
    for (const auto& k : f)
        v.push_back(k(z));
    return UniPoly(std::move(v));
}

void add_roots_and_orbits(const UniPoly& h, const std::function<std::array<UniPoly, 3>(const UniPoly&)>& at, Found& out)
{
    if (h.degree() < 1)
        return;
    for (const auto& [factor, mult] : factor_over_Q(h)) {
        (void)mult;
        if (factor.degree() == 1) {
            const Rational r = -factor.coeff(0);
            const auto f = at(c(r));
            out.rational.push_back({f[0].coeff(0), f[1].coeff(0), f[2].coeff(0)});
        } else {
            out.orbits.push_back({factor, at(UniPoly::monomial(1, 1))});
        }
    }
}

// Common zeros of two conics; nullopt when infinite.
std::optional<Found> intersect(const Conic& f, const Conic& g)
{
    Found out;
    // Chart l1 = 1.
    auto fa = chart_a(f), ga = chart_a(g);
    for (auto* p : {&fa, &ga})
        while (!p->empty() && p->back().is_zero())
            p->pop_back();
    if (fa.empty() || ga.empty())
        return std::nullopt;
    UniPoly r;
    if (fa.size() == 1)
        r = fa[0];
    else if (ga.size() == 1)
        r = ga[0];
    else
        r = resultant(fa, ga);
    if (r.is_zero())
        return std::nullopt;
    const auto r_factors = r.degree() < 1 ? std::vector<PolyFactor>{} : factor_over_Q(r);
    for (const auto& [phi, mult] : r_factors) {
        (void)mult;
        if (phi.degree() == 1) {
            const Rational z0 = -phi.coeff(0);
            const UniPoly h = gcd(in_y_at(fa, z0), in_y_at(ga, z0));
            if (h.is_zero())
                return std::nullopt;
            add_roots_and_orbits(h, [&](const UniPoly& y) { return std::array<UniPoly, 3>{c(1), y, c(z0)}; }, out);
            continue;
        }
        const NumberField k(phi);
        FieldPoly fk, gk;
        for (const auto& x : fa)
            fk.push_back(k.reduce(x));
        for (const auto& x : ga)
            gk.push_back(k.reduce(x));
        fk = trim(k, fk);
        gk = trim(k, gk);
        if (fk.empty() && gk.empty())
            return std::nullopt;
        const FieldPoly h = gcd(k, fk, gk);
        const int deg = static_cast<int>(h.size()) - 1;
        if (deg <= 0)
            continue;
        if (deg > 1)
            throw DegenerateInput("rank_one_elements: several rank-one points share a non-rational coordinate");
        // h monic: y + h[0]
        out.orbits.push_back({phi, {c(1), k.reduce(UniPoly() - h[0]), UniPoly::monomial(1, 1)}});
    }
    // Line l1 = 0, chart l2 = 1.
    const UniPoly hb = gcd(chart_b(f), chart_b(g));
    if (hb.is_zero())
        return std::nullopt;
    add_roots_and_orbits(hb, [](const UniPoly& z) { return std::array<UniPoly, 3>{UniPoly(), c(1), z}; }, out);
    // The point (0, 0, 1).
    if (f(2, 2) == 0 && g(2, 2) == 0)
        out.rational.push_back({Rational(0), Rational(0), Rational(1)});
    return out;
}

bool vanishes(const Conic& g, const Vector& l)
{
    Rational s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            s += g(i, j) * l[i] * l[j];
    return s == 0;
}

bool vanishes(const Conic& g, const RankOneOrbit& o)
{
    const NumberField k(o.minimal_polynomial);
    UniPoly s;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (g(i, j) != 0)
                s = s + g(i, j) * k.mul(o.form[i], o.form[j]);
    return k.reduce(s).is_zero();
}

Vector normalized(Vector v)
{
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    const Rational lead = *it;
    for (auto& x : v)
        x /= lead;
    return v;
}

} // namespace

RankOneClassification rank_one_elements(const QuadricSystem& system)
{
    if (system.ambient_dim != 3)
        throw InvalidInput("rank_one_elements: expected quadrics in 3 variables");
    if (system.dimension() > 4)
        throw DegenerateInput("rank_one_elements: system of dimension > 4 has a positive-dimensional rank-one locus");

    std::vector<Vector> rows;
    for (const auto& q : system.quadrics())
        rows.push_back(quadric_coordinates(q));
    // Functionals phi on S^2 with phi(q) = 0 for every member, as conics l -> phi(l^2).
    std::vector<Conic> conics;
    const std::vector<Vector> annihilators = rows.empty() ? std::vector<Vector>{} : kernel(Matrix::from_rows(rows, 6));
    std::vector<Vector> phis = annihilators;
    if (rows.empty())
        for (std::size_t k = 0; k < 6; ++k) {
            Vector e(6, Rational(0));
            e[k] = 1;
            phis.push_back(e);
        }
    for (const auto& p : phis)
        conics.push_back(Matrix{{p[0], p[1], p[2]}, {p[1], p[3], p[4]}, {p[2], p[4], p[5]}});

    std::vector<Conic> pool = conics;
    for (std::size_t i = 0; i < conics.size(); ++i)
        for (std::size_t j = 0; j < conics.size(); ++j)
            if (i != j)
                for (int m = 1; m <= 2; ++m)
                    pool.push_back(conics[i] + Rational(m) * conics[j]);

    std::optional<Found> found;
    for (std::size_t i = 0; i < pool.size() && !found; ++i)
        for (std::size_t j = i + 1; j < pool.size() && !found; ++j)
            found = intersect(pool[i], pool[j]);
    if (!found)
        throw DegenerateInput("rank_one_elements: rank-one locus is positive-dimensional");

    RankOneClassification out;
    for (const auto& l : found->rational)
        if (std::all_of(conics.begin(), conics.end(), [&](const Conic& g) { return vanishes(g, l); }))
            out.rational.push_back(normalized(l));
    for (const auto& o : found->orbits)
        if (std::all_of(conics.begin(), conics.end(), [&](const Conic& g) { return vanishes(g, o); }))
            out.orbits.push_back(o);
    std::sort(out.rational.begin(), out.rational.end(), [](const Vector& a, const Vector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    out.rational.erase(std::unique(out.rational.begin(), out.rational.end()), out.rational.end());
    std::sort(out.orbits.begin(), out.orbits.end(), [](const RankOneOrbit& a, const RankOneOrbit& b) {
        return a.minimal_polynomial.to_string() < b.minimal_polynomial.to_string();
    });
    return out;
}

} // namespace biquot
