#include "biquot/numeric.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

namespace biquot {

namespace {

using cplx = std::complex<double>;

struct Term {
    double c;
    std::array<int, 3> e;
};

std::vector<Term> terms_of(const TernaryCubic& f)
{
    std::vector<Term> out;
    for (const auto& [e, c] : f.poly().terms())
        out.push_back({c.get_d(), {e[0], e[1], e[2]}});
    return out;
}

// Mixed partial with orders d at p.
cplx partial(const std::vector<Term>& terms, const std::array<cplx, 3>& p, const std::array<int, 3>& d)
{
    cplx s = 0;
    for (const auto& t : terms) {
        cplx v = t.c;
        for (int k = 0; k < 3; ++k) {
            if (t.e[k] < d[k]) {
                v = 0;
                break;
            }
            for (int j = 0; j < d[k]; ++j)
                v *= double(t.e[k] - j);
            v *= std::pow(p[k], t.e[k] - d[k]);
        }
        s += v;
    }
    return s;
}

std::array<int, 3> orders(std::initializer_list<int> vars)
{
    std::array<int, 3> d{0, 0, 0};
    for (int v : vars)
        ++d[v];
    return d;
}

using M3 = std::array<std::array<cplx, 3>, 3>;

cplx det3(const M3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

M3 adjugate(const M3& m)
{
    M3 a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    return a;
}

struct Eval {
    cplx f, h;
    std::array<cplx, 3> df, dh;
};

Eval evaluate(const std::vector<Term>& t, const std::array<cplx, 3>& p)
{
    Eval e;
    e.f = partial(t, p, {0, 0, 0});
    M3 hess{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            hess[i][j] = partial(t, p, orders({i, j}));
    e.h = det3(hess);
    const M3 adj = adjugate(hess);
    for (int k = 0; k < 3; ++k) {
        e.df[k] = partial(t, p, orders({k}));
        cplx s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s += adj[j][i] * partial(t, p, orders({i, j, k}));
        e.dh[k] = s;
    }
    return e;
}

cplx eval_binary(const BinaryCubic& b, cplx mu, cplx nu)
{
    return b.c[0].get_d() * mu * mu * mu + b.c[1].get_d() * mu * mu * nu + b.c[2].get_d() * mu * nu * nu +
           b.c[3].get_d() * nu * nu * nu;
}

} // namespace

NumericCheck check_inflection_lines_numerically(const TernaryCubic& f, const BinaryCubic& lines, double tol)
{
    const auto terms = terms_of(f);
    double scale = 0;
    for (const auto& t : terms)
        scale = std::max(scale, std::abs(t.c));
    double bnorm = 0;
    for (const auto& c : lines.c)
        bnorm = std::max(bnorm, std::abs(c.get_d()));
    if (scale == 0 || bnorm == 0)
        throw InvalidInput("check_inflection_lines_numerically: zero input");

    std::vector<std::pair<cplx, cplx>> found; // (mu, nu), unit norm
    const double grid[] = {-2.3, -0.7, 0.4, 1.9};
    for (int chart = 0; chart < 2; ++chart) {
        // chart 0: nu = 1, unknowns (lambda, mu); chart 1: mu = 1, unknowns (lambda, nu)
        const int free_var = chart == 0 ? 1 : 2;
        for (double lr : grid)
            for (double li : grid)
                for (double xr : grid)
                    for (double xi : grid) {
                        std::array<cplx, 3> p;
                        p[0] = cplx(lr, li);
                        p[free_var] = cplx(xr, xi);
                        p[chart == 0 ? 2 : 1] = 1.0;
                        bool converged = false;
                        int polish = 3;
                        for (int it = 0; it < 80; ++it) {
                            const Eval e = evaluate(terms, p);
                            const double size = std::max({1.0, std::abs(p[0]), std::abs(p[free_var])});
                            if (std::abs(e.f) < 1e-12 * scale * size * size * size &&
                                std::abs(e.h) < 1e-12 * std::pow(scale * size, 3))
                                converged = true;
                            if (converged && polish-- == 0)
                                break;
                            const cplx a = e.df[0], b = e.df[free_var], c = e.dh[0], d = e.dh[free_var];
                            const cplx det = a * d - b * c;
                            if (std::abs(det) == 0)
                                break;
                            p[0] -= (d * e.f - b * e.h) / det;
                            p[free_var] -= (-c * e.f + a * e.h) / det;
                            if (!std::isfinite(std::abs(p[0])) || std::abs(p[0]) > 1e8 || std::abs(p[free_var]) > 1e8)
                                break;
                        }
                        if (!converged)
                            continue;
                        cplx mu = p[1], nu = p[2];
                        const double n = std::sqrt(std::norm(mu) + std::norm(nu));
                        if (n < 1e-9)
                            continue;
                        mu /= n;
                        nu /= n;
                        const bool dup = std::any_of(found.begin(), found.end(), [&](const auto& q) {
                            return std::abs(mu * q.second - nu * q.first) < 1e-6;
                        });
                        if (!dup)
                            found.emplace_back(mu, nu);
                    }
    }

    NumericCheck r;
    r.solutions = found.size();
    for (const auto& [mu, nu] : found)
        r.max_residual = std::max(r.max_residual, std::abs(eval_binary(lines, mu, nu)) / bnorm);
    r.ok = found.size() == 3 && r.max_residual < tol;
    std::ostringstream os;
    os << found.size() << " inflection lines, max residual " << r.max_residual;
    r.detail = os.str();
    return r;
}

NumericCheck check_membership_numerically(const QuadricSystem& system, const Rational& a, const Rational& b, const UniPoly& q, double tol)
{
    if (system.ambient_dim != 3 || q.degree() != 2)
        throw InvalidInput("check_membership_numerically: expected a system on Q^3 and a quadratic");
    // Annihilating functionals: orthogonal complement of the members' coordinate vectors.
    std::vector<std::array<double, 6>> basis, comp;
    auto orth = [&](std::array<double, 6> v) {
        for (const auto& u : basis) {
            double d = 0;
            for (int k = 0; k < 6; ++k)
                d += u[k] * v[k];
            for (int k = 0; k < 6; ++k)
                v[k] -= d * u[k];
        }
        double n = 0;
        for (double x : v)
            n += x * x;
        n = std::sqrt(n);
        if (n > 1e-8)
            for (auto& x : v)
                x /= n;
        return std::make_pair(v, n);
    };
    for (const auto& g : system.basis) {
        const std::array<double, 6> v{g(0, 0).get_d(), 2 * g(0, 1).get_d(), 2 * g(0, 2).get_d(),
                                      g(1, 1).get_d(), 2 * g(1, 2).get_d(), g(2, 2).get_d()};
        auto [u, n] = orth(v);
        if (n > 1e-8)
            basis.push_back(u);
    }
    for (int k = 0; k < 6 && basis.size() < 6; ++k) {
        std::array<double, 6> e{};
        e[k] = 1;
        auto [u, n] = orth(e);
        if (n < 1e-8)
            continue;
        basis.push_back(u);
        comp.push_back(u);
    }
    if (comp.empty())
        throw DegenerateInput("check_membership_numerically: system is all of S^2");

    // Membership of (a x1 + b x2 + t x3)^2: every functional vanishes on
    // (a^2, 2ab, 2at, b^2, 2bt, t^2).
    const double ad = a.get_d(), bd = b.get_d();
    struct Quad {
        cplx c0, c1, c2;
    };
    std::vector<Quad> eqs;
    for (const auto& w : comp)
        eqs.push_back({w[0] * ad * ad + w[1] * 2 * ad * bd + w[3] * bd * bd, w[2] * 2 * ad + w[4] * 2 * bd, w[5]});
    std::sort(eqs.begin(), eqs.end(), [](const Quad& x, const Quad& y) { return std::abs(x.c2) > std::abs(y.c2); });
    const Quad& e0 = eqs.front();
    if (std::abs(e0.c2) < 1e-12)
        throw DegenerateInput("check_membership_numerically: membership equations are not quadratic");
    auto roots_of = [](cplx c2, cplx c1, cplx c0) {
        const cplx s = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
        return std::array<cplx, 2>{(-c1 + s) / (2.0 * c2), (-c1 - s) / (2.0 * c2)};
    };
    const auto t_num = roots_of(e0.c2, e0.c1, e0.c0);
    const auto t_exact = roots_of(q.coeff(2).get_d(), q.coeff(1).get_d(), q.coeff(0).get_d());

    NumericCheck res;
    res.solutions = 2;
    for (const auto& t : t_num) {
        const double size = std::max(1.0, std::abs(t));
        for (const auto& e : eqs)
            res.max_residual = std::max(res.max_residual, std::abs(e.c2 * t * t + e.c1 * t + e.c0) / (size * size));
        const double match = std::min(std::abs(t - t_exact[0]), std::abs(t - t_exact[1])) / size;
        res.max_residual = std::max(res.max_residual, match);
    }
    res.ok = res.max_residual < tol;
    std::ostringstream os;
    os << "membership roots max residual " << res.max_residual;
    res.detail = os.str();
    return res;
}

} // namespace biquot
