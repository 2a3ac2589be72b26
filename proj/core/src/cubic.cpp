#include "biquot/cubic.hpp"

#include "biquot/errors.hpp"
#include "biquot/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace biquot {

namespace {

const std::vector<std::string> kTernaryNames = {"lambda", "mu", "nu"};
const std::vector<std::string> kBinaryNames = {"mu", "nu"};

HomPoly binary_form(const std::vector<Rational>& coeffs_mu_first)
{
    // coeffs_mu_first[k] multiplies mu^(d-k) nu^k
    const int d = static_cast<int>(coeffs_mu_first.size()) - 1;
    HomPoly::Terms t;
    for (int k = 0; k <= d; ++k)
        if (coeffs_mu_first[k] != 0)
            t.emplace(Exponents{d - k, k}, coeffs_mu_first[k]);
    return HomPoly(2, std::move(t));
}

HomPoly to_form(const BinaryCubic& b)
{
    return binary_form({b.c[0], b.c[1], b.c[2], b.c[3]});
}

BinaryCubic from_form(const HomPoly& p)
{
    BinaryCubic b;
    for (int k = 0; k <= 3; ++k)
        b.c[k] = p.coefficient({3 - k, k});
    return b;
}

// Binary form of degree d as a polynomial in mu with nu = 1.
UniPoly dehomogenize(const HomPoly& f)
{
    std::vector<Rational> c;
    for (const auto& [e, v] : f.terms()) {
        if (c.size() <= static_cast<std::size_t>(e[0]))
            c.resize(e[0] + 1, Rational(0));
        c[e[0]] = v;
    }
    return UniPoly(std::move(c));
}

HomPoly homogenize(const UniPoly& u, int degree)
{
    HomPoly::Terms t;
    for (int k = 0; k <= u.degree(); ++k)
        if (u.coeff(k) != 0)
            t.emplace(Exponents{k, degree - k}, u.coeff(k));
    return HomPoly(2, std::move(t));
}

// Split F = lambda^0-part + lambda^1-part, both as binary forms in (mu, nu).
void split_lambda(const HomPoly& f, HomPoly& with_lambda, HomPoly& without_lambda)
{
    HomPoly::Terms one, zero;
    for (const auto& [e, c] : f.terms()) {
        if (e[0] == 1)
            one.emplace(Exponents{e[1], e[2]}, c);
        else if (e[0] == 0)
            zero.emplace(Exponents{e[1], e[2]}, c);
        else
            throw DegenerateInput("expected a form of degree at most one in lambda");
    }
    with_lambda = HomPoly(2, std::move(one));
    without_lambda = HomPoly(2, std::move(zero));
}

// Partial derivative restricted to (lambda, mu, 1), as a polynomial in lambda
// with coefficients in Q[mu].
std::vector<UniPoly> in_lambda_over_mu(const HomPoly& p)
{
    std::vector<UniPoly> out;
    for (const auto& [e, c] : p.terms()) {
        if (out.size() <= static_cast<std::size_t>(e[0]))
            out.resize(e[0] + 1);
        out[e[0]] = out[e[0]] + UniPoly::monomial(c, e[1]);
    }
    return out;
}

UniPoly at_mu(const std::vector<UniPoly>& f, const Rational& mu)
{
    std::vector<Rational> c;
    for (const auto& k : f)
        c.push_back(k(mu));
    return UniPoly(std::move(c));
}

// Polynomial in lambda on the line (lambda, 1, 0).
UniPoly on_line_nu0(const HomPoly& p)
{
    UniPoly u;
    for (const auto& [e, c] : p.terms())
        if (e[2] == 0)
            u = u + UniPoly::monomial(c, e[0]);
    return u;
}

Vector normalized_point(Vector v)
{
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    const Rational lead = *it;
    for (auto& x : v)
        x /= lead;
    return v;
}

bool point_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void finish(std::vector<Vector>& pts)
{
    for (auto& p : pts)
        p = normalized_point(p);
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// gcd of the nonzero polynomials; nullopt when all are zero.
std::optional<UniPoly> common_gcd(const std::vector<UniPoly>& ps)
{
    std::optional<UniPoly> g;
    for (const auto& p : ps) {
        if (p.is_zero())
            continue;
        g = g ? gcd(*g, p) : p.monic();
    }
    return g;
}

std::array<HomPoly, 3> gradient(const TernaryCubic& f)
{
    return {f.poly().derivative(0), f.poly().derivative(1), f.poly().derivative(2)};
}

bool is_singular(const std::array<HomPoly, 3>& grad, const Vector& p)
{
    return grad[0].evaluate(p) == 0 && grad[1].evaluate(p) == 0 && grad[2].evaluate(p) == 0;
}

} // namespace

TernaryCubic::TernaryCubic(HomPoly poly) : poly_(std::move(poly))
{
    if (poly_.variable_count() != 3)
        throw InvalidInput("TernaryCubic: expected 3 variables");
    if (!poly_.is_zero() && poly_.exponent_sum() != 3)
        throw InvalidInput("TernaryCubic: expected a cubic form");
}

TernaryCubic TernaryCubic::transform(const Matrix& p) const
{
    if (p.rows() != 3 || p.cols() != 3)
        throw InvalidInput("transform: expected a 3x3 matrix");
    return TernaryCubic(poly_.substitute(p));
}

std::string TernaryCubic::to_string() const
{
    return poly_.to_string(kTernaryNames);
}

std::string BinaryCubic::to_string() const
{
    return to_form(*this).to_string(kBinaryNames);
}

TernaryCubic det_cubic(const QuadricSystem& net)
{
    if (net.ambient_dim != 3 || net.dimension() != 3)
        throw InvalidInput("det_cubic: expected a net of quadrics on a 3-dimensional space");
    HomPoly m[3][3];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = HomPoly::linear({net.basis[0](i, j), net.basis[1](i, j), net.basis[2](i, j)});
    HomPoly d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
              - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
              + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return TernaryCubic(std::move(d));
}

SingularPoints singular_points(const TernaryCubic& f)
{
    if (f.is_zero())
        throw InvalidInput("singular_points: zero cubic");
    const auto grad = gradient(f);
    std::vector<Vector> pts;
    const char* positive_dim = "singular locus is positive-dimensional";

    // Chart nu = 1: candidate mu values.
    std::vector<std::vector<UniPoly>> parts;
    for (const auto& g : grad) {
        auto v = in_lambda_over_mu(g);
        while (!v.empty() && v.back().is_zero())
            v.pop_back();
        parts.push_back(std::move(v));
    }
    UniPoly candidates;
    for (std::size_t i = 0; i < 3 && candidates.is_zero(); ++i) {
        for (std::size_t j = i + 1; j < 3 && candidates.is_zero(); ++j) {
            const auto& a = parts[i];
            const auto& b = parts[j];
            if (a.empty() || b.empty())
                continue;
            if (a.size() == 1)
                candidates = a[0];
            else if (b.size() == 1)
                candidates = b[0];
            else
                candidates = resultant(a, b);
        }
    }
    if (candidates.is_zero())
        throw DegenerateInput(positive_dim);
    for (const auto& mu : rational_roots(candidates)) {
        std::vector<UniPoly> in_lambda;
        for (const auto& p : parts)
            in_lambda.push_back(at_mu(p, mu));
        auto g = common_gcd(in_lambda);
        if (!g)
            throw DegenerateInput(positive_dim);
        for (const auto& l : rational_roots(*g))
            pts.push_back({l, mu, Rational(1)});
    }

    // Line nu = 0, chart mu = 1.
    {
        std::vector<UniPoly> in_lambda;
        for (const auto& g : grad)
            in_lambda.push_back(on_line_nu0(g));
        auto g = common_gcd(in_lambda);
        if (!g)
            throw DegenerateInput(positive_dim);
        for (const auto& l : rational_roots(*g))
            pts.push_back({l, Rational(1), Rational(0)});
    }

    const Vector corner{Rational(1), Rational(0), Rational(0)};
    if (is_singular(grad, corner))
        pts.push_back(corner);

    for (const auto& p : pts)
        if (!is_singular(grad, p))
            throw std::logic_error("singular_points: elimination produced a non-singular point");
    finish(pts);
    return {pts, SingularPoints::Status::proven};
}

SingularPoints singular_points_search(const TernaryCubic& f, int height_bound)
{
    if (f.is_zero())
        throw InvalidInput("singular_points_search: zero cubic");
    if (height_bound < 1)
        throw InvalidInput("singular_points_search: height bound must be positive");
    const auto grad = gradient(f);

    std::vector<Rational> values{Rational(0)};
    for (int q = 1; q <= height_bound; ++q)
        for (int p = 1; p <= height_bound; ++p)
            if (std::gcd(p, q) == 1) {
                values.push_back(make_rational(p, q));
                values.push_back(make_rational(-p, q));
            }

    struct DTerm {
        double c;
        int e[3];
    };
    std::array<std::vector<DTerm>, 3> dgrad;
    double scale = 0;
    for (std::size_t k = 0; k < 3; ++k)
        for (const auto& [e, c] : grad[k].terms()) {
            dgrad[k].push_back({c.get_d(), {e[0], e[1], e[2]}});
            scale = std::max(scale, std::abs(c.get_d()));
        }
    auto near_zero = [&](double l, double m, double n) {
        const double size = std::max({1.0, std::abs(l), std::abs(m), std::abs(n)});
        const double tol = 1e-9 * scale * size * size;
        for (const auto& terms : dgrad) {
            double s = 0;
            for (const auto& t : terms)
                s += t.c * std::pow(l, t.e[0]) * std::pow(m, t.e[1]) * std::pow(n, t.e[2]);
            if (std::abs(s) > tol)
                return false;
        }
        return true;
    };

    std::vector<double> dv;
    for (const auto& v : values)
        dv.push_back(v.get_d());
    std::vector<Vector> pts;
    auto check = [&](Vector p) {
        if (is_singular(grad, p))
            pts.push_back(std::move(p));
    };
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j)
            if (near_zero(dv[i], dv[j], 1.0))
                check({values[i], values[j], Rational(1)});
        if (near_zero(dv[i], 1.0, 0.0))
            check({values[i], Rational(1), Rational(0)});
    }
    check({Rational(1), Rational(0), Rational(0)});
    finish(pts);
    return {pts, SingularPoints::Status::search_exhausted};
}

BinaryQuadratic tangent_cone(const TernaryCubic& f)
{
    if (f.coefficient(3, 0, 0) != 0 || f.coefficient(2, 1, 0) != 0 || f.coefficient(2, 0, 1) != 0)
        throw InvalidInput("tangent_cone: cubic is not singular at [1,0,0] (lambda^3 or lambda^2 terms present)");
    BinaryQuadratic q{f.coefficient(1, 2, 0), f.coefficient(1, 1, 1), f.coefficient(1, 0, 2)};
    if (q.mm == 0 && q.mn == 0 && q.nn == 0)
        throw InvalidInput("tangent_cone: [1,0,0] is not a double point");
    return q;
}

BinaryCubic harmonic_cubic(const Rational& alpha, const Rational& beta)
{
    return {{beta, -3 * alpha, -3 * beta, alpha}};
}

BinaryCubic inflection_lines(const TernaryCubic& f)
{
    const BinaryQuadratic q0 = tangent_cone(f);
    if (q0.mn != 0 || q0.mm != q0.nn)
        throw InvalidInput("inflection_lines: tangent cone is not proportional to mu^2 + nu^2");
    const Rational s = q0.mm;
    const HomPoly g = (1 / s) * f.poly();

    HomPoly hess[3][3];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            hess[i][j] = g.derivative(i).derivative(j);
    const HomPoly h = hess[0][0] * (hess[1][1] * hess[2][2] - hess[1][2] * hess[2][1])
                    - hess[0][1] * (hess[1][0] * hess[2][2] - hess[1][2] * hess[2][0])
                    + hess[0][2] * (hess[1][0] * hess[2][1] - hess[1][1] * hess[2][0]);

    HomPoly q, c, h1, h0;
    split_lambda(g, q, c);
    split_lambda(h, h1, h0);

    // Res_lambda(lambda q + c, lambda h1 + h0)
    const HomPoly res = q * h0 - c * h1;
    if (res.is_zero())
        throw DegenerateInput("inflection_lines: resultant vanishes identically");

    auto [quot, rem] = divmod(dehomogenize(res), dehomogenize(q));
    if (!rem.is_zero())
        throw DegenerateInput("inflection_lines: resultant lacks the tangent-cone factor");
    const HomPoly core = homogenize(quot, 3);

    // h1 is a constant multiple k of q; the eliminant is q (h0 - k c).
    auto [k_poly, k_rem] = divmod(dehomogenize(h1), dehomogenize(q));
    if (!k_rem.is_zero() || k_poly.degree() != 0)
        throw DegenerateInput("inflection_lines: Hessian is not of the expected shape");
    const Rational k = k_poly.coeff(0);

    BinaryCubic b = from_form((-1 / k) * core);
    // Harmonic / non-harmonic split on mu^3 - 3 mu nu^2, 3 mu^2 nu - nu^3, (mu^2 + nu^2) mu, (mu^2 + nu^2) nu.
    const Rational r1 = (3 * b.c[0] + b.c[2]) / 4;
    const Rational r2 = (b.c[1] + 3 * b.c[3]) / 4;
    if (r1 != 0 || r2 != 0)
        throw DegenerateInput("inflection_lines: inflection cubic has a non-harmonic component");
    if (b == BinaryCubic{})
        throw DegenerateInput("inflection_lines: inflection cubic vanishes");
    return b;
}

GaussianRational alpha_beta(const BinaryCubic& b)
{
    const Rational alpha = b.c[3];
    const Rational beta = b.c[0];
    if (b.c[1] != -3 * alpha || b.c[2] != -3 * beta)
        throw DegenerateInput("alpha_beta: cubic is not of the form beta mu^3 - 3 alpha mu^2 nu - 3 beta mu nu^2 + alpha nu^3");
    return {alpha, beta};
}

BinaryCubic rotate_cubic(const BinaryCubic& b, const Rational& c, const Rational& d)
{
    if (c == 0 && d == 0)
        throw InvalidInput("rotate_cubic: zero rotation");
    return from_form(to_form(b).substitute(Matrix{{c, d}, {-d, c}}));
}

GaussianRational rotate_alpha_beta(const Rational& alpha, const Rational& beta, const Rational& c, const Rational& d)
{
    if (c == 0 && d == 0)
        throw InvalidInput("rotate_alpha_beta: zero rotation");
    return GaussianRational(alpha, beta) * pow(GaussianRational(c, d), 3);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (x < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
        return std::nullopt;
    return make_rational(Integer(sqrt(x.get_num())), Integer(sqrt(x.get_den())));
}

} // namespace

NodalNormalForm normalize_nodal_cubic(const TernaryCubic& f)
{
    const auto sing = singular_points(f);
    if (sing.points.size() != 1)
        throw DegenerateInput("normalize_nodal_cubic: expected exactly one rational singular point, found " +
                              std::to_string(sing.points.size()));
    const Vector& p = sing.points.front();
    std::size_t lead = 0;
    while (p[lead] == 0)
        ++lead;
    // Columns: the node, then the unit vectors other than e_lead.
    Matrix move(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        move(i, 0) = p[i];
    for (std::size_t j = 0, col = 1; j < 3; ++j)
        if (j != lead)
            move(j, col++) = 1;
    // x -> move x means lambda_i -> sum_j move_ij lambda_j
    TernaryCubic g = f.transform(move);
    BinaryQuadratic q = tangent_cone(g);

    Matrix fix = Matrix::identity(3);
    if (q.mm == 0) {
        if (q.nn == 0)
            throw DegenerateInput("normalize_nodal_cubic: tangent cone splits over Q");
        fix = Matrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
        g = g.transform(fix);
        q = tangent_cone(g);
    }
    const Rational a = q.mm, b = q.mn, c = q.nn;
    const auto e = rational_sqrt(4 * a * c - b * b);
    if (!e || *e == 0)
        throw DegenerateInput("normalize_nodal_cubic: tangent cone is not equivalent to mu^2 + nu^2 over Q");
    // mu = mu' - (b/e) nu', nu = (2a/e) nu'
    const Matrix complete{{1, 0, 0}, {0, 1, -b / *e}, {0, 0, 2 * a / *e}};
    g = g.transform(complete);

    NodalNormalForm out;
    out.transform = move * fix * complete;
    out.scale = 1 / a;
    out.cubic = g.scaled(out.scale);
    const BinaryQuadratic check = tangent_cone(out.cubic);
    if (check.mm != 1 || check.mn != 0 || check.nn != 1)
        throw std::logic_error("normalize_nodal_cubic: normalization failed");
    return out;
}

} // namespace biquot
