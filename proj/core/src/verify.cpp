#include "biquot/verify.hpp"

#include "biquot/errors.hpp"
#include "biquot/numeric.hpp"
#include "biquot/rank_one.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace biquot {

namespace {

class Run {
public:
    explicit Run(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what)
    {
        ++result_.checks;
        if (!ok)
            fail(what);
    }

    // Runs f; exceptions count as failures of `what`.
    void guard(const std::string& what, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            ++result_.checks;
            fail(what + " threw: " + e.what());
        }
    }

    SuiteResult finish(double seconds)
    {
        result_.seconds = seconds;
        return std::move(result_);
    }

private:
    void fail(const std::string& what)
    {
        ++result_.failures;
        if (result_.counterexamples.size() < 50)
            result_.counterexamples.push_back(what);
    }
    SuiteResult result_;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long lo, long hi)
    {
        long v = 0;
        while (v == 0)
            v = integer(lo, hi);
        return v;
    }
    Rational rational(long h = 12, long d = 6) { return make_rational(integer(-h, h), integer(1, d)); }
    Rational nonzero_rational(long h = 12, long d = 6)
    {
        Rational r = 0;
        while (r == 0)
            r = rational(h, d);
        return r;
    }
    Matrix invertible(std::size_t n, long h = 3)
    {
        while (true) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = integer(-h, h);
            if (determinant(m) != 0)
                return m;
        }
    }

private:
    std::mt19937_64 gen_;
};

std::string str(const Rational& q)
{
    return to_string(q);
}

bool proportional(const Vector& u, const Vector& v)
{
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i])
                return false;
    return !is_zero(u) && !is_zero(v);
}

// ---------------------------------------------------------------- arith

void arith_suite(Run& run, Rng& rng)
{
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianInteger z{Integer(rng.integer(-500, 500)), Integer(rng.integer(-500, 500))};
        if (z.is_zero())
            continue;
        run.guard("gaussian_factor " + to_string(GaussianRational(z)), [&] {
            run.check(gaussian_factor(z).product() == z, "gaussian_factor product mismatch for " + to_string(GaussianRational(z)));
        });
    }
    for (long p = 5; p < 2000; p += 4) {
        if (!is_prime(Integer(p)))
            continue;
        const GaussianInteger pi = split_prime(Integer(p));
        run.check(pi.norm() == p && pi.re > pi.im && pi.im > 0, "split_prime " + std::to_string(p));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const GaussianRational z(rng.rational(40, 9), rng.nonzero_rational(40, 9));
        const GaussianRational w(rng.nonzero_rational(40, 9), rng.rational(40, 9));
        const Rational q = rng.nonzero_rational(40, 9);
        const std::string in = "z=" + to_string(z) + " w=" + to_string(w) + " q=" + str(q);
        run.guard("cube classes " + in, [&] {
            const CubeClassModQ cz = cube_class_mod_Q(z), cw = cube_class_mod_Q(w);
            run.check(cube_class_mod_Q(z * w) == cz * cw, "cube class not multiplicative: " + in);
            run.check(cube_class_mod_Q(GaussianRational(q) * z) == cz, "cube class changes under rational scaling: " + in);
            run.check(cube_class_mod_Q(pow(w, 3)).is_trivial(), "cube has nontrivial class: " + in);
            run.check(cube_class_mod_Q(z.conj()) == conjugate_class(cz), "conjugation law: " + in);
            run.check(parse_cube_class(to_string(cz)) == cz, "cube class round trip: " + in);
        });
        const Rational r = rng.nonzero_rational(60, 30);
        run.guard("square classes " + in, [&] {
            run.check(square_class(q * r) == square_class(q) * square_class(r), "square class not multiplicative: " + str(q) + " " + str(r));
            run.check(square_class(q * r * r) == square_class(q), "square class changes under squares: " + str(q) + " " + str(r));
            run.check(parse_square_class(to_string(square_class(q))) == square_class(q), "square class round trip: " + str(q));
        });
    }
    for (int trial = 0; trial < 60; ++trial) {
        UniPoly p = UniPoly::constant(1);
        const int factors = static_cast<int>(rng.integer(1, 3));
        for (int f = 0; f < factors; ++f) {
            const int deg = static_cast<int>(rng.integer(1, 2));
            std::vector<Rational> c;
            for (int k = 0; k < deg; ++k)
                c.push_back(rng.rational(9, 3));
            c.push_back(1);
            p = p * UniPoly(c);
        }
        run.guard("factor_over_Q " + p.to_string(), [&] {
            UniPoly back = UniPoly::constant(1);
            for (const auto& [f, m] : factor_over_Q(p))
                for (int k = 0; k < m; ++k)
                    back = back * f;
            run.check(back == p.monic(), "factor_over_Q product mismatch for " + p.to_string());
        });
    }
}

// ---------------------------------------------------------------- ring

std::vector<std::size_t> dims(const GradedQuotient& r)
{
    std::vector<std::size_t> d;
    for (int k = 0; k <= r.max_degree(); k += 2)
        d.push_back(r.dim(k));
    return d;
}

std::vector<std::size_t> binomial_row(std::size_t n, std::size_t through)
{
    std::vector<std::size_t> row(through + 1, 0);
    row[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = through; k >= 1; --k)
            row[k] += row[k - 1];
    return row;
}

void ring_suite(Run& run, Rng& rng)
{
    for (int trial = 0; trial < 20; ++trial) {
        const long b1 = rng.integer(-20, 20), c1 = rng.integer(-20, 20);
        const std::string in = "t1 ring b1=" + std::to_string(b1) + " c1=" + std::to_string(c1);
        run.guard(in, [&] {
            const GradedQuotient r = quotient_ring(t1_action(b1, c1));
            run.check(is_complete_intersection(r), "not a complete intersection: " + in);
            run.check(dims(r) == binomial_row(3, r.max_degree() / 2), "graded dims differ from (1+t^2)^3: " + in);
            const QuadricSystem k = kernel_of_square_map(r);
            std::vector<Vector> images;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i; j < 3; ++j)
                    images.push_back(product_in_quotient(r, HomPoly::variable(3, i), HomPoly::variable(3, j)));
            run.check(k.dimension() + rank(Matrix::from_columns(images, r.dim(4))) == 6, "kernel + rank != dim S^2: " + in);
        });
    }
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<std::int64_t>> a(4, std::vector<std::int64_t>(4, 0));
        for (std::size_t i = 0; i < 4; ++i) {
            a[i][i] = rng.integer(0, 1) ? 1 : -1;
            for (std::size_t j = 0; j < i; ++j)
                a[i][j] = rng.integer(-3, 3);
        }
        const TorusActionMatrix m(a);
        const std::string in = "lower-triangular ring " + m.to_string();
        run.guard(in, [&] {
            const GradedQuotient r = quotient_ring(m);
            run.check(is_complete_intersection(r), "not a complete intersection: " + in);
            run.check(dims(r) == binomial_row(4, r.max_degree() / 2), "graded dims differ from (1+t^2)^4: " + in);
        });
    }
    run.guard("t3 ring presentation", [&] {
        const auto x = [](std::size_t i) { return HomPoly::variable(4, i); };
        const GradedQuotient expected(4, {x(0) * x(0), x(1) * x(1), x(2) * x(2) - x(0) * x(1), x(3) * x(3) - x(0) * x(1)}, 4);
        run.check(same_ideal(*t3_ring(), expected), "rational t3 ring differs from x1^2, x2^2, x3^2-x1x2, x4^2-x1x2");
    });
    const GradedQuotient base = quotient_ring(t1_action(3, -5), 6);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix p = rng.invertible(3);
        const std::string in = "change of variables " + to_string(p);
        run.guard(in, [&] {
            const GradedQuotient moved = change_of_variables(base, p);
            run.check(dims(moved) == dims(base), "graded dims change: " + in);
            const GradedQuotient back = change_of_variables(moved, *inverse(p));
            run.check(same_ideal(back, base), "P then P^-1 changes the ideal: " + in);
        });
    }
}

// ---------------------------------------------------------------- freeness

void freeness_suite(Run& run, Rng& rng)
{
    const std::uint64_t s = static_cast<std::uint64_t>(rng.integer(0, 1L << 40));
    for (std::size_t size : {3, 4})
        for (const auto& c : freeness_comparisons(100, size, s + size - 3))
            run.check(c.free == c.oracle, std::string("is_free=") + (c.free ? "true" : "false") + " oracle=" +
                                              (c.oracle ? "true" : "false") + " for " + c.matrix);
    for (int trial = 0; trial < 20; ++trial) {
        const long b1 = rng.integer(-50, 50), c1 = rng.integer(-50, 50);
        run.check(is_free(t1_action(b1, c1)), "t1 action not free: b1=" + std::to_string(b1) + " c1=" + std::to_string(c1));
    }
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = static_cast<std::size_t>(rng.integer(1, 5));
        std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            a[i][i] = rng.integer(0, 1) ? 1 : -1;
            for (std::size_t j = 0; j < i; ++j)
                a[i][j] = rng.integer(-9, 9);
        }
        const TorusActionMatrix m(a);
        run.check(is_free(m), "unit lower-triangular action not free: " + m.to_string());
    }
}

// ---------------------------------------------------------------- t1

void t1_suite(Run& run, Rng& rng)
{
    const auto lm = [](std::size_t i) { return HomPoly::variable(3, i); };
    for (int trial = 0; trial < 20; ++trial) {
        Rational a = rng.rational(), b = rng.rational();
        if (a == 0 && b == 0)
            b = 1;
        const std::string in = "a=" + str(a) + " b=" + str(b);
        run.guard("t1 cubic " + in, [&] {
            const Rational alpha = 4 * (a * a - b * b), beta = 8 * a * b;
            const HomPoly expected = -(lm(0) * lm(1) * lm(1)) - lm(0) * lm(2) * lm(2) + alpha * (lm(1) * lm(1) * lm(2)) + beta * (lm(1) * lm(2) * lm(2));
            const TernaryCubic f = det_cubic(t1_net(a, b));
            run.check(f.poly() == expected, "det cubic differs from the closed form: " + in);
            const BinaryCubic lines = inflection_lines(f);
            run.check(lines == harmonic_cubic(alpha, beta), "inflection cubic differs: " + in + " got " + lines.to_string());
            const NumericCheck num = check_inflection_lines_numerically(f, lines);
            run.check(num.ok, "numeric inflection oracle: " + in + " " + num.detail);
            const auto sing = singular_points(f);
            run.check(sing.points == std::vector<Vector>{{Rational(1), Rational(0), Rational(0)}}, "singular points: " + in);
        });
    }
    for (int trial = 0; trial < 50; ++trial) {
        const Rational al = rng.rational(), be = rng.nonzero_rational(), c = rng.rational(), d = rng.nonzero_rational();
        const std::string in = "alpha=" + str(al) + " beta=" + str(be) + " c=" + str(c) + " d=" + str(d);
        run.guard("rotation " + in, [&] {
            const GaussianRational moved = alpha_beta(rotate_cubic(harmonic_cubic(al, be), c, d));
            const GaussianRational law = rotate_alpha_beta(al, be, c, d);
            run.check(moved == law, "rotation law: " + in);
            run.check(make_t1_invariant(moved) == make_t1_invariant(GaussianRational(al, be)), "invariant changes under rotation: " + in);
            // mu <-> nu
            const BinaryCubic h = harmonic_cubic(al, be);
            const BinaryCubic swapped{{h.c[3], h.c[2], h.c[1], h.c[0]}};
            const GaussianRational sw = alpha_beta(swapped);
            run.check(cube_class_mod_Q(sw) == cube_class_mod_Q(GaussianRational(be, al)), "swap does not exchange members: " + in);
            run.check(make_t1_invariant(sw) == make_t1_invariant(GaussianRational(al, be)), "invariant changes under swap: " + in);
        });
    }
    for (int trial = 0; trial < 30; ++trial) {
        long b1 = rng.integer(-30, 30), c1 = rng.integer(-30, 30);
        if (b1 == 0 && c1 == 0)
            c1 = 1;
        const std::string in = "b1=" + std::to_string(b1) + " c1=" + std::to_string(c1);
        run.guard("t1 pipeline " + in, [&] {
            const T1Invariant closed = t1_invariant(b1, c1);
            const T1PipelineResult p = t1_pipeline(b1, c1);
            run.check(p.invariant == closed, "pipeline " + to_string(p.invariant) + " vs closed form " + to_string(closed) + ": " + in);
            run.check(conjugate_class(closed.first) == closed.second, "members not conjugate: " + in);
            run.check(parse_t1_invariant(to_string(closed)) == closed, "invariant round trip: " + in);
            const NumericCheck num = check_inflection_lines_numerically(p.normal_form.cubic, p.inflection);
            run.check(num.ok, "numeric inflection oracle on pipeline: " + in + " " + num.detail);
        });
    }
    for (int trial = 0; trial < 50; ++trial) {
        long b1 = rng.integer(-30, 30), c1 = rng.integer(-30, 30);
        if (b1 == 0 && c1 == 0)
            b1 = 1;
        const Rational s1 = rng.nonzero_rational(), s2 = rng.nonzero_rational(), s3 = rng.nonzero_rational();
        const std::string in = "b1=" + std::to_string(b1) + " c1=" + std::to_string(c1) + " scales " + str(s1) + "," + str(s2) + "," + str(s3);
        run.guard("relation scaling " + in, [&] {
            const auto [a, b] = t1_parameters(b1, c1);
            const QuadricSystem net = t1_net(a, b);
            QuadricSystem scaled = net;
            scaled.basis = {s1 * net.basis[0], s2 * net.basis[1], s3 * net.basis[2]};
            run.check(t1_pipeline(scaled).invariant == t1_invariant(b1, c1), "invariant changes under relation scaling: " + in);
        });
    }
    for (const auto& w : {GaussianRational(1), GaussianRational(2, 1), GaussianRational(3, 2), GaussianRational(4, 1)}) {
        run.guard("realize " + to_string(w), [&] {
            const auto [b1, c1] = t1_realize_class(w);
            const T1Invariant t = t1_invariant(b1, c1);
            const CubeClassModQ target = cube_class_mod_Q(w);
            run.check(t.first == target || t.second == target, "t1_realize_class misses target for w=" + to_string(w));
        });
    }
}

// ---------------------------------------------------------------- t2

void t2_suite(Run& run, Rng& rng)
{
    run.guard("klein ring surjectivity", [&] {
        const KleinData k = klein_ring(1, 1);
        const QuadricSystem ker = kernel_of_square_map(*k.ring);
        run.check(15 - ker.dimension() == k.ring->dim(4), "S^2 V -> H^4 not surjective");
    });
    for (int trial = 0; trial < 20; ++trial) {
        const long a0 = rng.nonzero(-20, 20), a1 = rng.nonzero(-20, 20);
        const std::string in = "a0=" + std::to_string(a0) + " a1=" + std::to_string(a1);
        run.guard("t2 " + in, [&] {
            const KleinData k = klein_ring(a0, a1);
            const MultiplicationMap mm = mult_by_class(*k.ring, HomPoly::linear(k.y));
            run.check(mm.kernel.size() == 1 && proportional(mm.kernel[0], k.z), "kernel of y is not span(z): " + in);
            const Matrix g = t2_quadratic_form(a0, a1);
            run.check(is_zero(g * k.y), "y not in the radical: " + in);
            const Rational A0 = a0, A1 = a1, A2 = A0 * A0 / A1, z = 0;
            const Matrix pattern{{A1, A0, z, z, z}, {A0, A2, A1, z, z}, {z, A1, z, A2, z}, {z, z, A2, z, z}, {z, z, z, z, A0}};
            const Rational s = g(0, 0) / pattern(0, 0);
            run.check(s != 0 && g == s * pattern, "Gram matrix differs from the expected pattern: " + in);
            const SquareClass expected = square_class(-A0 * A1);
            const SquareClass got = t2_det_class(a0, a1);
            run.check(got == expected, "det class " + to_string(got) + " expected " + to_string(expected) + ": " + in);
            for (int c = 0; c < 20; ++c) {
                Matrix b(5, 4);
                for (std::size_t i = 0; i < 5; ++i)
                    for (std::size_t j = 0; j < 4; ++j)
                        b(i, j) = rng.integer(-3, 3);
                std::vector<Vector> cols{k.y};
                for (std::size_t j = 0; j < 4; ++j)
                    cols.push_back(b.column(j));
                if (determinant(Matrix::from_columns(cols, 5)) == 0)
                    continue;
                run.check(t2_det_class(a0, a1, b) == expected, "class depends on the complement " + to_string(b) + ": " + in);
            }
            const Matrix induced = t2_induced_form(a0, a1, t2_default_complement(a0, a1));
            for (int c = 0; c < 20; ++c) {
                const Matrix p = rng.invertible(4);
                const Rational s2 = rng.nonzero_rational();
                run.check(square_class(determinant(s2 * (p.transpose() * induced * p))) == expected,
                          "class changes under basis change " + to_string(p) + " scale " + str(s2) + ": " + in);
            }
        });
    }
}

// ---------------------------------------------------------------- t3

void t3_suite(Run& run, Rng& rng)
{
    int done = 0;
    while (done < 20) {
        const Rational a = rng.nonzero_rational(9, 3), b = rng.nonzero_rational(9, 3), c = rng.nonzero_rational(9, 3);
        if (t3_delta(a, b, c) == 0)
            continue;
        ++done;
        const std::string in = "a=" + str(a) + " b=" + str(b) + " c=" + str(c);
        run.guard("t3 " + in, [&] {
            const UniPoly q = t3_membership_quadratic(a, b, c);
            const UniPoly expected({2 * a * b, (1 - c * c - 2 * a * b) / c, Rational(1)});
            run.check(q == expected, "membership quadratic " + q.to_string() + " expected " + expected.to_string() + ": " + in);
            const QuadricSystem sys = t3_kernel_system(a, b, c);
            const RankOneClassification r = rank_one_elements(sys);
            const std::vector<Vector> squares{{Rational(0), Rational(1), Rational(0)}, {Rational(1), Rational(0), Rational(0)}};
            run.check(r.rational == squares, "rational rank-one members differ from x1^2, x2^2: " + in);
            const UniPoly scaled = (1 / (a * a)) * UniPoly({q.coeff(0), a * q.coeff(1), a * a});
            const bool orbit_ok = r.orbits.size() == 1 && r.orbits[0].minimal_polynomial == scaled &&
                                  r.orbits[0].form[0] == UniPoly::constant(1) && r.orbits[0].form[1] == UniPoly::constant(b / a) &&
                                  r.orbits[0].form[2] == UniPoly::monomial(1, 1);
            run.check(orbit_ok, "non-rational rank-one orbit differs from the membership quadratic: " + in);
            const SquareClass cls = t3_discriminant_class(a, b, c);
            run.check(cls == square_class(t3_delta(a, b, c)), "discriminant class differs from the Delta formula: " + in);
            const NumericCheck num = check_membership_numerically(sys, a, b, q);
            run.check(num.ok, "numeric membership oracle: " + in + " " + num.detail);
            for (int t = 0; t < 20; ++t) {
                const Matrix p = rng.invertible(3);
                std::vector<HomPoly> moved;
                for (const auto& h : sys.quadrics())
                    moved.push_back(h.substitute(p));
                const RankOneClassification m = rank_one_elements(make_quadric_system(3, moved));
                const bool same = m.rational.size() == 2 && m.orbits.size() == 1 && m.orbits[0].minimal_polynomial.degree() == 2 &&
                                  square_class(discriminant_quadratic(m.orbits[0].minimal_polynomial)) == cls;
                run.check(same, "rank-one data changes under substitution " + to_string(p) + ": " + in);
            }
        });
    }
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        run.guard("p(p+2) p=" + std::to_string(p), [&] {
            run.check(t3_discriminant_class(1, p + 2, 1) == square_class(Rational(p * (p + 2))), "class of (1, p+2, 1) is not p(p+2) for p=" + std::to_string(p));
        });
    }
}

using SuiteFn = void (*)(Run&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& suites()
{
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"arith", arith_suite}, {"ring", ring_suite}, {"freeness", freeness_suite},
        {"t1", t1_suite},       {"t2", t2_suite},     {"t3", t3_suite},
    };
    return s;
}

} // namespace

std::vector<FreenessComparison> freeness_comparisons(std::size_t count, std::size_t size, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<FreenessComparison> out;
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::vector<std::int64_t>> a(size, std::vector<std::int64_t>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                a[i][j] = rng.integer(-3, 3);
        if (t % 2 == 1)
            for (std::size_t i = 0; i < size; ++i)
                a[i][i] = rng.integer(0, 1) ? 1 : -1;
        const TorusActionMatrix m(a);
        FreenessComparison c{m.to_string(), is_free(m), true};
        for (int mod = 2; mod <= 12 && c.oracle; ++mod)
            c.oracle = stabilizer_oracle(m, mod);
        out.push_back(std::move(c));
    }
    return out;
}

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suites())
            n.push_back(name);
        return n;
    }();
    return names;
}

bool VerifyReport::ok() const
{
    for (const auto& s : suites)
        if (!s.ok())
            return false;
    return true;
}

std::string VerifyReport::summary() const
{
    std::ostringstream os;
    for (const auto& s : suites) {
        os << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << (s.checks - s.failures) << "/" << s.checks << " checks passed ("
           << s.seconds << " s)\n";
        for (const auto& c : s.counterexamples)
            os << "  counterexample: " << c << "\n";
    }
    return os.str();
}

VerifyReport verify(std::string_view suite, std::uint64_t seed)
{
    bool known = suite == "all";
    for (const auto& [name, fn] : suites())
        known = known || name == suite;
    if (!known)
        throw InvalidInput("unknown suite \"" + std::string(suite) + "\"");
    VerifyReport report;
    std::uint64_t k = 0;
    for (const auto& [name, fn] : suites()) {
        ++k;
        if (suite != "all" && suite != name)
            continue;
        Run run(name);
        Rng rng(seed * 1000003 + k);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(run, rng);
        } catch (const std::exception& e) {
            run.check(false, std::string("suite aborted: ") + e.what());
        }
        report.suites.push_back(run.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()));
    }
    return report;
}

} // namespace biquot
