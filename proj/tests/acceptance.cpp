#include "biquot/biquotient.hpp"
#include "biquot/classes.hpp"
#include "biquot/cubic.hpp"
#include "biquot/numeric.hpp"
#include "biquot/rank_one.hpp"
#include "biquot/scan.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"
#include "biquot/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace biquot;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    Rational rational() { return make_rational(integer(-20, 20), integer(1, 9)); }
    Rational nonzero()
    {
        Rational r = 0;
        while (r == 0)
            r = rational();
        return r;
    }

private:
    std::mt19937_64 gen_;
};

void expect(Outcome& o, bool cond, const std::string& what)
{
    if (!cond && o.pass) {
        o.pass = false;
        o.note = what;
    }
}

TernaryCubic family(const Rational& alpha, const Rational& beta)
{
    HomPoly::Terms t{{{1, 2, 0}, Rational(-1)}, {{1, 0, 2}, Rational(-1)}};
    if (alpha != 0)
        t[{0, 2, 1}] = alpha;
    if (beta != 0)
        t[{0, 1, 2}] = beta;
    return TernaryCubic(HomPoly(3, t));
}

Matrix random_invertible(Rng& rng, std::size_t n)
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

Outcome determinant_cubic()
{
    Outcome o;
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        const Rational a = rng.rational(), b = rng.rational();
        const TernaryCubic f = det_cubic(t1_net(a, b));
        const TernaryCubic expected(HomPoly(3, {{{1, 2, 0}, Rational(-1)},
                                                {{1, 0, 2}, Rational(-1)}}) +
                                    HomPoly(3, {{{0, 2, 1}, 4 * (a * a - b * b)}}) + HomPoly(3, {{{0, 1, 2}, 8 * a * b}}));
        expect(o, f == expected, "a=" + to_string(a) + " b=" + to_string(b));
    }
    return o;
}

Outcome inflection()
{
    Outcome o;
    Rng rng(103);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        Rational a = rng.rational(), b = rng.rational();
        if (a == 0 && b == 0)
            b = 1;
        const GaussianRational ab = t1_alpha_beta(a, b);
        const TernaryCubic f = family(ab.re, ab.im);
        const BinaryCubic lines = inflection_lines(f);
        const BinaryCubic expected{{ab.im, -3 * ab.re, -3 * ab.im, ab.re}};
        expect(o, lines == expected, "exact a=" + to_string(a) + " b=" + to_string(b));
        const NumericCheck n = check_inflection_lines_numerically(f, lines, 1e-9);
        worst = std::max(worst, n.max_residual);
        expect(o, n.ok && n.max_residual < 1e-9, "numeric a=" + to_string(a) + " b=" + to_string(b) + ": " + n.detail);
    }
    std::ostringstream os;
    os << "max residual " << worst;
    if (o.pass)
        o.note = os.str();
    return o;
}

Outcome rotation()
{
    Outcome o;
    Rng rng(107);
    for (int t = 0; t < 50; ++t) {
        const Rational alpha = rng.rational(), beta = rng.rational();
        Rational c = rng.rational(), d = rng.rational();
        if (c == 0 && d == 0)
            c = 1;
        const GaussianRational got = alpha_beta(rotate_cubic(harmonic_cubic(alpha, beta), c, d));
        const GaussianRational want = GaussianRational(alpha, beta) * pow(GaussianRational(c, d), 3);
        expect(o, got == want, "alpha=" + to_string(alpha) + " beta=" + to_string(beta));
    }
    return o;
}

Outcome freeness()
{
    Outcome o;
    std::size_t n = 0;
    for (std::size_t size : {3u, 4u})
        for (const auto& c : freeness_comparisons(100, size, 20240611 + size - 3)) {
            ++n;
            expect(o, c.free == c.oracle, "matrix " + c.matrix);
        }
    for (int b1 = -10; b1 <= 10; ++b1)
        for (int c1 = -10; c1 <= 10; ++c1)
            expect(o, is_free(t1_action(b1, c1)), "family member");
    Rng rng(109);
    for (int t = 0; t < 200; ++t) {
        const std::size_t k = 2 + t % 5;
        std::vector<std::vector<std::int64_t>> a(k, std::vector<std::int64_t>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            a[i][i] = rng.integer(0, 1) ? 1 : -1;
            for (std::size_t j = 0; j < i; ++j)
                a[i][j] = rng.integer(-9, 9);
        }
        expect(o, is_free(TorusActionMatrix(a)), "lower triangular");
    }
    if (o.pass)
        o.note = std::to_string(n) + " random matrices agree";
    return o;
}

Outcome t1_family()
{
    Outcome o;
    const std::size_t c5 = scan(Family::t1, 5).distinct_count;
    const std::size_t c10 = scan(Family::t1, 10).distinct_count;
    const std::size_t c20 = scan(Family::t1, 20).distinct_count;
    expect(o, c5 < c10 && c10 < c20, "counts do not grow");
    expect(o, c20 >= 25, "fewer than 25 classes at radius 20");
    for (long p : {5L, 13L, 17L}) {
        const auto [b1, c1] = t1_realize_class(GaussianRational(split_prime(Integer(p))));
        const T1Invariant inv = t1_invariant(b1, c1);
        expect(o, inv.first.residues.count(Integer(p)) == 1 && inv.second.residues.count(Integer(p)) == 1,
               "no residue at " + std::to_string(p));
        // independent check by factoring alpha + beta i
        const auto [a, b] = t1_parameters(b1, c1);
        const GaussianRational ab = t1_alpha_beta(a, b);
        const GaussianInteger z{ab.re.get_num(), ab.im.get_num()};
        const GaussianInteger pi = split_prime(Integer(p));
        expect(o, ab.re.get_den() == 1 && ab.im.get_den() == 1 && (gaussian_order(z, pi) - gaussian_order(z, pi.conj())) % 3 != 0,
               "factorization check at " + std::to_string(p));
    }
    if (o.pass)
        o.note = "distinct " + std::to_string(c5) + " < " + std::to_string(c10) + " < " + std::to_string(c20);
    return o;
}

Outcome t2_family()
{
    Outcome o;
    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        long i0 = 0, i1 = 0;
        while (i0 == 0)
            i0 = rng.integer(-30, 30);
        while (i1 == 0)
            i1 = rng.integer(-30, 30);
        const Rational a0 = i0, a1 = i1, a2 = a0 * a0 / a1;
        const std::string tag = "a0=" + std::to_string(i0) + " a1=" + std::to_string(i1);
        const KleinData k = klein_ring(a0, a1);

        const MultiplicationMap m = mult_by_class(*k.ring, HomPoly::linear(k.y));
        bool spanned = m.kernel.size() == 1;
        if (spanned) {
            const Rational r = m.kernel[0][0] / k.z[0];
            for (std::size_t i = 0; i < 5; ++i)
                spanned = spanned && m.kernel[0][i] == r * k.z[i];
        }
        expect(o, spanned, "kernel " + tag);

        const Matrix pattern{{a1, a0, 0, 0, 0}, {a0, a2, a1, 0, 0}, {0, a1, 0, a2, 0}, {0, 0, a2, 0, 0}, {0, 0, 0, 0, a0}};
        expect(o, 3 * t2_quadratic_form(a0, a1) == pattern, "gram " + tag);

        const SquareClass want = square_class(-a0 * a1);
        expect(o, t2_det_class(a0, a1) == want, "class " + tag);

        int complements = 0;
        while (complements < 20) {
            Matrix b(5, 4);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    b(i, j) = rng.integer(-3, 3);
            Matrix full(5, 5);
            for (std::size_t i = 0; i < 5; ++i) {
                full(i, 0) = k.y[i];
                for (std::size_t j = 0; j < 4; ++j)
                    full(i, j + 1) = b(i, j);
            }
            if (determinant(full) == 0)
                continue;
            ++complements;
            expect(o, t2_det_class(a0, a1, b) == want, "complement " + tag);
        }
        const Matrix base = t2_default_complement(a0, a1);
        for (int s = 0; s < 20; ++s) {
            const Matrix p = random_invertible(rng, 4);
            expect(o, t2_det_class(a0, a1, base * p) == want, "basis change " + tag);
        }
        expect(o, kernel_of_square_map(*k.ring).dimension() == 15 - k.ring->dim(4) && k.ring->dim(4) == 5, "surjectivity " + tag);
    }
    return o;
}

Outcome t3_family()
{
    Outcome o;
    Rng rng(127);
    int checked = 0;
    while (checked < 20) {
        const Rational a = rng.nonzero(), b = rng.nonzero(), c = rng.nonzero();
        const Rational x = (2 * a * b - c * c - 1) / (2 * c);
        const Rational delta = 4 * (x * x - 1);
        if (delta == 0)
            continue;
        ++checked;
        const std::string tag = "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
        const UniPoly q = t3_membership_quadratic(a, b, c);
        expect(o, q == UniPoly({2 * a * b, (-c * c - 2 * a * b + 1) / c, Rational(1)}), "quadratic " + tag);

        const RankOneClassification r = rank_one_elements(t3_kernel_system(a, b, c));
        const std::vector<Vector> squares{{Rational(0), Rational(1), Rational(0)}, {Rational(1), Rational(0), Rational(0)}};
        const auto roots = rational_roots(q);
        if (roots.empty()) {
            expect(o, r.rational == squares, "rational squares " + tag);
            // orbit forms are normalized to (1, b/a, theta), so t = a theta
            const UniPoly scaled({q.coeff(0) / (a * a), q.coeff(1) / a, Rational(1)});
            const UniPoly theta = UniPoly::monomial(1, 1);
            expect(o, r.orbits.size() == 1 && r.orbits[0].minimal_polynomial == scaled, "orbit " + tag);
            expect(o, r.orbits.size() == 1 && r.orbits[0].form[0] == UniPoly::constant(1) &&
                          r.orbits[0].form[1] == UniPoly::constant(b / a) && r.orbits[0].form[2] == theta,
                   "orbit form " + tag);
        } else {
            std::vector<Vector> all = squares;
            for (const Rational& t : roots)
                all.push_back({Rational(1), b / a, t / a});
            std::sort(all.begin(), all.end());
            expect(o, r.rational == all && r.orbits.empty(), "split case " + tag);
        }
        expect(o, t3_discriminant_class(a, b, c) == square_class(delta), "class " + tag);
    }
    const ScanReport s = scan(Family::t3, 12);
    std::set<std::string> classes;
    for (const auto& row : s.rows)
        if (!row.degenerate)
            classes.insert(row.invariant);
    expect(o, s.distinct_count >= 10, "fewer than 10 classes at radius 12");
    for (long p : {3L, 5L, 7L})
        expect(o, classes.count(to_string(square_class(Rational(p * (p + 2))))) == 1, "missing class for p=" + std::to_string(p));
    if (o.pass)
        o.note = std::to_string(s.distinct_count) + " classes at radius 12";
    return o;
}

Outcome ring_structure()
{
    Outcome o;
    Rng rng(131);
    const std::vector<std::size_t> dims1{1, 3, 3, 1, 0}, dims3{1, 4, 6, 4, 1, 0};
    for (int t = 0; t < 20; ++t) {
        const long b1 = rng.integer(-50, 50), c1 = rng.integer(-50, 50);
        const GradedQuotient r = quotient_ring(t1_action(b1, c1), 8);
        expect(o, is_complete_intersection(r), "t1 ring");
        for (int d = 0; d <= 8; d += 2)
            expect(o, r.dim(d) == dims1[d / 2], "t1 dims");
    }
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<std::int64_t>> a(4, std::vector<std::int64_t>(4, 0));
        for (std::size_t i = 0; i < 4; ++i) {
            a[i][i] = 1;
            for (std::size_t j = 0; j < i; ++j)
                a[i][j] = rng.integer(-6, 6);
        }
        if (t == 0)
            a = t3_action().rows();
        const GradedQuotient r = quotient_ring(TorusActionMatrix(a), 10);
        expect(o, is_complete_intersection(r), "t3 ring");
        for (int d = 0; d <= 10; d += 2)
            expect(o, r.dim(d) == dims3[d / 2], "t3 dims");
    }
    return o;
}

Outcome full_suite()
{
    Outcome o;
    const VerifyReport r = verify("all");
    std::size_t checks = 0, failures = 0;
    for (const auto& s : r.suites) {
        checks += s.checks;
        failures += s.failures;
    }
    expect(o, r.ok(), std::to_string(failures) + " failures");
    if (o.pass)
        o.note = std::to_string(checks) + " checks";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"determinant cubic formula", 1, determinant_cubic},
        {"inflection cubic exact and numeric", 10, inflection},
        {"rotation law", 10, rotation},
        {"freeness against stabilizer oracle", 30, freeness},
        {"t1 separation and realization", 60, t1_family},
        {"t2 pipeline", 10, t2_family},
        {"t3 pipeline", 60, t3_family},
        {"complete intersection rings", 30, ring_structure},
        {"full verification suite", 300, full_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criteria[i].budget) {
            o.pass = false;
            o.note = "over time budget";
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %zu %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                    o.note.empty() ? "" : ": ", o.note.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
