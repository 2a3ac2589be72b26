#include "biquot/errors.hpp"
#include "biquot/scan.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"
#include "biquot/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace biquot;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

int run_scan(const std::string& family, int radius, const std::string& format, const std::string& out, unsigned threads)
{
    const ScanReport r = scan(parse_family(family), radius, threads);
    const std::string text = format == "csv" ? to_csv(r) : to_json(r);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw InvalidInput("cannot open " + out + " for writing");
        f << text;
    }
    std::cerr << to_string(r.family) << " radius " << radius << ": " << r.rows.size() << " rows, " << r.distinct_count
              << " distinct classes\n";
    return kOk;
}

int run_t1(const std::string& b1s, const std::string& c1s, bool pipeline)
{
    const Integer b1 = parse_integer(b1s), c1 = parse_integer(c1s);
    const T1Invariant closed = t1_invariant(b1, c1);
    const auto [a, b] = t1_parameters(b1, c1);
    std::cout << "a = " << to_string(a) << "\n"
              << "b = " << to_string(b) << "\n"
              << "alpha+beta*i = " << to_string(t1_alpha_beta(a, b)) << "\n"
              << "invariant = " << to_string(closed) << "\n";
    if (pipeline) {
        const T1PipelineResult p = t1_pipeline(b1, c1);
        std::cout << "det cubic = " << p.cubic.to_string() << "\n"
                  << "normal form = " << p.normal_form.cubic.to_string() << "\n"
                  << "inflection lines = " << p.inflection.to_string() << "\n"
                  << "pipeline invariant = " << to_string(p.invariant) << "\n";
        if (p.invariant != closed) {
            std::cerr << "pipeline and closed form disagree\n";
            return kVerifyFailed;
        }
    }
    return kOk;
}

int run_t2(const std::string& a0s, const std::string& a1s)
{
    const Rational a0 = parse_rational(a0s), a1 = parse_rational(a1s);
    std::cout << "gram = " << to_string(t2_quadratic_form(a0, a1)) << "\n"
              << "class = " << to_string(t2_det_class(a0, a1)) << "\n";
    return kOk;
}

int run_t3(const std::string& as, const std::string& bs, const std::string& cs)
{
    const Rational a = parse_rational(as), b = parse_rational(bs), c = parse_rational(cs);
    std::cout << "quadratic = " << t3_membership_quadratic(a, b, c).to_string() << "\n"
              << "delta = " << to_string(t3_delta(a, b, c)) << "\n"
              << "class = " << to_string(t3_discriminant_class(a, b, c)) << "\n";
    return kOk;
}

int run_ring(const std::string& matrix, int max_degree)
{
    const TorusActionMatrix m = TorusActionMatrix::parse(matrix);
    const GradedQuotient r = quotient_ring(m, max_degree > 0 ? std::optional<int>(max_degree) : std::nullopt);
    std::cout << "relations:";
    for (const auto& rel : r.relations())
        std::cout << " " << rel.to_string();
    std::cout << "\ndims:";
    for (int d = 0; d <= r.max_degree(); d += 2)
        std::cout << " " << r.dim(d);
    std::cout << "\ncomplete intersection: " << (is_complete_intersection(r) ? "yes" : "no") << "\n";
    return kOk;
}

int run_free(const std::string& matrix)
{
    const TorusActionMatrix m = TorusActionMatrix::parse(matrix);
    std::cout << (is_free(m) ? "free" : "not free") << "\n";
    return kOk;
}

int run_verify(const std::string& suite, std::uint64_t seed)
{
    const VerifyReport r = verify(suite, seed);
    std::cout << r.summary();
    return r.ok() ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational cohomology invariants of biquotients"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version()));

    std::string family, format = "json", out;
    int radius = 0;
    unsigned threads = 0;
    auto* scan_cmd = app.add_subcommand("scan", "Scan a parameter grid and count distinct invariants");
    scan_cmd->add_option("family", family, "t1, t2 or t3")->required()->check(CLI::IsMember({"t1", "t2", "t3"}));
    scan_cmd->add_option("--radius", radius, "Grid radius")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    scan_cmd->add_option("--out", out, "Output file (default stdout)");
    scan_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

    auto* inv = app.add_subcommand("invariant", "Compute one invariant");
    inv->require_subcommand(1);
    std::string b1, c1, a0, a1, ta, tb, tc;
    bool pipeline = false;
    auto* inv1 = inv->add_subcommand("t1", "Nodal-cubic invariant of the 6-dimensional family");
    inv1->add_option("--b1", b1)->required();
    inv1->add_option("--c1", c1)->required();
    inv1->add_flag("--pipeline", pipeline, "Also run the full ring-to-cubic pipeline");
    auto* inv2 = inv->add_subcommand("t2", "Quadratic-form determinant class");
    inv2->add_option("--a0", a0)->required();
    inv2->add_option("--a1", a1)->required();
    auto* inv3 = inv->add_subcommand("t3", "Rank-one discriminant class");
    inv3->add_option("--a", ta)->required();
    inv3->add_option("--b", tb)->required();
    inv3->add_option("--c", tc)->required();

    std::string matrix;
    int max_degree = 0;
    auto* ring = app.add_subcommand("ring", "Quotient ring of a torus action");
    ring->add_option("--matrix", matrix, "Rows separated by ';', entries by ','")->required();
    ring->add_option("--max-degree", max_degree, "Highest degree computed");
    auto* free_cmd = app.add_subcommand("free", "Freeness of a torus action");
    free_cmd->add_option("--matrix", matrix)->required();

    std::string suite = "all";
    std::uint64_t seed = 20240611;
    auto* ver = app.add_subcommand("verify", "Run property and oracle suites");
    ver->add_option("--suite", suite, "arith, ring, freeness, t1, t2, t3 or all");
    ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*scan_cmd)
            return run_scan(family, radius, format, out, threads);
        if (*inv1)
            return run_t1(b1, c1, pipeline);
        if (*inv2)
            return run_t2(a0, a1);
        if (*inv3)
            return run_t3(ta, tb, tc);
        if (*ring)
            return run_ring(matrix, max_degree);
        if (*free_cmd)
            return run_free(matrix);
        if (*ver)
            return run_verify(suite, seed);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kInvalid;
}
