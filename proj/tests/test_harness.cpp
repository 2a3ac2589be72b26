#include "biquot/classes.hpp"
#include "biquot/errors.hpp"
#include "biquot/scan.hpp"
#include "biquot/t1.hpp"
#include "biquot/t3.hpp"
#include "biquot/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <map>
#include <set>

using namespace biquot;

namespace {

nlohmann::json goldens()
{
    std::ifstream f(BIQUOT_GOLDEN_DIR "/scan_counts.json");
    REQUIRE(f);
    return nlohmann::json::parse(f);
}

const ScanRow* find_row(const ScanReport& r, std::vector<long> params)
{
    for (const auto& row : r.rows) {
        bool same = row.parameters.size() == params.size();
        for (std::size_t i = 0; same && i < params.size(); ++i)
            same = row.parameters[i] == params[i];
        if (same)
            return &row;
    }
    return nullptr;
}

} // namespace

TEST_CASE("families parse")
{
    CHECK(parse_family("t2") == Family::t2);
    CHECK(to_string(Family::t3) == "t3");
    CHECK_THROWS_AS(parse_family("t4"), InvalidInput);
    CHECK_THROWS_AS(scan(Family::t1, 0), InvalidInput);
}

TEST_CASE("scan t1")
{
    const ScanReport r1 = scan(Family::t1, 1);
    CHECK(r1.rows.size() == 8);
    CHECK(r1.distinct_count >= 1);

    const ScanReport r = scan(Family::t1, 10);
    CHECK(r.rows.size() == 21 * 21 - 1);
    const ScanRow* row = find_row(r, {6, 8});
    REQUIRE(row);
    CHECK(row->invariant == "5:1|5:2");
    CHECK(std::is_sorted(r.rows.begin(), r.rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.parameters < b.parameters; }));
    std::set<std::string> seen;
    for (const auto& x : r.rows) {
        seen.insert(x.invariant);
        CHECK(canonical_invariant(Family::t1, x.invariant) == x.invariant);
    }
    CHECK(seen.size() == r.distinct_count);
}

TEST_CASE("scan t2")
{
    const ScanReport r = scan(Family::t2, 10);
    std::set<std::string> seen;
    for (const auto& x : r.rows)
        seen.insert(x.invariant);
    for (const char* p : {"-2", "-3", "-5", "-7"})
        CHECK(seen.count(p) == 1);
    for (long a0 = -10; a0 <= 10; ++a0)
        for (long k = 2; a0 != 0 && a0 * k * k <= 10 && a0 * k * k >= -10; ++k)
            CHECK(find_row(r, {a0, 3})->invariant == find_row(r, {a0 * k * k, 3})->invariant);
}

TEST_CASE("scan t3")
{
    const ScanReport r = scan(Family::t3, 6);
    for (long p : {3L}) {
        const ScanRow* row = find_row(r, {1, p + 2, 1});
        REQUIRE(row);
        CHECK(row->invariant == to_string(square_class(Rational(p * (p + 2)))));
    }
    std::size_t degenerate = 0;
    for (const auto& x : r.rows) {
        const Integer &a = x.parameters[0], &b = x.parameters[1], &c = x.parameters[2];
        const Integer lhs = (2 * a * b - c * c - 1) * (2 * a * b - c * c - 1);
        CHECK(x.degenerate == (lhs == 4 * c * c));
        if (x.degenerate) {
            ++degenerate;
            CHECK(x.invariant.empty());
        } else {
            CHECK(canonical_invariant(Family::t3, x.invariant) == x.invariant);
        }
    }
    CHECK(degenerate > 0);
}

TEST_CASE("frozen distinct counts")
{
    const nlohmann::json g = goldens();
    for (const auto& [family, radii] : g.items()) {
        std::map<int, std::size_t> frozen;
        for (const auto& [radius, count] : radii.items())
            frozen[std::stoi(radius)] = count.get<std::size_t>();
        std::size_t previous = 0;
        for (const auto& [radius, count] : frozen) {
            const ScanReport r = scan(parse_family(family), radius);
            CHECK_MESSAGE(r.distinct_count == count, family << " radius " << radius);
            CHECK(r.distinct_count >= previous);
            previous = r.distinct_count;
        }
    }
}

TEST_CASE("reports are deterministic")
{
    for (Family f : {Family::t1, Family::t2, Family::t3}) {
        const ScanReport serial = scan(f, 4, 1);
        const ScanReport parallel = scan(f, 4, 4);
        CHECK(to_json(serial) == to_json(parallel));
        CHECK(to_csv(serial) == to_csv(parallel));
        CHECK(to_json(parse_report_json(to_json(serial))) == to_json(serial));
    }
    const ScanReport r = scan(Family::t3, 2);
    const nlohmann::json j = nlohmann::json::parse(to_json(r));
    CHECK(j["family"] == "t3");
    CHECK(j["searchRadius"] == 2);
    CHECK(j["distinctCount"] == r.distinct_count);
    CHECK(j["toolVersion"] == tool_version());
    CHECK(j["rows"].size() + j["degenerate"].size() == r.rows.size());
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("a,b,c,invariant,status\n", 0) == 0);
    CHECK_THROWS_AS(parse_report_json("{\"family\":\"t1\"}"), InvalidInput);
    CHECK_THROWS_AS(canonical_invariant(Family::t2, "12"), InvalidInput);
}

TEST_CASE("verification suites")
{
    CHECK(verify_suite_names() == std::vector<std::string>{"arith", "ring", "freeness", "t1", "t2", "t3"});
    CHECK_THROWS_AS(verify("nope"), InvalidInput);
    const VerifyReport f = verify("freeness");
    REQUIRE(f.suites.size() == 1);
    CHECK(f.suites[0].checks >= 200);
    CHECK(f.ok());
    const VerifyReport t = verify("t1", 5);
    CHECK(t.ok());
    CHECK(t.summary().find("t1") != std::string::npos);
}
