#include "biquot/scan.hpp"

#include "biquot/errors.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#ifndef BIQUOT_VERSION
#define BIQUOT_VERSION "0.0.0"
#endif

namespace biquot {

const char* tool_version()
{
    return BIQUOT_VERSION;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::t1: return "t1";
    case Family::t2: return "t2";
    case Family::t3: return "t3";
    }
    return "?";
}

Family parse_family(std::string_view text)
{
    if (text == "t1")
        return Family::t1;
    if (text == "t2")
        return Family::t2;
    if (text == "t3")
        return Family::t3;
    throw InvalidInput("unknown family \"" + std::string(text) + "\" (expected t1, t2 or t3)");
}

namespace {

std::vector<std::vector<Integer>> grid(Family family, int radius)
{
    std::vector<std::vector<Integer>> out;
    const int dims = family == Family::t3 ? 3 : 2;
    std::vector<int> v(dims, -radius);
    while (true) {
        bool keep = true;
        if (family == Family::t1)
            keep = v[0] != 0 || v[1] != 0;
        else
            keep = std::none_of(v.begin(), v.end(), [](int x) { return x == 0; });
        if (keep)
            out.emplace_back(v.begin(), v.end());
        int k = dims - 1;
        while (k >= 0 && v[k] == radius)
            v[k--] = -radius;
        if (k < 0)
            break;
        ++v[k];
    }
    return out;
}

ScanRow compute(Family family, const std::vector<Integer>& p)
{
    ScanRow row{p, {}, false};
    switch (family) {
    case Family::t1:
        row.invariant = to_string(t1_invariant(p[0], p[1]));
        break;
    case Family::t2:
        row.invariant = to_string(t2_det_class(Rational(p[0]), Rational(p[1])));
        break;
    case Family::t3:
        try {
            row.invariant = to_string(t3_discriminant_class(Rational(p[0]), Rational(p[1]), Rational(p[2])));
        } catch (const DegenerateInput&) {
            row.degenerate = true;
        }
        break;
    }
    return row;
}

const char* const kParamNames[3][3] = {{"b1", "c1", nullptr}, {"a0", "a1", nullptr}, {"a", "b", "c"}};

} // namespace

ScanReport scan(Family family, int radius, unsigned threads)
{
    if (radius < 1)
        throw InvalidInput("scan: radius must be at least 1");
    const auto params = grid(family, radius);
    std::vector<ScanRow> rows(params.size());
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(params.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < params.size();) {
            try {
                rows[i] = compute(family, params[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    ScanReport r;
    r.family = family;
    r.radius = radius;
    r.rows = std::move(rows);
    r.tool_version = tool_version();
    std::set<std::string> distinct;
    for (const auto& row : r.rows)
        if (!row.degenerate)
            distinct.insert(row.invariant);
    r.distinct_count = distinct.size();
    return r;
}

std::string to_json(const ScanReport& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["family"] = to_string(r.family);
    j["searchRadius"] = r.radius;
    j["toolVersion"] = r.tool_version;
    j["distinctCount"] = r.distinct_count;
    ordered_json rows = ordered_json::array();
    ordered_json degenerate = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json p = ordered_json::array();
        for (const auto& x : row.parameters)
            p.push_back(x.get_si());
        if (row.degenerate) {
            degenerate.push_back(p);
        } else {
            ordered_json e;
            e["parameters"] = p;
            e["invariant"] = row.invariant;
            rows.push_back(e);
        }
    }
    j["rows"] = rows;
    j["degenerate"] = degenerate;
    return j.dump(1) + "\n";
}

std::string to_csv(const ScanReport& r)
{
    std::ostringstream os;
    const auto& names = kParamNames[static_cast<int>(r.family)];
    const std::size_t dims = r.family == Family::t3 ? 3 : 2;
    for (std::size_t k = 0; k < dims; ++k)
        os << names[k] << ',';
    os << "invariant,status\n";
    for (const auto& row : r.rows) {
        for (const auto& x : row.parameters)
            os << x.get_str() << ',';
        os << row.invariant << ',' << (row.degenerate ? "degenerate" : "ok") << '\n';
    }
    return os.str();
}

ScanReport parse_report_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("report: ") + e.what());
    }
    try {
        ScanReport r;
        r.family = parse_family(j.at("family").get<std::string>());
        r.radius = j.at("searchRadius").get<int>();
        r.tool_version = j.at("toolVersion").get<std::string>();
        r.distinct_count = j.at("distinctCount").get<std::size_t>();
        for (const auto& e : j.at("rows")) {
            ScanRow row;
            for (const auto& x : e.at("parameters"))
                row.parameters.emplace_back(x.get<long>());
            row.invariant = canonical_invariant(r.family, e.at("invariant").get<std::string>());
            r.rows.push_back(std::move(row));
        }
        for (const auto& e : j.at("degenerate")) {
            ScanRow row;
            row.degenerate = true;
            for (const auto& x : e)
                row.parameters.emplace_back(x.get<long>());
            r.rows.push_back(std::move(row));
        }
        std::sort(r.rows.begin(), r.rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.parameters < b.parameters; });
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("report: ") + e.what());
    }
}

std::string canonical_invariant(Family family, std::string_view text)
{
    if (family == Family::t1)
        return to_string(parse_t1_invariant(text));
    return to_string(parse_square_class(text));
}

} // namespace biquot
