#pragma once

#include "biquot/integer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace biquot {

enum class Family { t1, t2, t3 };

std::string to_string(Family f);
Family parse_family(std::string_view text);

struct ScanRow {
    std::vector<Integer> parameters;
    std::string invariant; // canonical string; empty for degenerate rows
    bool degenerate = false;
};

struct ScanReport {
    Family family = Family::t1;
    int radius = 0;
    std::vector<ScanRow> rows;      // sorted by parameters
    std::size_t distinct_count = 0; // distinct invariants among non-degenerate rows
    std::string tool_version;
};

// t1: (b1, c1) != (0, 0); t2: (a0, a1) both nonzero; t3: (a, b, c) all nonzero,
// rows with zero discriminant flagged degenerate. All coordinates in [-radius, radius].
// threads = 0 uses the hardware concurrency.
ScanReport scan(Family family, int radius, unsigned threads = 0);

std::string to_json(const ScanReport& r);
std::string to_csv(const ScanReport& r);
ScanReport parse_report_json(std::string_view text);

// Parses an invariant string of the family's kind and prints it back.
std::string canonical_invariant(Family family, std::string_view text);

const char* tool_version();

} // namespace biquot
