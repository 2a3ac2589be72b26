#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace biquot {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples; // exact inputs of failed checks
    double seconds = 0;
    bool ok() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
    std::string summary() const;
};

// arith, ring, freeness, t1, t2, t3
const std::vector<std::string>& verify_suite_names();

// suite is one of verify_suite_names() or "all"; throws InvalidInput otherwise.
VerifyReport verify(std::string_view suite, std::uint64_t seed = 20240611);

struct FreenessComparison {
    std::string matrix;
    bool free = false;   // is_free
    bool oracle = false; // no stabilizer found for any m in [2, 12]
};

// Random matrices with entries in [-3, 3]; every second one has its diagonal
// entries forced to +-1.
std::vector<FreenessComparison> freeness_comparisons(std::size_t count, std::size_t size, std::uint64_t seed);

} // namespace biquot
