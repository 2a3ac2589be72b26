#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace biquot {

using Integer = mpz_class;

struct Factorization {
    int sign = 1;
    std::map<Integer, int> exponents;

    Integer product() const;
};

bool is_prime(const Integer& n);

// Trial division by primes below 10^6, then Pollard rho (Brent) on the cofactor.
Factorization factor(const Integer& n);

std::vector<Integer> positive_divisors(const Integer& n);

Integer parse_integer(std::string_view text);

} // namespace biquot
