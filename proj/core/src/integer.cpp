#include "biquot/integer.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace biquot {
namespace {

constexpr unsigned long kTrialBound = 1000000;

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialBound + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p <= kTrialBound; ++p) {
            if (composite[p])
                continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= kTrialBound; q += p)
                composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho. n is odd, composite and has no factor below kTrialBound.
Integer pollard_rho(const Integer& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, g = 1, q = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = abs(x - y);
                    q = q * d;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_large(const Integer& n, std::map<Integer, int>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_large(d, out);
    factor_large(Integer(n / d), out);
}

} // namespace

Integer Factorization::product() const
{
    Integer result = sign;
    for (const auto& [p, e] : exponents) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        result *= pe;
    }
    return result;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Factorization factor(const Integer& n)
{
    if (n == 0)
        throw InvalidInput("factor: zero has no factorization");
    Factorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Integer rest = abs(n);
    for (unsigned long p : small_primes()) {
        if (rest == 1)
            break;
        if (Integer(p) * p > rest)
            break;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0)
            result.exponents[Integer(p)] = e;
    }
    if (rest > 1)
        factor_large(rest, result.exponents);
    return result;
}

std::vector<Integer> positive_divisors(const Integer& n)
{
    std::vector<Integer> divisors{1};
    for (const auto& [p, e] : factor(n).exponents) {
        const std::size_t existing = divisors.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < existing; ++i)
                divisors.push_back(divisors[i] * pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s.empty())
        throw InvalidInput("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() || !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw InvalidInput("malformed integer '" + std::string(text) + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

} // namespace biquot
