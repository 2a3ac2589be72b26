#pragma once

#include "biquot/integer.hpp"
#include "biquot/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biquot {

struct GaussianInteger {
    Integer re;
    Integer im;

    bool is_zero() const { return re == 0 && im == 0; }
    Integer norm() const { return re * re + im * im; }
    GaussianInteger conj() const { return {re, -im}; }

    friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) { return a.re == b.re && a.im == b.im; }
};

GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b);
GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b);

// Exact quotient a / b when b divides a in Z[i].
bool try_divide(const GaussianInteger& a, const GaussianInteger& b, GaussianInteger& quotient);

GaussianInteger unit_power(int k); // i^k

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(const GaussianInteger& z) : re(z.re), im(z.im) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
GaussianRational pow(const GaussianRational& z, unsigned e);

// z = w / d with w in Z[i] and d > 0 minimal.
std::pair<GaussianInteger, Integer> clear_denominator(const GaussianRational& z);

// "a+bi" with rational parts, e.g. "12+16i", "-3/2-i", "7", "2i".
std::string to_string(const GaussianRational& z);
GaussianRational parse_gaussian(std::string_view text);

// Canonical Gaussian prime over p = 1 (mod 4): a+bi with a > b > 0, a^2 + b^2 = p.
GaussianInteger split_prime(const Integer& p);

struct GaussianPrimeFactorization {
    int unit = 0; // the unit is i^unit
    // Canonical primes: 1+i, inert p, a+bi and its conjugate a-bi (a > b > 0).
    std::vector<std::pair<GaussianInteger, int>> factors;

    GaussianInteger product() const;
};

GaussianPrimeFactorization gaussian_factor(const GaussianInteger& z);

// Order of z at the Gaussian prime pi (exact repeated division).
int gaussian_order(GaussianInteger z, const GaussianInteger& pi);

} // namespace biquot
