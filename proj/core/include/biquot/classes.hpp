#pragma once

#include "biquot/gaussian.hpp"
#include "biquot/integer.hpp"
#include "biquot/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace biquot {

// Element of Q*/(Q*)^2: sign times the product of primes with odd exponent.
struct SquareClass {
    int sign = 1;
    std::vector<Integer> primes; // strictly increasing

    bool is_trivial() const { return sign == 1 && primes.empty(); }
    Integer representative() const;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

SquareClass square_class(const Rational& q);

SquareClass operator*(const SquareClass& a, const SquareClass& b);

// Signed squarefree integer, e.g. "-15", "1".
std::string to_string(const SquareClass& c);
SquareClass parse_square_class(std::string_view text);

// Element of (K*/3)/(Q*/3) for K = Q(i), coordinatized by
// (ord_pi(z) - ord_conj(pi)(z)) mod 3 over split primes p with canonical pi.
struct CubeClassModQ {
    std::map<Integer, int> residues; // p -> 1 or 2; zero residues omitted

    bool is_trivial() const { return residues.empty(); }

    friend bool operator==(const CubeClassModQ&, const CubeClassModQ&) = default;
};

CubeClassModQ cube_class_mod_Q(const GaussianRational& z);

CubeClassModQ conjugate_class(const CubeClassModQ& c);

// Pointwise sum mod 3.
CubeClassModQ operator*(const CubeClassModQ& a, const CubeClassModQ& b);

// Sorted "p:r" pairs joined by commas; the trivial class prints as "1".
std::string to_string(const CubeClassModQ& c);
CubeClassModQ parse_cube_class(std::string_view text);

} // namespace biquot
