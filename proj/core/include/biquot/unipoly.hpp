#pragma once

#include "biquot/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace biquot {

// Dense univariate polynomial over Q, coefficients from the constant term up.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    // Formatted in the variable `var`, highest degree first.
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b); // monic, or zero

Rational discriminant_quadratic(const UniPoly& p);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

// Cofactor expansion; meant for small matrices.
UniPoly determinant(const std::vector<std::vector<UniPoly>>& m);

// Res_y(sum_k f[k] y^k, sum_k g[k] y^k) for coefficients in Q[z], using the
// actual y-degrees. Zero if either polynomial is zero.
UniPoly resultant(std::vector<UniPoly> f, std::vector<UniPoly> g);

struct PolyFactor {
    UniPoly factor; // monic, irreducible over Q
    int multiplicity;
};

// Complete for polynomials whose factors after removing rational roots have degree <= 4.
std::vector<PolyFactor> factor_over_Q(const UniPoly& p);

// Q[t]/(modulus) with an irreducible modulus; elements are reduced polynomials.
class NumberField {
public:
    explicit NumberField(UniPoly modulus);

    const UniPoly& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    UniPoly reduce(const UniPoly& a) const { return a % modulus_; }
    UniPoly add(const UniPoly& a, const UniPoly& b) const { return a + b; }
    UniPoly sub(const UniPoly& a, const UniPoly& b) const { return a - b; }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return (a * b) % modulus_; }
    UniPoly inverse(const UniPoly& a) const;

private:
    UniPoly modulus_;
};

// Polynomials in one variable with coefficients in a NumberField, low degree first.
using FieldPoly = std::vector<UniPoly>;

FieldPoly trim(const NumberField& k, FieldPoly p);
FieldPoly gcd(const NumberField& k, FieldPoly a, FieldPoly b); // monic or empty

} // namespace biquot
