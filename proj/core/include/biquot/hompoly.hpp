#pragma once

#include "biquot/linalg.hpp"
#include "biquot/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace biquot {

using Exponents = std::vector<int>;

// All monomials in `variables` variables with the given exponent sum, in
// descending lexicographic order (x1^d first).
std::vector<Exponents> monomials(std::size_t variables, int exponent_sum);

// Homogeneous polynomial over Q in generators of cohomological degree 2.
// Terms are kept in descending lexicographic order; zero coefficients are never stored.
class HomPoly {
public:
    using Terms = std::map<Exponents, Rational, std::greater<>>;

    HomPoly() = default;
    explicit HomPoly(std::size_t variables) : variables_(variables) {}
    HomPoly(std::size_t variables, Terms terms);

    static HomPoly variable(std::size_t variables, std::size_t index); // index from 0
    static HomPoly constant(std::size_t variables, const Rational& c);
    // sum_i coeffs[i] * x_i
    static HomPoly linear(const Vector& coeffs);

    std::size_t variable_count() const { return variables_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    // Exponent sum; -1 for the zero polynomial.
    int exponent_sum() const;
    // 2 * exponent sum.
    int degree() const { return is_zero() ? -1 : 2 * exponent_sum(); }
    Rational coefficient(const Exponents& e) const;

    // Coefficients of a linear form (exponent sum 1).
    Vector linear_coefficients() const;

    HomPoly operator-() const;
    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const Rational& c, const HomPoly& a);
    friend bool operator==(const HomPoly&, const HomPoly&) = default;

    // x_i -> sum_j rows[i][j] x_j
    HomPoly substitute(const Matrix& substitution) const;
    Rational evaluate(const Vector& point) const;
    HomPoly derivative(std::size_t var) const;

    // Grammar: terms "c*x1^2*x3" joined by '+'/'-'; c may be "p/q"; names are
    // x<index_base>, x<index_base+1>, ...
    std::string to_string(int index_base = 1) const;
    std::string to_string(const std::vector<std::string>& names) const;
    static HomPoly parse(std::string_view text, std::size_t variables, int index_base = 1);

private:
    void check_homogeneous() const;
    std::size_t variables_ = 0;
    Terms terms_;
};

} // namespace biquot
