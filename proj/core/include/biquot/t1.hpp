#pragma once

#include "biquot/biquotient.hpp"
#include "biquot/classes.hpp"
#include "biquot/cubic.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace biquot {

// Unordered pair {cls(alpha + beta i), cls(beta + alpha i)}, stored sorted by
// serialization.
struct T1Invariant {
    CubeClassModQ first;
    CubeClassModQ second;
    friend bool operator==(const T1Invariant&, const T1Invariant&) = default;
};

T1Invariant make_t1_invariant(const GaussianRational& alpha_beta);
// "s1|s2" with s1 <= s2, each a CubeClassModQ serialization.
std::string to_string(const T1Invariant& t);
T1Invariant parse_t1_invariant(std::string_view text);

// [[1,0,0],[b1,1,1],[c1,2,1]]
TorusActionMatrix t1_action(const Integer& b1, const Integer& c1);
// a = c1/4, b = (2 b1 - c1)/4
std::pair<Rational, Rational> t1_parameters(const Integer& b1, const Integer& c1);
// alpha + beta i = 4 (a + b i)^2
GaussianRational t1_alpha_beta(const Rational& a, const Rational& b);

// x1^2, 2 x2 (2(a+b) x1 + x2 + x3), x3 (4a x1 + 2 x2 + x3)
QuadricSystem t1_net(const Rational& a, const Rational& b);

// Closed form. Throws InvalidInput for (0, 0).
T1Invariant t1_invariant(const Integer& b1, const Integer& c1);

struct T1PipelineResult {
    TernaryCubic cubic;          // det cubic of the kernel net
    NodalNormalForm normal_form;
    BinaryCubic inflection;
    GaussianRational alpha_beta;
    T1Invariant invariant;
};

// ring -> kernel net -> det cubic -> nodal normal form -> inflection cubic -> (alpha, beta).
T1PipelineResult t1_pipeline(const Integer& b1, const Integer& c1);
// Same from an arbitrary net on Q^3.
T1PipelineResult t1_pipeline(const QuadricSystem& net);

// (b1, c1) = (2(a + b), 4a) for the integer a + b i = d * w^2 (d clearing denominators).
std::pair<Integer, Integer> t1_realize_class(const GaussianRational& w);

} // namespace biquot
