#include "biquot/classes.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <sstream>

namespace biquot {

Integer SquareClass::representative() const
{
    Integer r = sign;
    for (const auto& p : primes)
        r *= p;
    return r;
}

SquareClass square_class(const Rational& q)
{
    if (q == 0)
        throw InvalidInput("square_class: zero has no square class");
    SquareClass c;
    c.sign = sgn(q) < 0 ? -1 : 1;
    // q ~ num * den modulo squares
    const Integer n = abs(q.get_num()) * q.get_den();
    for (const auto& [p, e] : factor(n).exponents)
        if (e % 2 != 0)
            c.primes.push_back(p);
    return c;
}

SquareClass operator*(const SquareClass& a, const SquareClass& b)
{
    SquareClass c;
    c.sign = a.sign * b.sign;
    std::set_symmetric_difference(a.primes.begin(), a.primes.end(), b.primes.begin(), b.primes.end(), std::back_inserter(c.primes));
    return c;
}

std::string to_string(const SquareClass& c)
{
    return c.representative().get_str();
}

SquareClass parse_square_class(std::string_view text)
{
    const Integer n = parse_integer(text);
    if (n == 0)
        throw InvalidInput("square class cannot be zero");
    SquareClass c = square_class(Rational(n));
    if (c.representative() != n)
        throw InvalidInput("square class '" + std::string(text) + "' is not squarefree");
    return c;
}

CubeClassModQ cube_class_mod_Q(const GaussianRational& z)
{
    if (z.is_zero())
        throw InvalidInput("cube_class_mod_Q: zero input");
    // Rational denominators lie in Q* and do not contribute.
    const GaussianInteger w = clear_denominator(z).first;
    CubeClassModQ c;
    for (const auto& [p, e] : factor(w.norm()).exponents) {
        if (p % 4 != 1)
            continue;
        const GaussianInteger pi = split_prime(p);
        const int ord_pi = gaussian_order(w, pi);
        const int ord_conj = e - ord_pi;
        const int r = (((ord_pi - ord_conj) % 3) + 3) % 3;
        if (r != 0)
            c.residues[p] = r;
    }
    return c;
}

CubeClassModQ conjugate_class(const CubeClassModQ& c)
{
    CubeClassModQ out;
    for (const auto& [p, r] : c.residues)
        out.residues[p] = 3 - r;
    return out;
}

CubeClassModQ operator*(const CubeClassModQ& a, const CubeClassModQ& b)
{
    CubeClassModQ out = a;
    for (const auto& [p, r] : b.residues) {
        const int s = (out.residues[p] + r) % 3;
        if (s == 0)
            out.residues.erase(p);
        else
            out.residues[p] = s;
    }
    return out;
}

std::string to_string(const CubeClassModQ& c)
{
    if (c.residues.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, r] : c.residues) {
        if (!first)
            os << ',';
        first = false;
        os << p.get_str() << ':' << r;
    }
    return os.str();
}

CubeClassModQ parse_cube_class(std::string_view text)
{
    CubeClassModQ c;
    if (text == "1")
        return c;
    Integer previous = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        const std::string_view item = text.substr(start, comma - start);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw InvalidInput("cube class entry '" + std::string(item) + "' lacks ':'");
        const Integer p = parse_integer(item.substr(0, colon));
        const Integer r = parse_integer(item.substr(colon + 1));
        if (p <= previous || p % 4 != 1 || !is_prime(p))
            throw InvalidInput("cube class key " + p.get_str() + " is not an increasing split prime");
        if (r != 1 && r != 2)
            throw InvalidInput("cube class residue must be 1 or 2");
        c.residues[p] = static_cast<int>(r.get_si());
        previous = p;
        start = comma + 1;
    }
    return c;
}

} // namespace biquot
