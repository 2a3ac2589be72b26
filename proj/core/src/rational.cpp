#include "biquot/rational.hpp"

#include "biquot/errors.hpp"

namespace biquot {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    return make_rational(num, den);
}

Integer height(const Rational& q)
{
    return abs(q.get_num()) * q.get_den();
}

} // namespace biquot
