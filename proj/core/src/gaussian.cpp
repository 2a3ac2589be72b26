#include "biquot/gaussian.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <cctype>

namespace biquot {

GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) { return {a.re + b.re, a.im + b.im}; }
GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) { return {a.re - b.re, a.im - b.im}; }

GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool try_divide(const GaussianInteger& a, const GaussianInteger& b, GaussianInteger& quotient)
{
    if (b.is_zero())
        throw InvalidInput("division by zero Gaussian integer");
    const Integer n = b.norm();
    const GaussianInteger t = a * b.conj();
    if (mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) == 0 || mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t()) == 0)
        return false;
    quotient.re = t.re / n;
    quotient.im = t.im / n;
    return true;
}

GaussianInteger unit_power(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) { return {a.re + b.re, a.im + b.im}; }
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return {a.re - b.re, a.im - b.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
{
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
{
    if (b.is_zero())
        throw InvalidInput("division by zero Gaussian rational");
    const Rational n = b.norm();
    const GaussianRational t = a * b.conj();
    return {Rational(t.re / n), Rational(t.im / n)};
}

GaussianRational pow(const GaussianRational& z, unsigned e)
{
    GaussianRational result(1);
    for (unsigned k = 0; k < e; ++k)
        result = result * z;
    return result;
}

std::pair<GaussianInteger, Integer> clear_denominator(const GaussianRational& z)
{
    Integer d;
    mpz_lcm(d.get_mpz_t(), z.re.get_den_mpz_t(), z.im.get_den_mpz_t());
    const Rational re = z.re * d;
    const Rational im = z.im * d;
    return {GaussianInteger{re.get_num(), im.get_num()}, d};
}

std::string to_string(const GaussianRational& z)
{
    if (z.im == 0)
        return to_string(z.re);
    std::string imag;
    const Rational mag = abs(z.im);
    if (mag != 1)
        imag = to_string(mag);
    imag += "i";
    if (z.re == 0)
        return (z.im < 0 ? "-" : "") + imag;
    return to_string(z.re) + (z.im < 0 ? "-" : "+") + imag;
}

GaussianRational parse_gaussian(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw InvalidInput("empty Gaussian rational");
    if (s.back() != 'i')
        return GaussianRational(parse_rational(s));
    s.pop_back();
    if (!s.empty() && s.back() == '*')
        s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_text = split == std::string::npos ? s : s.substr(split);
    if (im_text.empty() || im_text == "+")
        im_text = "1";
    else if (im_text == "-")
        im_text = "-1";
    return {re_text.empty() ? Rational(0) : parse_rational(re_text), parse_rational(im_text)};
}

GaussianInteger split_prime(const Integer& p)
{
    if (p % 4 != 1 || !is_prime(p))
        throw InvalidInput("split_prime: " + p.get_str() + " is not a prime congruent to 1 mod 4");
    // x^2 = -1 (mod p) from a quadratic non-residue.
    Integer c = 2;
    while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1)
        ++c;
    Integer x;
    const Integer e = (p - 1) / 4;
    mpz_powm(x.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    // Hermite-Serret / Cornacchia descent.
    Integer r0 = p, r1 = x;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), p.get_mpz_t());
    while (r1 > root) {
        Integer r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    Integer a = r1;
    Integer b2 = p - a * a;
    Integer b;
    mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
    if (b * b != b2)
        throw std::logic_error("split_prime: descent failed for " + p.get_str());
    if (a < b)
        std::swap(a, b);
    return {a, b};
}

int gaussian_order(GaussianInteger z, const GaussianInteger& pi)
{
    if (z.is_zero())
        throw InvalidInput("order of zero");
    int order = 0;
    GaussianInteger q;
    while (try_divide(z, pi, q)) {
        z = q;
        ++order;
    }
    return order;
}

GaussianInteger GaussianPrimeFactorization::product() const
{
    GaussianInteger result = unit_power(unit);
    for (const auto& [pi, e] : factors)
        for (int k = 0; k < e; ++k)
            result = result * pi;
    return result;
}

GaussianPrimeFactorization gaussian_factor(const GaussianInteger& z)
{
    if (z.is_zero())
        throw InvalidInput("gaussian_factor: zero input");
    GaussianPrimeFactorization out;
    GaussianInteger rest = z;
    auto strip = [&](const GaussianInteger& pi, int count) {
        GaussianInteger q;
        for (int k = 0; k < count; ++k) {
            if (!try_divide(rest, pi, q))
                throw std::logic_error("gaussian_factor: inconsistent norm factorization");
            rest = q;
        }
        if (count > 0)
            out.factors.emplace_back(pi, count);
    };
    for (const auto& [p, e] : factor(z.norm()).exponents) {
        if (p == 2) {
            strip({1, 1}, e);
        } else if (p % 4 == 3) {
            strip({p, 0}, e / 2);
        } else {
            const GaussianInteger pi = split_prime(p);
            const int k = gaussian_order(rest, pi);
            strip(pi, k);
            strip(pi.conj(), e - k);
        }
    }
    for (int k = 0; k < 4; ++k) {
        if (unit_power(k) == rest) {
            out.unit = k;
            return out;
        }
    }
    throw std::logic_error("gaussian_factor: cofactor is not a unit");
}

} // namespace biquot
