#include "biquot/unipoly.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace biquot {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const
{
    if (is_zero())
        return *this;
    const Rational lc = leading();
    std::vector<Rational> v;
    for (const auto& c : coeffs_)
        v.push_back(c / lc);
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
        v[k] += b.coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Rational(-1) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a)
{
    std::vector<Rational> v;
    for (const auto& x : a.coeffs_)
        v.push_back(c * x);
    return UniPoly(std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const Rational mag = abs(c);
        if (c < 0)
            os << (first ? "-" : "-");
        else if (!first)
            os << "+";
        first = false;
        if (k == 0 || mag != 1) {
            os << biquot::to_string(mag);
            if (k > 0)
                os << "*";
        }
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw InvalidInput("polynomial division by zero");
    UniPoly rem = a;
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), Rational(0));
    const Rational lc = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Rational c = rem.leading() / lc;
        quot[static_cast<std::size_t>(shift)] = c;
        rem = rem - UniPoly::monomial(c, shift) * b;
    }
    return {UniPoly(std::move(quot)), rem};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Rational discriminant_quadratic(const UniPoly& p)
{
    if (p.degree() != 2)
        throw InvalidInput("discriminant_quadratic: degree is not 2");
    return p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
}

namespace {

// Primitive integer polynomial with positive leading coefficient, same roots.
std::vector<Integer> integer_primitive(const UniPoly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        const Rational s = c * l;
        v.push_back(s.get_num());
        g = gcd(g, s.get_num());
    }
    if (p.leading() < 0)
        g = -g;
    for (auto& c : v)
        c /= g;
    return v;
}

UniPoly from_integers(const std::vector<Integer>& v)
{
    std::vector<Rational> r;
    for (const auto& c : v)
        r.emplace_back(c);
    return UniPoly(std::move(r));
}

// Split a primitive integer quartic without rational roots into two integer quadratics.
std::optional<std::pair<UniPoly, UniPoly>> split_quartic(const std::vector<Integer>& c)
{
    const Integer &c0 = c[0], &c1 = c[1], &c2 = c[2], &c3 = c[3], &c4 = c[4];
    for (const Integer& u : positive_divisors(c4)) {
        const Integer v = c4 / u;
        for (const Integer& d : positive_divisors(c0)) {
            for (int sgn_q : {1, -1}) {
                const Integer q = d * sgn_q;
                const Integer s = c0 / q;
                // (u x^2 + p x + q)(v x^2 + r x + s)
                auto check = [&](const Rational& p, const Rational& r) -> std::optional<std::pair<UniPoly, UniPoly>> {
                    if (p.get_den() != 1 || r.get_den() != 1)
                        return std::nullopt;
                    if (Rational(u * s + q * v) + p * r != Rational(c2) || p * s + q * r != Rational(c1))
                        return std::nullopt;
                    if (v * p + u * r != Rational(c3))
                        return std::nullopt;
                    return std::make_pair(UniPoly({Rational(q), p, Rational(u)}), UniPoly({Rational(s), r, Rational(v)}));
                };
                const Integer det = Integer(v * q - u * s);
                if (det != 0) {
                    const Rational p = Rational(c3 * q - u * c1) / Rational(det);
                    const Rational r = Rational(v * c1 - s * c3) / Rational(det);
                    if (auto hit = check(p, r))
                        return hit;
                } else {
                    // r = (c3 - v p)/u; -(v/u) p^2 + (c3/u) p + (u s + q v - c2) = 0
                    const UniPoly eq({Rational(u * s + q * v - c2), make_rational(c3, u), make_rational(-v, u)});
                    for (const Rational& p : rational_roots(eq)) {
                        const Rational r = (Rational(c3) - Rational(v) * p) / Rational(u);
                        if (auto hit = check(p, r))
                            return hit;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<Rational> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw InvalidInput("rational_roots: zero polynomial");
    std::set<Rational> roots;
    std::vector<Integer> c = integer_primitive(p);
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0)
        ++low;
    if (low > 0)
        roots.insert(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
    if (c.size() > 1) {
        const UniPoly reduced = from_integers(c);
        for (const Integer& num : positive_divisors(c.front()))
            for (const Integer& den : positive_divisors(c.back()))
                for (int s : {1, -1}) {
                    const Rational x = make_rational(num * s, den);
                    if (reduced(x) == 0)
                        roots.insert(x);
                }
    }
    return {roots.begin(), roots.end()};
}

std::vector<PolyFactor> factor_over_Q(const UniPoly& p)
{
    if (p.degree() < 1)
        throw InvalidInput("factor_over_Q: constant polynomial");
    std::vector<PolyFactor> out;
    UniPoly rest = p.monic();
    for (const Rational& x : rational_roots(rest)) {
        const UniPoly linear({-x, Rational(1)});
        int m = 0;
        while (rest.degree() >= 1) {
            auto [q, r] = divmod(rest, linear);
            if (!r.is_zero())
                break;
            rest = q;
            ++m;
        }
        out.push_back({linear, m});
    }
    // Remaining part has no rational roots; peel repeated factors first.
    std::vector<std::pair<UniPoly, int>> pending;
    while (rest.degree() >= 1) {
        const UniPoly g = gcd(rest, rest.derivative());
        UniPoly squarefree = divmod(rest, g).first.monic();
        // multiplicity of each squarefree piece
        int m = 0;
        UniPoly probe = rest;
        while (probe.degree() >= squarefree.degree()) {
            auto [q, r] = divmod(probe, squarefree);
            if (!r.is_zero())
                break;
            probe = q;
            ++m;
        }
        pending.emplace_back(squarefree, m);
        rest = probe.monic();
        if (rest.degree() < 1)
            break;
    }
    for (auto& [sq, m] : pending) {
        if (sq.degree() <= 3) {
            out.push_back({sq, m});
            continue;
        }
        if (sq.degree() == 4) {
            if (auto split = split_quartic(integer_primitive(sq))) {
                out.push_back({split->first.monic(), m});
                out.push_back({split->second.monic(), m});
            } else {
                out.push_back({sq, m});
            }
            continue;
        }
        throw DegenerateInput("factor_over_Q: irreducible-part degree " + std::to_string(sq.degree()) + " not supported");
    }
    // Radical pieces of different multiplicity layers may repeat a factor.
    std::vector<PolyFactor> merged;
    for (const auto& f : out) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const PolyFactor& g) { return g.factor == f.factor; });
        if (it == merged.end())
            merged.push_back(f);
        else
            it->multiplicity += f.multiplicity;
    }
    std::sort(merged.begin(), merged.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return merged;
}

NumberField::NumberField(UniPoly modulus) : modulus_(modulus.monic())
{
    if (modulus_.degree() < 1)
        throw InvalidInput("NumberField: modulus must have positive degree");
}

UniPoly NumberField::inverse(const UniPoly& a) const
{
    // extended Euclid: s*a + t*m = g
    UniPoly r0 = modulus_, r1 = reduce(a);
    if (r1.is_zero())
        throw InvalidInput("NumberField: inverse of zero");
    UniPoly s0, s1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw DegenerateInput("NumberField: modulus is reducible");
    return reduce(Rational(1) / r0.leading() * s0);
}

FieldPoly trim(const NumberField& k, FieldPoly p)
{
    for (auto& c : p)
        c = k.reduce(c);
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
    return p;
}

FieldPoly gcd(const NumberField& k, FieldPoly a, FieldPoly b)
{
    a = trim(k, std::move(a));
    b = trim(k, std::move(b));
    while (!b.empty()) {
        // a mod b
        const UniPoly inv = k.inverse(b.back());
        while (a.size() >= b.size()) {
            const UniPoly factor = k.mul(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = k.sub(a[shift + j], k.mul(factor, b[j]));
            a = trim(k, std::move(a));
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const UniPoly inv = k.inverse(a.back());
        for (auto& c : a)
            c = k.mul(c, inv);
    }
    return a;
}

} // namespace biquot

namespace biquot {

UniPoly determinant(const std::vector<std::vector<UniPoly>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return UniPoly::constant(1);
    if (n == 1)
        return m[0][0];
    UniPoly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero())
            continue;
        std::vector<std::vector<UniPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<UniPoly> r;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    r.push_back(m[i][k]);
            minor.push_back(std::move(r));
        }
        UniPoly term = m[0][j] * determinant(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

UniPoly resultant(std::vector<UniPoly> f, std::vector<UniPoly> g)
{
    while (!f.empty() && f.back().is_zero())
        f.pop_back();
    while (!g.empty() && g.back().is_zero())
        g.pop_back();
    if (f.empty() || g.empty())
        return {};
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0)
        return UniPoly::constant(1);
    std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s[r][r + k] = f[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s[n + r][r + k] = g[n - k];
    return determinant(s);
}

} // namespace biquot
