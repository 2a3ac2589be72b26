#include "biquot/hompoly.hpp"

#include "biquot/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace biquot {
namespace {

void fill_monomials(std::size_t pos, int remaining, Exponents& current, std::vector<Exponents>& out)
{
    if (pos + 1 == current.size()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[pos] = e;
        fill_monomials(pos + 1, remaining - e, current, out);
    }
    current[pos] = 0;
}

int exponent_sum_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

std::vector<Exponents> monomials(std::size_t variables, int exponent_sum)
{
    std::vector<Exponents> out;
    if (exponent_sum < 0)
        return out;
    if (variables == 0) {
        if (exponent_sum == 0)
            out.emplace_back();
        return out;
    }
    Exponents current(variables, 0);
    fill_monomials(0, exponent_sum, current, out);
    return out;
}

HomPoly::HomPoly(std::size_t variables, Terms terms) : variables_(variables)
{
    for (auto& [e, c] : terms) {
        if (e.size() != variables)
            throw InvalidInput("HomPoly: exponent vector has wrong length");
        if (c != 0)
            terms_.emplace(e, c);
    }
    check_homogeneous();
}

void HomPoly::check_homogeneous() const
{
    if (terms_.empty())
        return;
    const int s = exponent_sum_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exponent_sum_of(e) != s)
            throw InvalidInput("HomPoly: polynomial is not homogeneous");
}

HomPoly HomPoly::variable(std::size_t variables, std::size_t index)
{
    if (index >= variables)
        throw InvalidInput("HomPoly::variable: index out of range");
    Exponents e(variables, 0);
    e[index] = 1;
    HomPoly p(variables);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

HomPoly HomPoly::constant(std::size_t variables, const Rational& c)
{
    HomPoly p(variables);
    if (c != 0)
        p.terms_.emplace(Exponents(variables, 0), c);
    return p;
}

HomPoly HomPoly::linear(const Vector& coeffs)
{
    HomPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0)
            continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.terms_.emplace(std::move(e), coeffs[i]);
    }
    return p;
}

int HomPoly::exponent_sum() const
{
    return terms_.empty() ? -1 : exponent_sum_of(terms_.begin()->first);
}

Rational HomPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Vector HomPoly::linear_coefficients() const
{
    if (!is_zero() && exponent_sum() != 1)
        throw InvalidInput("linear_coefficients: polynomial is not linear");
    Vector v(variables_, Rational(0));
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < variables_; ++i)
            if (e[i] == 1)
                v[i] = c;
    return v;
}

HomPoly HomPoly::operator-() const { return Rational(-1) * (*this); }

HomPoly operator+(const HomPoly& a, const HomPoly& b)
{
    if (a.variables_ != b.variables_)
        throw InvalidInput("HomPoly sum: variable counts differ");
    if (!a.is_zero() && !b.is_zero() && a.exponent_sum() != b.exponent_sum())
        throw InvalidInput("HomPoly sum: degrees differ");
    HomPoly c = a;
    for (const auto& [e, coef] : b.terms_) {
        auto [it, inserted] = c.terms_.emplace(e, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0)
                c.terms_.erase(it);
        }
    }
    return c;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }

HomPoly operator*(const HomPoly& a, const HomPoly& b)
{
    if (a.variables_ != b.variables_)
        throw InvalidInput("HomPoly product: variable counts differ");
    HomPoly c(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(a.variables_);
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            auto [it, inserted] = c.terms_.emplace(std::move(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    c.terms_.erase(it);
            }
        }
    return c;
}

HomPoly operator*(const Rational& s, const HomPoly& a)
{
    HomPoly c(a.variables_);
    if (s == 0)
        return c;
    for (const auto& [e, coef] : a.terms_)
        c.terms_.emplace(e, s * coef);
    return c;
}

HomPoly HomPoly::substitute(const Matrix& substitution) const
{
    if (substitution.rows() != variables_)
        throw InvalidInput("substitute: matrix row count must equal variable count");
    const std::size_t target = substitution.cols();
    std::vector<HomPoly> images;
    for (std::size_t i = 0; i < variables_; ++i)
        images.push_back(linear(substitution.row(i)));
    HomPoly result(target);
    for (const auto& [e, c] : terms_) {
        HomPoly term = constant(target, c);
        for (std::size_t i = 0; i < variables_; ++i)
            for (int k = 0; k < e[i]; ++k)
                term = term * images[i];
        result = result + term;
    }
    return result;
}

Rational HomPoly::evaluate(const Vector& point) const
{
    if (point.size() != variables_)
        throw InvalidInput("evaluate: point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < variables_; ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= point[i];
        total += t;
    }
    return total;
}

HomPoly HomPoly::derivative(std::size_t var) const
{
    if (var >= variables_)
        throw InvalidInput("derivative: variable index out of range");
    HomPoly d(variables_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents f = e;
        f[var] -= 1;
        d.terms_.emplace(std::move(f), c * e[var]);
    }
    return d;
}

std::string HomPoly::to_string(int index_base) const
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < variables_; ++i)
        names.push_back("x" + std::to_string(static_cast<int>(i) + index_base));
    return to_string(names);
}

std::string HomPoly::to_string(const std::vector<std::string>& names) const
{
    if (names.size() != variables_)
        throw InvalidInput("to_string: wrong number of variable names");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        const bool has_vars = exponent_sum_of(e) > 0;
        bool need_star = false;
        if (mag != 1 || !has_vars) {
            os << biquot::to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                os << '*';
            os << names[i];
            if (e[i] > 1)
                os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

HomPoly HomPoly::parse(std::string_view text, std::size_t variables, int index_base)
{
    // Normalize U+2212 minus signs to ASCII and drop whitespace.
    std::string s;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text.substr(k, 3) == "\xE2\x88\x92") {
            s.push_back('-');
            k += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[k]))) {
            s.push_back(text[k]);
        }
    }
    if (s.empty())
        throw InvalidInput("empty polynomial");
    if (s == "0")
        return HomPoly(variables);

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw InvalidInput("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_digits = [&]() {
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            fail("expected digits");
        return s.substr(start, pos - start);
    };

    HomPoly result(variables);
    bool first = true;
    while (pos < s.size()) {
        int term_sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            term_sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coef = term_sign;
        Exponents e(variables, 0);
        bool expect_factor = true;
        bool any = false;
        while (expect_factor) {
            expect_factor = false;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                std::string num = read_digits();
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    num += "/" + read_digits();
                }
                coef *= parse_rational(num);
            } else if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                const long idx = std::stol(read_digits()) - index_base;
                if (idx < 0 || static_cast<std::size_t>(idx) >= variables)
                    fail("variable index out of range");
                int power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    power = std::stoi(read_digits());
                }
                e[static_cast<std::size_t>(idx)] += power;
            } else {
                fail("expected coefficient or variable");
            }
            any = true;
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                expect_factor = true;
            }
        }
        if (!any)
            fail("empty term");
        result = result + HomPoly(variables, Terms{{e, coef}});
    }
    return result;
}

} // namespace biquot
