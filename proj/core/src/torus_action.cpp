#include "biquot/biquotient.hpp"

#include "biquot/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace biquot {

TorusActionMatrix::TorusActionMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows))
{
    if (rows_.empty())
        throw InvalidInput("TorusActionMatrix: empty matrix");
    if (rows_.size() > 16)
        throw InvalidInput("TorusActionMatrix: at most 16 factors supported");
    for (const auto& r : rows_)
        if (r.size() != rows_.size())
            throw InvalidInput("TorusActionMatrix: matrix must be square");
}

TorusActionMatrix TorusActionMatrix::parse(std::string_view text)
{
    std::vector<std::vector<std::int64_t>> rows;
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
            rows = j.get<std::vector<std::vector<std::int64_t>>>();
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("matrix JSON: ") + e.what());
        }
        return TorusActionMatrix(std::move(rows));
    }
    std::string s(text);
    std::stringstream rs(s);
    std::string row;
    while (std::getline(rs, row, ';')) {
        std::vector<std::int64_t> r;
        std::stringstream es(row);
        std::string entry;
        while (std::getline(es, entry, ','))
            r.push_back(parse_integer(entry).get_si());
        rows.push_back(std::move(r));
    }
    return TorusActionMatrix(std::move(rows));
}

std::string TorusActionMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            os << ';';
        for (std::size_t j = 0; j < rows_[i].size(); ++j)
            os << (j ? "," : "") << rows_[i][j];
    }
    return os.str();
}

Matrix TorusActionMatrix::principal(unsigned mask) const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i)
        if (mask & (1u << i))
            idx.push_back(i);
    Matrix m(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            m(r, c) = static_cast<long>(rows_[idx[r]][idx[c]]);
    return m;
}

bool is_free(const TorusActionMatrix& a)
{
    const unsigned full = 1u << a.size();
    for (unsigned mask = 1; mask < full; ++mask) {
        const Rational det = determinant(a.principal(mask));
        if (det != 1 && det != -1)
            return false;
    }
    return true;
}

bool stabilizer_oracle(const TorusActionMatrix& a, int m)
{
    if (m < 2)
        throw InvalidInput("stabilizer_oracle: m must be at least 2");
    const std::size_t k = a.size();
    // At a point with v-coordinates on the index set S, lambda = zeta^e fixes it
    // iff e_i = 0 for i outside S and sum_j a_ij e_j = 0 (mod m) for i in S.
    const unsigned full = 1u << k;
    for (unsigned mask = 1; mask < full; ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i))
                idx.push_back(i);
        std::vector<int> e(idx.size(), 0);
        while (true) {
            std::size_t pos = 0;
            while (pos < e.size() && ++e[pos] == m)
                e[pos++] = 0;
            if (pos == e.size())
                break;
            bool fixes = true;
            for (std::size_t r = 0; r < idx.size() && fixes; ++r) {
                long long s = 0;
                for (std::size_t c = 0; c < idx.size(); ++c)
                    s += a(idx[r], idx[c]) * e[c];
                fixes = ((s % m) + m) % m == 0;
            }
            if (fixes)
                return false;
        }
    }
    return true;
}

GradedQuotient quotient_ring(const TorusActionMatrix& a, std::optional<int> max_degree)
{
    if (!is_free(a))
        throw InvalidInput("quotient_ring: action " + a.to_string() + " is not free");
    const std::size_t k = a.size();
    std::vector<HomPoly> relations;
    for (std::size_t i = 0; i < k; ++i) {
        Vector row(k);
        for (std::size_t j = 0; j < k; ++j)
            row[j] = static_cast<long>(a(i, j));
        relations.push_back(HomPoly::variable(k, i) * HomPoly::linear(row));
    }
    return GradedQuotient(k, std::move(relations), max_degree.value_or(2 * static_cast<int>(k) + 2));
}

} // namespace biquot
