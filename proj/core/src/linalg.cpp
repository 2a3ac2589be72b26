#include "biquot/linalg.hpp"

#include "biquot/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace biquot {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidInput("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InvalidInput("Matrix::from_rows: wrong row length");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    return from_rows(cols, rows).transpose();
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw InvalidInput("matrix product: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput("matrix sum: dimension mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) += b(i, j);
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a)
{
    Matrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) *= s;
    return c;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    if (a.cols() != v.size())
        throw InvalidInput("matrix-vector product: dimension mismatch");
    Vector out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << to_string(m(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

RowEchelon rref(const Matrix& m, const std::vector<std::size_t>& column_order)
{
    std::vector<std::size_t> order = column_order;
    if (order.empty()) {
        order.resize(m.cols());
        std::iota(order.begin(), order.end(), 0);
    }
    if (order.size() != m.cols())
        throw InvalidInput("rref: column order has wrong length");
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col : order) {
        if (r == a.rows())
            break;
        std::size_t sel = r;
        while (sel < a.rows() && a(sel, col) == 0)
            ++sel;
        if (sel == a.rows())
            continue;
        if (sel != r)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(sel, j), a(r, j));
        const Rational inv = 1 / a(r, col);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, col) == 0)
                continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(r, j) != 0)
                    a(i, j) -= f * a(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    Matrix reduced(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m)
{
    const RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("determinant: matrix not square");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a(sel, c) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(sel, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InvalidInput("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

SubspaceReducer::SubspaceReducer(const std::vector<Vector>& spanning, std::size_t ambient_dim, std::vector<std::size_t> pivot_preference)
    : ambient_(ambient_dim)
{
    if (pivot_preference.empty()) {
        pivot_preference.resize(ambient_dim);
        std::iota(pivot_preference.begin(), pivot_preference.end(), 0);
    }
    echelon_ = rref(Matrix::from_rows(spanning, ambient_dim), pivot_preference);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : echelon_.pivots)
        is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j])
            complement_.push_back(j);
}

Vector SubspaceReducer::reduce(const Vector& v) const
{
    if (v.size() != ambient_)
        throw InvalidInput("SubspaceReducer::reduce: wrong vector length");
    Vector w = v;
    for (std::size_t i = 0; i < echelon_.pivots.size(); ++i) {
        const std::size_t p = echelon_.pivots[i];
        if (w[p] == 0)
            continue;
        const Rational f = w[p];
        for (std::size_t j = 0; j < ambient_; ++j)
            if (echelon_.reduced(i, j) != 0)
                w[j] -= f * echelon_.reduced(i, j);
    }
    Vector out;
    out.reserve(complement_.size());
    for (std::size_t j : complement_)
        out.push_back(w[j]);
    return out;
}

bool SubspaceReducer::contains(const Vector& v) const { return is_zero(reduce(v)); }

} // namespace biquot
