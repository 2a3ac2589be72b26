#pragma once

#include "biquot/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace biquot {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

std::string to_string(const Matrix& m);

struct RowEchelon {
    Matrix reduced;                   // nonzero rows only, pivot entries 1
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form. Pivot columns are searched in `column_order`
// (default: left to right), so the leading entry of each row is the earliest
// column of that order in which it is nonzero.
RowEchelon rref(const Matrix& m, const std::vector<std::size_t>& column_order = {});

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column with a 1 there.
std::vector<Vector> kernel(const Matrix& m);

Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

bool is_zero(const Vector& v);

// Span of a set of vectors in Q^n with a fixed complement of coordinate
// vectors, used to reduce vectors modulo the span.
class SubspaceReducer {
public:
    SubspaceReducer() = default;
    // Pivots prefer the columns listed first in `pivot_preference`.
    SubspaceReducer(const std::vector<Vector>& spanning, std::size_t ambient_dim, std::vector<std::size_t> pivot_preference = {});

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dimension() const { return echelon_.pivots.size(); }
    // Non-pivot coordinates, ascending; their unit vectors span a complement.
    const std::vector<std::size_t>& complement() const { return complement_; }
    const RowEchelon& echelon() const { return echelon_; }

    // Coordinates of v modulo the span, on the complement coordinates.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;

private:
    std::size_t ambient_ = 0;
    RowEchelon echelon_;
    std::vector<std::size_t> complement_;
};

} // namespace biquot
