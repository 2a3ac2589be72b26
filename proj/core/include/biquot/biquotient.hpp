#pragma once

#include "biquot/graded_quotient.hpp"
#include "biquot/hompoly.hpp"
#include "biquot/linalg.hpp"
#include "biquot/quadric_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace biquot {

// Torus (S^1)^k acting on (S^3)^k: coordinate i carries (u_i : lambda_i) and
// (v_i : prod_j lambda_j^{a_ij}).
class TorusActionMatrix {
public:
    TorusActionMatrix() = default;
    explicit TorusActionMatrix(std::vector<std::vector<std::int64_t>> rows);

    // "1,0,0;2,1,1;4,2,1" or a JSON array of arrays.
    static TorusActionMatrix parse(std::string_view text);

    std::size_t size() const { return rows_.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

    std::string to_string() const;

    // Principal submatrix on the index set encoded by the bit mask.
    Matrix principal(unsigned mask) const;

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

// Every principal minor is +-1.
bool is_free(const TorusActionMatrix& a);

// Brute force: true iff no nontrivial element of (Z/m)^k fixes one of the
// 2^k points whose factors are (1,0) or (0,1).
bool stabilizer_oracle(const TorusActionMatrix& a, int m);

// Q[x_1..x_k]/(x_i * sum_j a_ij x_j). Throws InvalidInput for non-free actions.
GradedQuotient quotient_ring(const TorusActionMatrix& a, std::optional<int> max_degree = std::nullopt);

// Degree <= 4 cohomology of the circle bundle over a ring with Euler class y:
// H^2 = V/<y> and the image of S^2 H^2 is H^4/(y * V).
struct CircleBundleData {
    std::shared_ptr<const GradedQuotient> base;
    Vector euler_class;                      // y in generator coordinates
    std::size_t dropped = 0;                 // generator index removed from V
    std::vector<std::size_t> complement;     // generator indices spanning W
    SubspaceReducer y_image;                 // y * V inside H^4 coordinates
    std::size_t target_dim = 0;              // dim H^4 / (y * V)
    Matrix product;                          // target_dim x dim S^2 W
    QuadricSystem kernel;                    // kernel of S^2 W -> target, in W coordinates

    std::size_t image_dim() const;
};

// Default complement drops the coordinate of y with the largest height
// |numerator| * denominator (ties: the last such index); `dropped` overrides.
CircleBundleData circle_bundle_degree4(std::shared_ptr<const GradedQuotient> base, const Vector& euler_class, std::optional<std::size_t> dropped = std::nullopt);

// Symmetric trilinear form on Q^n.
class TrilinearForm {
public:
    explicit TrilinearForm(std::size_t n) : n_(n), data_(n * n * n, Rational(0)) {}
    std::size_t dim() const { return n_; }
    Rational& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }
    Rational evaluate(const Vector& u, const Vector& v, const Vector& w) const;
    // G_jk = T(u, x_j, x_k)
    Matrix contract(const Vector& u) const;

private:
    std::size_t n_;
    std::vector<Rational> data_;
};

// Polarization of a0^2 a1 + a1^2 a2 + a2^2 a3 + a3^2 a4 + a4^2 a0 (constant 1).
TrilinearForm klein_form();

// Degree <= 4 ring whose cup product S^2 V -> V* is u*v -> T(u, v, .).
GradedQuotient ring_from_trilinear(const TrilinearForm& t);

struct KleinData {
    std::shared_ptr<const GradedQuotient> ring; // generators x0..x4 (print with index base 0)
    TrilinearForm form{5};
    Rational a0, a1, a2;                         // a2 = a0^2 / a1
    Vector y;                                    // a0 x0 - a1 x1 + (a1^3/a0^2) x3
    Vector z;                                    // a0 x0 + a1 x1 + a2 x2
};

KleinData klein_ring(const Rational& a0, const Rational& a1);

} // namespace biquot
