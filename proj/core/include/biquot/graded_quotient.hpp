#pragma once

#include "biquot/hompoly.hpp"
#include "biquot/linalg.hpp"
#include "biquot/quadric_system.hpp"

#include <map>
#include <vector>

namespace biquot {

// Q[x_1..x_n]/(relations) with every x_i in degree 2 and homogeneous
// relations. Graded pieces up to max_degree are computed on construction by
// exact elimination on monomial bases; the object is immutable afterwards.
class GradedQuotient {
public:
    GradedQuotient(std::size_t generators, std::vector<HomPoly> relations, int max_degree);

    std::size_t generator_count() const { return generators_; }
    const std::vector<HomPoly>& relations() const { return relations_; }
    int max_degree() const { return max_degree_; }

    // Dimension of the degree-d piece (d even, 0 <= d <= max_degree).
    std::size_t dim(int degree) const;

    // Quotient basis in degree d: the lexicographically first monomials
    // independent modulo the relations.
    const std::vector<Exponents>& basis(int degree) const;

    // Coordinates of the class of p in basis(p.degree()). Zero p is not allowed.
    Vector coordinates(const HomPoly& p) const;
    bool is_zero_class(const HomPoly& p) const;

    // Reduced echelon basis of the relation span in the given degree, each
    // polynomial monic in its lexicographically last monomial.
    std::vector<HomPoly> canonical_relations(int degree) const;

private:
    struct Piece {
        std::vector<Exponents> monomials;
        std::map<Exponents, std::size_t> index;
        SubspaceReducer relations;
        std::vector<Exponents> basis;
    };
    const Piece& piece(int degree) const;

    std::size_t generators_;
    std::vector<HomPoly> relations_;
    int max_degree_;
    std::vector<Piece> pieces_; // indexed by degree / 2
};

// Ideals agree degreewise through the smaller of the two max degrees.
bool same_ideal(const GradedQuotient& a, const GradedQuotient& b);

// Hilbert series coefficients of prod(1 - t^deg r) / (1 - t^2)^n through max_degree.
std::vector<long long> complete_intersection_series(std::size_t generators, const std::vector<int>& relation_degrees, int max_degree);

bool is_complete_intersection(const GradedQuotient& ring);

Vector product_in_quotient(const GradedQuotient& ring, const HomPoly& u, const HomPoly& v);

// Kernel of S^2(H^2) -> H^4.
QuadricSystem kernel_of_square_map(const GradedQuotient& ring);

struct MultiplicationMap {
    Matrix matrix;                   // dim H^4 x dim H^2
    std::size_t rank = 0;
    std::vector<Vector> kernel;      // in generator coordinates
    std::vector<Vector> cokernel;    // unit vectors in H^4 coordinates spanning a complement of the image
};

MultiplicationMap mult_by_class(const GradedQuotient& ring, const HomPoly& y);

// Rewrites every relation with x_i -> sum_j P_ij x_j.
GradedQuotient change_of_variables(const GradedQuotient& ring, const Matrix& substitution);

} // namespace biquot
