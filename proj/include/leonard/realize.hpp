#ifndef LEONARD_REALIZE_HPP
#define LEONARD_REALIZE_HPP

#include "leonard/formulas.hpp"

namespace leonard {

enum class Basis { Monic, Split, Standard };

std::string basis_name(Basis b);

/// A concrete matrix pair carrying the Leonard system of a parameter
/// array in one of the three named bases:
///   Monic:    A tridiagonal with diagonal a_i, superdiagonal x_i,
///             subdiagonal 1; A* = diag(theta*).
///   Split:    A lower bidiagonal with diagonal theta_i, subdiagonal 1;
///             A* upper bidiagonal with diagonal theta*_i, superdiagonal
///             varphi_i.
///   Standard: A tridiagonal with diagonal a_i, superdiagonal b_i,
///             subdiagonal c_i (constant row sum theta_0); A* = diag(theta*).
struct Realization {
    Basis basis;
    Matrix A;
    Matrix Astar;
    ParameterArray pa;
};

struct IdempotentSet {
    std::vector<Matrix> E;      // primitive idempotents of A
    std::vector<Matrix> Estar;  // primitive idempotents of A*
};

Realization realize(const ParameterArray& pa, Basis basis);

/// Primitive idempotents by the Lagrange products in A and A*.
IdempotentSet idempotents(const Realization& r);

/// P with entry (i, j) = v_j(theta_i); satisfies P(star array) * P = nu I
/// and intertwines the standard-basis representations.
Matrix p_matrix(const ParameterArray& pa);

/// Diagonal D (with D_00 = 1) conjugating transpose(A) back to A, built
/// from the running products of superdiagonal over subdiagonal entries.
/// Requires a basis in which A is irreducible tridiagonal and A* diagonal,
/// so Split is rejected.
Matrix dagger_diag(const Realization& r);

/// Gram matrix of the standard basis under the normalization |u|^2 = 1:
/// diag(k_0/nu, ..., k_d/nu).
Matrix gram_matrix(const ParameterArray& pa);

/// Split-basis vectors w_0..w_d: w_i = tau_i(A) v with v the
/// E*_0-eigenvector scaled to leading coordinate 1.  Each w_i is
/// cross-checked against the subspace intersection route; disagreement
/// throws std::logic_error.  A Split realization returns its own axes.
std::vector<std::vector<FieldElement>> split_subspaces(const Realization& r);

/// Structure constants p^h_{ij} of the products v_i(A) v_j(A) in the
/// basis {v_h(A)}.
class IntersectionNumbers {
public:
    IntersectionNumbers(std::size_t d, const FieldSpec& field);
    std::size_t diameter() const { return d_; }
    const FieldElement& at(std::size_t h, std::size_t i, std::size_t j) const;
    void set(std::size_t h, std::size_t i, std::size_t j, const FieldElement& v);

private:
    std::size_t d_;
    std::vector<FieldElement> data_;
};

IntersectionNumbers intersection_numbers(const ParameterArray& pa);

/// Transition matrix X with X_{ij} = p_i(theta_j) p*_j(theta*_0) / (x_1..x_i),
/// taking the monic eigenvector basis to the ambient one.
Matrix monic_transition_matrix(const ParameterArray& pa);

} // namespace leonard

#endif
