#ifndef LEONARD_LINALG_HPP
#define LEONARD_LINALG_HPP

#include <optional>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Dense univariate polynomial over a field, coefficients lowest degree
/// first with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(const FieldSpec& field) : field_(field) {}
    Poly(const FieldSpec& field, std::vector<FieldElement> coeffs);

    static Poly zero(const FieldSpec& field) { return Poly(field); }
    static Poly constant(const FieldElement& c);
    /// The monic linear polynomial lambda - c.
    static Poly linear_shift(const FieldElement& c);

    const FieldSpec& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of lambda^i (zero beyond the stored degree).
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly operator*(const FieldElement& s) const;
    Poly operator-() const;
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    FieldElement eval(const FieldElement& x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

private:
    void trim();
    FieldSpec field_;
    std::vector<FieldElement> coeffs_;
};

/// Dense matrix over a field, row-major, rows and columns indexed from 0.
/// Most of the system works with square matrices of order d+1; rectangular
/// shapes appear only inside the exact solvers.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);
    static Matrix diagonal(const std::vector<FieldElement>& entries);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const FieldElement& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const FieldElement& v);

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix operator*(const FieldElement& s) const;
    Matrix operator-() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    Matrix transpose() const;
    FieldElement trace() const;
    bool is_zero() const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

enum class MatrixShape {
    Diagonal,
    Tridiagonal,
    IrreducibleTridiagonal,
    LowerBidiagonal,
    UpperBidiagonal,
};

/// Shape predicate on a square matrix.  IrreducibleTridiagonal requires
/// every entry on the sub- and superdiagonal to be nonzero.
bool structure_check(const Matrix& m, MatrixShape shape);

/// Monic three-term recurrence: given a_0..a_d and x_1..x_d, returns
/// p_0..p_{d+1} with p_0 = 1 and lambda p_i = p_{i+1} + a_i p_i + x_i p_{i-1}.
std::vector<Poly> poly_three_term(const std::vector<FieldElement>& a,
                                  const std::vector<FieldElement>& x);

/// Horner evaluation p(M); the empty polynomial gives the zero matrix.
Matrix mat_poly_eval(const Poly& p, const Matrix& m);

/// Exact solve A X = B for square A; nullopt when A is singular.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

std::optional<Matrix> matrix_inverse(const Matrix& a);

std::size_t matrix_rank(const Matrix& a);

/// Basis of the null space {x : A x = 0}, one vector per column-echelon
/// free variable; deterministic order.
std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& a);

} // namespace leonard

#endif
